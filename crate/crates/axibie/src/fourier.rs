//! Shared FFT helpers for azimuthal transforms.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Smallest integer >= n whose prime factors are all in {2, 3, 5}; such
/// lengths keep the mixed-radix FFT on its fast paths.
pub fn next_fft_len(n: usize) -> usize {
    let mut m = n.max(1);
    loop {
        let mut k = m;
        for p in [2usize, 3, 5] {
            while k % p == 0 {
                k /= p;
            }
        }
        if k == 1 {
            return m;
        }
        m += 1;
    }
}

/// Forward DFT (e^{-i 2 pi k m / M} convention, unnormalized).
pub fn dft_forward(buf: &mut [Complex64]) {
    FftPlanner::new().plan_fft_forward(buf.len()).process(buf);
}

/// Inverse DFT (e^{+i 2 pi k m / M} convention, unnormalized).
pub fn dft_inverse(buf: &mut [Complex64]) {
    FftPlanner::new().plan_fft_inverse(buf.len()).process(buf);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fft_lengths_are_five_smooth() {
        assert_eq!(next_fft_len(1), 1);
        assert_eq!(next_fft_len(7), 8);
        assert_eq!(next_fft_len(97), 100);
        assert_eq!(next_fft_len(128), 128);
        assert_eq!(next_fft_len(204), 216);
    }

    #[test]
    fn forward_inverse_roundtrip() {
        let src: Vec<Complex64> = (0..30)
            .map(|k| Complex64::new((k as f64).sin(), (k as f64 * 0.7).cos()))
            .collect();
        let mut buf = src.clone();
        dft_forward(&mut buf);
        dft_inverse(&mut buf);
        for (a, b) in buf.iter().zip(&src) {
            assert!((a / 30.0 - b).norm() < 1e-13);
        }
    }
}
