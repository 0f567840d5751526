//! Quadrature node/weight tables embedded as constant data.
//!
//! All rules are of interpolatory degree 19 (matching the 10-point
//! Gauss-Legendre rule) within their integrand class. Some weights of
//! the log-nearby rules are negative; nothing here may assume positivity.

/// 10-point Gauss-Legendre nodes on [-1, 1].
pub const GAUSS10_NODES: [f64; 10] = [
    -0.9739065285171716,
    -0.8650633666889845,
    -0.6794095682990244,
    -0.4333953941292472,
    -0.1488743389816312,
    0.1488743389816312,
    0.4333953941292472,
    0.6794095682990244,
    0.8650633666889845,
    0.9739065285171716,
];

/// 10-point Gauss-Legendre weights (sum to 2).
pub const GAUSS10_WEIGHTS: [f64; 10] = [
    0.06667134430868814,
    0.1494513491505806,
    0.219086362515982,
    0.2692667193099963,
    0.2955242247147529,
    0.2955242247147529,
    0.2692667193099963,
    0.219086362515982,
    0.1494513491505806,
    0.06667134430868814,
];

/// 20-point rules on [-1, 1] for integrands f(x) + g(x) log|x_i - x|,
/// one table per Gauss-Legendre node x_i, i = 1..=10 (index 0 = x_1).
pub const SINGULAR20: [([f64; 20], [f64; 20]); 10] = [
    (
        [
            -0.9981629455677877,
            -0.991552072313989,
            -0.9832812993252168,
            -0.9767801773920733,
            -0.9717169387169078,
            -0.9510630103726074,
            -0.9075765988474132,
            -0.8382582352569804,
            -0.7408522006801963,
            -0.6147619568252419,
            -0.4615244999958006,
            -0.2849772954295424,
            -0.09117593460489747,
            0.1119089520342051,
            0.3148842536644393,
            0.5075733846631832,
            0.6797470718157004,
            0.8218833662202629,
            0.9258924858821892,
            0.9857595961761246,
        ],
        [
            0.004550772157144354,
            0.00806276468332862,
            0.007845621096866406,
            0.004375212351185101,
            0.01021414662954223,
            0.03157199356768625,
            0.05592493151946541,
            0.08310260847601852,
            0.11181645221645,
            0.1401105427713687,
            0.1657233639623953,
            0.1863566566231937,
            0.1999093145144455,
            0.204684158458203,
            0.199558016194093,
            0.184102543028323,
            0.1586456191174843,
            0.1242680229936124,
            0.08273794370795576,
            0.03643931593123844,
        ],
    ),
    (
        [
            -0.9954896691005256,
            -0.9775532683688947,
            -0.9500346715183706,
            -0.919237337237342,
            -0.8916563772395616,
            -0.8727728136507039,
            -0.8607963163061316,
            -0.8201318720954396,
            -0.7394732321355052,
            -0.620485351235252,
            -0.4667290485167077,
            -0.2840823320902124,
            -0.08079364608026202,
            0.132845513664594,
            0.3451233500669768,
            0.5437321547508867,
            0.716707721663575,
            0.8534299232009863,
            0.9458275339169444,
            0.9912353127269481,
        ],
        [
            0.01141744473788874,
            0.02368593568061651,
            0.03027205199814611,
            0.03021809354380292,
            0.02397183723558556,
            0.01253574079839078,
            0.02070840476545303,
            0.0608070950846881,
            0.1002402801599464,
            0.137149915159728,
            0.1693838059093582,
            0.1945292086962893,
            0.2103223087093422,
            0.2149900928447852,
            0.2074984762344433,
            0.1877085225595498,
            0.1564543949958065,
            0.1156104890379952,
            0.06859369195724087,
            0.02390220989094312,
        ],
    ),
    (
        [
            -0.993012261358974,
            -0.9643941806993207,
            -0.917586955977076,
            -0.8596474181980754,
            -0.7990442708271941,
            -0.744370067161169,
            -0.7031684479828371,
            -0.6811221147275545,
            -0.6579449960254029,
            -0.59494716881371,
            -0.4893032793226841,
            -0.3441659232382107,
            -0.1665388322404095,
            0.03344207582228461,
            0.2434356263087524,
            0.4498696863725133,
            0.6389777518528792,
            0.7978632877793501,
            0.9155180703268415,
            0.9837258757826489,
        ],
        [
            0.01779185041193254,
            0.03870503119897836,
            0.05371120494602663,
            0.06073467932536858,
            0.05901993373645797,
            0.04905519963921684,
            0.03249237036645046,
            0.01335394660596527,
            0.04151626407911676,
            0.08451456165895121,
            0.1262522607368499,
            0.162840826496655,
            0.1907085686614375,
            0.2071802230953481,
            0.2105274833603497,
            0.2000282912446872,
            0.1760212445284564,
            0.139900090442649,
            0.09402669072995991,
            0.04161927873514264,
        ],
    ),
    (
        [
            -0.9903478871133073,
            -0.9504025146897784,
            -0.8834986023815121,
            -0.7974523551287549,
            -0.7022255002503461,
            -0.608719478924492,
            -0.5275278952351541,
            -0.4677586540799037,
            -0.4360689210457623,
            -0.4121945474875853,
            -0.3494226766911471,
            -0.2425993523586304,
            -0.09646839923908594,
            0.07921243716767302,
            0.2715178194484646,
            0.4658440358656903,
            0.6472213975763533,
            0.8015601619414859,
            0.9168056007307982,
            0.9839468743284722,
        ],
        [
            0.02462513260640712,
            0.05449201732062665,
            0.07799498604905293,
            0.09241688894090601,
            0.09619882322938848,
            0.08902783806614303,
            0.07181973054766198,
            0.04663017060126023,
            0.01794303974050253,
            0.04061799823415495,
            0.08507517518447759,
            0.1277525783357134,
            0.1628510773009247,
            0.1863323765408308,
            0.1958227701927855,
            0.1903138548150517,
            0.1700731513381802,
            0.1365784674773513,
            0.09239595239693155,
            0.04103797108164931,
        ],
    ),
    (
        [
            -0.9883561797860961,
            -0.9398305159297058,
            -0.857239991901939,
            -0.7482086250804679,
            -0.6228514167093102,
            -0.4928317114329241,
            -0.3702771193724617,
            -0.2666412108172461,
            -0.1916083010783277,
            -0.1521937160593461,
            -0.1233125650067164,
            -0.05257959675044444,
            0.05877314311857769,
            0.2012559739993003,
            0.3627988191760868,
            0.5297121321076323,
            0.6878399330187783,
            0.8237603202215137,
            0.9259297297557394,
            0.9856881498392895,
        ],
        [
            0.02974603958509255,
            0.06657945456889164,
            0.09731775484182564,
            0.1190433988432928,
            0.1297088242013777,
            0.1282900896966494,
            0.1148917968875341,
            0.09074932908233864,
            0.0581819636121674,
            0.02224697059733435,
            0.04788826761346366,
            0.09237500180593534,
            0.1287410543031414,
            0.1541960911507042,
            0.1665885274544506,
            0.1648585116745725,
            0.149140808964401,
            0.120759272609319,
            0.08212177982524418,
            0.03657506268226379,
        ],
    ),
    (
        [
            -0.9856881498392895,
            -0.9259297297557394,
            -0.8237603202215137,
            -0.6878399330187783,
            -0.5297121321076323,
            -0.3627988191760868,
            -0.2012559739993003,
            -0.05877314311857769,
            0.05257959675044444,
            0.1233125650067164,
            0.1521937160593461,
            0.1916083010783277,
            0.2666412108172461,
            0.3702771193724617,
            0.4928317114329241,
            0.6228514167093102,
            0.7482086250804679,
            0.857239991901939,
            0.9398305159297058,
            0.9883561797860961,
        ],
        [
            0.03657506268226379,
            0.08212177982524418,
            0.120759272609319,
            0.149140808964401,
            0.1648585116745725,
            0.1665885274544506,
            0.1541960911507042,
            0.1287410543031414,
            0.09237500180593534,
            0.04788826761346366,
            0.02224697059733435,
            0.0581819636121674,
            0.09074932908233864,
            0.1148917968875341,
            0.1282900896966494,
            0.1297088242013777,
            0.1190433988432928,
            0.09731775484182564,
            0.06657945456889164,
            0.02974603958509255,
        ],
    ),
    (
        [
            -0.9839468743284722,
            -0.9168056007307982,
            -0.8015601619414859,
            -0.6472213975763533,
            -0.4658440358656903,
            -0.2715178194484646,
            -0.07921243716767302,
            0.09646839923908594,
            0.2425993523586304,
            0.3494226766911471,
            0.4121945474875853,
            0.4360689210457623,
            0.4677586540799037,
            0.5275278952351541,
            0.608719478924492,
            0.7022255002503461,
            0.7974523551287549,
            0.8834986023815121,
            0.9504025146897784,
            0.9903478871133073,
        ],
        [
            0.04103797108164931,
            0.09239595239693155,
            0.1365784674773513,
            0.1700731513381802,
            0.1903138548150517,
            0.1958227701927855,
            0.1863323765408308,
            0.1628510773009247,
            0.1277525783357134,
            0.08507517518447759,
            0.04061799823415495,
            0.01794303974050253,
            0.04663017060126023,
            0.07181973054766198,
            0.08902783806614303,
            0.09619882322938848,
            0.09241688894090601,
            0.07799498604905293,
            0.05449201732062665,
            0.02462513260640712,
        ],
    ),
    (
        [
            -0.9837258757826489,
            -0.9155180703268415,
            -0.7978632877793501,
            -0.6389777518528792,
            -0.4498696863725133,
            -0.2434356263087524,
            -0.03344207582228461,
            0.1665388322404095,
            0.3441659232382107,
            0.4893032793226841,
            0.59494716881371,
            0.6579449960254029,
            0.6811221147275545,
            0.7031684479828371,
            0.744370067161169,
            0.7990442708271941,
            0.8596474181980754,
            0.917586955977076,
            0.9643941806993207,
            0.993012261358974,
        ],
        [
            0.04161927873514264,
            0.09402669072995991,
            0.139900090442649,
            0.1760212445284564,
            0.2000282912446872,
            0.2105274833603497,
            0.2071802230953481,
            0.1907085686614375,
            0.162840826496655,
            0.1262522607368499,
            0.08451456165895121,
            0.04151626407911676,
            0.01335394660596527,
            0.03249237036645046,
            0.04905519963921684,
            0.05901993373645797,
            0.06073467932536858,
            0.05371120494602663,
            0.03870503119897836,
            0.01779185041193254,
        ],
    ),
    (
        [
            -0.9912353127269481,
            -0.9458275339169444,
            -0.8534299232009863,
            -0.716707721663575,
            -0.5437321547508867,
            -0.3451233500669768,
            -0.132845513664594,
            0.08079364608026202,
            0.2840823320902124,
            0.4667290485167077,
            0.620485351235252,
            0.7394732321355052,
            0.8201318720954396,
            0.8607963163061316,
            0.8727728136507039,
            0.8916563772395616,
            0.919237337237342,
            0.9500346715183706,
            0.9775532683688947,
            0.9954896691005256,
        ],
        [
            0.02390220989094312,
            0.06859369195724087,
            0.1156104890379952,
            0.1564543949958065,
            0.1877085225595498,
            0.2074984762344433,
            0.2149900928447852,
            0.2103223087093422,
            0.1945292086962893,
            0.1693838059093582,
            0.137149915159728,
            0.1002402801599464,
            0.0608070950846881,
            0.02070840476545303,
            0.01253574079839078,
            0.02397183723558556,
            0.03021809354380292,
            0.03027205199814611,
            0.02368593568061651,
            0.01141744473788874,
        ],
    ),
    (
        [
            -0.9857595961761246,
            -0.9258924858821892,
            -0.8218833662202629,
            -0.6797470718157004,
            -0.5075733846631832,
            -0.3148842536644393,
            -0.1119089520342051,
            0.09117593460489747,
            0.2849772954295424,
            0.4615244999958006,
            0.6147619568252419,
            0.7408522006801963,
            0.8382582352569804,
            0.9075765988474132,
            0.9510630103726074,
            0.9717169387169078,
            0.9767801773920733,
            0.9832812993252168,
            0.991552072313989,
            0.9981629455677877,
        ],
        [
            0.03643931593123844,
            0.08273794370795576,
            0.1242680229936124,
            0.1586456191174843,
            0.184102543028323,
            0.199558016194093,
            0.204684158458203,
            0.1999093145144455,
            0.1863566566231937,
            0.1657233639623953,
            0.1401105427713687,
            0.11181645221645,
            0.08310260847601852,
            0.05592493151946541,
            0.03157199356768625,
            0.01021414662954223,
            0.004375212351185101,
            0.007845621096866406,
            0.00806276468332862,
            0.004550772157144354,
        ],
    ),
];

/// 24-point rules on [0, 1] for integrands f(x) + g(x) log(x + xbar).
/// Index 0 covers xbar >= 1e-1; index d in 1..=13 covers
/// xbar in [10^-(d+1), 10^-d].
pub const NEARBY24: [([f64; 24], [f64; 24]); 14] = [
    (
        [
            0.03916216329415252,
            0.08135233983530081,
            0.1123448211344994,
            0.159593198396503,
            0.2085759027831349,
            0.242624196202756,
            0.2886190312538522,
            0.3469021762354675,
            0.4072910101569611,
            0.4664019722595442,
            0.5182120817844112,
            0.5501308436771654,
            0.5970302980854608,
            0.6548457960388209,
            0.7119542126106005,
            0.760792042094634,
            0.7953017051155684,
            0.8303900341517088,
            0.8612724919009394,
            0.895404912802708,
            0.9315909369155358,
            0.9621742249068356,
            0.9843663446380599,
            0.9970087425823398,
        ],
        [
            0.04880755296918116,
            0.03196002785163611,
            0.03883416642507362,
            0.0514889899214082,
            0.04219328148763533,
            0.03420686213633789,
            0.05512488680719239,
            0.06007112809843418,
            0.0602235047941518,
            0.05735022004401478,
            0.04167923417118068,
            0.033460896288796,
            0.05574716218423796,
            0.05847838243344473,
            0.05464156990092474,
            0.04092186343704961,
            0.03283728166050225,
            0.03438233273473095,
            0.03022585192226418,
            0.0370076970127738,
            0.03410213679365162,
            0.02665791885274193,
            0.01754420526360429,
            0.007662283104388867,
        ],
    ),
    (
        [
            0.01940564616937581,
            0.04545433992382339,
            0.0737886660439642,
            0.1054147718077606,
            0.1412997888401,
            0.1822325567811081,
            0.2287282121202408,
            0.2809170925514041,
            0.338432096223797,
            0.4003108031244078,
            0.4648605571606025,
            0.5290714994276687,
            0.5829663557386375,
            0.6128301889979477,
            0.6606072156240962,
            0.7139495966128518,
            0.7677830914961244,
            0.818738242333645,
            0.8587068551739496,
            0.8906873285570645,
            0.9267772492129903,
            0.9592137652582382,
            0.9830962712794008,
            0.9967621546194148,
        ],
        [
            0.02514022176052795,
            0.02703526530535647,
            0.02980872487617485,
            0.03360626237885489,
            0.03829678083416609,
            0.04365651045780837,
            0.04935846322319046,
            0.0549596792405521,
            0.05991162198705084,
            0.0635696086224889,
            0.06506868552467118,
            0.06219588235225894,
            0.0388998604169531,
            0.03573431931940621,
            0.05296315368353523,
            0.05369033999927759,
            0.05340793573367282,
            0.0470475601399856,
            0.03276576301747068,
            0.03449175311880027,
            0.03560168848238671,
            0.02857367151127661,
            0.01894042942442201,
            0.008291994770212826,
        ],
    ),
    (
        [
            0.007571097817272427,
            0.01800655325976786,
            0.0300390100457704,
            0.04462882147989575,
            0.06295732618092606,
            0.08644035241970913,
            0.116616480930692,
            0.1546690628394902,
            0.1999554346680615,
            0.2434683359132119,
            0.2800846274146029,
            0.3368595257878888,
            0.4044418359833648,
            0.4685002493634456,
            0.5185062817085154,
            0.5811314144990846,
            0.6545700991450585,
            0.7276588861478224,
            0.7960626077582168,
            0.8572037183403355,
            0.9091330485015775,
            0.9503131649503738,
            0.9795718963793163,
            0.9961006479199827,
        ],
        [
            0.00987808820132192,
            0.01109316819462674,
            0.0131331158132188,
            0.0162426244206147,
            0.02065168462990214,
            0.0265779540682532,
            0.03399052299072427,
            0.0420821461286517,
            0.04732516974042797,
            0.03618419415803922,
            0.04547346840583578,
            0.06463153575242817,
            0.06859104457897808,
            0.05589917935916451,
            0.05199232318335285,
            0.07089840644422261,
            0.0742740033149424,
            0.07125308736931726,
            0.06513697474660338,
            0.05682298546820264,
            0.04678000924507099,
            0.03538488886617123,
            0.02299723483013955,
            0.009993597414733579,
        ],
    ),
    (
        [
            0.002625961371586153,
            0.00630938377239226,
            0.01073246133489697,
            0.01645170499644402,
            0.02433800511777796,
            0.03582530925992294,
            0.05315827372101662,
            0.07917327903614484,
            0.1162053707416708,
            0.1648139164451449,
            0.22319340884888,
            0.2864519293820641,
            0.34667294911894,
            0.4076175535528108,
            0.4800964107543535,
            0.559410500920446,
            0.6395390292352857,
            0.7167410782176877,
            0.7882807127957939,
            0.8519356675821297,
            0.9058606177202579,
            0.9485539755760567,
            0.9788566874094059,
            0.9959649506960162,
        ],
        [
            0.00344190173713512,
            0.00397879979473207,
            0.00495844950564498,
            0.006620822501994994,
            0.009385496468197222,
            0.01396512052439178,
            0.02119383832447796,
            0.03124989308824302,
            0.04291481168916344,
            0.05400832278279924,
            0.06197424674301215,
            0.0629722162613157,
            0.05794981636764223,
            0.06650501614478806,
            0.07716379373230733,
            0.08047814122759604,
            0.07917822434973971,
            0.07477646096014055,
            0.06793424765652059,
            0.05906852968947303,
            0.04853108558910315,
            0.03666228059710319,
            0.02380850649522536,
            0.01034186239262945,
        ],
    ),
    (
        [
            0.000775945167924226,
            0.001952854410117286,
            0.003429053832116395,
            0.005301128540262913,
            0.007878118775220067,
            0.01205537050949829,
            0.01965871512055557,
            0.03403328641997047,
            0.05947430305925957,
            0.0987350054353144,
            0.1518862681939413,
            0.2171724325134259,
            0.2919941878735093,
            0.373463735325553,
            0.4586710018443288,
            0.5448057416999684,
            0.6292158981939618,
            0.7094415843889587,
            0.7832417328632321,
            0.8486194141302759,
            0.9038469149367938,
            0.9474898150194623,
            0.9784290662963747,
            0.9958843370550371,
        ],
        [
            0.001049591733965263,
            0.001314968855711329,
            0.001651475072547296,
            0.002135645684467029,
            0.003165043382856636,
            0.005479528688655274,
            0.01028817002915096,
            0.01923291785614007,
            0.03212643438782854,
            0.04638626850049229,
            0.05960676923068444,
            0.07052360405410943,
            0.07863451090237836,
            0.08381771698595157,
            0.08612755554083525,
            0.08569938467103264,
            0.08271051499695768,
            0.07736692567834522,
            0.0699001293776046,
            0.0605668766966768,
            0.04964868706783169,
            0.03745026957972177,
            0.02429741981889855,
            0.0105490661610852,
        ],
    ),
    (
        [
            0.0003126377187332637,
            0.0007671264269072188,
            0.001359575160544077,
            0.002238313285727558,
            0.003770276623583326,
            0.007146583956092048,
            0.01635515250548719,
            0.03828062855101241,
            0.07628984500206759,
            0.1294255336121595,
            0.1949876755761554,
            0.2693852297828856,
            0.3469762441631538,
            0.4122748928895491,
            0.4662499202239145,
            0.5421402737123784,
            0.6248832413655412,
            0.705325849678484,
            0.7798841313231049,
            0.8461534275163378,
            0.9022312524979976,
            0.9465899812310277,
            0.978054956382381,
            0.9958125149101927,
        ],
        [
            0.000413647968289396,
            0.0005068714387414649,
            0.0007008932527842778,
            0.001110264922990352,
            0.002120108385941761,
            0.005249076343206215,
            0.01450809938905405,
            0.02987724029376343,
            0.04593298717863718,
            0.05987634475538021,
            0.07065953519392547,
            0.07729918562776261,
            0.0755663534017183,
            0.05234123638339037,
            0.06532130125393047,
            0.0818827208019884,
            0.08237354882288161,
            0.07795795664563893,
            0.07076514272025076,
            0.06145788741452406,
            0.05044339641339403,
            0.03807817118430632,
            0.02471549011101626,
            0.01073289672726758,
        ],
    ),
    (
        [
            0.0001019234906342863,
            0.0002506087227631447,
            0.0004461429005344285,
            0.0007422845421202523,
            0.001289196091156456,
            0.002739287668024851,
            0.009075168969969708,
            0.02968005234555358,
            0.06781742979962609,
            0.1217792474402805,
            0.1886625378438471,
            0.2650602155844836,
            0.346511360833908,
            0.4178374197420536,
            0.4597624982511183,
            0.5348065111487157,
            0.6194640153146728,
            0.7013481004172354,
            0.7770386175609082,
            0.8442211768916794,
            0.9010272836291835,
            0.9459409782755,
            0.9777905486554876,
            0.995762287104165,
        ],
        [
            0.0001349775051746596,
            0.0001663411550150506,
            0.0002328782111562424,
            0.0003804721779784063,
            0.000793035045291145,
            0.002600694722423854,
            0.01212249113599252,
            0.02946708975720586,
            0.0464777196069139,
            0.06095376889009233,
            0.07224844725827559,
            0.07986429603884565,
            0.08143206462900546,
            0.05040529357007135,
            0.05592137651001418,
            0.08398073572656715,
            0.08402586870225486,
            0.07922223490159952,
            0.07177919251691964,
            0.06227551999401272,
            0.05108407212719758,
            0.03854783279333592,
            0.02501496650831813,
            0.01086176801402067,
        ],
    ),
    (
        [
            3.421721832247593e-05,
            8.53390625544238e-05,
            0.0001563524616155011,
            0.0002746612401575526,
            0.0005408643931265062,
            0.001782382096488333,
            0.01101243912052365,
            0.03553172024884285,
            0.07554170435463801,
            0.1295711894941649,
            0.1953213037793089,
            0.2699680545714222,
            0.350369728137109,
            0.4330838596494367,
            0.5141801680435878,
            0.5895097016206093,
            0.6582708672338614,
            0.725254361788732,
            0.791415448561372,
            0.8528383935857844,
            0.9059696536862878,
            0.9484664124578303,
            0.9787863313133854,
            0.9959482975155097,
        ],
        [
            4.559730842497453e-05,
            5.840391255974745e-05,
            8.76158090068204e-05,
            0.0001617264666294872,
            0.0004433543035169213,
            0.003116175111368442,
            0.01655494413772595,
            0.03242539256461602,
            0.04734426463929677,
            0.06032614603579952,
            0.07069975187373848,
            0.07806973621204365,
            0.08216350598137868,
            0.08261286657092808,
            0.07883476216668445,
            0.07157205125318401,
            0.06703064468754417,
            0.0670613727371963,
            0.06449984116349734,
            0.05775434959088197,
            0.0481260023902388,
            0.03661415869304224,
            0.02386304203446463,
            0.01038268695581411,
        ],
    ),
    (
        [
            6.538987938840374e-06,
            2.613485075847413e-05,
            5.664183720634991e-05,
            0.0001179374114362569,
            0.0003299119431334128,
            0.003626828607577001,
            0.02265102906572155,
            0.0589679623168034,
            0.1092496277855923,
            0.1666701689499393,
            0.21968893858988,
            0.2770352260035617,
            0.3483163928268329,
            0.415328766483726,
            0.4695624219668608,
            0.5421129318998841,
            0.6238832212055707,
            0.7041842972237081,
            0.778881700755211,
            0.8453877637047045,
            0.9017178251963006,
            0.9462999385952402,
            0.9779333485180249,
            0.9957890687155009,
        ],
        [
            1.500332421093607e-05,
            2.367234654253158e-05,
            4.007286246706405e-05,
            9.497743501485505e-05,
            0.0004619067037944727,
            0.009985382463808036,
            0.02805741744607257,
            0.04404106103008398,
            0.05548413172821072,
            0.05693235996372726,
            0.05087307376046002,
            0.06593729718379782,
            0.07335680008972614,
            0.05675029500743735,
            0.06117926027541254,
            0.0800480506706755,
            0.08196991767042605,
            0.07800219127200407,
            0.07097175077519494,
            0.06171193295041172,
            0.05068671319716005,
            0.03827738423897266,
            0.0248506376273362,
            0.01079284973329516,
        ],
    ),
    (
        [
            6.725520559705825e-06,
            6.986424152770461e-06,
            1.217363416714366e-05,
            2.677746219601529e-05,
            5.597036348896741e-05,
            0.0002729343280943077,
            0.00944552680626314,
            0.03556725025161542,
            0.0776555666817781,
            0.1336848150648662,
            0.201157691768355,
            0.2772736854314979,
            0.3590124362607926,
            0.4430074035214462,
            0.524738821957451,
            0.596105323878242,
            0.6547331131213409,
            0.7192258519628951,
            0.7874251789073102,
            0.8505852012775045,
            0.9047824617894323,
            0.9479045131744448,
            0.9785770588866582,
            0.9959104692340199,
        ],
        [
            8.12839191397404e-05,
            -7.773900735768282e-05,
            1.287386499666193e-05,
            1.895577251914526e-05,
            4.732580352158076e-05,
            0.0009857909615386162,
            0.01756872897270054,
            0.03439422017906772,
            0.0494418836179297,
            0.06219733934997792,
            0.07228007436918939,
            0.07944986391225688,
            0.08347646288178011,
            0.08380433020121207,
            0.07832768209682506,
            0.0630079622524294,
            0.05923406014585053,
            0.0683429356380381,
            0.06660337204499726,
            0.05911988751082552,
            0.04893575310568894,
            0.03708256438629509,
            0.02411463784693618,
            0.0104808715669702,
        ],
    ),
    (
        [
            2.828736694877886e-08,
            2.302233157554212e-06,
            5.853587143444178e-06,
            1.451588770083244e-05,
            9.71196509927303e-05,
            0.009004761967373848,
            0.03442077924035546,
            0.07543926781582543,
            0.1300373356318913,
            0.1955182772803384,
            0.2683608546664295,
            0.3430029178740901,
            0.4085056107803621,
            0.4660198270439085,
            0.5336124745634699,
            0.5985245800106473,
            0.6564089719608276,
            0.7216666024232565,
            0.7893712241343741,
            0.8518883782001418,
            0.9055688088881344,
            0.9483163097840529,
            0.9787413692715607,
            0.9959413203611228,
        ],
        [
            1.665602686704325e-05,
            2.577419924039251e-06,
            4.957941112780975e-06,
            1.537074702915107e-05,
            0.0004640075239797995,
            0.01705687938176189,
            0.03349724914160473,
            0.04820210872119093,
            0.06054547286337976,
            0.06984354388121057,
            0.07498721497014774,
            0.07240620145057083,
            0.05774925310174693,
            0.06238505554837956,
            0.06940394677081842,
            0.05910843483407385,
            0.0605975232145419,
            0.06823362237770209,
            0.06593839664071163,
            0.05853014420243146,
            0.04849217100974983,
            0.03677417821170115,
            0.02392585642844202,
            0.01040149939671874,
        ],
    ),
    (
        [
            6.147063879573664e-07,
            2.102921984985835e-06,
            2.188366117432289e-06,
            3.48260294269488e-06,
            2.768001888608636e-05,
            0.008942779215792784,
            0.03432218364237253,
            0.0753093132802662,
            0.1298983048592572,
            0.1954020797117703,
            0.2682970870436427,
            0.3429540704041702,
            0.4080399755202422,
            0.4652562798154792,
            0.5333220999210325,
            0.5986982369433125,
            0.6564773600603511,
            0.7215159032030418,
            0.789209821076094,
            0.8517672777806986,
            0.9054906995605498,
            0.9482736017320823,
            0.9787238593479314,
            0.9959379852805677,
        ],
        [
            8.763741095000331e-07,
            1.784696796288373e-05,
            -1.795398395983826e-05,
            5.117514567175025e-06,
            0.000169886354928439,
            0.01701975216672032,
            0.03346025972593909,
            0.04817949622196712,
            0.06055152664710045,
            0.06988313730886592,
            0.07504602275463067,
            0.0723094267487411,
            0.05705952259766429,
            0.06265021180818162,
            0.06993669694523695,
            0.05937130986945129,
            0.06026572020863567,
            0.06815292696374753,
            0.06596804590657802,
            0.05857483758149194,
            0.04853209199396977,
            0.03680469214176019,
            0.02394561701705853,
            0.01041005152890511,
        ],
    ),
    (
        [
            4.523740015216508e-08,
            4.281855233588279e-07,
            1.036900153156159e-06,
            7.825849325746907e-06,
            0.008617419723953112,
            0.03268881163637599,
            0.06988441391437043,
            0.1142202307676442,
            0.1596471081833281,
            0.213533641895962,
            0.2781100275296151,
            0.3433392803364457,
            0.4019960595528027,
            0.4656415679416787,
            0.533488054889425,
            0.5943298528903542,
            0.6562968737815924,
            0.7250343344601498,
            0.7928820737781136,
            0.8546103048745466,
            0.9073762310762705,
            0.9493253659835347,
            0.9791606801267259,
            0.9960217573957566,
        ],
        [
            4.418138082366788e-07,
            4.38910805864312e-07,
            9.539585150737866e-07,
            5.823980947200484e-05,
            0.01634464263521301,
            0.03129682188728318,
            0.0421246861758948,
            0.04505120897719191,
            0.04769069780026684,
            0.06038503382768951,
            0.0669534367269418,
            0.06163298712826237,
            0.05877742624357513,
            0.0680005363777344,
            0.06516918103589647,
            0.05853785375926075,
            0.06639396325654251,
            0.06948738324081696,
            0.06538801703374268,
            0.0576150375162925,
            0.0476134485955531,
            0.03607033097268266,
            0.02345690720840071,
            0.01019557402722854,
        ],
    ),
    (
        [
            6.02598028280102e-08,
            6.411245262925473e-08,
            1.862815529429129e-07,
            2.029190208906422e-06,
            0.0089028813070765,
            0.03420089035164912,
            0.07508687525931594,
            0.1295858123029775,
            0.1950409815188335,
            0.2679751967812604,
            0.3428525062164689,
            0.4080941369413548,
            0.4646644511900009,
            0.5328071517215501,
            0.5978508749698,
            0.6521214523350964,
            0.7134921670665336,
            0.7679317896479284,
            0.8029718487208403,
            0.8551101435866935,
            0.9067319102017767,
            0.9487765213293372,
            0.9788979796532736,
            0.9959684838634199,
        ],
        [
            9.079353616441234e-07,
            -8.390389042773805e-07,
            2.782460677485016e-07,
            1.821115881362725e-05,
            0.01695809650660321,
            0.03336370146025145,
            0.04807898681796971,
            0.06047672723211479,
            0.06986774906175534,
            0.07515608233194288,
            0.0726424990403761,
            0.05672507168477261,
            0.06220316364524964,
            0.07032362652293805,
            0.05742730804758014,
            0.05644075454541152,
            0.0631864366615039,
            0.03945995610428228,
            0.04324200884758527,
            0.05478223695609097,
            0.04740856250832772,
            0.03633314063504751,
            0.02372788917088821,
            0.01033036588606145,
        ],
    ),
];
