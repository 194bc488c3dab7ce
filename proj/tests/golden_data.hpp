// Generated by golden/make_golden.py -- do not edit by hand.
#pragma once

namespace golden {

inline constexpr double kelvin_to_rad_per_ps = 0.13092031648858494;
inline constexpr double bose_einstein_at_1em8 = 99999999.500000001;
inline constexpr double zeta5 = 1.0369277551433699;
inline constexpr double sinh_moment4 = 3.0135712883854188;  // int_0^inf u^4 * 2/sinh(2u) du
inline constexpr double crossover_coeff_ratio = 2.1423861647252825;

inline constexpr double fig2_j0_eff = 364.64135723480488;         // ps^2
inline constexpr double fig2_omega_t = 0.010473625319086795;        // rad/ps
inline constexpr double fig2_omega_d = 61.532548749634923;        // rad/ps
inline constexpr double fig2_gamma_down = 0.0030443119275558408;
inline constexpr double fig2_gamma_up = 0.00041200281697636805;

inline constexpr int szz_curve_n = 201;
inline constexpr double szz_curve_omega[] = {
    1.0473625319086795e-5, 1.1222691725226887e-5, 1.2025330840310948e-5,
    1.2885374147262349e-5, 1.3806927154001168e-5, 1.4794388991521574e-5,
    1.5852473413610089e-5, 1.6986231298449110e-5, 1.8201074759519475e-5,
    1.9502802980898042e-5, 2.0897629900277790e-5, 2.2392213871858287e-5,
    2.3993689450705485e-5, 2.5709701450306828e-5, 2.7548441435899054e-5,
    2.9518686827773443e-5, 3.1629842801222284e-5, 3.3891987183140408e-5,
    3.6315918559600472e-5, 3.8913207824048594e-5, 4.1696253412191139e-5,
    4.4678340487242225e-5, 4.7873704358059011e-5, 5.1297598432897962e-5,
    5.4966367033176552e-5, 5.8897523414824613e-5, 6.3109833369668525e-5,
    6.7623404805928328e-5, 7.2459783735449736e-5, 7.7642057125876315e-5,
    8.3194963108737538e-5, 8.9145009069542743e-5, 9.5520598183596563e-5,
    0.00010235216500156796, 0.00010967232073204495, 0.00011751600891459675,
    0.00012592067222646507, 0.00013492643121915421, 0.00014457627583813781,
    0.00015491627063992197, 0.00016599577468609020, 0.00017786767716401762,
    0.00019058864985901503, 0.00020421941768310522, 0.00021882504855182946,
    0.00023447526399284180, 0.00025124477196901420, 0.00026921362350481894,
    0.00028846759481838214, 0.00030909859678335619, 0.00033120511367522087,
    0.00035489267329641512, 0.00038027435072449157, 0.00040747130808798907,
    0.00043661337294670073, 0.00046783965803729671, 0.00050129922534272354,
    0.00053715179765538542, 0.00057556852103082993, 0.00061673278177159155,
    0.00066084108184115211, 0.00070810397688689951, 0.00075874708134983668,
    0.00081301214545903863, 0.00087115820925200489, 0.00093346283912974563,
    0.0010002234528494286, 0.0010717587392795795, 0.0011484101796951880,
    0.0012305436778747826, 0.0013185513067809160, 0.0014128531801620251,
    0.0015138994580099559, 0.0016221724954464169, 0.0017381891452962989,
    0.0018625032253394391, 0.0019957081620185169, 0.0021384398232231017,
    0.0022913795536724478, 0.0024552574273867580, 0.0026308557327729318,
    0.0028190127069612258, 0.0030206265372190768, 0.0032366596485432621,
    0.0034681432978976716, 0.0037161824970277741, 0.0039819612873513539,
    0.0042667483921057676, 0.0045719032727328463, 0.0048988826184122385,
    0.0052492472997216680, 0.0056246698196181432, 0.0060269422973081658,
    0.0064579850231187894, 0.0069198556252071128, 0.0074147588918664681,
    0.0079450572963171223, 0.0085132822742226986, 0.0091221463077667359,
    0.0097745558739740095, 0.010473625319086795, 0.011222691725226887,
    0.012025330840310948, 0.012885374147262349, 0.013806927154001168,
    0.014794388991521574, 0.015852473413610089, 0.016986231298449110,
    0.018201074759519475, 0.019502802980898042, 0.020897629900277790,
    0.022392213871858287, 0.023993689450705485, 0.025709701450306828,
    0.027548441435899054, 0.029518686827773443, 0.031629842801222284,
    0.033891987183140408, 0.036315918559600472, 0.038913207824048594,
    0.041696253412191139, 0.044678340487242225, 0.047873704358059011,
    0.051297598432897962, 0.054966367033176552, 0.058897523414824613,
    0.063109833369668525, 0.067623404805928328, 0.072459783735449736,
    0.077642057125876315, 0.083194963108737538, 0.089145009069542743,
    0.095520598183596563, 0.10235216500156796, 0.10967232073204495,
    0.11751600891459675, 0.12592067222646507, 0.13492643121915421,
    0.14457627583813781, 0.15491627063992197, 0.16599577468609020,
    0.17786767716401762, 0.19058864985901503, 0.20421941768310522,
    0.21882504855182946, 0.23447526399284180, 0.25124477196901420,
    0.26921362350481894, 0.28846759481838214, 0.30909859678335619,
    0.33120511367522087, 0.35489267329641512, 0.38027435072449157,
    0.40747130808798907, 0.43661337294670073, 0.46783965803729671,
    0.50129922534272354, 0.53715179765538542, 0.57556852103082993,
    0.61673278177159155, 0.66084108184115211, 0.70810397688689951,
    0.75874708134983668, 0.81301214545903863, 0.87115820925200489,
    0.93346283912974563, 1.0002234528494286, 1.0717587392795795,
    1.1484101796951880, 1.2305436778747826, 1.3185513067809160,
    1.4128531801620251, 1.5138994580099559, 1.6221724954464169,
    1.7381891452962989, 1.8625032253394391, 1.9957081620185169,
    2.1384398232231017, 2.2913795536724478, 2.4552574273867580,
    2.6308557327729318, 2.8190127069612258, 3.0206265372190768,
    3.2366596485432621, 3.4681432978976716, 3.7161824970277741,
    3.9819612873513539, 4.2667483921057676, 4.5719032727328463,
    4.8988826184122385, 5.2492472997216680, 5.6246698196181432,
    6.0269422973081658, 6.4579850231187894, 6.9198556252071128,
    7.4147588918664681, 7.9450572963171223, 8.5132822742226986,
    9.1221463077667359, 9.7745558739740095, 10.473625319086795,
};
inline constexpr double szz_curve_value[] = {
    243.25854351000937, 243.27547193310242, 243.29357636214916,
    243.31293575402884, 243.33363394754062, 243.35575989877027,
    243.37940791633519, 243.40467789396580, 243.43167553732062,
    243.46051258127322, 243.49130699313825, 243.52418315640134,
    243.55927202846419, 243.59671126468716, 243.63664529957975,
    243.67922537432265, 243.72460949786719, 243.77296232660677,
    243.82445494500190, 243.87926452651028, 243.93757385066218,
    243.99957064805671, 244.06544674035192, 244.13539693688758,
    244.20961764330378, 244.28830513027978, 244.37165340217569,
    244.45985159575868, 244.55308082815888, 244.65151040053380,
    244.75529324940589, 244.86456052104059, 244.97941512529461,
    245.09992410381475, 245.22610962302151, 245.35793837468472,
    245.49530913581258, 245.63803820478847, 245.78584239201189,
    245.93831920064464, 246.09492378649285, 246.25494223586203,
    246.41746064702598, 246.58132944583313, 246.74512231065804,
    246.90708902898065, 247.06510156109452, 247.21659255109304,
    247.35848550864000, 247.48711589693222, 247.59814241575900,
    247.68644788067900, 247.74602929188486, 247.76987698673205,
    247.74984321189253, 247.67650107506023, 247.53899568891111,
    247.32489045353546, 247.02001289179629, 246.60830630545764,
    246.07169579615250, 245.38997990527981, 244.54076223513122,
    243.49944081140650, 242.23927642078173, 240.73156435062856,
    238.94593633952745, 236.85082038662296, 234.41408444188629,
    231.60388484594586, 228.38973063315939, 224.74375958751838,
    220.64220090213572, 216.06697300064459, 211.00733538253212,
    205.46148364428076, 199.43795198989493, 192.95667345632409,
    186.04955057084560, 178.76041251882313, 171.14428026166526,
    163.26592514303917, 155.19778142219909, 147.01734732770527,
    138.80426980909870, 130.63734413308513, 122.59166438214642,
    114.73613456799879, 107.13149841068132, 99.828979170527099,
    92.869551180516218, 86.283802633857457, 80.092302215642718,
    74.306353716037675, 68.929012423907574, 63.956241757766712,
    59.378103774993993, 55.179898319612170, 51.343188783367504,
    47.846675121644468, 44.666895521344086, 41.778756699829476,
    39.155909718211894, 36.771004218497471, 34.595869693117969,
    32.601687416503273, 30.759229058778855, 29.039243646149063,
    27.413067150137498, 25.853501323713295, 24.335955222941054,
    22.839765694451261, 21.349525202605802, 19.856173253161117,
    18.357585359069313, 16.858447915796448, 15.369340324275117,
    13.905124015070967, 12.482902187184967, 11.119904883847493,
    9.8316420915745014, 8.6305665512331628, 7.5253438403106984,
    6.5206924572157588, 5.6176668061803351, 4.8142211244597427,
    4.1059020012189228, 3.4865518414637659, 2.9489473433746343,
    2.4853340160690744, 2.0878449212494517, 1.7488088513697996,
    1.4609620578717471, 1.2175809835894835, 1.0125534590445436,
    0.84040409174026313, 0.69628712716162847, 0.57595747772368969,
    0.47572821045986908, 0.39242069644637478, 0.32331189828351021,
    0.26608189636473120, 0.21876369314610960, 0.17969653923591712,
    0.14748344642046413, 0.12095314495648740, 0.099126465877508999,
    0.081186950724548308, 0.066455384567867836, 0.054367892764930086,
    0.044457221813200530, 0.036336828097869890, 0.029687416653028926,
    0.024245599046426724, 0.019794370819669248, 0.016155141614568864,
    0.013181083259626273, 0.010751591481030854, 0.0087676848623940554,
    0.0071481898874867107, 0.0058265832814776968, 0.0047483824939962551,
    0.0038689922107436114, 0.0031519294593884315, 0.0025673624322217152,
    0.0020909088276378589, 0.0017026485509885503, 0.0013863132325644836,
    0.0011286214163310284, 0.00091873362619711573, 0.00074780598441854525,
    0.00060862477638927697, 0.00049530744602885272, 0.00040305806780643498,
    0.00032796746170361619, 0.00026684986947297181, 0.00021710955630419994,
    0.00017663189350171721, 0.00014369445860056714, 0.00011689449591450384,
    9.5089743157603649e-5, 7.7350173724876238e-5, 6.2918650375633019e-5,
    5.1178851756172012e-5, 4.1629132744239911e-5, 3.3861224816629586e-5,
    2.7542883277684283e-5, 2.2403752264506107e-5, 1.8223852564702680e-5,
    1.4824206868622159e-5, 1.2059206583714600e-5, 9.8103974175954448e-6,
    7.9814205839083367e-6, 6.4938951551788647e-6, 5.2840667887848129e-6,
    4.3000804301700569e-6, 3.4997609963249185e-6, 2.8488075617776078e-6,
    2.3193241073205508e-6, 1.8886241823213128e-6, 1.5382584740059401e-6,
};

inline constexpr double cutoff_gamma_min = 2.6509301894714297e-16;
inline constexpr double cutoff_gamma_max = 6.6273254736785743e-7;

inline constexpr double wstar_alpha0_10mk = 3.4245004965064388e-9;
inline constexpr double wstar_alpha1_10mk = 7.3366024848102551e-9;

}  // namespace golden
