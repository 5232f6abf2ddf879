// Copyright 2026 The opmgr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/scripts/wilcoxon_reference.py; do not edit.
#include "opmgr/bench/oracles.hpp"

namespace opmgr::bench {

const std::vector<WilcoxonReferenceCase>& wilcoxon_reference_cases() {
  static const std::vector<WilcoxonReferenceCase> cases{
      {"normal_10",
       {0.18881087944270866, -0.11773347098452547, 0.5495958369624623, -1.3898968436779757, 0.6844522535691842, 0.07830439351630991, -0.32605032444930193, 0.4985372751312967, -1.5514738484064803, 0.2415871143728433},
       {-0.7312848653804448, 0.40969535789355127, 0.44244173776631784, -0.9278626907702291, -0.9331679527718499, -1.4700371639889616, -0.7876892940867893, 0.3194143920162998, 0.8572703661247674, 0.22879972296310866},
       21.0, 0.5076243443095237},
      {"normal_14",
       {0.4347992526551561, -0.46744711044345666, 0.5957702128443177, -0.4156895315256701, 0.6396288848986811, 0.1974066737598765, 1.2560181034854327, 0.602470352553979, 1.7688252896097016, -0.008214447471590058, 1.1559450824466322, 0.6251607240745753, 2.096555820106894, -1.5620539547190586},
       {0.8742582951813314, -1.0236516100709405, -0.8686467389750054, -0.018363115062379937, -1.5105593611064696, -1.1945810265785586, -0.5055418749192547, -0.32248383162699573, -1.9036789280897755, -0.8736312382373598, -0.14591356690623353, -0.13192758477062216, -0.6623081572224156, -0.004088789106296888},
       13.0, 0.013150364234284668},
      {"normal_18",
       {-0.11337442708578371, 1.5734987782299332, -0.40913518200791155, 0.4591037987989793, -0.0895950062802856, 1.254562453131086, -0.5715485115688727, 1.2766026328650386, -0.7953017929996643, -0.9669968971215469, -0.1484695736103665, 0.49212685627119046, -1.1210236133299682, -0.10418945543351432, 0.39602953429068155, 0.3644423461040357, 1.2755659365466596, 1.1842735347855209},
       {0.3328312480926164, 0.9134330350514333, 0.9397262079681602, -1.1091623712921952, 2.185262079056387, -0.04892698270045923, -0.6059423952504954, 0.600149321696642, -0.4885771515933718, 0.6271570321279208, -1.2013988771197082, 0.7253584703756797, -1.2638736463683906, 0.3757325601327688, -0.21322506082178258, -0.5014829692374623, 0.153073453363695, -0.5753083988801887},
       66.0, 0.3957522466577532},
      {"normal_24",
       {-0.3719429461651369, 0.7949064774378438, 2.331206847440094, -0.5977568753677935, 1.5551673162548703, 1.4815576939107635, -0.7200802383514654, 0.5902346053615726, 0.9240390963859574, -0.5108560639633887, 1.4792177692115462, 1.2779097900984013, 2.098437695911691, 0.7898344213661788, 1.3460304564262813, 2.212116524747158, 0.6029905519055808, -0.10022278985905453, -1.0509143207839018, 0.6864548014439108, -0.8672165371800261, 1.4976933587930148, 0.5471650589172741, 1.2110572665632209},
       {0.16271351725088673, 1.2383313599650503, -0.456354677083108, 0.05006772266326947, 1.4001149565290263, -1.2583110321903825, 0.19252723035005864, 0.9752574099039509, -1.0635333890782235, -0.6997189554259344, -1.2499109994493884, 1.180755855958985, -0.18937950941760334, -0.3151526950576845, -1.4125440998120293, -1.0637880888392612, 0.9265324028169399, -0.1894662559146825, -0.4008865295361959, 0.7918978444233291, -0.9058702327124593, 1.6133774967039864, -0.36821453798861686, -0.5130431413146951},
       86.0, 0.06746383613161147},
      {"normal_30",
       {0.13483486773821673, 0.4373416032285023, 1.1011685358520777, -0.2988357023991144, -0.42402730357491625, 0.43815731814383413, 0.738946480595799, 1.2772554573332024, -0.07675317335829224, 1.3670117114464462, -0.6198929249926405, 1.7857781904896353, -0.6920718843489276, 0.3137357829776387, 0.5952943329044209, 1.413168409695103, 1.8601675465759921, 0.44923105494836046, 2.2956444686047455, -0.4195254055421561, 0.727085780475411, 0.16309937977887976, 0.9724267033297068, -0.5518576569589675, -0.6978371256871218, 1.6831606687353897, 1.4640303528956364, 0.9611182293510114, -0.3022128648311302, 0.9920709367367252},
       {0.44715755163459925, 1.233463002510945, 0.23291628084796767, -1.614519078535772, -0.21626000057556494, -0.027445090253328065, 0.7922051499984665, -0.24777281185006933, -1.0582170477267128, 1.150391898846106, 0.385598921102513, -1.0974238644553607, -0.6638390469431474, 0.9191455884612612, -1.3493675504328448, 0.9679760019194605, 0.022872029582339172, -0.15221941895025928, 0.866086228617757, -0.42415673418334754, 0.05577984128625503, 1.6350017254802929, -0.8448702963902519, 1.821685117550148, -1.6861164261567418, -0.8564476431024972, 0.9009172850167928, -0.6628436994512616, -0.3183351971264662, 0.7895819149304028},
       118.0, 0.018518974697467713},
      {"integer_ties_zeros_12",
       {2.0, 0.0, 4.0, 4.0, 0.0, 1.0, 3.0, 3.0, 0.0, 2.0, 2.0, 2.0},
       {1.0, 0.0, 3.0, 2.0, 3.0, 3.0, 1.0, 5.0, 0.0, 5.0, 5.0, 1.0},
       17.0, 0.2788118370071061},
      {"integer_ties_zeros_16",
       {0.0, 3.0, 4.0, 3.0, 4.0, 1.0, 1.0, 1.0, 3.0, 0.0, 5.0, 3.0, 0.0, 2.0, 4.0, 2.0},
       {4.0, 2.0, 2.0, 1.0, 0.0, 5.0, 0.0, 0.0, 3.0, 0.0, 1.0, 5.0, 5.0, 3.0, 1.0, 4.0},
       52.5, 1.0},
      {"integer_ties_zeros_20",
       {4.0, 5.0, 5.0, 1.0, 1.0, 4.0, 3.0, 3.0, 0.0, 2.0, 3.0, 3.0, 2.0, 2.0, 3.0, 4.0, 5.0, 2.0, 3.0, 2.0},
       {4.0, 3.0, 0.0, 1.0, 0.0, 1.0, 0.0, 3.0, 1.0, 4.0, 5.0, 2.0, 2.0, 2.0, 3.0, 2.0, 4.0, 4.0, 0.0, 3.0},
       30.0, 0.15328269537222827},
      {"integer_ties_zeros_26",
       {2.0, 0.0, 5.0, 4.0, 1.0, 3.0, 3.0, 0.0, 2.0, 1.0, 4.0, 5.0, 5.0, 0.0, 1.0, 1.0, 4.0, 3.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 4.0, 1.0},
       {3.0, 4.0, 5.0, 0.0, 0.0, 5.0, 3.0, 1.0, 3.0, 4.0, 0.0, 5.0, 1.0, 3.0, 0.0, 0.0, 3.0, 0.0, 3.0, 1.0, 0.0, 3.0, 4.0, 1.0, 2.0, 0.0},
       108.5, 0.8053635730921116},
      {"integer_ties_zeros_40",
       {1.0, 1.0, 5.0, 4.0, 1.0, 2.0, 2.0, 4.0, 5.0, 1.0, 2.0, 2.0, 5.0, 4.0, 1.0, 1.0, 3.0, 1.0, 4.0, 3.0, 0.0, 5.0, 4.0, 3.0, 5.0, 5.0, 3.0, 5.0, 0.0, 5.0, 3.0, 0.0, 1.0, 5.0, 4.0, 4.0, 3.0, 5.0, 0.0, 4.0},
       {1.0, 1.0, 0.0, 1.0, 1.0, 5.0, 3.0, 3.0, 2.0, 0.0, 1.0, 3.0, 2.0, 4.0, 0.0, 3.0, 0.0, 2.0, 4.0, 1.0, 2.0, 3.0, 2.0, 3.0, 3.0, 1.0, 0.0, 2.0, 4.0, 2.0, 0.0, 2.0, 0.0, 2.0, 5.0, 5.0, 0.0, 3.0, 5.0, 5.0},
       172.5, 0.030935577982763262},
      {"rpd_like_15",
       {0.421, 0.269, 0.407, 0.137, 0.718, 1.113, 2.37, 0.004, 0.017, 0.09, 0.281, 0.06, 0.093, 0.968, 0.749},
       {0.359, 0.292, 0.192, 0.24, 0.984, 0.053, 1.67, 0.083, 1.375, 0.238, 1.411, 0.664, 0.064, 0.571, 0.191},
       56.0, 0.8202800980995039},
      {"rpd_like_30",
       {0.097, 0.675, 0.27, 0.023, 0.147, 0.622, 1.854, 0.758, 1.222, 0.483, 0.864, 0.646, 0.14, 0.19, 2.192, 0.881, 0.039, 1.548, 0.362, 0.094, 0.037, 0.807, 0.382, 0.063, 1.094, 0.879, 0.974, 0.34, 0.22, 0.057},
       {0.058, 0.111, 0.445, 0.725, 0.701, 2.859, 0.238, 0.214, 0.06, 0.641, 0.958, 3.172, 0.156, 0.224, 0.497, 0.172, 0.044, 0.071, 0.193, 0.097, 0.013, 0.072, 3.015, 0.777, 0.45, 1.138, 0.57, 0.43, 1.807, 0.173},
       227.0, 0.9099307681587345},
      {"rpd_like_60",
       {0.41, 0.059, 0.001, 0.091, 0.256, 1.112, 0.093, 0.062, 0.357, 0.727, 0.149, 0.118, 0.089, 0.102, 0.441, 1.711, 0.042, 1.097, 0.781, 0.768, 0.456, 0.144, 0.649, 0.619, 0.124, 1.833, 0.039, 0.878, 0.262, 0.122, 0.032, 1.517, 0.01, 0.301, 0.332, 0.876, 0.157, 0.552, 0.518, 0.095, 0.463, 0.703, 1.302, 0.152, 1.005, 0.798, 0.128, 0.161, 0.038, 0.537, 0.009, 0.188, 0.206, 0.154, 0.089, 0.496, 0.315, 0.822, 0.985, 0.125},
       {0.261, 0.805, 0.434, 0.761, 1.379, 0.074, 0.411, 0.328, 0.846, 0.743, 0.381, 0.779, 0.316, 0.456, 0.252, 0.82, 0.01, 0.142, 0.095, 0.349, 0.259, 0.086, 3.154, 0.248, 2.075, 0.551, 2.827, 0.613, 0.839, 0.314, 1.091, 0.987, 0.2, 0.058, 2.37, 1.512, 1.106, 1.529, 0.274, 0.647, 0.793, 0.505, 0.49, 0.915, 0.31, 0.461, 0.519, 0.334, 0.126, 1.226, 1.142, 0.063, 0.184, 0.991, 0.593, 0.643, 0.417, 0.088, 0.864, 0.559},
       629.0, 0.03525489842985291},
      {"textbook_10",
       {125.0, 115.0, 130.0, 140.0, 140.0, 115.0, 140.0, 125.0, 140.0, 135.0},
       {110.0, 122.0, 125.0, 120.0, 140.0, 124.0, 123.0, 137.0, 135.0, 145.0},
       18.0, 0.5936305914425295},
      {"shift_by_one_20",
       {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0, 19.0, 20.0},
       {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0, 19.0},
       0.0, 7.74421643104407e-06},
      {"half_zero_diffs_16",
       {3.0, 3.0, 5.0, 5.0, 7.0, 1.0, 2.0, 9.0, 4.0, 4.0, 6.0, 8.0, 2.0, 3.0, 1.0, 5.0},
       {3.0, 3.0, 5.0, 5.0, 7.0, 1.0, 2.0, 9.0, 2.0, 7.0, 1.0, 8.0, 5.0, 0.0, 4.0, 9.0},
       11.5, 0.6669545286928193},
      {"opposite_signs_ties_12",
       {1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 1.0, -1.0, 2.0, -2.0, 4.0, 5.0},
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
       27.5, 0.3630808898049772},
      {"symmetric_noise_50",
       {0.6798344200221411, 0.9236306237869328, -1.1304622438101035, -0.9166526992532559, -0.2912395948798767, -0.41102736344046775, -0.403743089975557, -1.506159208204592, -0.07390308240362296, -0.5420735781627288, 0.20073324968580322, 0.14363897199479517, -0.9655284030860602, 0.4010377808981736, 0.45453277431371214, -1.5712372405523714, 0.6161918855471679, -0.41226387314205154, 0.15500387613743302, 0.030292793447924838, -0.48326680143455153, -1.7817979965277608, 0.040481915129365796, -0.5753526872531414, -0.2756691627221759, 1.4225047982299701, -1.4494943818195962, -0.5793030595426344, 0.7060589528564932, -0.7194093082191106, 1.6966061249244426, 1.524602423669088, -1.7304427858285076, 1.897717798923225, -0.4524243231449633, -0.22256596655440086, 2.256662077733366, 2.2880580626024245, -0.18775377932062712, -0.8915483702855096, 0.06454549214999998, 0.9569884973649232, -0.6737658718727945, 0.5171121081114038, 0.09990043321104222, -0.028633953445274293, 1.002110862055228, -1.4687153361465108, -1.342940838931093, -0.7036972032251112},
       {0.7036972032251112, 1.342940838931093, 1.4687153361465108, -1.002110862055228, 0.028633953445274293, -0.09990043321104222, -0.5171121081114038, 0.6737658718727945, -0.9569884973649232, -0.06454549214999998, 0.8915483702855096, 0.18775377932062712, -2.2880580626024245, -2.256662077733366, 0.22256596655440086, 0.4524243231449633, -1.897717798923225, 1.7304427858285076, -1.524602423669088, -1.6966061249244426, 0.7194093082191106, -0.7060589528564932, 0.5793030595426344, 1.4494943818195962, -1.4225047982299701, 0.2756691627221759, 0.5753526872531414, -0.040481915129365796, 1.7817979965277608, 0.48326680143455153, -0.030292793447924838, -0.15500387613743302, 0.41226387314205154, -0.6161918855471679, 1.5712372405523714, -0.45453277431371214, -0.4010377808981736, 0.9655284030860602, -0.14363897199479517, -0.20073324968580322, 0.5420735781627288, 0.07390308240362296, 1.506159208204592, 0.403743089975557, 0.41102736344046775, 0.2912395948798767, 0.9166526992532559, 1.1304622438101035, -0.9236306237869328, -0.6798344200221411},
       538.0, 0.3367326506583833},
      {"minimum_pairs_5",
       {1.5, 2.5, 0.5, 4.0, 3.0},
       {0.0, 0.0, 0.0, 0.0, 0.0},
       0.0, 0.043114446783075355},
      {"shift_one_sided_8",
       {10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0},
       {9.0, 9.5, 11.0, 11.0, 13.5, 12.0, 15.0, 14.0},
       0.0, 0.011209733383895203},
  };
  return cases;
}

}  // namespace opmgr::bench
