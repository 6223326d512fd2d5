#pragma once

// Generated by gen_paper_scan_census.py: every n in [5, 1000] where the
// published block scan disagrees with the true next prime.

#include <array>
#include <cstdint>

namespace fixtures {

inline constexpr std::uint64_t paper_scan_census_lo = 5;
inline constexpr std::uint64_t paper_scan_census_hi = 1000;
inline constexpr std::array<std::uint64_t, 336> paper_scan_divergence = {
    5, 6, 8, 9, 10, 13, 14, 15, 16, 19, 20, 21,
    22, 26, 27, 28, 31, 37, 38, 39, 40, 43, 44, 45,
    46, 50, 51, 52, 56, 57, 58, 61, 67, 68, 69, 70,
    73, 79, 80, 81, 82, 86, 87, 88, 97, 98, 99, 100,
    103, 104, 105, 106, 109, 110, 111, 112, 127, 128, 129, 130,
    134, 135, 136, 139, 146, 147, 148, 151, 157, 163, 164, 165,
    166, 170, 171, 172, 176, 177, 178, 181, 188, 189, 190, 193,
    194, 195, 196, 199, 211, 223, 224, 225, 226, 229, 230, 231,
    232, 236, 237, 238, 241, 248, 249, 250, 254, 255, 256, 260,
    261, 262, 266, 267, 268, 271, 277, 278, 279, 280, 283, 290,
    291, 292, 307, 308, 309, 310, 313, 314, 315, 316, 331, 337,
    344, 345, 346, 349, 350, 351, 352, 356, 357, 358, 367, 373,
    379, 380, 381, 382, 386, 387, 388, 397, 398, 399, 400, 409,
    416, 417, 418, 421, 428, 429, 430, 433, 439, 440, 441, 442,
    446, 447, 448, 457, 458, 459, 460, 463, 464, 465, 466, 476,
    477, 478, 487, 488, 489, 490, 499, 500, 501, 502, 506, 507,
    508, 518, 519, 520, 523, 541, 547, 554, 555, 556, 560, 561,
    562, 566, 567, 568, 571, 577, 584, 585, 586, 590, 591, 592,
    596, 597, 598, 601, 607, 613, 614, 615, 616, 619, 631, 638,
    639, 640, 643, 644, 645, 646, 650, 651, 652, 656, 657, 658,
    661, 673, 674, 675, 676, 680, 681, 682, 691, 698, 699, 700,
    709, 716, 717, 718, 727, 733, 739, 740, 741, 742, 751, 757,
    758, 759, 760, 769, 770, 771, 772, 787, 794, 795, 796, 806,
    807, 808, 811, 818, 819, 820, 823, 824, 825, 826, 829, 836,
    837, 838, 853, 854, 855, 856, 859, 860, 861, 862, 877, 878,
    879, 880, 883, 884, 885, 886, 907, 908, 909, 910, 919, 926,
    927, 928, 937, 938, 939, 940, 944, 945, 946, 950, 951, 952,
    967, 968, 969, 970, 974, 975, 976, 980, 981, 982, 991, 997,
};

}  // namespace fixtures
