#pragma once

#include <cstdint>
#include <map>
#include <vector>

// Known outputs used as ground truth by the tests.
namespace refdata {

using Seq = std::vector<std::int64_t>;

// [t^k] f_8(t) for 132, k = 0..31.
inline const std::vector<std::int64_t> f8_132 = {
    1430, 1287, 1950, 1918, 2593, 2225, 2858, 2489, 2682, 2401, 2620,
    2088, 2321, 1853, 1770, 1576, 1417, 1152, 1048, 730,  647,  397,
    322,  169,  162,  109,  41,   37,   20,   0,    7,    1};

// Nonzero [t^k] f_8(t) for 1243.
inline const std::map<int, std::int64_t> f8_1243 = {
    {36, 1},    {31, 1},    {30, 10},   {28, 3},    {27, 13},   {26, 9},
    {25, 8},    {24, 37},   {23, 16},   {22, 16},   {21, 49},   {20, 60},
    {19, 41},   {18, 130},  {17, 81},   {16, 157},  {15, 266},  {14, 184},
    {13, 233},  {12, 542},  {11, 356},  {10, 771},  {9, 877},   {8, 975},
    {7, 972},   {6, 2180},  {5, 1710},  {4, 2658},  {3, 3119},  {2, 4600},
    {1, 4478},  {0, 15767}};

// s_n(tau, r) for n = 1, 2, ...
inline const Seq s132_r5 = {0, 0, 0, 0, 5, 55, 394, 2225, 11539, 57064,
                            273612, 1283621, 5924924, 27005978, 121861262};
inline const Seq s1243_r1 = {0, 0, 0, 1, 11, 88, 638, 4478, 31199, 218033,
                             1535207, 10910759, 78310579, 567588264,
                             4152765025};
inline const Seq s1243_r2 = {0, 0, 0, 0, 4, 56, 543, 4600, 36691, 284370,
                             2174352, 16533360, 125572259, 955035260,
                             7283925999};
inline const Seq s12354_r0 = {1, 2, 6, 24, 119, 694, 4582, 33324, 261808,
                              2190688, 19318688, 178108704, 1705985883,
                              16891621166};
inline const Seq s12354_r1 = {0, 0, 0, 0, 1, 19, 246, 2767, 29384, 305646,
                              3170684, 33104118, 349462727, 3738073247,
                              40549242195};
inline const Seq s2341_r1 = {0, 0, 0, 1, 11, 87, 625, 4378, 30671, 216883,
                             1552588, 11257405, 82635707, 613600423,
                             4604595573};
inline const Seq s2341_r2 = {0, 0, 0, 0, 5, 68, 626, 5038, 38541, 289785,
                             2172387, 16339840, 123650958, 942437531,
                             7236542705};

// #{N_123 = a, N_132 = b} for (a, b) = (2, 2) and (4, 2).
inline const Seq joint_2_2 = {0, 0, 0, 1, 6, 26, 94, 306, 934, 2732, 7752,
                              21488, 58432, 156288, 411904};
inline const Seq joint_4_2 = {0, 0, 0, 0, 1, 5, 23, 106, 450, 1740, 6214,
                              20831, 66427, 203550, 603920};

}  // namespace refdata
