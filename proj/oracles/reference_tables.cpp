#include "reference_tables.hpp"

namespace polycells::oracle {

namespace {

// Rows as printed: the first entry is m = 1.
const PrintedSeriesTable kA{
    {2, {1}},
    {3, {1, 1}},
    {4, {1, 3, 2}},
    {5, {1, 5, 8, 3}},
    {6, {1, 8, 22, 20, 6}},
    {7, {1, 11, 46, 73, 49, 11}},
    {8, {1, 15, 87, 206, 233, 119, 23}},
    {9, {1, 19, 147, 485, 807, 689, 288, 46}},
    {10, {1, 24, 236, 1021, 2320, 2891, 1988, 696, 98}},
    {11, {1, 29, 356, 1960, 5795, 9800, 9737, 5561, 1681, 207}},
    {12, {1, 35, 520, 3525, 13088, 28586, 38216, 31350, 15322, 4062, 451}},
    {13, {1, 41, 730, 5989, 27224, 74280, 127465, 139901, 97552, 41558, 9821, 983}},
};

const PrintedSeriesTable kV{
    {2, {1}},
    {3, {1, 2}},
    {4, {1, 5, 5}},
    {5, {1, 9, 21, 14}},
    {6, {1, 14, 56, 84, 42}},
    {7, {1, 20, 120, 300, 330, 132}},
    {8, {1, 27, 225, 825, 1485, 1287, 429}},
    {9, {1, 35, 385, 1925, 5005, 7007, 5005, 1430}},
    {10, {1, 44, 616, 4004, 14014, 28028, 32032, 19448, 4862}},
    {11, {1, 54, 936, 7644, 34398, 91728, 148512, 143208, 75582, 16796}},
    {12, {1, 65, 1365, 13650, 76440, 259896, 556920, 755820, 629850, 293930, 58786}},
};

const PrintedSeriesTable kB{
    {3, {1}},
    {4, {1, 1}},
    {5, {1, 2, 2}},
    {6, {1, 3, 7, 4}},
    {7, {1, 4, 15, 18, 7}},
    {8, {1, 5, 28, 57, 49, 14}},
    {9, {1, 6, 45, 138, 196, 123, 29}},
    {10, {1, 7, 69, 288, 601, 626, 313, 60}},
    {11, {1, 8, 98, 540, 1533, 2322, 1899, 778, 127}},
    {12, {1, 9, 136, 943, 3468, 7095, 8362, 5565, 1936, 275}},
    {13, {1, 10, 180, 1544, 7124, 18813, 29741, 28350, 15880, 4776, 598}},
    {14, {1, 11, 235, 2419, 13635, 44868, 90869, 115642, 92210, 44433, 11777, 1320}},
};

const PrintedSeriesTable kF{
    {3, {1}},
    {4, {1, 1}},
    {5, {1, 1, 1}},
    {6, {1, 2, 3, 2}},
    {7, {1, 2, 6, 5, 2}},
    {8, {1, 3, 11, 17, 12, 4}},
    {9, {1, 3, 17, 37, 44, 23, 6}},
    {10, {1, 4, 26, 78, 131, 118, 52, 11}},
    {11, {1, 4, 36, 140, 325, 410, 298, 109, 18}},
    {12, {1, 5, 50, 248, 728, 1249, 1279, 766, 244, 37}},
    {13, {1, 5, 65, 396, 1476, 3246, 4462, 3763, 1921, 532, 66}},
    {14, {1, 6, 85, 624, 2811, 7717, 13497, 15198, 10920, 4843, 1196, 135}},
    {15, {1, 6, 106, 929, 5032, 16773, 36384, 52041, 49577, 30848, 12068, 2671, 265}},
};

}  // namespace

const PrintedSeriesTable& printed_a() { return kA; }
const PrintedSeriesTable& printed_v() { return kV; }
const PrintedSeriesTable& printed_b() { return kB; }
const PrintedSeriesTable& printed_f() { return kF; }

const std::vector<PrintedTypeRow>& printed_type_rows() {
  // One entry per printed row: polygon, multiplicities of cell sizes 3..10, total.
  static const std::vector<PrintedTypeRow> rows{
      {5, {3, 0, 0, 0, 0, 0, 0, 0}, 5},
      {5, {1, 1, 0, 0, 0, 0, 0, 0}, 5},
      {5, {0, 0, 1, 0, 0, 0, 0, 0}, 1},
      {6, {4, 0, 0, 0, 0, 0, 0, 0}, 14},
      {6, {2, 1, 0, 0, 0, 0, 0, 0}, 21},
      {6, {1, 0, 1, 0, 0, 0, 0, 0}, 6},
      {6, {0, 2, 0, 0, 0, 0, 0, 0}, 3},
      {6, {0, 0, 0, 1, 0, 0, 0, 0}, 1},
      {7, {5, 0, 0, 0, 0, 0, 0, 0}, 42},
      {7, {3, 1, 0, 0, 0, 0, 0, 0}, 84},
      {7, {2, 0, 1, 0, 0, 0, 0, 0}, 28},
      {7, {1, 2, 0, 0, 0, 0, 0, 0}, 28},
      {7, {0, 1, 2, 0, 0, 0, 0, 0}, 7},
      {7, {1, 0, 0, 1, 0, 0, 0, 0}, 7},
      {7, {0, 0, 0, 0, 1, 0, 0, 0}, 1},
      {8, {6, 0, 0, 0, 0, 0, 0, 0}, 132},
      {8, {4, 1, 0, 0, 0, 0, 0, 0}, 330},
      {8, {3, 0, 1, 0, 0, 0, 0, 0}, 120},
      {8, {2, 0, 2, 0, 0, 0, 0, 0}, 180},
      {8, {2, 0, 0, 1, 0, 0, 0, 0}, 36},
      {8, {1, 1, 1, 0, 0, 0, 0, 0}, 72},
      {8, {0, 3, 0, 0, 0, 0, 0, 0}, 12},
      {8, {1, 0, 0, 0, 1, 0, 0, 0}, 8},
      {8, {0, 1, 0, 1, 0, 0, 0, 0}, 8},
      {8, {0, 0, 2, 0, 0, 0, 0, 0}, 4},
      {8, {0, 0, 0, 0, 0, 1, 0, 0}, 1},
      {9, {7, 0, 0, 0, 0, 0, 0, 0}, 429},
      {9, {5, 1, 0, 0, 0, 0, 0, 0}, 1287},
      {9, {3, 2, 0, 0, 0, 0, 0, 0}, 990},
      {9, {3, 0, 0, 1, 0, 0, 0, 0}, 165},
      {9, {2, 1, 1, 0, 0, 0, 0, 0}, 495},
      {9, {3, 0, 1, 0, 0, 0, 0, 0}, 495},
      {9, {1, 3, 0, 0, 0, 0, 0, 0}, 165},
      {9, {2, 0, 0, 0, 1, 0, 0, 0}, 45},
      {9, {0, 2, 1, 0, 0, 0, 0, 0}, 45},
      {9, {1, 0, 0, 0, 0, 1, 0, 0}, 9},
      {9, {0, 1, 0, 0, 1, 0, 0, 0}, 9},
      {9, {0, 0, 1, 1, 0, 0, 0, 0}, 9},
      {9, {0, 0, 0, 0, 0, 0, 1, 0}, 1},
      {10, {8, 0, 0, 0, 0, 0, 0, 0}, 1430},
      {10, {6, 1, 0, 0, 0, 0, 0, 0}, 5005},
      {10, {5, 0, 1, 0, 0, 0, 0, 0}, 2002},
      {10, {4, 2, 0, 0, 0, 0, 0, 0}, 5005},
      {10, {4, 0, 0, 1, 0, 0, 0, 0}, 715},
      {10, {3, 1, 1, 0, 0, 0, 0, 0}, 2860},
      {10, {2, 3, 0, 0, 0, 0, 0, 0}, 1430},
      {10, {3, 0, 0, 0, 1, 0, 0, 0}, 220},
      {10, {2, 0, 2, 0, 0, 0, 0, 0}, 330},
      {10, {2, 1, 0, 1, 0, 0, 0, 0}, 660},
      {10, {1, 2, 1, 0, 0, 0, 0, 0}, 660},
      {10, {0, 4, 0, 0, 0, 0, 0, 0}, 55},
      {10, {2, 0, 0, 0, 0, 1, 0, 0}, 55},
      {10, {1, 1, 0, 0, 1, 0, 0, 0}, 110},
      {10, {1, 0, 1, 1, 0, 0, 0, 0}, 110},
      {10, {0, 2, 0, 1, 0, 0, 0, 0}, 55},
      {10, {0, 1, 2, 0, 0, 0, 0, 0}, 55},
      {10, {1, 0, 0, 0, 0, 0, 1, 0}, 10},
      {10, {0, 1, 0, 0, 0, 1, 0, 0}, 10},
      {10, {0, 0, 1, 0, 1, 0, 0, 0}, 10},
      {10, {0, 0, 0, 2, 0, 0, 0, 0}, 5},
      {10, {0, 0, 0, 0, 0, 0, 0, 1}, 1},
  };
  return rows;
}

}  // namespace polycells::oracle
