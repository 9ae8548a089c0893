//===- tables.hpp - Published reference values -----------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Constants the library is checked against: the d_min grid, the additional
// gate counts of small extended AND-OR paths, and the upper bounds on psi.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace aoc::tables {

// dmin[m - 1][n] for 1 <= m <= 9, 0 <= n <= 12.
inline constexpr std::array<std::array<unsigned, 13>, 9> dmin = {{
    {1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4},
    {1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4},
    {2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5},
    {3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5},
    {3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5},
    {4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5},
    {4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5},
    {4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
}};

struct PsiBound {
  unsigned d;
  double psi;         // upper bound on psi(d)
  double cumulative;  // upper bound on psi(5) + ... + psi(d)
};

inline constexpr std::array<PsiBound, 14> psi_bounds = {{
    {5, 0.3334, 0.3334},  {6, 0.3572, 0.6906},  {7, 0.3044, 0.9950},  {8, 0.2369, 1.2319},
    {9, 0.1516, 1.3835},  {10, 0.1035, 1.4870}, {11, 0.0677, 1.5547}, {12, 0.0428, 1.5975},
    {13, 0.0249, 1.6224}, {14, 0.0151, 1.6375}, {15, 0.0090, 1.6465}, {16, 0.0053, 1.6518},
    {17, 0.0030, 1.6548}, {18, 0.0017, 1.6565},
}};

enum class AddGatesFormula : std::uint8_t {
  MPlusNMinus1,   // m + n - 1
  MPlusN,         // m + n
  LogSuccMinus3,  // m + 2 log2(n + 1) - 3
  LogSuccMinus2,  // m + 2 log2(n + 1) - 2
  LogMinus2,      // m + 2 log2 n - 2
  MPlus5,
  MPlus6,
};

// A run of cells n_lo <= n <= n_hi in row m sharing one formula. Rows m <= 2
// hold for every n >= n_lo; `open_ended` marks them.
struct AddGatesRun {
  unsigned m;
  unsigned n_lo;
  unsigned n_hi;
  bool open_ended;
  AddGatesFormula formula;
};

inline constexpr std::array<AddGatesRun, 19> addgates = {{
    {1, 0, 1, false, AddGatesFormula::MPlusNMinus1},
    {1, 2, 11, true, AddGatesFormula::LogSuccMinus3},
    {2, 0, 1, false, AddGatesFormula::MPlusNMinus1},
    {2, 2, 11, true, AddGatesFormula::LogSuccMinus3},
    {3, 0, 1, false, AddGatesFormula::MPlusNMinus1},
    {3, 2, 4, false, AddGatesFormula::LogSuccMinus3},
    {3, 5, 8, false, AddGatesFormula::LogMinus2},
    {3, 9, 10, false, AddGatesFormula::MPlus5},
    {3, 11, 11, false, AddGatesFormula::MPlus6},
    {4, 0, 1, false, AddGatesFormula::MPlusNMinus1},
    {4, 2, 8, false, AddGatesFormula::LogMinus2},
    {4, 9, 9, false, AddGatesFormula::MPlus5},
    {5, 0, 1, false, AddGatesFormula::MPlusNMinus1},
    {5, 2, 7, false, AddGatesFormula::LogMinus2},
    {6, 0, 1, false, AddGatesFormula::MPlusN},
    {6, 2, 5, false, AddGatesFormula::LogSuccMinus2},
    {7, 0, 1, false, AddGatesFormula::MPlusN},
    {7, 2, 3, false, AddGatesFormula::LogSuccMinus2},
    {8, 0, 1, false, AddGatesFormula::MPlusN},
}};

double addgates_value(AddGatesFormula f, unsigned m, unsigned n);
std::string addgates_formula(AddGatesFormula f);

} // namespace aoc::tables
