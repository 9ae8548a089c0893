//===- tables.cpp - Published reference values ----------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/tables.hpp"

#include <cmath>

namespace aoc::tables {

double addgates_value(AddGatesFormula f, unsigned m, unsigned n) {
  const double dm = m, dn = n;
  switch (f) {
  case AddGatesFormula::MPlusNMinus1:
    return dm + dn - 1;
  case AddGatesFormula::MPlusN:
    return dm + dn;
  case AddGatesFormula::LogSuccMinus3:
    return dm + 2 * std::log2(dn + 1) - 3;
  case AddGatesFormula::LogSuccMinus2:
    return dm + 2 * std::log2(dn + 1) - 2;
  case AddGatesFormula::LogMinus2:
    return dm + 2 * std::log2(dn) - 2;
  case AddGatesFormula::MPlus5:
    return dm + 5;
  case AddGatesFormula::MPlus6:
    break;
  }
  return dm + 6;
}

std::string addgates_formula(AddGatesFormula f) {
  switch (f) {
  case AddGatesFormula::MPlusNMinus1:
    return "m + n - 1";
  case AddGatesFormula::MPlusN:
    return "m + n";
  case AddGatesFormula::LogSuccMinus3:
    return "m + 2 log2(n + 1) - 3";
  case AddGatesFormula::LogSuccMinus2:
    return "m + 2 log2(n + 1) - 2";
  case AddGatesFormula::LogMinus2:
    return "m + 2 log2 n - 2";
  case AddGatesFormula::MPlus5:
    return "m + 5";
  case AddGatesFormula::MPlus6:
    break;
  }
  return "m + 6";
}

} // namespace aoc::tables
