//===- bounds.hpp - Depth and size bound arithmetic ------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Real-valued bounds are evaluated in double precision. Every floor, ceil or
// "x <= bound" test applies `bound_eps` in the bound's favour.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstddef>
#include <cstdint>

namespace aoc {

inline constexpr double bound_eps = 1e-9;
inline constexpr double xi = 1.999;
inline constexpr double alpha = 2.67;

long floor_guarded(double x);
long ceil_guarded(double x);

// n for n <= 2, floor(2 log2(n - 1)) otherwise. Exact integer arithmetic.
std::uint64_t rho(std::uint64_t n);

// Greatest odd integer <= x. Throws for x < 1.
long flodd(double x);

// xi (2^d - n - 2) / d + 2.
double mu(unsigned d, std::uint64_t n);

// Smallest d >= 1 with m <= mu(d, n).
unsigned d_min(std::uint64_t n, std::uint64_t m);

double psi(unsigned d);          // d >= 5
double phi(unsigned d);          // -1.67 for d <= 4
double capital_phi(unsigned d, std::uint64_t m, std::uint64_t n);

unsigned ceil_log2(std::uint64_t n);  // 0 for n <= 1

// floor(log2 m + log2 log2 m + 0.65), m >= 3.
long aop_depth_bound(std::uint64_t m);

} // namespace aoc
