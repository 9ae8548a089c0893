//===- bounds.cpp - Depth and size bound arithmetic -----------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace aoc {

long floor_guarded(double x) { return static_cast<long>(std::floor(x + bound_eps)); }

long ceil_guarded(double x) { return static_cast<long>(std::ceil(x - bound_eps)); }

std::uint64_t rho(std::uint64_t n) {
  if (n <= 2)
    return n;
  // floor(2 log2 x) is the largest j with 2^j <= x^2.
  const auto x = static_cast<unsigned __int128>(n - 1);
  const unsigned __int128 sq = x * x;
  std::uint64_t j = 0;
  while ((static_cast<unsigned __int128>(1) << (j + 1)) <= sq)
    ++j;
  return j;
}

long flodd(double x) {
  if (x < 1.0)
    throw std::domain_error("flodd: no odd integer bound below 1");
  long f = floor_guarded(x);
  return (f % 2 == 0) ? f - 1 : f;
}

double mu(unsigned d, std::uint64_t n) {
  if (d == 0)
    throw std::domain_error("mu: d must be positive");
  return xi * (std::ldexp(1.0, static_cast<int>(d)) - static_cast<double>(n) - 2.0) / d + 2.0;
}

unsigned d_min(std::uint64_t n, std::uint64_t m) {
  if (m == 0)
    throw std::domain_error("d_min: m must be positive");
  unsigned d = 1;
  while (static_cast<double>(m) > mu(d, n) + bound_eps)
    ++d;
  return d;
}

double psi(unsigned d) {
  if (d < 5)
    throw std::domain_error("psi: d must be at least 5");
  const double q = xi * (std::ldexp(1.0, static_cast<int>(d) - 1) - 2.0) / (d - 1);
  const auto k = static_cast<std::uint64_t>(flodd(q));
  return (1.0 + static_cast<double>(rho((k + 1) / 2))) / (static_cast<double>(ceil_guarded(q)) + 2.0);
}

double phi(unsigned d) {
  double v = -1.67;
  for (unsigned e = 5; e <= d; ++e)
    v += psi(e);
  return v;
}

double capital_phi(unsigned d, std::uint64_t m, std::uint64_t n) {
  return (alpha + phi(d)) * static_cast<double>(m) + static_cast<double>(rho(n));
}

unsigned ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1));
}

long aop_depth_bound(std::uint64_t m) {
  const double l = std::log2(static_cast<double>(m));
  return floor_guarded(l + std::log2(l) + 0.65);
}

} // namespace aoc
