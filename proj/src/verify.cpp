//===- verify.cpp - Functional equivalence against an oracle --------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/verify.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace aoc {

WordOracle aop_oracle(std::size_t n_sym, std::size_t m_alt, Polarity pol) {
  return [=](std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
    out[0] = extended_aop_reference_words(in.subspan(0, n_sym), in.subspan(n_sym, m_alt), pol);
  };
}

WordOracle adder_oracle(std::size_t n) {
  return [n](std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
    std::vector<std::uint64_t> p(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = in[2 * i];
      g[i] = in[2 * i + 1];
    }
    carry_reference_words(p, g, out);
  };
}

namespace {

class Checker {
public:
  Checker(const Circuit& c, const WordOracle& oracle)
      : c_(c), oracle_(oracle), expected_(c.num_outputs()) {}

  // Returns false and fills `cex` on the first mismatching lane in `mask`.
  bool check(std::span<const std::uint64_t> in, std::uint64_t mask,
             std::optional<Counterexample>& cex) {
    c_.simulate(in, values_);
    oracle_(in, expected_);
    std::uint64_t diff = 0;
    const auto outs = c_.outputs();
    for (std::size_t o = 0; o < outs.size(); ++o)
      diff |= (values_[outs[o].node] ^ expected_[o]);
    diff &= mask;
    if (diff == 0)
      return true;
    const int lane = std::countr_zero(diff);
    Counterexample ce;
    for (auto w : in)
      ce.assignment.push_back((w >> lane) & 1u);
    for (std::size_t o = 0; o < outs.size(); ++o) {
      ce.expected.push_back((expected_[o] >> lane) & 1u);
      ce.actual.push_back((values_[outs[o].node] >> lane) & 1u);
    }
    cex = std::move(ce);
    return false;
  }

private:
  const Circuit& c_;
  const WordOracle& oracle_;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> expected_;
};

Verdict run_exhaustive(const Circuit& c, const WordOracle& oracle) {
  const std::size_t k = c.num_inputs();
  if (k > exhaustive_input_cap)
    throw std::invalid_argument("exhaustive verification is capped at " +
                                std::to_string(exhaustive_input_cap) + " inputs (" +
                                std::to_string(k) + " given); use random mode");
  static constexpr std::uint64_t lane_patterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::uint64_t mask = total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  const std::uint64_t blocks = total >= 64 ? total / 64 : 1;

  Verdict v;
  Checker checker(c, oracle);
  std::vector<std::uint64_t> in(k);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < k; ++i)
      in[i] = i < 6 ? lane_patterns[i] : (((b >> (i - 6)) & 1u) ? ~std::uint64_t{0} : 0);
    if (!checker.check(in, mask, v.counterexample)) {
      v.pass = false;
      v.assignments = b * 64;
      return v;
    }
  }
  v.assignments = total;
  return v;
}

Verdict run_random(const Circuit& c, const WordOracle& oracle, std::uint64_t trials,
                   std::uint64_t seed) {
  const std::size_t k = c.num_inputs();
  const std::uint64_t structured = 2 + k;
  const std::uint64_t total = structured + trials;
  std::mt19937_64 rng(seed);

  Verdict v;
  Checker checker(c, oracle);
  std::vector<std::uint64_t> in(k);
  for (std::uint64_t base = 0; base < total; base += 64) {
    for (auto& w : in)
      w = rng();
    const std::uint64_t lanes = std::min<std::uint64_t>(64, total - base);
    for (std::uint64_t lane = 0; lane < lanes && base + lane < structured; ++lane) {
      const std::uint64_t g = base + lane;
      const std::uint64_t bit = std::uint64_t{1} << lane;
      for (std::size_t i = 0; i < k; ++i) {
        const bool on = g == 1 || (g >= 2 && g - 2 == i);
        in[i] = on ? (in[i] | bit) : (in[i] & ~bit);
      }
    }
    const std::uint64_t mask = lanes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
    if (!checker.check(in, mask, v.counterexample)) {
      v.pass = false;
      v.assignments = base;
      return v;
    }
  }
  v.assignments = total;
  return v;
}

} // namespace

Verdict verify_equivalence(const Circuit& c, const WordOracle& oracle, VerifyMode mode) {
  if (mode.kind == VerifyMode::Kind::Exhaustive)
    return run_exhaustive(c, oracle);
  return run_random(c, oracle, mode.trials, mode.seed);
}

} // namespace aoc
