//===- verify.hpp - Functional equivalence against an oracle ---*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"
#include "aoc/reference.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace aoc {

// Computes the expected output words for 64 assignments at once. `in` holds
// one word per circuit input, `out` one word per circuit output.
using WordOracle =
    std::function<void(std::span<const std::uint64_t> in, std::span<std::uint64_t> out)>;

// Input order s_0..s_{n-1}, t_0..t_{m-1}; one output.
WordOracle aop_oracle(std::size_t n_sym, std::size_t m_alt, Polarity pol);
// Input order p_0, g_0, p_1, g_1, ...; outputs c_1..c_n.
WordOracle adder_oracle(std::size_t n);

inline constexpr std::size_t exhaustive_input_cap = 24;
inline constexpr std::uint64_t default_seed = 0xC1AC0DE;
inline constexpr std::uint64_t default_trials = 10000;

struct VerifyMode {
  enum class Kind : std::uint8_t { Exhaustive, Random } kind = Kind::Exhaustive;
  std::uint64_t trials = default_trials;
  std::uint64_t seed = default_seed;

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode random(std::uint64_t trials = default_trials,
                           std::uint64_t seed = default_seed) {
    return {Kind::Random, trials, seed};
  }
};

struct Counterexample {
  std::vector<bool> assignment;
  std::vector<bool> expected;
  std::vector<bool> actual;
};

struct Verdict {
  bool pass = true;
  std::uint64_t assignments = 0;
  std::optional<Counterexample> counterexample;
};

// Exhaustive mode throws std::invalid_argument above exhaustive_input_cap
// inputs. Random mode checks all-zeros, all-ones and every single-hot vector
// before the sampled ones.
Verdict verify_equivalence(const Circuit& c, const WordOracle& oracle, VerifyMode mode);

} // namespace aoc
