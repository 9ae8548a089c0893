//===- reference.hpp - Direct evaluation of the target functions -*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Reference semantics used as verification oracles. The scalar forms follow
// the recursive definitions literally; the word forms evaluate 64 assignments
// at once with the same recurrence.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace aoc {

// F: conjunction-rooted path t0 & (t1 | (t2 & ...)). FStar: the dual.
enum class Polarity : std::uint8_t { F, FStar };

constexpr Polarity flip(Polarity p) noexcept {
  return p == Polarity::F ? Polarity::FStar : Polarity::F;
}

bool aop_reference(const std::vector<bool>& t, Polarity pol);

// AND(s) & g(t) for F, OR(s) | g*(t) for FStar. Either side may be empty,
// not both.
bool extended_aop_reference(const std::vector<bool>& s, const std::vector<bool>& t,
                            Polarity pol);

// c_0 = 0, c_{i+1} = g_i | (p_i & c_i); returns c_1..c_n. p[0] is never read.
std::vector<bool> carry_reference(const std::vector<bool>& p, const std::vector<bool>& g);

std::uint64_t aop_reference_words(std::span<const std::uint64_t> t, Polarity pol);
std::uint64_t extended_aop_reference_words(std::span<const std::uint64_t> s,
                                           std::span<const std::uint64_t> t, Polarity pol);
void carry_reference_words(std::span<const std::uint64_t> p, std::span<const std::uint64_t> g,
                           std::span<std::uint64_t> carries);

} // namespace aoc
