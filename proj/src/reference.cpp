//===- reference.cpp - Direct evaluation of the target functions ----------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/reference.hpp"

#include <stdexcept>

namespace aoc {

namespace {

// Evaluate from the innermost operand outwards. Position i uses AND when
// (i even) == (pol == F).
template <typename Word, typename Seq>
Word fold_path(const Seq& t, Polarity pol) {
  const std::size_t m = t.size();
  Word acc = static_cast<Word>(t[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    const bool is_and = ((i % 2) == 0) == (pol == Polarity::F);
    const Word x = static_cast<Word>(t[i]);
    acc = is_and ? (x & acc) : (x | acc);
  }
  return acc;
}

} // namespace

bool aop_reference(const std::vector<bool>& t, Polarity pol) {
  if (t.empty())
    throw std::invalid_argument("aop_reference: empty input");
  return fold_path<unsigned>(t, pol) & 1u;
}

bool extended_aop_reference(const std::vector<bool>& s, const std::vector<bool>& t,
                            Polarity pol) {
  if (s.empty() && t.empty())
    throw std::invalid_argument("extended_aop_reference: no inputs");
  const bool conj = pol == Polarity::F;
  bool sym = conj;
  for (bool b : s)
    sym = conj ? (sym && b) : (sym || b);
  if (t.empty())
    return sym;
  const bool path = aop_reference(t, pol);
  return conj ? (sym && path) : (sym || path);
}

std::vector<bool> carry_reference(const std::vector<bool>& p, const std::vector<bool>& g) {
  if (p.size() != g.size() || g.empty())
    throw std::invalid_argument("carry_reference: p and g must have equal nonzero length");
  std::vector<bool> c(g.size());
  bool carry = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    carry = g[i] || (i > 0 && p[i] && carry);
    c[i] = carry;
  }
  return c;
}

std::uint64_t aop_reference_words(std::span<const std::uint64_t> t, Polarity pol) {
  if (t.empty())
    throw std::invalid_argument("aop_reference_words: empty input");
  return fold_path<std::uint64_t>(t, pol);
}

std::uint64_t extended_aop_reference_words(std::span<const std::uint64_t> s,
                                           std::span<const std::uint64_t> t, Polarity pol) {
  if (s.empty() && t.empty())
    throw std::invalid_argument("extended_aop_reference_words: no inputs");
  const bool conj = pol == Polarity::F;
  std::uint64_t sym = conj ? ~std::uint64_t{0} : 0;
  for (auto w : s)
    sym = conj ? (sym & w) : (sym | w);
  if (t.empty())
    return sym;
  const std::uint64_t path = aop_reference_words(t, pol);
  return conj ? (sym & path) : (sym | path);
}

void carry_reference_words(std::span<const std::uint64_t> p, std::span<const std::uint64_t> g,
                           std::span<std::uint64_t> carries) {
  if (p.size() != g.size() || carries.size() != g.size())
    throw std::invalid_argument("carry_reference_words: length mismatch");
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    carry = g[i] | (i > 0 ? (p[i] & carry) : 0);
    carries[i] = carry;
  }
}

} // namespace aoc
