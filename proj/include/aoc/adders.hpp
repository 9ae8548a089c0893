//===- adders.hpp - Carry circuits built from AND-OR paths -----*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Adder frameworks that split the input pairs into parts, compute carries
// within each part, and join parts through fast AND-OR path circuits:
//
//   two_part_adder   low half / high half, one AND-OR path for the low half
//   l_part_adder     l parts of size k joined by a small "spine" adder
//
// and the families built on them (A1, A2, A3) plus reference constructions.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aoc {

using Span = std::span<const NodeId>;

// Carries c_1..c_n of (p, g).
using AdderFn = std::function<std::vector<NodeId>(Circuit&, Span p, Span g)>;
// g*(t) for t = (g_{k-1}, p_{k-1}, ..., p_1, g_0).
using AopFn = std::function<NodeId(Circuit&, Span t)>;

struct PartOutputs {
  std::vector<NodeId> carries;     // c_1..c_k of the part on its own
  std::vector<NodeId> and_prefix;  // p_0, p_0 & p_1, ..., over the part
};
using PartFn = std::function<PartOutputs(Circuit&, Span p, Span g)>;

/// Alternating input sequence (g_{k-1}, p_{k-1}, ..., g_1, p_1, g_0) of the
/// top carry of (p[0..k), g[0..k)).
std::vector<NodeId> carry_path_inputs(Span p, Span g);

struct TwoPartPlan {
  std::size_t n = 0;
  std::size_t k_l = 0;  // floor(n/2) high pairs
  std::size_t k_r = 0;  // ceil(n/2) low pairs
  AdderFn low;          // adder on the low k_r pairs
  PartFn high;          // adder and AND-prefix on the high k_l pairs
  AopFn aop;            // top carry of the low part; empty = reuse low's c_{k_r}

  static TwoPartPlan make(std::size_t n);
};

/// c_{k_r + i} = out_i(A_high) | (out_i(S_high) & AOP_low). Requires n >= 2.
std::vector<NodeId> two_part_adder(Circuit& c, Span p, Span g, const TwoPartPlan& plan);

struct LPartPlan {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::size_t> sizes;    // n_0..n_{l-1}; only the last may be short
  std::vector<std::size_t> offsets;  // N_0..N_{l-1}
  PartFn part;
  AopFn aop;
  AdderFn spine;

  static LPartPlan make(std::size_t n, std::size_t k);
};

struct LPartResult {
  std::vector<NodeId> carries;
  std::vector<NodeId> spine;  // spine[j-1] computes c_{N_j}, j = 1..l-1
};

/// Requires n >= 2 and 1 <= k < n.
LPartResult l_part_adder(Circuit& c, Span p, Span g, const LPartPlan& plan);

std::vector<NodeId> adder_a1(Circuit& c, Span p, Span g);  // n >= 3
std::vector<NodeId> adder_a2(Circuit& c, Span p, Span g);  // n >= 4
std::vector<NodeId> adder_a3(Circuit& c, Span p, Span g);  // n >= 4
std::vector<NodeId> per_carry_aop_adder(Circuit& c, Span p, Span g);

// Shared-mode AND-OR path for the g* polarity.
NodeId carry_aop(Circuit& c, Span t);

enum class AdderKind : std::uint8_t { Ripple, LadnerFischer, Halved, A1, A2, A3, PerCarry };

struct AdderConstruction {
  AdderKind kind = AdderKind::Ripple;
  unsigned f = 0;  // Ladner-Fischer only

  std::string tag() const;  // "ripple", "lf", ...
  std::string label() const;  // "lf:f=2" style
  static std::optional<AdderConstruction> parse(const std::string& s);
  std::size_t min_n() const;
  bool valid_for(std::size_t n) const;
};

struct Bound {
  std::string formula;
  std::optional<double> value;  // already rounded where the formula says so
};

struct AdderBounds {
  Bound depth;
  Bound size;
};

AdderBounds adder_bounds(const AdderConstruction& a, std::size_t n);

/// Standalone adder with inputs p_0, g_0, p_1, g_1, ... and outputs
/// c1..cn. Gates no carry depends on are dropped.
Circuit build_adder(const AdderConstruction& a, std::size_t n);

} // namespace aoc
