//===- prefix.hpp - Prefix networks and simple adders ----------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Ladner-Fischer prefix plans, their instantiation as AND-prefix circuits and
// as combined prefix adders, and the ripple-carry and halved adders.
//
// Adder inputs are spans p[0..n), g[0..n); the result is c_1..c_n. Carries
// never depend on p[0].
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace aoc {

/// One combine of two adjacent spans. Values 0..n-1 are the inputs; step i
/// produces value n + i covering inputs [lo, hi]. `high` is the more
/// significant operand.
struct PrefixStep {
  std::uint32_t high;
  std::uint32_t low;
  std::uint32_t lo;
  std::uint32_t hi;
};

struct PrefixNetwork {
  std::size_t n = 0;
  unsigned f = 0;
  std::vector<PrefixStep> steps;
  std::vector<std::uint32_t> outputs;  // outputs[i] covers [0, i]

  std::size_t size() const noexcept { return steps.size(); }
  unsigned depth() const;
};

/// Requires 0 <= f <= ceil(log2 n), except that n = 1 accepts any f.
/// Depth <= ceil(log2 n) + f, size <= 2 (1 + 2^-f) n.
PrefixNetwork lf_plan(std::size_t n, unsigned f);

/// Z_i = z_i & ... & z_0 for i = 0..n-1 (Z_0 is z_0 itself).
std::vector<NodeId> and_prefix_circuit(Circuit& c, std::span<const NodeId> z, unsigned f);

struct PGatePair {
  NodeId y;  // generate component
  NodeId x;  // propagate component
};

/// (y1, x1) <> (y0, x0) = (y1 | (x1 & y0), x1 & x0) with three gates.
PGatePair pgate(Circuit& c, PGatePair high, PGatePair low);

struct CombinedPrefix {
  std::vector<NodeId> carries;     // c_1..c_n
  std::vector<NodeId> and_prefix;  // p_0 & ... & p_i for i = 0..n-1
};

/// The plan instantiated over pgates: carries are the generate components,
/// the AND-prefix of p the propagate components.
CombinedPrefix lf_combined_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g,
                                 unsigned f);

std::vector<NodeId> ripple_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g);

// Ripple adders on both halves joined through an AND chain; depth <= n + 2,
// size <= 3.5 n.
std::vector<NodeId> halved_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g);

} // namespace aoc
