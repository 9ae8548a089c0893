//===- aop.hpp - Depth-optimized AND-OR path synthesis ---------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Synthesis of f(s, t) = AND(s) & g(t) and its dual with depth d_min(n, m)
// (n = |s|, m = |t|). In shared mode the symmetric sub-functions are cut out
// of two leftist circuits built once over all inputs, which keeps the total
// size linear in n + m.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"
#include "aoc/reference.hpp"
#include "aoc/symmetric.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace aoc {

enum class SynthMode : std::uint8_t { Shared, Formula };

enum class GateCategory : std::uint8_t { Leftist, AltSplit, BaseCase, SymTree, SplitConcat };

struct GateCategories {
  std::size_t leftist = 0;
  std::size_t alt_split = 0;
  std::size_t base_case = 0;
  std::size_t sym_tree = 0;
  std::size_t split_concat = 0;

  std::size_t additional() const noexcept { return alt_split + base_case + sym_tree + split_concat; }
  std::size_t total() const noexcept { return leftist + additional(); }
  std::size_t& operator[](GateCategory c) noexcept;
};

struct AopOptions {
  SynthMode mode = SynthMode::Shared;
  // Re-derive triangularity by full scan before every symmetric tree. Costs
  // O(n) per call; meant for tests.
  bool check_invariants = false;
};

/// Synthesis state for one extended AND-OR path over nodes of an existing
/// circuit. Symmetric inputs occupy the even global slots x_0 .. x_{2q-2},
/// alternating input t_a the slot x_{2q+a}.
class AopSynthesizer {
public:
  AopSynthesizer(Circuit& c, std::vector<NodeId> sym, std::vector<NodeId> alt, Polarity pol,
                 AopOptions opts = {});

  NodeId run();

  const GateCategories& categories() const noexcept { return counts_; }
  std::size_t alt_splits() const noexcept { return alt_splits_; }
  // Category of a gate created by this synthesizer.
  std::optional<GateCategory> category_of(NodeId v) const;

private:
  NodeId synth(const TriangularSet& s, std::size_t tb, std::size_t m);
  NodeId base_case(const TriangularSet& s, std::size_t tb, std::size_t m);
  NodeId symmetric(unsigned parity, const TriangularSet& k, const std::vector<NodeId>& extra,
                   GateCategory cat);
  NodeId gate(unsigned parity, NodeId a, NodeId b, GateCategory cat);
  NodeId dual_gate(unsigned parity, NodeId a, NodeId b, GateCategory cat);
  TriangularSet extract(unsigned parity, const TriangularSet& n) const;
  void tag_new_gates(std::size_t from, GateCategory cat);

  // Leftist parity and position of alternating input t_a.
  unsigned parity_of(std::size_t a) const { return a % 2; }
  std::size_t position_of(std::size_t a) const { return a % 2 == 0 ? q_ + a / 2 : (a - 1) / 2; }
  NodeId alt(std::size_t a) const { return alt_[a]; }
  GateKind kind_of(unsigned parity) const { return parity == 0 ? top_ : dual(top_); }

  Circuit& c_;
  std::vector<NodeId> alt_;
  std::size_t q_;
  GateKind top_;
  AopOptions opts_;
  std::array<std::vector<NodeId>, 2> order_;
  std::array<std::optional<LeftistCircuit>, 2> leftist_;
  NodeId first_node_;
  // Depths are measured from the earliest input.
  std::uint32_t base_depth_ = 0;
  std::uint32_t latest_input_ = 0;
  std::vector<std::uint8_t> category_;
  GateCategories counts_;
  std::size_t alt_splits_ = 0;
};

struct AopResult {
  Circuit circuit;
  GateCategories categories;
  std::size_t alt_splits = 0;
};

/// Standalone circuit for f(s, t) with inputs s_0.., t_0.. and one output.
/// Gates no output depends on are dropped and categories recounted.
AopResult synth_extended_aop(std::size_t n_sym, std::size_t m_alt, Polarity pol,
                             AopOptions opts = {});
/// m >= 2.
AopResult synth_aop(std::size_t m, Polarity pol, AopOptions opts = {});

/// Synthesize g(t) or g*(t) over existing nodes; m = 1 returns t[0].
NodeId build_aop(Circuit& c, std::span<const NodeId> t, Polarity pol, AopOptions opts = {});

} // namespace aoc
