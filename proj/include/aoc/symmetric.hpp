//===- symmetric.hpp - Symmetric trees and leftist circuits ----*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Delay-optimum symmetric trees over inputs with integral arrival times, and
// the leftist circuits whose subtrees are reused when many overlapping
// symmetric functions are needed.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aoc {

inline constexpr unsigned max_arrival = 63;

struct ArrivalItem {
  NodeId node;
  unsigned arrival;
};

// ceil(log2(sum of 2^a)), the optimum delay of a symmetric tree.
unsigned optimum_symmetric_delay(const std::vector<ArrivalItem>& items);

/// Symmetric tree of `kind` over `items` built by repeatedly joining the two
/// earliest available signals (ties broken by insertion order). Uses
/// |items| - 1 gates; the delay of the root is optimum_symmetric_delay().
NodeId huffman_tree(Circuit& c, GateKind kind, const std::vector<ArrivalItem>& items);

/// Half-open interval of leftist input positions.
struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin >= end; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BoundaryVertex {
  NodeId node;
  unsigned depth;      // the vertex covers 2^depth inputs
  std::size_t first;   // left-most covered position
};

using BoundarySeq = std::vector<BoundaryVertex>;

/// Full binary trees over consecutive blocks of sizes 2^k, taken by
/// decreasing k, together with the tables that answer "right descendant of
/// input i at depth j" in constant time.
class LeftistCircuit {
public:
  LeftistCircuit() = default;
  LeftistCircuit(Circuit& c, GateKind kind, std::vector<NodeId> inputs);

  GateKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return inputs_.size(); }
  std::size_t gate_count() const noexcept { return gates_; }
  const std::vector<NodeId>& input_order() const noexcept { return inputs_; }
  NodeId input(std::size_t pos) const { return inputs_[pos]; }

  const std::vector<NodeId>& tree_roots() const noexcept { return roots_; }
  const std::vector<unsigned>& tree_depths() const noexcept { return root_depths_; }
  const std::vector<std::size_t>& tree_offsets() const noexcept { return root_offsets_; }

  /// r_i: the largest j such that input i is the left-most input of a
  /// depth-j subtree.
  unsigned max_rd(std::size_t pos) const { return max_rd_[pos]; }
  /// s_j(x_i) for j <= max_rd(i).
  NodeId right_descendant(std::size_t pos, unsigned j) const { return rd_nodes_[rd_offset_[pos] + j]; }
  /// Right-most input position below s_j(x_i).
  static std::size_t rightmost(std::size_t pos, unsigned j) { return pos + (std::size_t{1} << j) - 1; }

private:
  GateKind kind_ = GateKind::And;
  std::size_t gates_ = 0;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> roots_;
  std::vector<unsigned> root_depths_;
  std::vector<std::size_t> root_offsets_;
  std::vector<std::uint8_t> max_rd_;
  std::vector<std::size_t> rd_offset_;
  std::vector<NodeId> rd_nodes_;
};

/// Boundary vertices of a nonempty consecutive set, left to right, in
/// O(log |K|) steps.
BoundarySeq boundary_consecutive(const LeftistCircuit& s, Interval k);

/// A set of leftist input positions stored as at most a few disjoint,
/// non-adjacent runs in increasing order.
class TriangularSet {
public:
  TriangularSet() = default;
  explicit TriangularSet(Interval run);
  explicit TriangularSet(std::vector<Interval> runs);

  const std::vector<Interval>& runs() const noexcept { return runs_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return runs_.empty(); }
  std::vector<std::size_t> positions() const;

  /// The set with position `pos` added.
  TriangularSet with(std::size_t pos) const;
  /// Elements of this set that lie outside [cut.begin, cut.end).
  TriangularSet without(Interval cut) const;

  friend bool operator==(const TriangularSet&, const TriangularSet&) = default;

private:
  void normalize();
  std::vector<Interval> runs_;
};

BoundarySeq boundary_triangular(const LeftistCircuit& s, const TriangularSet& k);

/// Boundary of an arbitrary position set by a full scan over the trees. Used
/// as an oracle.
BoundarySeq boundary_scan(const LeftistCircuit& s, const std::vector<bool>& member);

/// Some J splits the boundary sequence into an input-consecutive part with
/// strictly increasing depths and an input-consecutive part with strictly
/// decreasing depths.
bool is_triangular(const BoundarySeq& b);
bool is_triangular(const LeftistCircuit& s, const std::vector<bool>& member);
bool is_triangular(const LeftistCircuit& s, const TriangularSet& k);

struct SymPrepResult {
  NodeId root;
  std::size_t additional_gates;
};

/// Symmetric function of kind s.kind() over K and the extra signals L.
/// Leftist subtrees covering K are reused; only the Huffman gates joining
/// them with L are new. Arrival of every item is its depth in `c` minus
/// `depth_offset`.
SymPrepResult sym_prep(Circuit& c, const LeftistCircuit& s, const TriangularSet& k,
                       const std::vector<NodeId>& extra, std::uint32_t depth_offset = 0);

/// A triangular subset K of N with |K| = 2^(d-1), where 2^(d-1) <= |N| < 2^d,
/// such that N \ K stays triangular, also after appending the next input.
TriangularSet extract_triangular_subset(const LeftistCircuit& s, const TriangularSet& n);

} // namespace aoc
