//===- circuit.hpp - Append-only AND/OR gate arena -------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// A circuit is a DAG over two-input AND and OR gates. Nodes live in an
// append-only arena; a gate may only reference nodes created before it, so
// creation order is a topological order and cycles cannot be expressed.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace aoc {

using NodeId = std::uint32_t;
inline constexpr NodeId invalid_node = std::numeric_limits<NodeId>::max();

enum class GateKind : std::uint8_t { And, Or };

constexpr GateKind dual(GateKind k) noexcept {
  return k == GateKind::And ? GateKind::Or : GateKind::And;
}

const char* to_string(GateKind k) noexcept;

struct Output {
  std::string name;
  NodeId node;
};

class Circuit {
public:
  NodeId add_input(std::string label);
  NodeId add_gate(GateKind kind, NodeId left, NodeId right);
  NodeId add_and(NodeId a, NodeId b) { return add_gate(GateKind::And, a, b); }
  NodeId add_or(NodeId a, NodeId b) { return add_gate(GateKind::Or, a, b); }
  void add_output(std::string name, NodeId node);

  std::size_t num_nodes() const noexcept { return tag_.size(); }
  std::size_t num_inputs() const noexcept { return inputs_.size(); }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }

  bool is_input(NodeId v) const { return tag_[v] == input_tag; }
  bool is_gate(NodeId v) const { return tag_[v] != input_tag; }
  GateKind kind(NodeId v) const { return static_cast<GateKind>(tag_[v]); }
  NodeId left(NodeId v) const { return left_[v]; }
  NodeId right(NodeId v) const { return right_[v]; }
  // Position of an input node in input order.
  std::size_t input_index(NodeId v) const { return left_[v]; }
  const std::string& label(NodeId v) const { return labels_[left_[v]]; }
  std::uint32_t depth(NodeId v) const { return depth_[v]; }

  std::span<const NodeId> inputs() const noexcept { return inputs_; }
  std::span<const Output> outputs() const noexcept { return outputs_; }

  // Structural metrics. depth() is over outputs, size() counts gates and
  // fanout() is the largest successor count of any node.
  std::uint32_t depth() const;
  std::size_t size() const noexcept { return num_nodes() - num_inputs(); }
  std::size_t fanout() const;
  std::vector<std::uint32_t> successor_counts() const;

  // Bit-parallel simulation: one 64-bit word of lanes per input. `values`
  // is resized to num_nodes() and holds every node's word afterwards.
  void simulate(std::span<const std::uint64_t> input_words,
                std::vector<std::uint64_t>& values) const;
  std::vector<bool> evaluate(const std::vector<bool>& assignment) const;

  void reserve(std::size_t nodes);

private:
  static constexpr std::uint8_t input_tag = 0xff;

  std::vector<std::uint8_t> tag_;
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::vector<std::uint32_t> depth_;
  std::vector<NodeId> inputs_;
  std::vector<std::string> labels_;
  std::vector<Output> outputs_;
};

// Flip every gate kind. Inputs, outputs and node indices are preserved.
Circuit dualize(const Circuit& c);

// Copy of `c` without gates that no output depends on. All inputs are kept
// so assignments stay compatible. When `remap` is given it receives the new
// index of every old node, or invalid_node for dropped gates.
Circuit prune(const Circuit& c, std::vector<NodeId>* remap = nullptr);

} // namespace aoc
