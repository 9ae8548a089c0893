//===- circuit.cpp - Append-only AND/OR gate arena ------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace aoc {

const char* to_string(GateKind k) noexcept { return k == GateKind::And ? "AND" : "OR"; }

NodeId Circuit::add_input(std::string label) {
  const auto id = static_cast<NodeId>(tag_.size());
  tag_.push_back(input_tag);
  left_.push_back(static_cast<NodeId>(inputs_.size()));
  right_.push_back(invalid_node);
  depth_.push_back(0);
  inputs_.push_back(id);
  labels_.push_back(std::move(label));
  return id;
}

NodeId Circuit::add_gate(GateKind kind, NodeId left, NodeId right) {
  const auto id = static_cast<NodeId>(tag_.size());
  if (left >= id || right >= id)
    throw std::out_of_range("add_gate: predecessor not issued by this circuit");
  tag_.push_back(static_cast<std::uint8_t>(kind));
  left_.push_back(left);
  right_.push_back(right);
  depth_.push_back(1 + std::max(depth_[left], depth_[right]));
  return id;
}

void Circuit::add_output(std::string name, NodeId node) {
  if (node >= num_nodes())
    throw std::out_of_range("add_output: node not issued by this circuit");
  outputs_.push_back({std::move(name), node});
}

void Circuit::reserve(std::size_t nodes) {
  tag_.reserve(nodes);
  left_.reserve(nodes);
  right_.reserve(nodes);
  depth_.reserve(nodes);
}

std::uint32_t Circuit::depth() const {
  std::uint32_t d = 0;
  for (const auto& o : outputs_)
    d = std::max(d, depth_[o.node]);
  return d;
}

std::vector<std::uint32_t> Circuit::successor_counts() const {
  std::vector<std::uint32_t> succ(num_nodes(), 0);
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (is_gate(v)) {
      ++succ[left_[v]];
      ++succ[right_[v]];
    }
  }
  return succ;
}

std::size_t Circuit::fanout() const {
  const auto succ = successor_counts();
  std::uint32_t f = 0;
  for (auto s : succ)
    f = std::max(f, s);
  return f;
}

void Circuit::simulate(std::span<const std::uint64_t> input_words,
                       std::vector<std::uint64_t>& values) const {
  if (input_words.size() != inputs_.size())
    throw std::invalid_argument("simulate: input word count does not match inputs");
  values.resize(num_nodes());
  const std::size_t n = num_nodes();
  for (std::size_t v = 0; v < n; ++v) {
    switch (tag_[v]) {
    case input_tag:
      values[v] = input_words[left_[v]];
      break;
    case static_cast<std::uint8_t>(GateKind::And):
      values[v] = values[left_[v]] & values[right_[v]];
      break;
    default:
      values[v] = values[left_[v]] | values[right_[v]];
      break;
    }
  }
}

std::vector<bool> Circuit::evaluate(const std::vector<bool>& assignment) const {
  if (assignment.size() != inputs_.size())
    throw std::invalid_argument("evaluate: assignment length does not match inputs");
  std::vector<std::uint64_t> words(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    words[i] = assignment[i] ? 1u : 0u;
  std::vector<std::uint64_t> values;
  simulate(words, values);
  std::vector<bool> out;
  out.reserve(outputs_.size());
  for (const auto& o : outputs_)
    out.push_back(values[o.node] & 1u);
  return out;
}

Circuit dualize(const Circuit& c) {
  Circuit d;
  d.reserve(c.num_nodes());
  for (NodeId v = 0; v < c.num_nodes(); ++v) {
    if (c.is_input(v))
      d.add_input(c.label(v));
    else
      d.add_gate(dual(c.kind(v)), c.left(v), c.right(v));
  }
  for (const auto& o : c.outputs())
    d.add_output(o.name, o.node);
  return d;
}

Circuit prune(const Circuit& c, std::vector<NodeId>* remap) {
  std::vector<std::uint8_t> live(c.num_nodes(), 0);
  for (const auto& o : c.outputs())
    live[o.node] = 1;
  for (NodeId v = static_cast<NodeId>(c.num_nodes()); v-- > 0;) {
    if (live[v] && c.is_gate(v)) {
      live[c.left(v)] = 1;
      live[c.right(v)] = 1;
    }
  }
  std::vector<NodeId> map(c.num_nodes(), invalid_node);
  Circuit p;
  p.reserve(c.num_nodes());
  for (NodeId v = 0; v < c.num_nodes(); ++v) {
    if (c.is_input(v))
      map[v] = p.add_input(c.label(v));
    else if (live[v])
      map[v] = p.add_gate(c.kind(v), map[c.left(v)], map[c.right(v)]);
  }
  for (const auto& o : c.outputs())
    p.add_output(o.name, map[o.node]);
  if (remap)
    *remap = std::move(map);
  return p;
}

} // namespace aoc
