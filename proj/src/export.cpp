//===- export.cpp - DOT, BLIF and JSON netlist writers --------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/export.hpp"

#include <json.hpp>

#include <sstream>
#include <unordered_set>

namespace aoc {

namespace {

bool plain_token(const std::string& s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (ch <= ' ' || ch == '#' || ch == '\\' || ch == '=' || ch == '"')
      return false;
  return true;
}

std::string unique_name(std::string base, std::unordered_set<std::string>& used) {
  while (!used.insert(base).second)
    base += '_';
  return base;
}

// Node and output signal names that are valid BLIF tokens and pairwise
// distinct.
struct SignalNames {
  std::vector<std::string> node;
  std::vector<std::string> output;

  explicit SignalNames(const Circuit& c) : node(c.num_nodes()) {
    std::unordered_set<std::string> used;
    for (auto v : c.inputs()) {
      const auto& l = c.label(v);
      node[v] = unique_name(plain_token(l) ? l : "x" + std::to_string(c.input_index(v)), used);
    }
    for (NodeId v = 0; v < c.num_nodes(); ++v)
      if (c.is_gate(v))
        node[v] = unique_name("n" + std::to_string(v), used);
    for (const auto& o : c.outputs())
      output.push_back(unique_name(plain_token(o.name) ? o.name : "y", used));
  }
};

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      r += '\\';
    r += ch;
  }
  return r;
}

} // namespace

std::string to_dot(const Circuit& c, const std::string& name) {
  std::vector<std::string> out_names(c.num_nodes());
  for (const auto& o : c.outputs()) {
    auto& s = out_names[o.node];
    s += s.empty() ? o.name : "," + o.name;
  }
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n";
  for (NodeId v = 0; v < c.num_nodes(); ++v) {
    os << "  n" << v << " [";
    if (c.is_input(v))
      os << "label=\"" << dot_escape(c.label(v)) << "\", shape=box";
    else if (c.kind(v) == GateKind::And)
      os << "label=\"AND\", color=red";
    else
      os << "label=\"OR\", color=green";
    if (!out_names[v].empty())
      os << ", xlabel=\"" << dot_escape(out_names[v]) << "\", peripheries=2";
    os << "];\n";
  }
  for (NodeId v = 0; v < c.num_nodes(); ++v)
    if (c.is_gate(v))
      os << "  n" << c.left(v) << " -> n" << v << ";\n  n" << c.right(v) << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_blif(const Circuit& c, const std::string& model) {
  const SignalNames names(c);
  std::ostringstream os;
  os << ".model " << (plain_token(model) ? model : "circuit") << "\n.inputs";
  for (auto v : c.inputs())
    os << ' ' << names.node[v];
  os << "\n.outputs";
  for (const auto& o : names.output)
    os << ' ' << o;
  os << '\n';
  for (NodeId v = 0; v < c.num_nodes(); ++v) {
    if (!c.is_gate(v))
      continue;
    os << ".names " << names.node[c.left(v)] << ' ' << names.node[c.right(v)] << ' '
       << names.node[v] << '\n';
    os << (c.kind(v) == GateKind::And ? "11 1\n" : "1- 1\n-1 1\n");
  }
  const auto outs = c.outputs();
  for (std::size_t i = 0; i < outs.size(); ++i)
    os << ".names " << names.node[outs[i].node] << ' ' << names.output[i] << "\n1 1\n";
  os << ".end\n";
  return os.str();
}

std::string to_json(const Circuit& c, int indent) {
  using nlohmann::json;
  json nodes = json::array();
  for (NodeId v = 0; v < c.num_nodes(); ++v) {
    if (c.is_input(v))
      nodes.push_back({{"id", v}, {"type", "input"}, {"label", c.label(v)}});
    else
      nodes.push_back({{"id", v},
                       {"type", to_string(c.kind(v))},
                       {"left", c.left(v)},
                       {"right", c.right(v)},
                       {"depth", c.depth(v)}});
  }
  json outputs = json::array();
  for (const auto& o : c.outputs())
    outputs.push_back({{"name", o.name}, {"node", o.node}});
  json inputs = json::array();
  for (auto v : c.inputs())
    inputs.push_back(v);
  json doc = {{"inputs", inputs},
              {"nodes", nodes},
              {"outputs", outputs},
              {"metrics", {{"depth", c.depth()}, {"size", c.size()}, {"fanout", c.fanout()}}}};
  return doc.dump(indent) + "\n";
}

std::string export_netlist(const Circuit& c, NetlistFormat fmt, const std::string& name) {
  switch (fmt) {
  case NetlistFormat::Dot:
    return to_dot(c, name);
  case NetlistFormat::Blif:
    return to_blif(c, name);
  case NetlistFormat::Json:
    break;
  }
  return to_json(c);
}

} // namespace aoc
