//===- export.hpp - DOT, BLIF and JSON netlist writers ---------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/circuit.hpp"

#include <string>

namespace aoc {

enum class NetlistFormat : std::uint8_t { Dot, Blif, Json };

// One DOT node statement per arena node; inputs are boxes, AND gates red,
// OR gates green. Output names are attached as xlabels.
std::string to_dot(const Circuit& c, const std::string& name = "circuit");

// Gates in arena order with `11 1` (AND) and `1- 1`/`-1 1` (OR) covers.
// Every output is driven by a buffer `.names <node> <output>`.
std::string to_blif(const Circuit& c, const std::string& model = "circuit");

// {"inputs", "nodes", "outputs", "metrics"}.
std::string to_json(const Circuit& c, int indent = 2);

std::string export_netlist(const Circuit& c, NetlistFormat fmt, const std::string& name);

} // namespace aoc
