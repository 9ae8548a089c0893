//===- report.hpp - Measurements and reports for the aoc tool --*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include "aoc/adders.hpp"
#include "aoc/aop.hpp"
#include "aoc/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aoc::tool {

struct VerifyRequest {
  enum class Kind { Off, Exhaustive, Random } kind = Kind::Off;
  std::uint64_t trials = 0;
  std::uint64_t seed = default_seed;

  // "exhaustive", "random:<trials>" or "off".
  static std::optional<VerifyRequest> parse(const std::string& s, std::uint64_t seed);
};

struct AopSpec {
  std::size_t m = 0;  // alternating inputs
  std::size_t n = 0;  // symmetric inputs
  Polarity polarity = Polarity::F;
  SynthMode mode = SynthMode::Shared;
};

/// One synthesized circuit with its metrics, bounds and verdicts.
struct Measurement {
  std::string kind;          // "aop" or "adder"
  std::string construction;  // "grinchuk", "lf:f=2", ...
  std::size_t n = 0;
  std::size_t m = 0;         // aop only
  Circuit circuit;
  Bound depth_bound;
  Bound size_bound;
  std::optional<GateCategories> categories;
  std::optional<Verdict> verdict;
  VerifyRequest verify;
  double wall_time_ms = 0;

  // Adder width, or the path length of an AND-OR path.
  std::size_t width() const { return kind == "aop" ? m : n; }
  std::uint32_t depth() const { return circuit.depth(); }
  std::size_t size() const { return circuit.size(); }
  /// Human-readable violated bounds, empty when all defined bounds hold.
  std::vector<std::string> violations() const;
  bool verified_ok() const { return !verdict || verdict->pass; }
  bool pass() const { return verified_ok() && violations().empty(); }
};

AdderBounds aop_bounds(const AopSpec& spec, std::uint32_t measured_depth);

Measurement measure_aop(const AopSpec& spec, const VerifyRequest& v);
Measurement measure_adder(const AdderConstruction& a, std::size_t n, const VerifyRequest& v);

nlohmann::ordered_json to_report(const Measurement& m);

std::string csv_header();
std::string csv_row(const Measurement& m);
std::string md_header();
std::string md_row(const Measurement& m);

// Each table sets `ok` to false when a computed value disagrees with the
// embedded one.
std::string dmin_table(bool& ok);
std::string addgates_table(bool& ok);
std::string psi_table(bool& ok);

} // namespace aoc::tool
