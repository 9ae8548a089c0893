//===- report.cpp - Measurements and reports for the aoc tool -------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "report.hpp"

#include "aoc/bounds.hpp"
#include "aoc/tables.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace aoc::tool {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string value_text(const Bound& b) { return b.value ? fmt("%.10g", *b.value) : ""; }

nlohmann::ordered_json bound_json(const Bound& b) {
  nlohmann::ordered_json j;
  j["formula"] = b.formula;
  j["value"] = b.value ? nlohmann::ordered_json(*b.value) : nlohmann::ordered_json(nullptr);
  return j;
}

std::optional<Verdict> run_verify(const Circuit& c, const WordOracle& oracle, const VerifyRequest& v) {
  switch (v.kind) {
  case VerifyRequest::Kind::Off:
    return std::nullopt;
  case VerifyRequest::Kind::Exhaustive:
    return verify_equivalence(c, oracle, VerifyMode::exhaustive());
  case VerifyRequest::Kind::Random:
    break;
  }
  return verify_equivalence(c, oracle, VerifyMode::random(v.trials, v.seed));
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::optional<VerifyRequest> VerifyRequest::parse(const std::string& s, std::uint64_t seed) {
  VerifyRequest r;
  r.seed = seed;
  if (s == "off")
    return r;
  if (s == "exhaustive") {
    r.kind = Kind::Exhaustive;
    return r;
  }
  const std::string prefix = "random:";
  if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size())
    return std::nullopt;
  const std::string digits = s.substr(prefix.size());
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18)
    return std::nullopt;
  r.kind = Kind::Random;
  r.trials = std::stoull(digits);
  return r;
}

std::vector<std::string> Measurement::violations() const {
  std::vector<std::string> v;
  if (depth_bound.value && depth() > *depth_bound.value + bound_eps)
    v.push_back("depth " + std::to_string(depth()) + " > " + depth_bound.formula + " = " +
                value_text(depth_bound));
  if (size_bound.value && static_cast<double>(size()) > *size_bound.value + bound_eps)
    v.push_back("size " + std::to_string(size()) + " > " + size_bound.formula + " = " +
                value_text(size_bound));
  return v;
}

AdderBounds aop_bounds(const AopSpec& s, std::uint32_t measured_depth) {
  const double m = static_cast<double>(s.m), n = static_cast<double>(s.n);
  AdderBounds b;
  if (s.n == 0 && s.m == 2)
    b.depth = {"1", 1.0};
  else if (s.n == 0 && s.m >= 3)
    b.depth = {"floor(log2 m + log2 log2 m + 0.65)", static_cast<double>(aop_depth_bound(s.m))};
  else
    b.depth = {"d_min(n, m)", static_cast<double>(d_min(s.n, s.m))};

  if (s.mode == SynthMode::Formula)
    b.size = {"m depth + n - 1", m * measured_depth + n - 1};
  else if (s.n == 0)
    b.size = {"ceil(3.67 m - 2)", static_cast<double>(ceil_guarded(3.67 * m - 2))};
  else
    b.size = {"3.67 m + n + rho(n) - 2", 3.67 * m + n + static_cast<double>(rho(s.n)) - 2};
  return b;
}

Measurement measure_aop(const AopSpec& spec, const VerifyRequest& v) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = synth_extended_aop(spec.n, spec.m, spec.polarity, {spec.mode});
  Measurement out;
  out.wall_time_ms = elapsed_ms(t0);
  out.kind = "aop";
  out.construction = "grinchuk";
  out.n = spec.n;
  out.m = spec.m;
  out.categories = r.categories;
  out.circuit = std::move(r.circuit);
  const auto b = aop_bounds(spec, out.circuit.depth());
  out.depth_bound = b.depth;
  out.size_bound = b.size;
  out.verify = v;
  out.verdict = run_verify(out.circuit, aop_oracle(spec.n, spec.m, spec.polarity), v);
  return out;
}

Measurement measure_adder(const AdderConstruction& a, std::size_t n, const VerifyRequest& v) {
  const auto t0 = std::chrono::steady_clock::now();
  Measurement out;
  out.circuit = build_adder(a, n);
  out.wall_time_ms = elapsed_ms(t0);
  out.kind = "adder";
  out.construction = a.label();
  out.n = n;
  const auto b = adder_bounds(a, n);
  out.depth_bound = b.depth;
  out.size_bound = b.size;
  out.verify = v;
  out.verdict = run_verify(out.circuit, adder_oracle(n), v);
  return out;
}

nlohmann::ordered_json to_report(const Measurement& m) {
  nlohmann::ordered_json j;
  j["kind"] = m.kind;
  j["construction"] = m.construction;
  j["n"] = m.n;
  if (m.kind == "aop")
    j["m"] = m.m;
  j["depth"] = m.depth();
  j["size"] = m.size();
  j["fanout"] = m.circuit.fanout();
  j["bound_depth"] = bound_json(m.depth_bound);
  j["bound_size"] = bound_json(m.size_bound);

  nlohmann::ordered_json ver;
  switch (m.verify.kind) {
  case VerifyRequest::Kind::Off:
    ver["mode"] = "skipped";
    break;
  case VerifyRequest::Kind::Exhaustive:
    ver["mode"] = "exhaustive";
    break;
  case VerifyRequest::Kind::Random:
    ver["mode"] = "random";
    ver["trials"] = m.verify.trials;
    ver["seed"] = m.verify.seed;
    break;
  }
  if (m.verdict) {
    ver["pass"] = m.verdict->pass;
    ver["assignments"] = m.verdict->assignments;
    if (const auto& ce = m.verdict->counterexample) {
      auto bits = [](const std::vector<bool>& v) {
        std::string s;
        for (bool b : v)
          s += b ? '1' : '0';
        return s;
      };
      ver["counterexample"] = {{"assignment", bits(ce->assignment)},
                               {"expected", bits(ce->expected)},
                               {"actual", bits(ce->actual)}};
    }
  }
  j["verified"] = ver;

  if (m.categories) {
    const auto& c = *m.categories;
    j["gate_categories"] = {{"leftist", c.leftist},       {"alt_split", c.alt_split},
                            {"base_case", c.base_case},   {"sym_tree", c.sym_tree},
                            {"split_concat", c.split_concat}, {"additional", c.additional()}};
  }
  j["violations"] = m.violations();
  j["pass"] = m.pass();
  j["wall_time_ms"] = m.wall_time_ms;
  return j;
}

std::string csv_header() { return "n,construction,depth,size,fanout,bound_depth,bound_size,pass"; }

std::string csv_row(const Measurement& m) {
  std::ostringstream os;
  os << m.width() << ',' << m.construction << ',' << m.depth() << ',' << m.size() << ','
     << m.circuit.fanout() << ',' << value_text(m.depth_bound) << ',' << value_text(m.size_bound)
     << ',' << (m.pass() ? "pass" : "fail");
  return os.str();
}

std::string md_header() {
  return "| n | construction | depth | size | size/n | fanout | bound_depth | bound_size | pass |\n"
         "|---|---|---|---|---|---|---|---|---|";
}

std::string md_row(const Measurement& m) {
  std::ostringstream os;
  os << "| " << m.width() << " | " << m.construction << " | " << m.depth() << " | " << m.size() << " | "
     << fmt("%.3f", static_cast<double>(m.size()) / static_cast<double>(std::max<std::size_t>(m.width(), 1)))
     << " | " << m.circuit.fanout() << " | " << value_text(m.depth_bound) << " | "
     << value_text(m.size_bound) << " | " << (m.pass() ? "pass" : "fail") << " |";
  return os.str();
}

std::string dmin_table(bool& ok) {
  std::ostringstream os;
  os << "d_min(n, m): computed (embedded when different)\n m\\n";
  for (unsigned n = 0; n <= 12; ++n)
    os << fmt("%4.0f", n);
  os << '\n';
  std::size_t diffs = 0;
  for (unsigned m = 1; m <= 9; ++m) {
    os << fmt("%4.0f", m);
    for (unsigned n = 0; n <= 12; ++n) {
      const unsigned d = d_min(n, m), e = tables::dmin[m - 1][n];
      if (d == e) {
        os << fmt("%4.0f", d);
      } else {
        os << ' ' << d << '(' << e << ')';
        ++diffs;
      }
    }
    os << '\n';
  }
  ok = diffs == 0;
  os << (diffs == 0 ? "all 117 cells match\n" : std::to_string(diffs) + " cells differ\n");
  return os.str();
}

std::string addgates_table(bool& ok) {
  std::ostringstream os;
  os << "additional gates, measured (f / f*) vs cell bound\n";
  os << "  m   n  f   f*  bound  formula\n";
  std::size_t over = 0;
  for (const auto& run : tables::addgates)
    for (unsigned n = run.n_lo; n <= run.n_hi; ++n) {
      const auto a = synth_extended_aop(n, run.m, Polarity::F).categories.additional();
      const auto b = synth_extended_aop(n, run.m, Polarity::FStar).categories.additional();
      const double cell = tables::addgates_value(run.formula, run.m, n);
      const bool within = static_cast<double>(std::max(a, b)) <= cell + bound_eps;
      over += within ? 0 : 1;
      char line[160];
      std::snprintf(line, sizeof line, "%3u %3u %2zu %4zu %6.2f  %s%s%s\n", run.m, n, a, b, cell,
                    tables::addgates_formula(run.formula).c_str(),
                    run.open_ended && n == run.n_hi ? " (and beyond)" : "", within ? "" : "  OVER");
      os << line;
    }
  ok = over == 0;
  os << (over == 0 ? "all cells within bound\n" : std::to_string(over) + " cells over bound\n");
  return os.str();
}

std::string psi_table(bool& ok) {
  std::ostringstream os;
  os << "  d      psi(d)   bound   cumulative   bound\n";
  double sum = 0;
  for (const auto& row : tables::psi_bounds) {
    const double p = psi(row.d);
    sum += p;
    ok = ok && p <= row.psi + 5e-5 && sum <= row.cumulative + 5e-5;
    char line[128];
    std::snprintf(line, sizeof line, "%3u  %10.6f  %6.4f  %11.6f  %6.4f\n", row.d, p, row.psi, sum,
                  row.cumulative);
    os << line;
  }
  return os.str();
}

} // namespace aoc::tool
