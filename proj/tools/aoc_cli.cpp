//===- aoc_cli.cpp - Command-line driver ----------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// aoc synth   build one AND-OR path or adder, verify, export, report
// aoc sweep   measure adder constructions over a range of widths
// aoc tables  recompute the reference tables
//
// Exit codes: 0 success, 1 bound or verification failure, 2 usage error.
//
//===----------------------------------------------------------------------===//

#include "report.hpp"

#include "aoc/export.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

using namespace aoc;
using namespace aoc::tool;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SynthArgs {
  std::string kind;
  std::string construction;
  std::optional<std::size_t> m, n;
  std::optional<unsigned> f;
  std::optional<std::string> mode, polarity;
  std::string verify = "off";
  std::uint64_t seed = default_seed;
  std::string out, format, report;
};

struct SweepArgs {
  std::string range;
  std::string constructions;
  std::string emit = "csv";
  std::string verify = "off";
  std::uint64_t seed = default_seed;
  unsigned jobs = 1;
  std::string out;
};

VerifyRequest parse_verify(const std::string& s, std::uint64_t seed) {
  auto v = VerifyRequest::parse(s, seed);
  if (!v)
    throw UsageError("--verify must be exhaustive, random:<trials> or off, got '" + s + "'");
  return *v;
}

NetlistFormat parse_format(const std::string& s) {
  if (s == "dot")
    return NetlistFormat::Dot;
  if (s == "blif")
    return NetlistFormat::Blif;
  if (s == "json")
    return NetlistFormat::Json;
  throw UsageError("--format must be dot, blif or json");
}

std::string file_stem(const std::string& construction) {
  std::string s;
  for (char ch : construction)
    if (ch != '=')
      s += ch == ':' ? '-' : ch;
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os || !(os << text))
    throw std::runtime_error("cannot write " + path);
}

int run_synth(const SynthArgs& a) {
  const VerifyRequest verify = parse_verify(a.verify, a.seed);
  Measurement meas;
  if (a.kind == "aop") {
    if (!a.construction.empty() && a.construction != "grinchuk")
      throw UsageError("--kind aop takes --construction grinchuk");
    if (a.f)
      throw UsageError("--f applies to --construction lf only");
    if (!a.m)
      throw UsageError("--kind aop needs --m");
    AopSpec spec;
    spec.m = *a.m;
    spec.n = a.n.value_or(0);
    if (spec.m == 0)
      throw UsageError("--m must be at least 1");
    if (a.mode)
      spec.mode = *a.mode == "formula" ? SynthMode::Formula : SynthMode::Shared;
    if (a.polarity)
      spec.polarity = *a.polarity == "fstar" ? Polarity::FStar : Polarity::F;
    meas = measure_aop(spec, verify);
  } else {
    if (a.construction.empty())
      throw UsageError("--kind adder needs --construction");
    if (a.construction == "grinchuk")
      throw UsageError("grinchuk is an AND-OR path construction; use --kind aop");
    if (a.m || a.mode || a.polarity)
      throw UsageError("--m, --mode and --polarity apply to --kind aop only");
    if (!a.n)
      throw UsageError("--kind adder needs --n");
    if (a.f && a.construction != "lf")
      throw UsageError("--f applies to --construction lf only");
    std::string name = a.construction;
    if (name == "lf")
      name += ":f=" + std::to_string(a.f.value_or(0));
    const auto c = AdderConstruction::parse(name);
    if (!c)
      throw UsageError("unknown construction '" + a.construction + "'");
    if (!c->valid_for(*a.n))
      throw UsageError(c->label() + " is not defined for n = " + std::to_string(*a.n));
    meas = measure_adder(*c, *a.n, verify);
  }

  if (!a.out.empty() || !a.format.empty()) {
    std::string format = a.format;
    if (format.empty()) {
      const auto dot = a.out.rfind('.');
      format = dot == std::string::npos ? "json" : a.out.substr(dot + 1);
    }
    const NetlistFormat nf = parse_format(format);
    const std::string path = !a.out.empty() ? a.out
                                            : meas.kind + "_" + file_stem(meas.construction) + "_" +
                                                  std::to_string(meas.width()) + "." + format;
    write_file(path, export_netlist(meas.circuit, nf, meas.kind));
  }

  const auto report = to_report(meas);
  if (!a.report.empty())
    write_file(a.report, report.dump(2) + "\n");
  std::cout << report.dump(2) << '\n';

  if (meas.verdict && !meas.verdict->pass)
    std::cerr << "error: circuit does not match its reference function\n";
  for (const auto& v : meas.violations())
    std::cerr << "error: violated bound: " << v << '\n';
  return meas.pass() ? 0 : exit_fail;
}

struct Range {
  std::size_t lo, hi, step;
};

Range parse_range(const std::string& s) {
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  while (true) {
    const auto dots = s.find("..", pos);
    const std::string tok = s.substr(pos, dots == std::string::npos ? std::string::npos : dots - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
      throw UsageError("--n-range must look like a..b or a..b..step, got '" + s + "'");
    parts.push_back(std::stoull(tok));
    if (dots == std::string::npos)
      break;
    pos = dots + 2;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw UsageError("--n-range must look like a..b or a..b..step, got '" + s + "'");
  const Range r{parts[0], parts[1], parts.size() == 3 ? parts[2] : 1};
  if (r.step == 0 || r.lo > r.hi)
    throw UsageError("--n-range '" + s + "' is empty");
  return r;
}

struct Cell {
  std::size_t n;
  std::optional<AdderConstruction> adder;  // empty = AND-OR path with m = n
};

int run_sweep(const SweepArgs& a) {
  const VerifyRequest verify = parse_verify(a.verify, a.seed);
  const Range range = parse_range(a.range);
  if (a.emit != "csv" && a.emit != "md")
    throw UsageError("--emit must be csv or md");

  std::vector<std::optional<AdderConstruction>> kinds;
  std::stringstream list(a.constructions);
  for (std::string item; std::getline(list, item, ',');) {
    if (item == "grinchuk") {
      kinds.emplace_back();
      continue;
    }
    auto c = AdderConstruction::parse(item == "lf" ? "lf:f=0" : item);
    if (!c)
      throw UsageError("unknown construction '" + item + "'");
    kinds.emplace_back(*c);
  }
  if (kinds.empty())
    throw UsageError("--constructions is empty");

  std::vector<Cell> cells;
  for (std::size_t n = range.lo; n <= range.hi; n += range.step) {
    for (const auto& k : kinds) {
      const bool valid = k ? k->valid_for(n) : n >= 1;
      if (valid)
        cells.push_back({n, k});
    }
    if (range.hi - n < range.step)
      break;
  }
  if (cells.empty())
    throw UsageError("no construction is defined on the requested range");

  // Cells are independent; rows are emitted in cell order.
  std::vector<std::string> rows(cells.size());
  std::vector<char> passed(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::string error;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      try {
        const auto& cell = cells[i];
        const Measurement m = cell.adder ? measure_adder(*cell.adder, cell.n, verify)
                                         : measure_aop({cell.n, 0, Polarity::F, SynthMode::Shared}, verify);
        rows[i] = a.emit == "csv" ? csv_row(m) : md_row(m);
        passed[i] = m.pass();
      } catch (const std::exception& e) {
        std::lock_guard lock(error_lock);
        error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, a.jobs); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  if (!error.empty())
    throw std::runtime_error(error);

  std::ostringstream os;
  os << (a.emit == "csv" ? csv_header() : md_header()) << '\n';
  for (const auto& r : rows)
    os << r << '\n';
  if (a.out.empty())
    std::cout << os.str();
  else
    write_file(a.out, os.str());
  return std::all_of(passed.begin(), passed.end(), [](char p) { return p; }) ? 0 : exit_fail;
}

int run_tables(const std::string& which) {
  bool ok = true;
  if (which == "dmin")
    std::cout << dmin_table(ok);
  else if (which == "addgates")
    std::cout << addgates_table(ok);
  else
    std::cout << psi_table(ok);
  return ok ? 0 : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth-optimized AND-OR path circuits and adders over AND2/OR2"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Synthesize one circuit");
  synth->add_option("--kind", sa.kind, "aop or adder")->required()->check(CLI::IsMember({"aop", "adder"}));
  synth->add_option("--construction", sa.construction,
                    "grinchuk | ripple | lf | halved | a1 | a2 | a3 | percarry")
      ->check(CLI::IsMember({"grinchuk", "ripple", "lf", "halved", "a1", "a2", "a3", "percarry"}));
  synth->add_option("--m", sa.m, "AND-OR path: number of alternating inputs");
  synth->add_option("--n", sa.n, "adder width, or symmetric inputs of an extended path");
  synth->add_option("--f", sa.f, "Ladner-Fischer parameter (lf only)");
  synth->add_option("--mode", sa.mode, "shared or formula (aop only)")
      ->check(CLI::IsMember({"shared", "formula"}));
  synth->add_option("--polarity", sa.polarity, "f or fstar (aop only)")
      ->check(CLI::IsMember({"f", "fstar"}));
  synth->add_option("--verify", sa.verify, "exhaustive | random:<trials> | off");
  synth->add_option("--seed", sa.seed, "seed for random verification");
  synth->add_option("--out", sa.out, "netlist path");
  synth->add_option("--format", sa.format, "dot | blif | json")->check(CLI::IsMember({"dot", "blif", "json"}));
  synth->add_option("--report", sa.report, "write the JSON report here");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "Measure adders over a range of widths");
  sweep->add_option("--n-range", wa.range, "a..b or a..b..step")->required();
  sweep->add_option("--constructions", wa.constructions, "comma-separated, e.g. ripple,lf:f=0,a1")->required();
  sweep->add_option("--emit", wa.emit, "csv or md");
  sweep->add_option("--verify", wa.verify, "exhaustive | random:<trials> | off");
  sweep->add_option("--seed", wa.seed, "seed for random verification");
  sweep->add_option("--jobs", wa.jobs, "worker threads");
  sweep->add_option("--out", wa.out, "write the table here instead of stdout");

  std::string which;
  auto* tables = app.add_subcommand("tables", "Recompute the reference tables");
  tables->add_option("--which", which, "dmin | addgates | psi")
      ->required()
      ->check(CLI::IsMember({"dmin", "addgates", "psi"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (synth->parsed())
      return run_synth(sa);
    if (sweep->parsed())
      return run_sweep(wa);
    return run_tables(which);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
}
