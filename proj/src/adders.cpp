//===- adders.cpp - Carry circuits built from AND-OR paths ----------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/adders.hpp"

#include "aoc/aop.hpp"
#include "aoc/bounds.hpp"
#include "aoc/prefix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace aoc {

std::vector<NodeId> carry_path_inputs(Span p, Span g) {
  if (p.size() != g.size() || g.empty())
    throw std::invalid_argument("carry_path_inputs: need equal nonzero lengths");
  const std::size_t k = g.size();
  std::vector<NodeId> t{g[k - 1]};
  for (std::size_t i = k - 1; i > 0; --i) {
    t.push_back(p[i]);
    t.push_back(g[i - 1]);
  }
  return t;
}

NodeId carry_aop(Circuit& c, Span t) { return build_aop(c, t, Polarity::FStar); }

TwoPartPlan TwoPartPlan::make(std::size_t n) {
  TwoPartPlan plan;
  plan.n = n;
  plan.k_l = n / 2;
  plan.k_r = n - plan.k_l;
  return plan;
}

std::vector<NodeId> two_part_adder(Circuit& c, Span p, Span g, const TwoPartPlan& plan) {
  if (plan.n < 2 || p.size() != plan.n || g.size() != plan.n)
    throw std::invalid_argument("two_part_adder: need n >= 2 pairs matching the plan");
  const std::size_t kr = plan.k_r;
  auto carries = plan.low(c, p.first(kr), g.first(kr));
  const auto high = plan.high(c, p.subspan(kr), g.subspan(kr));
  const NodeId top =
      plan.aop ? plan.aop(c, carry_path_inputs(p.first(kr), g.first(kr))) : carries.back();
  for (std::size_t i = 0; i < plan.k_l; ++i) {
    const NodeId t = c.add_and(high.and_prefix[i], top);
    carries.push_back(c.add_or(high.carries[i], t));
  }
  return carries;
}

LPartPlan LPartPlan::make(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k >= n)
    throw std::invalid_argument("LPartPlan: need n >= 2 and 1 <= k < n");
  LPartPlan plan;
  plan.n = n;
  plan.k = k;
  plan.l = (n + k - 1) / k;
  for (std::size_t j = 0; j < plan.l; ++j) {
    plan.offsets.push_back(j * k);
    plan.sizes.push_back(std::min(k, n - j * k));
  }
  return plan;
}

LPartResult l_part_adder(Circuit& c, Span p, Span g, const LPartPlan& plan) {
  if (p.size() != plan.n || g.size() != plan.n)
    throw std::invalid_argument("l_part_adder: inputs do not match the plan");
  std::vector<PartOutputs> parts;
  std::vector<NodeId> sp, sg;
  for (std::size_t j = 0; j < plan.l; ++j) {
    const Span pj = p.subspan(plan.offsets[j], plan.sizes[j]);
    const Span gj = g.subspan(plan.offsets[j], plan.sizes[j]);
    parts.push_back(plan.part(c, pj, gj));
    sp.push_back(j == 0 ? p[0] : parts.back().and_prefix.back());
    sg.push_back(plan.aop(c, carry_path_inputs(pj, gj)));
  }
  // spine[j-1] is the carry into part j; spine[l-1] is c_n.
  const auto spine = plan.spine(c, sp, sg);

  LPartResult r;
  r.carries = parts[0].carries;
  for (std::size_t j = 1; j < plan.l; ++j) {
    const NodeId in = spine[j - 1];
    for (std::size_t i = 0; i < plan.sizes[j]; ++i) {
      const NodeId t = c.add_and(parts[j].and_prefix[i], in);
      r.carries.push_back(c.add_or(parts[j].carries[i], t));
    }
  }
  r.spine.assign(spine.begin(), spine.end() - 1);
  return r;
}

namespace {

unsigned capped_f(unsigned f, std::size_t n) { return std::min(f, ceil_log2(n)); }

std::vector<NodeId> lf0_carries(Circuit& c, Span p, Span g) {
  return lf_combined_adder(c, p, g, 0).carries;
}

// For 4 <= n <= 17: true when the combined Ladner-Fischer adder beats the
// two-part recursion in (depth, size).
using A1Choice = std::array<bool, 18>;

std::vector<NodeId> a1_rec(Circuit& c, Span p, Span g, const A1Choice& use_lf);

std::vector<NodeId> a1_two_part(Circuit& c, Span p, Span g, const A1Choice& use_lf) {
  auto plan = TwoPartPlan::make(g.size());
  plan.low = [&](Circuit& cc, Span pp, Span gg) { return a1_rec(cc, pp, gg, use_lf); };
  plan.high = [&](Circuit& cc, Span pp, Span gg) {
    PartOutputs out;
    out.carries = a1_rec(cc, pp, gg, use_lf);
    out.and_prefix = and_prefix_circuit(cc, pp, capped_f(2, pp.size()));
    return out;
  };
  plan.aop = carry_aop;
  return two_part_adder(c, p, g, plan);
}

std::vector<NodeId> a1_rec(Circuit& c, Span p, Span g, const A1Choice& use_lf) {
  const std::size_t n = g.size();
  if (n <= 3)
    return ripple_adder(c, p, g);
  if (n <= 17 && use_lf[n])
    return lf0_carries(c, p, g);
  return a1_two_part(c, p, g, use_lf);
}

template <typename Build>
std::tuple<std::uint32_t, std::size_t> measure(std::size_t n, Build&& build) {
  Circuit c;
  std::vector<NodeId> p, g;
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(c.add_input("p"));
    g.push_back(c.add_input("g"));
  }
  for (auto v : build(c, Span(p), Span(g)))
    c.add_output("c", v);
  const Circuit pruned = prune(c);
  return {pruned.depth(), pruned.size()};
}

const A1Choice& a1_choice() {
  static const A1Choice table = [] {
    A1Choice t{};
    for (std::size_t n = 4; n <= 17; ++n) {
      const auto lf = measure(n, lf0_carries);
      const auto rec = measure(n, [&](Circuit& c, Span p, Span g) { return a1_two_part(c, p, g, t); });
      t[n] = lf <= rec;
    }
    return t;
  }();
  return table;
}

void check_pairs(Span p, Span g, std::size_t min_n, const char* who) {
  if (p.size() != g.size() || g.size() < min_n)
    throw std::invalid_argument(std::string(who) + ": need equal lengths of at least " +
                                std::to_string(min_n));
}

} // namespace

std::vector<NodeId> adder_a1(Circuit& c, Span p, Span g) {
  check_pairs(p, g, 3, "adder_a1");
  return a1_rec(c, p, g, a1_choice());
}

std::vector<NodeId> adder_a2(Circuit& c, Span p, Span g) {
  check_pairs(p, g, 4, "adder_a2");
  const std::size_t n = g.size();
  if (n <= 1024)
    return lf0_carries(c, p, g);
  auto plan = LPartPlan::make(n, ceil_log2(n));
  plan.part = [](Circuit& cc, Span pp, Span gg) {
    PartOutputs out;
    out.carries = halved_adder(cc, pp, gg);
    out.and_prefix = and_prefix_circuit(cc, pp, capped_f(2, pp.size()));
    return out;
  };
  plan.aop = carry_aop;
  plan.spine = [](Circuit& cc, Span pp, Span gg) { return a1_rec(cc, pp, gg, a1_choice()); };
  return l_part_adder(c, p, g, plan).carries;
}

std::vector<NodeId> adder_a3(Circuit& c, Span p, Span g) {
  check_pairs(p, g, 4, "adder_a3");
  const std::size_t n = g.size();
  if (n <= 2048)
    return lf0_carries(c, p, g);
  const double lg = std::log2(static_cast<double>(n));
  auto plan = LPartPlan::make(n, static_cast<std::size_t>(ceil_guarded(lg * lg)));
  plan.part = [](Circuit& cc, Span pp, Span gg) {
    auto r = lf_combined_adder(cc, pp, gg, capped_f(3, pp.size()));
    return PartOutputs{std::move(r.carries), std::move(r.and_prefix)};
  };
  plan.aop = carry_aop;
  plan.spine = [](Circuit& cc, Span pp, Span gg) { return a1_rec(cc, pp, gg, a1_choice()); };
  return l_part_adder(c, p, g, plan).carries;
}

std::vector<NodeId> per_carry_aop_adder(Circuit& c, Span p, Span g) {
  check_pairs(p, g, 1, "per_carry_aop_adder");
  std::vector<NodeId> carries;
  for (std::size_t i = 1; i <= g.size(); ++i)
    carries.push_back(carry_aop(c, carry_path_inputs(p.first(i), g.first(i))));
  return carries;
}

//===----------------------------------------------------------------------===//
// Construction registry
//===----------------------------------------------------------------------===//

std::string AdderConstruction::tag() const {
  switch (kind) {
  case AdderKind::Ripple:
    return "ripple";
  case AdderKind::LadnerFischer:
    return "lf";
  case AdderKind::Halved:
    return "halved";
  case AdderKind::A1:
    return "a1";
  case AdderKind::A2:
    return "a2";
  case AdderKind::A3:
    return "a3";
  case AdderKind::PerCarry:
    break;
  }
  return "percarry";
}

std::string AdderConstruction::label() const {
  return kind == AdderKind::LadnerFischer ? "lf:f=" + std::to_string(f) : tag();
}

std::optional<AdderConstruction> AdderConstruction::parse(const std::string& s) {
  static const std::pair<const char*, AdderKind> names[] = {
      {"ripple", AdderKind::Ripple}, {"lf", AdderKind::LadnerFischer},
      {"halved", AdderKind::Halved}, {"a1", AdderKind::A1},
      {"a2", AdderKind::A2},         {"a3", AdderKind::A3},
      {"percarry", AdderKind::PerCarry}};
  for (const auto& [name, kind] : names)
    if (s == name)
      return AdderConstruction{kind, 0};
  const std::string prefix = "lf:f=";
  if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size()) {
    const std::string digits = s.substr(prefix.size());
    if (digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos)
      return AdderConstruction{AdderKind::LadnerFischer, static_cast<unsigned>(std::stoul(digits))};
  }
  return std::nullopt;
}

std::size_t AdderConstruction::min_n() const {
  switch (kind) {
  case AdderKind::A1:
    return 3;
  case AdderKind::A2:
  case AdderKind::A3:
    return 4;
  default:
    return 1;
  }
}

bool AdderConstruction::valid_for(std::size_t n) const {
  if (n < min_n())
    return false;
  return kind != AdderKind::LadnerFischer || n == 1 || f <= ceil_log2(n);
}

AdderBounds adder_bounds(const AdderConstruction& a, std::size_t n) {
  const double x = static_cast<double>(n);
  const double l = n > 0 ? std::log2(x) : 0.0;
  const double ll = n > 1 ? std::log2(l) : 0.0;
  const double lll = n > 2 ? std::log2(ll) : 0.0;
  auto fl = [](double v) { return static_cast<double>(floor_guarded(v)); };
  switch (a.kind) {
  case AdderKind::Ripple:
    return {{"2n - 2", 2 * x - 2}, {"2n - 2", 2 * x - 2}};
  case AdderKind::LadnerFischer:
    return {{"2 (ceil(log2 n) + f)", 2.0 * (ceil_log2(n) + a.f)},
            {"ceil(6 (1 + 2^-f) n)",
             static_cast<double>(ceil_guarded(6.0 * (1.0 + std::ldexp(1.0, -static_cast<int>(a.f))) * x))}};
  case AdderKind::Halved:
    return {{"n + 2", x + 2}, {"3.5 n", 3.5 * x}};
  case AdderKind::A1: {
    AdderBounds b{{"floor(log2 n + log2 log2 n + 2.65)", fl(l + ll + 2.65)},
                  {"6.2 n log2 n", std::nullopt}};
    if (n >= 4)
      b.size.value = 6.2 * x * l;
    return b;
  }
  case AdderKind::A2:
    return {{"floor(log2 n + log2 log2 n + log2 log2 log2 n + 6.6)", fl(l + ll + lll + 6.6)},
            {"21.6 n", 21.6 * x}};
  case AdderKind::A3:
    return {{"floor(log2 n + log2 log2 n + log2 log2 log2 n + 7.6)", fl(l + ll + lll + 7.6)},
            {"16.7 n", 16.7 * x}};
  case AdderKind::PerCarry:
    break;
  }
  AdderBounds b{{"floor(log2 m + log2 log2 m + 0.65) with m = 2n - 1", 0.0},
                {"3.67 (n^2 - 1) - 2 (n - 1)", 3.67 * (x * x - 1) - 2 * (x - 1)}};
  if (n >= 2)
    b.depth.value = static_cast<double>(aop_depth_bound(2 * n - 1));
  return b;
}

Circuit build_adder(const AdderConstruction& a, std::size_t n) {
  if (!a.valid_for(n))
    throw std::invalid_argument("construction " + a.label() + " is not defined for n = " +
                                std::to_string(n));
  Circuit c;
  std::vector<NodeId> p, g;
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(c.add_input("p" + std::to_string(i)));
    g.push_back(c.add_input("g" + std::to_string(i)));
  }
  std::vector<NodeId> carries;
  switch (a.kind) {
  case AdderKind::Ripple:
    carries = ripple_adder(c, p, g);
    break;
  case AdderKind::LadnerFischer:
    carries = lf_combined_adder(c, p, g, a.f).carries;
    break;
  case AdderKind::Halved:
    carries = halved_adder(c, p, g);
    break;
  case AdderKind::A1:
    carries = adder_a1(c, p, g);
    break;
  case AdderKind::A2:
    carries = adder_a2(c, p, g);
    break;
  case AdderKind::A3:
    carries = adder_a3(c, p, g);
    break;
  case AdderKind::PerCarry:
    carries = per_carry_aop_adder(c, p, g);
    break;
  }
  for (std::size_t i = 0; i < carries.size(); ++i)
    c.add_output("c" + std::to_string(i + 1), carries[i]);
  return prune(c);
}

} // namespace aoc
