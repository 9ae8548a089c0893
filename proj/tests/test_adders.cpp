//===- test_adders.cpp - Part frameworks and the adder families ----------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/adders.hpp"
#include "aoc/aop.hpp"
#include "aoc/bounds.hpp"
#include "aoc/prefix.hpp"
#include "aoc/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace aoc;

namespace {

struct AdderInputs {
  Circuit c;
  std::vector<NodeId> p, g;
  explicit AdderInputs(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      p.push_back(c.add_input("p" + std::to_string(i)));
      g.push_back(c.add_input("g" + std::to_string(i)));
    }
  }
  void outputs(const std::vector<NodeId>& v, const std::string& prefix = "c") {
    for (std::size_t i = 0; i < v.size(); ++i)
      c.add_output(prefix + std::to_string(i + 1), v[i]);
  }
};

PartOutputs ripple_part(Circuit& c, Span p, Span g) {
  return {ripple_adder(c, p, g), and_prefix_circuit(c, p, 0)};
}

// Expected words: the selected carries c_{idx[0]}, c_{idx[1]}, ...
WordOracle selected_carries(std::size_t n, std::vector<std::size_t> idx) {
  return [n, idx](std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
    std::vector<std::uint64_t> p(n), g(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = in[2 * i];
      g[i] = in[2 * i + 1];
    }
    carry_reference_words(p, g, c);
    for (std::size_t i = 0; i < idx.size(); ++i)
      out[i] = c[idx[i] - 1];
  };
}

VerifyMode mode_for(std::size_t n) {
  return n <= 11 ? VerifyMode::exhaustive() : VerifyMode::random(2000);
}

} // namespace

TEST_CASE("carry path inputs") {
  AdderInputs a(3);
  CHECK(carry_path_inputs(a.p, a.g) ==
        std::vector<NodeId>{a.g[2], a.p[2], a.g[1], a.p[1], a.g[0]});
  CHECK(carry_path_inputs(Span(a.p).first(1), Span(a.g).first(1)) == std::vector<NodeId>{a.g[0]});
  CHECK_THROWS(carry_path_inputs(Span(a.p).first(0), Span(a.g).first(0)));
}

TEST_CASE("two-part framework") {
  const auto plan3 = TwoPartPlan::make(3);
  CHECK(plan3.k_l == 1);
  CHECK(plan3.k_r == 2);

  // Ripple components, AOP read from the low adder's top carry.
  for (std::size_t n = 2; n <= 11; ++n) {
    auto plan = TwoPartPlan::make(n);
    plan.low = [](Circuit& c, Span p, Span g) { return ripple_adder(c, p, g); };
    plan.high = ripple_part;
    AdderInputs a(n);
    a.outputs(two_part_adder(a.c, a.p, a.g, plan));
    REQUIRE(verify_equivalence(a.c, adder_oracle(n), VerifyMode::exhaustive()).pass);
  }

  // Size is the sum of the parts plus two gates per high carry.
  const std::size_t n = 6;
  auto plan = TwoPartPlan::make(n);
  plan.low = [](Circuit& c, Span p, Span g) { return ripple_adder(c, p, g); };
  plan.high = ripple_part;
  plan.aop = carry_aop;
  AdderInputs a(n);
  a.outputs(two_part_adder(a.c, a.p, a.g, plan));
  CHECK(verify_equivalence(a.c, adder_oracle(n), VerifyMode::exhaustive()).pass);
  AdderInputs low(3), high(3), path(3);
  ripple_adder(low.c, low.p, low.g);
  ripple_part(high.c, high.p, high.g);
  carry_aop(path.c, carry_path_inputs(path.p, path.g));
  CHECK(a.c.size() == low.c.size() + high.c.size() + path.c.size() + 2 * plan.k_l);

  AdderInputs one(1);
  CHECK_THROWS(two_part_adder(one.c, one.p, one.g, TwoPartPlan::make(1)));
}

TEST_CASE("l-part plan") {
  const auto p = LPartPlan::make(12, 3);
  CHECK(p.l == 4);
  CHECK(p.sizes == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(p.offsets == std::vector<std::size_t>{0, 3, 6, 9});
  const auto q = LPartPlan::make(10, 4);
  CHECK(q.sizes == std::vector<std::size_t>{4, 4, 2});
  CHECK(LPartPlan::make(4096, 12).l == 342);
  CHECK(LPartPlan::make(8192, 169).l == 49);
  CHECK_THROWS(LPartPlan::make(5, 5));
  CHECK_THROWS(LPartPlan::make(5, 0));
  CHECK_THROWS(LPartPlan::make(1, 1));
}

TEST_CASE("l-part framework: carries and spine probe") {
  for (std::size_t n = 2; n <= 11; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto plan = LPartPlan::make(n, k);
      plan.part = ripple_part;
      plan.aop = carry_aop;
      std::size_t spine_inputs = 0;
      plan.spine = [&](Circuit& c, Span p, Span g) {
        spine_inputs = g.size();
        return ripple_adder(c, p, g);
      };
      AdderInputs a(n);
      const auto r = l_part_adder(a.c, a.p, a.g, plan);
      REQUIRE(spine_inputs == plan.l);
      a.outputs(r.carries);
      REQUIRE(verify_equivalence(a.c, adder_oracle(n), VerifyMode::exhaustive()).pass);

      // Same construction with the spine outputs as the only outputs.
      AdderInputs b(n);
      const auto probe = l_part_adder(b.c, b.p, b.g, plan);
      std::vector<std::size_t> idx;
      for (std::size_t j = 1; j < plan.l; ++j) {
        b.c.add_output("s" + std::to_string(j), probe.spine[j - 1]);
        idx.push_back(plan.offsets[j]);
      }
      if (!idx.empty())
        REQUIRE(verify_equivalence(b.c, selected_carries(n, idx), VerifyMode::exhaustive()).pass);
    }
}

TEST_CASE("l-part with two parts behaves like the two-part framework") {
  for (std::size_t n = 2; n <= 11; ++n) {
    auto plan = LPartPlan::make(n, (n + 1) / 2);
    CHECK(plan.l == 2);
    plan.part = ripple_part;
    plan.aop = carry_aop;
    plan.spine = [](Circuit& c, Span p, Span g) { return ripple_adder(c, p, g); };
    AdderInputs a(n);
    a.outputs(l_part_adder(a.c, a.p, a.g, plan).carries);
    REQUIRE(verify_equivalence(a.c, adder_oracle(n), VerifyMode::exhaustive()).pass);
  }
}

TEST_CASE("spine probe at linear-size scale") {
  // The A3 part layout on a mid-size instance.
  const std::size_t n = 3000;
  const double lg = std::log2(double(n));
  auto plan = LPartPlan::make(n, static_cast<std::size_t>(ceil_guarded(lg * lg)));
  plan.part = [](Circuit& c, Span p, Span g) {
    auto r = lf_combined_adder(c, p, g, std::min(3u, ceil_log2(p.size())));
    return PartOutputs{r.carries, r.and_prefix};
  };
  plan.aop = carry_aop;
  plan.spine = adder_a1;
  AdderInputs a(n);
  const auto r = l_part_adder(a.c, a.p, a.g, plan);
  std::vector<std::size_t> idx;
  for (std::size_t j = 1; j < plan.l; ++j) {
    a.c.add_output("s", r.spine[j - 1]);
    idx.push_back(plan.offsets[j]);
  }
  CHECK(verify_equivalence(a.c, selected_carries(n, idx), VerifyMode::random(2000)).pass);
}

TEST_CASE("A1 examples") {
  const Circuit c3 = build_adder({AdderKind::A1}, 3);
  CHECK(c3.depth() == 4);
  CHECK(c3.size() == 4);
  CHECK(adder_bounds({AdderKind::A1}, 3).depth.value == 4);
  CHECK(adder_bounds({AdderKind::A1}, 1024).depth.value == 15);
  CHECK(build_adder({AdderKind::A1}, 1024).depth() <= 15);
  const auto plan = TwoPartPlan::make(18);
  CHECK(plan.k_l == 9);
  CHECK(plan.k_r == 9);
  AdderInputs two(2);
  CHECK_THROWS(adder_a1(two.c, two.p, two.g));
}

TEST_CASE("A2 and A3 examples") {
  CHECK(adder_bounds({AdderKind::A2}, 1024).depth.value == 21);
  CHECK(build_adder({AdderKind::A2}, 1024).depth() == 20);
  CHECK(build_adder({AdderKind::A2}, 1024).size() <= 12 * 1024);
  CHECK(adder_bounds({AdderKind::A2}, 65536).depth.value == 28);
  CHECK(adder_bounds({AdderKind::A3}, 2048).depth.value == 23);
  CHECK(build_adder({AdderKind::A3}, 2048).depth() == 22);
  AdderInputs three(3);
  CHECK_THROWS(adder_a2(three.c, three.p, three.g));
  CHECK_THROWS(adder_a3(three.c, three.p, three.g));
}

TEST_CASE("per-carry adder") {
  const std::size_t n = 9;
  const Circuit c = build_adder({AdderKind::PerCarry}, n);
  CHECK(verify_equivalence(c, adder_oracle(n), VerifyMode::exhaustive()).pass);
  unsigned depth = 0;
  std::size_t size = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    const auto r = synth_aop(2 * i - 1, Polarity::FStar);
    depth = std::max(depth, r.circuit.depth());
    size += r.circuit.size();
  }
  CHECK(c.depth() == depth);
  CHECK(c.size() == size);

  const Circuit c3 = build_adder({AdderKind::PerCarry}, 3);
  CHECK(verify_equivalence(c3, adder_oracle(3), VerifyMode::exhaustive()).pass);
}

TEST_CASE("construction names") {
  CHECK(AdderConstruction::parse("a2")->kind == AdderKind::A2);
  CHECK(AdderConstruction::parse("lf:f=3")->f == 3);
  CHECK(AdderConstruction::parse("lf:f=3")->label() == "lf:f=3");
  CHECK(AdderConstruction::parse("percarry")->tag() == "percarry");
  CHECK_FALSE(AdderConstruction::parse("lf:f="));
  CHECK_FALSE(AdderConstruction::parse("kogge"));
  CHECK_FALSE(AdderConstruction{AdderKind::A1}.valid_for(2));
  CHECK_FALSE((AdderConstruction{AdderKind::LadnerFischer, 3}.valid_for(4)));
  CHECK((AdderConstruction{AdderKind::LadnerFischer, 3}.valid_for(1)));
  CHECK_THROWS(build_adder({AdderKind::A2}, 3));
}

TEST_CASE("every construction is a correct adder") {
  const std::vector<AdderConstruction> all = {
      {AdderKind::Ripple}, {AdderKind::Halved}, {AdderKind::A1},      {AdderKind::A2},
      {AdderKind::A3},     {AdderKind::PerCarry}, {AdderKind::LadnerFischer, 0},
      {AdderKind::LadnerFischer, 1}, {AdderKind::LadnerFischer, 2}};
  for (const auto& a : all)
    for (std::size_t n = 1; n <= 40; ++n) {
      if (!a.valid_for(n))
        continue;
      CAPTURE(a.label());
      CAPTURE(n);
      const Circuit c = build_adder(a, n);
      REQUIRE(c.num_outputs() == n);
      REQUIRE(verify_equivalence(c, adder_oracle(n), mode_for(n)).pass);
      const auto b = adder_bounds(a, n);
      if (b.depth.value)
        REQUIRE(c.depth() <= *b.depth.value + bound_eps);
      if (b.size.value)
        REQUIRE(static_cast<double>(c.size()) <= *b.size.value + bound_eps);
    }
}

TEST_CASE("linear-size adders above their thresholds") {
  for (std::size_t n : {1025, 1500, 2049, 2100}) {
    for (auto kind : {AdderKind::A2, AdderKind::A3}) {
      const AdderConstruction a{kind};
      const Circuit c = build_adder(a, n);
      const auto b = adder_bounds(a, n);
      CAPTURE(n);
      CHECK(c.depth() <= *b.depth.value);
      CHECK(static_cast<double>(c.size()) <= *b.size.value);
      CHECK(verify_equivalence(c, adder_oracle(n), VerifyMode::random(1000)).pass);
    }
  }
}
