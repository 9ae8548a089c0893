//===- test_aop.cpp - AND-OR path synthesis and its bound arithmetic -------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/aop.hpp"
#include "aoc/bounds.hpp"
#include "aoc/tables.hpp"
#include "aoc/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace aoc;

namespace {

unsigned expected_depth(std::size_t n, std::size_t m) {
  return m <= 2 ? ceil_log2(n + m) : d_min(n, m);
}

AopOptions checked(SynthMode mode = SynthMode::Shared) {
  AopOptions o;
  o.mode = mode;
  o.check_invariants = true;
  return o;
}

} // namespace

TEST_CASE("mu and d_min") {
  CHECK(mu(3, 0) == doctest::Approx(5.998));
  CHECK(mu(1, 0) == doctest::Approx(2.0));
  CHECK(mu(4, 0) == doctest::Approx(8.9965));
  CHECK(d_min(0, 3) == 2);
  CHECK(d_min(8, 1) == 4);
  CHECK(d_min(12, 3) == 5);
  for (unsigned m = 1; m <= 9; ++m)
    for (unsigned n = 0; n <= 12; ++n)
      REQUIRE(d_min(n, m) == tables::dmin[m - 1][n]);
}

TEST_CASE("d_min stays below the closed-form depth bound") {
  auto bound = [](std::uint64_t n, std::uint64_t m) {
    const double md = static_cast<double>(m);
    return floor_guarded(std::log2(md + static_cast<double>(n)) + std::log2(std::log2(md)) + 0.65);
  };
  for (std::uint64_t m = 3; m <= 1024; ++m)
    for (std::uint64_t n = 0; n <= m; ++n)
      REQUIRE(static_cast<long>(d_min(n, m)) <= bound(n, m));
  for (std::uint64_t m = 1025; m <= 65536; m += 97)
    for (std::uint64_t n = 0; n <= m; n += 61)
      REQUIRE(static_cast<long>(d_min(n, m)) <= bound(n, m));
}

TEST_CASE("psi, phi and Phi") {
  CHECK(psi(5) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS(psi(4));
  for (std::uint64_t m : {1, 7, 100})
    for (std::uint64_t n : {0, 3, 17})
      CHECK(capital_phi(4, m, n) == doctest::Approx(static_cast<double>(m + rho(n))));
  for (unsigned d = 1; d <= 64; ++d) {
    REQUIRE(phi(d) < 0);
    REQUIRE(phi(d) <= phi(d + 1));
  }
}

TEST_CASE("ceil_log2 and the path depth bound") {
  CHECK(ceil_log2(0) == 0);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1024) == 10);
  CHECK(aop_depth_bound(5) == 4);
  CHECK(aop_depth_bound(1024) == 13);
  CHECK(floor_guarded(2.0 - 1e-12) == 2);
  CHECK(ceil_guarded(2.0 + 1e-12) == 2);
}

TEST_CASE("small paths") {
  auto r = synth_aop(5, Polarity::F, checked());
  CHECK(r.circuit.depth() == 3);
  CHECK(r.circuit.size() <= 16);
  CHECK(r.categories.additional() <= capital_phi(3, 5, 0));
  CHECK(verify_equivalence(r.circuit, aop_oracle(0, 5, Polarity::F), VerifyMode::exhaustive()).pass);

  r = synth_aop(2, Polarity::F, checked());
  CHECK(r.circuit.depth() == 1);
  CHECK(r.circuit.size() == 1);
  CHECK(r.alt_splits == 0);
  CHECK(r.categories.alt_split == 0);

  r = synth_aop(9, Polarity::F, checked());
  CHECK(r.circuit.depth() <= 5);

  r = synth_extended_aop(4, 3, Polarity::F, checked());
  CHECK(r.circuit.depth() == 3);

  CHECK_THROWS(synth_aop(1, Polarity::F));
  CHECK_THROWS(synth_extended_aop(0, 0, Polarity::F));
}

TEST_CASE("output names follow the polarity") {
  CHECK(synth_aop(4, Polarity::F).circuit.outputs()[0].name == "f");
  CHECK(synth_aop(4, Polarity::FStar).circuit.outputs()[0].name == "f_star");
}

TEST_CASE("extended grid: depth, size, categories, function") {
  for (std::size_t m = 1; m <= 9; ++m)
    for (std::size_t n = 0; n <= 12; ++n)
      for (auto pol : {Polarity::F, Polarity::FStar}) {
        CAPTURE(m);
        CAPTURE(n);
        const auto r = synth_extended_aop(n, m, pol, checked());
        const auto& c = r.circuit;
        REQUIRE(c.depth() <= expected_depth(n, m));
        if (m <= 2)
          REQUIRE(c.depth() == expected_depth(n, m));
        REQUIRE(static_cast<double>(c.size()) <=
                3.67 * static_cast<double>(m) + static_cast<double>(n + rho(n)) - 2 + bound_eps);
        REQUIRE(r.categories.total() == c.size());
        REQUIRE(r.categories.leftist <= m + n - (m >= 2 ? 2 : 1));
        REQUIRE(r.categories.alt_split <= m - 1);
        REQUIRE(static_cast<double>(r.categories.additional()) <=
                capital_phi(d_min(n, m), m, n) + bound_eps);
        REQUIRE(verify_equivalence(c, aop_oracle(n, m, pol), VerifyMode::exhaustive()).pass);
      }
}

TEST_CASE("random extended paths") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = rng() % 201, m = 1 + rng() % 200;
    CAPTURE(n);
    CAPTURE(m);
    const auto pol = rng() % 2 ? Polarity::F : Polarity::FStar;
    const auto r = synth_extended_aop(n, m, pol, round < 100 ? checked() : AopOptions{});
    REQUIRE(r.circuit.depth() <= expected_depth(n, m));
    REQUIRE(static_cast<double>(r.categories.additional()) <=
            capital_phi(d_min(n, m), m, n) + bound_eps);
    REQUIRE(static_cast<double>(r.circuit.size()) <=
            3.67 * static_cast<double>(m) + static_cast<double>(n + rho(n)) - 2 + bound_eps);
    if (n + m <= 20)
      REQUIRE(verify_equivalence(r.circuit, aop_oracle(n, m, pol), VerifyMode::exhaustive()).pass);
    else if (round % 10 == 0)
      REQUIRE(verify_equivalence(r.circuit, aop_oracle(n, m, pol), VerifyMode::random(500)).pass);
  }
}

TEST_CASE("formula mode") {
  for (std::size_t m = 1; m <= 40; ++m)
    for (std::size_t n = 0; n <= 12; n += 3) {
      const auto r = synth_extended_aop(n, m, Polarity::F, checked(SynthMode::Formula));
      const auto& c = r.circuit;
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(c.depth() <= expected_depth(n, m));
      REQUIRE(c.fanout() <= std::max<std::size_t>(c.depth(), 1));
      REQUIRE(c.size() <= m * c.depth() + n - 1 + (m * c.depth() + n == 0));
      if (n + m <= 18)
        REQUIRE(verify_equivalence(c, aop_oracle(n, m, Polarity::F), VerifyMode::exhaustive()).pass);
    }
}

TEST_CASE("build_aop over existing nodes") {
  Circuit c;
  std::vector<NodeId> t;
  for (int i = 0; i < 7; ++i)
    t.push_back(c.add_input("t"));
  // Delay some inputs; depth is measured relative to the earliest one.
  t[3] = c.add_and(t[3], t[3]);
  c.add_output("y", build_aop(c, t, Polarity::FStar));
  CHECK(verify_equivalence(c, aop_oracle(0, 7, Polarity::FStar), VerifyMode::exhaustive()).pass);

  Circuit d;
  const NodeId x = d.add_input("x");
  const std::vector<NodeId> one{x};
  CHECK(build_aop(d, one, Polarity::F) == x);
  CHECK_THROWS(build_aop(d, std::span<const NodeId>(), Polarity::F));
}

TEST_CASE("synthesis is deterministic") {
  const auto a = synth_aop(300, Polarity::F);
  const auto b = synth_aop(300, Polarity::F);
  REQUIRE(a.circuit.num_nodes() == b.circuit.num_nodes());
  for (NodeId v = 0; v < a.circuit.num_nodes(); ++v)
    if (a.circuit.is_gate(v)) {
      REQUIRE(a.circuit.kind(v) == b.circuit.kind(v));
      REQUIRE(a.circuit.left(v) == b.circuit.left(v));
      REQUIRE(a.circuit.right(v) == b.circuit.right(v));
    }
}
