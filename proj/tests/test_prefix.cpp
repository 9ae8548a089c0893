//===- test_prefix.cpp - Prefix networks, ripple and halved adders --------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/bounds.hpp"
#include "aoc/prefix.hpp"
#include "aoc/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace aoc;

namespace {

std::vector<unsigned> valid_f(std::size_t n) {
  std::vector<unsigned> fs;
  for (unsigned f = 0; f <= ceil_log2(n); ++f)
    fs.push_back(f);
  return fs;
}

struct AdderInputs {
  Circuit c;
  std::vector<NodeId> p, g;
  explicit AdderInputs(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      p.push_back(c.add_input("p" + std::to_string(i)));
      g.push_back(c.add_input("g" + std::to_string(i)));
    }
  }
  void outputs(const std::vector<NodeId>& carries) {
    for (std::size_t i = 0; i < carries.size(); ++i)
      c.add_output("c" + std::to_string(i + 1), carries[i]);
  }
};

Circuit prefix_circuit(std::size_t n, unsigned f) {
  Circuit c;
  std::vector<NodeId> z;
  for (std::size_t i = 0; i < n; ++i)
    z.push_back(c.add_input("z"));
  const auto out = and_prefix_circuit(c, z, f);
  for (auto v : out)
    c.add_output("Z", v);
  return c;
}

const WordOracle prefix_oracle = [](std::span<const std::uint64_t> in,
                                    std::span<std::uint64_t> out) {
  std::uint64_t acc = ~std::uint64_t{0};
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = acc &= in[i];
};

} // namespace

TEST_CASE("plan examples") {
  CHECK(lf_plan(1, 0).size() == 0);
  CHECK(lf_plan(1, 5).size() == 0);
  const auto p4 = lf_plan(4, 0);
  CHECK(p4.depth() <= 2);
  CHECK(p4.size() <= 16);
  const auto p1024 = lf_plan(1024, 2);
  CHECK(p1024.depth() <= 12);
  CHECK(p1024.size() <= 2560);
  CHECK_THROWS(lf_plan(4, 3));
  CHECK_THROWS(lf_plan(0, 0));
}

TEST_CASE("plan steps combine adjacent spans") {
  for (std::size_t n : {1, 2, 3, 7, 16, 33, 100}) {
    for (unsigned f : valid_f(n)) {
      const auto plan = lf_plan(n, f);
      std::vector<std::pair<std::size_t, std::size_t>> span(n + plan.size());
      for (std::size_t i = 0; i < n; ++i)
        span[i] = {i, i};
      for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto& s = plan.steps[i];
        REQUIRE(s.high < n + i);
        REQUIRE(s.low < n + i);
        REQUIRE(span[s.low].second + 1 == span[s.high].first);
        span[n + i] = {span[s.low].first, span[s.high].second};
        REQUIRE(span[n + i] == std::pair<std::size_t, std::size_t>{s.lo, s.hi});
      }
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE(span[plan.outputs[i]] == std::pair<std::size_t, std::size_t>{0, i});
    }
  }
}

TEST_CASE("AND-prefix examples") {
  const Circuit c2 = prefix_circuit(2, 0);
  CHECK(c2.size() == 1);
  CHECK(c2.depth() == 1);
  const Circuit c8 = prefix_circuit(8, 0);
  CHECK(c8.depth() <= 3);
  CHECK(verify_equivalence(c8, prefix_oracle, VerifyMode::exhaustive()).assignments == 256);
  CHECK(verify_equivalence(c8, prefix_oracle, VerifyMode::exhaustive()).pass);
  const Circuit c5 = prefix_circuit(5, 1);
  CHECK(c5.depth() <= 4);
  CHECK(c5.size() <= 15);
}

TEST_CASE("AND-prefix correctness and bounds") {
  for (std::size_t n = 1; n <= 20; ++n)
    for (unsigned f : valid_f(n)) {
      CAPTURE(n);
      CAPTURE(f);
      const Circuit c = prefix_circuit(n, f);
      REQUIRE(verify_equivalence(c, prefix_oracle, VerifyMode::exhaustive()).pass);
    }
  for (std::size_t n : {64, 100, 256, 1000, 4096})
    for (unsigned f : {0u, 1u, 2u, 3u, ceil_log2(n)}) {
      const Circuit c = prefix_circuit(n, f);
      REQUIRE(verify_equivalence(c, prefix_oracle, VerifyMode::random(200)).pass);
    }
}

TEST_CASE("pgate is associative") {
  for (unsigned w = 0; w < 64; ++w) {
    Circuit c;
    std::vector<NodeId> in;
    for (int i = 0; i < 6; ++i)
      in.push_back(c.add_input("v"));
    const PGatePair a{in[0], in[1]}, b{in[2], in[3]}, d{in[4], in[5]};
    const auto left = pgate(c, pgate(c, a, b), d);
    const auto right = pgate(c, a, pgate(c, b, d));
    c.add_output("ly", left.y);
    c.add_output("lx", left.x);
    c.add_output("ry", right.y);
    c.add_output("rx", right.x);
    std::vector<bool> x(6);
    for (int i = 0; i < 6; ++i)
      x[i] = (w >> i) & 1u;
    const auto out = c.evaluate(x);
    REQUIRE(out[0] == out[2]);
    REQUIRE(out[1] == out[3]);
  }
  Circuit c;
  const NodeId y1 = c.add_input("y1"), x1 = c.add_input("x1");
  const NodeId y0 = c.add_input("y0"), x0 = c.add_input("x0");
  const auto r = pgate(c, {y1, x1}, {y0, x0});
  CHECK(c.size() == 3);
  CHECK(c.depth(r.x) == 1);
  CHECK(c.depth(r.y) == 2);
}

TEST_CASE("combined adder") {
  AdderInputs two(2);
  const auto r2 = lf_combined_adder(two.c, two.p, two.g, 0);
  CHECK(r2.carries[0] == two.g[0]);
  two.outputs(r2.carries);
  CHECK(two.c.size() == 3);
  CHECK(verify_equivalence(prune(two.c), adder_oracle(2), VerifyMode::exhaustive()).pass);

  AdderInputs sixteen(16);
  const auto r16 = lf_combined_adder(sixteen.c, sixteen.p, sixteen.g, 0);
  sixteen.outputs(r16.carries);
  CHECK(sixteen.c.depth() <= 8);
  CHECK(sixteen.c.size() <= 192);
  CHECK(verify_equivalence(sixteen.c, adder_oracle(16), VerifyMode::random()).pass);
}

TEST_CASE("combined adder bounds and the AND-prefix cross-check") {
  for (std::size_t n = 1; n <= 64; ++n)
    for (unsigned f : valid_f(n)) {
      CAPTURE(n);
      CAPTURE(f);
      AdderInputs a(n);
      const auto r = lf_combined_adder(a.c, a.p, a.g, f);
      a.outputs(r.carries);
      const unsigned lg = ceil_log2(n);
      REQUIRE(a.c.depth() <= 2 * (lg + f));
      REQUIRE(static_cast<long>(a.c.size()) <= ceil_guarded(6 * (1 + std::ldexp(1.0, -int(f))) * n));
      for (auto v : r.and_prefix)
        REQUIRE(a.c.depth(v) <= lg + f);
      // x-components are the AND-prefix of p.
      Circuit x = a.c;
      for (auto v : r.and_prefix)
        x.add_output("P", v);
      const auto verdict = verify_equivalence(
          x,
          [n](std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
            std::vector<std::uint64_t> p(n), g(n);
            for (std::size_t i = 0; i < n; ++i) {
              p[i] = in[2 * i];
              g[i] = in[2 * i + 1];
            }
            carry_reference_words(p, g, out.first(n));
            std::uint64_t acc = ~std::uint64_t{0};
            for (std::size_t i = 0; i < n; ++i)
              out[n + i] = acc &= p[i];
          },
          n <= 10 ? VerifyMode::exhaustive() : VerifyMode::random(300));
      REQUIRE(verdict.pass);
    }
}

TEST_CASE("ripple adder") {
  for (std::size_t n = 1; n <= 40; ++n) {
    AdderInputs a(n);
    a.outputs(ripple_adder(a.c, a.p, a.g));
    REQUIRE(a.c.depth() == 2 * n - 2);
    REQUIRE(a.c.size() == 2 * n - 2);
    if (n <= 11)
      REQUIRE(verify_equivalence(a.c, adder_oracle(n), VerifyMode::exhaustive()).pass);
  }
}

TEST_CASE("halved adder") {
  for (std::size_t n = 0; n <= 256; ++n) {
    AdderInputs a(n);
    a.outputs(halved_adder(a.c, a.p, a.g));
    const Circuit c = prune(a.c);
    CAPTURE(n);
    REQUIRE(c.depth() <= n + 2);
    REQUIRE(static_cast<double>(c.size()) <= 3.5 * static_cast<double>(n));
    if (n >= 1 && n <= 11)
      REQUIRE(verify_equivalence(c, adder_oracle(n), VerifyMode::exhaustive()).pass);
    else if (n > 11 && n % 16 == 0)
      REQUIRE(verify_equivalence(c, adder_oracle(n), VerifyMode::random(1000)).pass);
  }
  AdderInputs ten(10);
  ten.outputs(halved_adder(ten.c, ten.p, ten.g));
  CHECK(ten.c.depth() <= 12);
  CHECK(ten.c.size() <= 35);
}
