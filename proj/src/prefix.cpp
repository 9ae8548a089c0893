//===- prefix.cpp - Prefix networks and simple adders ---------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/prefix.hpp"

#include "aoc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace aoc {

namespace {

class PlanBuilder {
public:
  explicit PlanBuilder(PrefixNetwork& net) : net_(net) {
    for (std::uint32_t i = 0; i < net.n; ++i)
      span_.push_back({i, i});
  }

  std::uint32_t combine(std::uint32_t high, std::uint32_t low) {
    if (span_[high].first != span_[low].second + 1)
      throw std::logic_error("prefix plan: operands are not adjacent");
    net_.steps.push_back({high, low, span_[low].first, span_[high].second});
    span_.push_back({span_[low].first, span_[high].second});
    return static_cast<std::uint32_t>(span_.size() - 1);
  }

  // Odd-even step: pair neighbours, solve the condensed sequence with
  // parameter f - 1, then fix up the even positions.
  std::vector<std::uint32_t> odd_even(const std::vector<std::uint32_t>& z, unsigned f) {
    const std::size_t k = z.size();
    if (k == 1)
      return z;
    std::vector<std::uint32_t> cond;
    for (std::size_t i = 0; i + 1 < k; i += 2)
      cond.push_back(combine(z[i + 1], z[i]));
    if (k % 2 == 1)
      cond.push_back(z[k - 1]);
    const auto inner = solve(cond, f - 1);
    std::vector<std::uint32_t> out(k);
    out[0] = z[0];
    for (std::size_t i = 1; i < k; ++i) {
      if (i % 2 == 1)
        out[i] = inner[i / 2];
      else if (i == k - 1)
        out[i] = inner[i / 2];
      else
        out[i] = combine(z[i], inner[i / 2 - 1]);
    }
    return out;
  }

  // Depth-optimum scheme: odd-even on the low half, whose top prefix is
  // ready one level early, recursion on the high half, and one combine per
  // high position.
  std::vector<std::uint32_t> half_split(const std::vector<std::uint32_t>& z) {
    const std::size_t k = z.size();
    if (k == 1)
      return z;
    const std::size_t m = (k + 1) / 2;
    auto out = odd_even({z.begin(), z.begin() + m}, 1);
    const auto high = half_split({z.begin() + m, z.end()});
    const std::uint32_t carry = out.back();
    for (auto h : high)
      out.push_back(combine(h, carry));
    return out;
  }

  std::vector<std::uint32_t> solve(const std::vector<std::uint32_t>& z, unsigned f) {
    return f == 0 ? half_split(z) : odd_even(z, f);
  }

private:
  PrefixNetwork& net_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> span_;
};

} // namespace

unsigned PrefixNetwork::depth() const {
  std::vector<unsigned> level(n + steps.size(), 0);
  unsigned d = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    level[n + i] = 1 + std::max(level[steps[i].high], level[steps[i].low]);
    d = std::max(d, level[n + i]);
  }
  return d;
}

PrefixNetwork lf_plan(std::size_t n, unsigned f) {
  if (n == 0)
    throw std::invalid_argument("lf_plan: n must be positive");
  if (n > 1 && f > ceil_log2(n))
    throw std::invalid_argument("lf_plan: f exceeds ceil(log2 n)");
  PrefixNetwork net;
  net.n = n;
  net.f = f;
  std::vector<std::uint32_t> z(n);
  for (std::uint32_t i = 0; i < n; ++i)
    z[i] = i;
  PlanBuilder builder(net);
  net.outputs = builder.solve(z, n == 1 ? 0 : f);
  return net;
}

std::vector<NodeId> and_prefix_circuit(Circuit& c, std::span<const NodeId> z, unsigned f) {
  const auto net = lf_plan(z.size(), f);
  std::vector<NodeId> value(z.begin(), z.end());
  for (const auto& s : net.steps)
    value.push_back(c.add_and(value[s.high], value[s.low]));
  std::vector<NodeId> out;
  for (auto o : net.outputs)
    out.push_back(value[o]);
  return out;
}

PGatePair pgate(Circuit& c, PGatePair high, PGatePair low) {
  const NodeId t = c.add_and(high.x, low.y);
  const NodeId y = c.add_or(high.y, t);
  const NodeId x = c.add_and(high.x, low.x);
  return {y, x};
}

CombinedPrefix lf_combined_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g,
                                 unsigned f) {
  if (p.size() != g.size())
    throw std::invalid_argument("lf_combined_adder: p and g differ in length");
  const auto net = lf_plan(g.size(), f);
  std::vector<PGatePair> value;
  for (std::size_t i = 0; i < g.size(); ++i)
    value.push_back({g[i], p[i]});
  for (const auto& s : net.steps)
    value.push_back(pgate(c, value[s.high], value[s.low]));
  CombinedPrefix out;
  for (auto o : net.outputs) {
    out.carries.push_back(value[o].y);
    out.and_prefix.push_back(value[o].x);
  }
  return out;
}

std::vector<NodeId> ripple_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g) {
  if (p.size() != g.size() || g.empty())
    throw std::invalid_argument("ripple_adder: need equal nonzero lengths");
  std::vector<NodeId> carries{g[0]};
  for (std::size_t i = 1; i < g.size(); ++i)
    carries.push_back(c.add_or(g[i], c.add_and(p[i], carries.back())));
  return carries;
}

std::vector<NodeId> halved_adder(Circuit& c, std::span<const NodeId> p, std::span<const NodeId> g) {
  if (p.size() != g.size())
    throw std::invalid_argument("halved_adder: p and g differ in length");
  const std::size_t n = g.size();
  if (n <= 1)
    return {g.begin(), g.end()};
  const std::size_t kr = (n + 1) / 2;
  auto carries = ripple_adder(c, p.first(kr), g.first(kr));
  const auto high = ripple_adder(c, p.subspan(kr), g.subspan(kr));
  const NodeId top = carries.back();
  NodeId chain = p[kr];
  for (std::size_t i = 0; i < high.size(); ++i) {
    if (i > 0)
      chain = c.add_and(chain, p[kr + i]);
    carries.push_back(c.add_or(high[i], c.add_and(chain, top)));
  }
  return carries;
}

} // namespace aoc
