//===- aop.cpp - Depth-optimized AND-OR path synthesis --------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/aop.hpp"

#include "aoc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace aoc {

std::size_t& GateCategories::operator[](GateCategory c) noexcept {
  switch (c) {
  case GateCategory::Leftist:
    return leftist;
  case GateCategory::AltSplit:
    return alt_split;
  case GateCategory::BaseCase:
    return base_case;
  case GateCategory::SymTree:
    return sym_tree;
  case GateCategory::SplitConcat:
    break;
  }
  return split_concat;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("aop synthesis: " + what); }

} // namespace

AopSynthesizer::AopSynthesizer(Circuit& c, std::vector<NodeId> sym, std::vector<NodeId> alt,
                               Polarity pol, AopOptions opts)
    : c_(c), alt_(std::move(alt)), q_(sym.size()),
      top_(pol == Polarity::F ? GateKind::And : GateKind::Or), opts_(opts),
      first_node_(static_cast<NodeId>(c.num_nodes())) {
  if (q_ + alt_.size() == 0)
    throw std::invalid_argument("AopSynthesizer: no inputs");
  base_depth_ = std::numeric_limits<std::uint32_t>::max();
  for (auto v : sym)
    base_depth_ = std::min(base_depth_, c_.depth(v));
  for (auto v : alt_)
    base_depth_ = std::min(base_depth_, c_.depth(v));
  for (auto v : sym)
    latest_input_ = std::max(latest_input_, c_.depth(v) - base_depth_);
  for (auto v : alt_)
    latest_input_ = std::max(latest_input_, c_.depth(v) - base_depth_);
  order_[0] = std::move(sym);
  for (std::size_t a = 0; a < alt_.size(); ++a)
    order_[a % 2].push_back(alt_[a]);

  if (opts_.mode == SynthMode::Shared) {
    for (unsigned p = 0; p < 2; ++p) {
      if (order_[p].empty())
        continue;
      const std::size_t from = c_.num_nodes();
      leftist_[p].emplace(c_, kind_of(p), order_[p]);
      tag_new_gates(from, GateCategory::Leftist);
    }
  }
}

std::optional<GateCategory> AopSynthesizer::category_of(NodeId v) const {
  if (v < first_node_ || v - first_node_ >= category_.size())
    return std::nullopt;
  return static_cast<GateCategory>(category_[v - first_node_]);
}

void AopSynthesizer::tag_new_gates(std::size_t from, GateCategory cat) {
  for (std::size_t v = from; v < c_.num_nodes(); ++v) {
    category_.push_back(static_cast<std::uint8_t>(cat));
    ++counts_[cat];
  }
}

NodeId AopSynthesizer::gate(unsigned parity, NodeId a, NodeId b, GateCategory cat) {
  const std::size_t from = c_.num_nodes();
  const NodeId v = c_.add_gate(kind_of(parity), a, b);
  tag_new_gates(from, cat);
  return v;
}

NodeId AopSynthesizer::dual_gate(unsigned parity, NodeId a, NodeId b, GateCategory cat) {
  return gate(parity ^ 1u, a, b, cat);
}

NodeId AopSynthesizer::symmetric(unsigned parity, const TriangularSet& k,
                                 const std::vector<NodeId>& extra, GateCategory cat) {
  const std::size_t from = c_.num_nodes();
  NodeId root;
  if (opts_.mode == SynthMode::Shared) {
    const auto& s = *leftist_[parity];
    if (opts_.check_invariants && !is_triangular(s, k))
      fail("symmetric input set is not triangular");
    root = sym_prep(c_, s, k, extra, base_depth_).root;
  } else {
    std::vector<ArrivalItem> items;
    for (auto pos : k.positions())
      items.push_back({order_[parity].at(pos), c_.depth(order_[parity][pos]) - base_depth_});
    for (auto v : extra)
      items.push_back({v, c_.depth(v) - base_depth_});
    root = huffman_tree(c_, kind_of(parity), items);
  }
  tag_new_gates(from, cat);
  return root;
}

TriangularSet AopSynthesizer::extract(unsigned parity, const TriangularSet& n) const {
  if (opts_.mode == SynthMode::Shared)
    return extract_triangular_subset(*leftist_[parity], n);
  // Without shared trees any subset of the right size will do; take a prefix.
  std::size_t want = std::size_t{1} << (std::bit_width(n.size()) - 1);
  std::vector<Interval> runs;
  for (const auto& r : n.runs()) {
    const std::size_t take = std::min(want, r.size());
    runs.push_back({r.begin, r.begin + take});
    want -= take;
  }
  return TriangularSet(std::move(runs));
}

NodeId AopSynthesizer::run() {
  const TriangularSet s(Interval{0, q_});
  if (alt_.empty())
    return symmetric(0, s, {}, GateCategory::SymTree);
  return synth(s, 0, alt_.size());
}

NodeId AopSynthesizer::synth(const TriangularSet& s, std::size_t tb, std::size_t m) {
  if (m == 0 || tb + m > alt_.size())
    fail("alternating interval out of range");
  const unsigned p = parity_of(tb);
  const std::size_t n = s.size();

  if (m <= 2) {
    std::vector<NodeId> extra;
    if (m == 2)
      extra.push_back(alt(tb + 1));
    return symmetric(p, s.with(position_of(tb)), extra, GateCategory::BaseCase);
  }

  const unsigned d = d_min(n, m);
  NodeId root;
  if (d <= 3) {
    root = base_case(s, tb, m);
  } else if (n >= (std::size_t{1} << (d - 1))) {
    const TriangularSet k = extract(p, s);
    const Interval hull{k.runs().front().begin, k.runs().back().end};
    const NodeId a = symmetric(p, k, {}, GateCategory::SymTree);
    const NodeId b = synth(s.without(hull), tb, m);
    root = gate(p, a, b, GateCategory::SplitConcat);
  } else if (static_cast<double>(m) <= mu(d - 1, 0) + bound_eps) {
    const NodeId a = symmetric(p, s, {}, GateCategory::SymTree);
    const NodeId b = synth(TriangularSet(), tb, m);
    root = gate(p, a, b, GateCategory::SplitConcat);
  } else {
    const long k = flodd(mu(d - 1, n));
    if (k % 2 == 0 || k < 1 || static_cast<std::size_t>(k) >= m ||
        static_cast<double>(m - k) > mu(d - 1, (k - 1) / 2) + bound_eps)
      fail("illegal alternating split k=" + std::to_string(k) + " for m=" + std::to_string(m));
    const auto ku = static_cast<std::size_t>(k);
    const NodeId a = synth(s, tb, ku);
    const std::size_t first = position_of(tb + 1);
    const TriangularSet odd(Interval{first, first + (ku - 1) / 2});
    const NodeId b = synth(odd, tb + ku, m - ku);
    ++alt_splits_;
    root = gate(p, a, b, GateCategory::AltSplit);
  }
  const std::uint32_t depth = c_.depth(root) - base_depth_;
  if (depth > d + latest_input_)
    fail("depth " + std::to_string(depth) + " exceeds " + std::to_string(d) +
         " for n=" + std::to_string(n) + ", m=" + std::to_string(m));
  return root;
}

// Depth <= 3 instances with m >= 3.
NodeId AopSynthesizer::base_case(const TriangularSet& s, std::size_t tb, std::size_t m) {
  const unsigned p = parity_of(tb);
  const std::size_t n = s.size();
  const TriangularSet head = s.with(position_of(tb));
  const auto cat = GateCategory::BaseCase;
  const NodeId t1 = alt(tb + 1), t2 = alt(tb + 2);

  if (m == 3) {
    const NodeId tail = dual_gate(p, t1, t2, cat);
    return symmetric(p, head, {tail}, cat);
  }
  if (m == 4 && n <= 2) {
    // head o (t1 o' (t2 o t3))
    const NodeId a = symmetric(p, head, {}, cat);
    const NodeId b = gate(p, t2, alt(tb + 3), cat);
    const NodeId e = dual_gate(p, t1, b, cat);
    return gate(p, a, e, cat);
  }
  if (m == 5 && n <= 1) {
    // (head o (t1 o' t2)) o ((t1 o' t3) o' t4), where t1 o' t3 comes from
    // the opposite leftist circuit.
    const NodeId h = symmetric(p, head, {}, cat);
    const NodeId a = gate(p, h, dual_gate(p, t1, t2, cat), cat);
    const std::size_t first = position_of(tb + 1);
    const NodeId t13 = symmetric(p ^ 1u, TriangularSet(Interval{first, first + 2}), {}, cat);
    const NodeId e = dual_gate(p, t13, alt(tb + 4), cat);
    return gate(p, a, e, cat);
  }
  fail("no base case for n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

AopResult synth_extended_aop(std::size_t n_sym, std::size_t m_alt, Polarity pol,
                             AopOptions opts) {
  if (n_sym + m_alt == 0)
    throw std::invalid_argument("synth_extended_aop: no inputs");
  Circuit c;
  std::vector<NodeId> sym, alt;
  for (std::size_t i = 0; i < n_sym; ++i)
    sym.push_back(c.add_input("s" + std::to_string(i)));
  for (std::size_t i = 0; i < m_alt; ++i)
    alt.push_back(c.add_input("t" + std::to_string(i)));

  AopSynthesizer syn(c, std::move(sym), std::move(alt), pol, opts);
  c.add_output(pol == Polarity::F ? "f" : "f_star", syn.run());

  std::vector<NodeId> remap;
  AopResult result{prune(c, &remap), {}, syn.alt_splits()};
  for (NodeId v = 0; v < c.num_nodes(); ++v)
    if (c.is_gate(v) && remap[v] != invalid_node)
      ++result.categories[*syn.category_of(v)];
  return result;
}

AopResult synth_aop(std::size_t m, Polarity pol, AopOptions opts) {
  if (m < 2)
    throw std::invalid_argument("synth_aop: m must be at least 2");
  return synth_extended_aop(0, m, pol, opts);
}

NodeId build_aop(Circuit& c, std::span<const NodeId> t, Polarity pol, AopOptions opts) {
  if (t.empty())
    throw std::invalid_argument("build_aop: no inputs");
  if (t.size() == 1)
    return t[0];
  AopSynthesizer syn(c, {}, std::vector<NodeId>(t.begin(), t.end()), pol, opts);
  return syn.run();
}

} // namespace aoc
