//===- symmetric.cpp - Symmetric trees and leftist circuits ---------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "aoc/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace aoc {

namespace {

unsigned floor_log2(std::size_t x) { return static_cast<unsigned>(std::bit_width(x)) - 1; }

} // namespace

unsigned optimum_symmetric_delay(const std::vector<ArrivalItem>& items) {
  if (items.empty())
    throw std::invalid_argument("optimum_symmetric_delay: no items");
  unsigned __int128 sum = 0;
  for (const auto& it : items) {
    if (it.arrival > max_arrival)
      throw std::invalid_argument("arrival time exceeds 63");
    sum += static_cast<unsigned __int128>(1) << it.arrival;
  }
  unsigned d = 0;
  while ((static_cast<unsigned __int128>(1) << d) < sum)
    ++d;
  return d;
}

NodeId huffman_tree(Circuit& c, GateKind kind, const std::vector<ArrivalItem>& items) {
  if (items.empty())
    throw std::invalid_argument("huffman_tree: no items");
  using Entry = std::tuple<unsigned, std::size_t, NodeId>; // arrival, sequence, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::size_t seq = 0;
  for (const auto& it : items) {
    if (it.arrival > max_arrival)
      throw std::invalid_argument("arrival time exceeds 63");
    queue.emplace(it.arrival, seq++, it.node);
  }
  while (queue.size() > 1) {
    const auto [a0, s0, v0] = queue.top();
    queue.pop();
    const auto [a1, s1, v1] = queue.top();
    queue.pop();
    queue.emplace(std::max(a0, a1) + 1, seq++, c.add_gate(kind, v0, v1));
  }
  return std::get<2>(queue.top());
}

LeftistCircuit::LeftistCircuit(Circuit& c, GateKind kind, std::vector<NodeId> inputs)
    : kind_(kind), inputs_(std::move(inputs)) {
  const std::size_t n = inputs_.size();
  if (n == 0)
    throw std::invalid_argument("LeftistCircuit: no inputs");

  max_rd_.resize(n);
  rd_offset_.resize(n + 1);
  for (std::size_t offset = 0, k = std::bit_width(n); k-- > 0;) {
    if (!((n >> k) & 1u))
      continue;
    root_offsets_.push_back(offset);
    root_depths_.push_back(static_cast<unsigned>(k));
    for (std::size_t local = 0; local < (std::size_t{1} << k); ++local)
      max_rd_[offset + local] =
          static_cast<std::uint8_t>(local == 0 ? k : std::countr_zero(local));
    offset += std::size_t{1} << k;
  }
  rd_offset_[0] = 0;
  for (std::size_t i = 0; i < n; ++i)
    rd_offset_[i + 1] = rd_offset_[i] + max_rd_[i] + 1;
  rd_nodes_.resize(rd_offset_[n]);

  std::vector<NodeId> level;
  for (std::size_t t = 0; t < root_offsets_.size(); ++t) {
    const std::size_t offset = root_offsets_[t];
    const unsigned k = root_depths_[t];
    level.assign(inputs_.begin() + offset, inputs_.begin() + offset + (std::size_t{1} << k));
    for (std::size_t i = 0; i < level.size(); ++i)
      rd_nodes_[rd_offset_[offset + i]] = level[i];
    for (unsigned j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i < level.size() / 2; ++i) {
        level[i] = c.add_gate(kind_, level[2 * i], level[2 * i + 1]);
        ++gates_;
        rd_nodes_[rd_offset_[offset + (i << j)] + j] = level[i];
      }
      level.resize(level.size() / 2);
    }
    roots_.push_back(level.front());
  }
}

BoundarySeq boundary_consecutive(const LeftistCircuit& s, Interval k) {
  if (k.empty() || k.end > s.size())
    throw std::invalid_argument("boundary_consecutive: interval empty or out of range");
  BoundarySeq b;
  for (std::size_t i = k.begin; i < k.end;) {
    const unsigned j = std::min(floor_log2(k.end - i), s.max_rd(i));
    b.push_back({s.right_descendant(i, j), j, i});
    i += std::size_t{1} << j;
  }
  return b;
}

TriangularSet::TriangularSet(Interval run) : runs_{run} { normalize(); }

TriangularSet::TriangularSet(std::vector<Interval> runs) : runs_(std::move(runs)) { normalize(); }

void TriangularSet::normalize() {
  std::erase_if(runs_, [](const Interval& r) { return r.empty(); });
  std::sort(runs_.begin(), runs_.end(),
            [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
  std::vector<Interval> merged;
  for (const auto& r : runs_) {
    if (!merged.empty() && r.begin <= merged.back().end)
      merged.back().end = std::max(merged.back().end, r.end);
    else
      merged.push_back(r);
  }
  runs_ = std::move(merged);
}

std::size_t TriangularSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& r : runs_)
    n += r.size();
  return n;
}

std::vector<std::size_t> TriangularSet::positions() const {
  std::vector<std::size_t> p;
  p.reserve(size());
  for (const auto& r : runs_)
    for (std::size_t i = r.begin; i < r.end; ++i)
      p.push_back(i);
  return p;
}

TriangularSet TriangularSet::with(std::size_t pos) const {
  auto runs = runs_;
  runs.push_back({pos, pos + 1});
  return TriangularSet(std::move(runs));
}

TriangularSet TriangularSet::without(Interval cut) const {
  std::vector<Interval> runs;
  for (const auto& r : runs_) {
    runs.push_back({r.begin, std::min(r.end, cut.begin)});
    runs.push_back({std::max(r.begin, cut.end), r.end});
  }
  return TriangularSet(std::move(runs));
}

BoundarySeq boundary_triangular(const LeftistCircuit& s, const TriangularSet& k) {
  BoundarySeq b;
  for (const auto& r : k.runs()) {
    auto part = boundary_consecutive(s, r);
    b.insert(b.end(), part.begin(), part.end());
  }
  return b;
}

BoundarySeq boundary_scan(const LeftistCircuit& s, const std::vector<bool>& member) {
  if (member.size() != s.size())
    throw std::invalid_argument("boundary_scan: membership size mismatch");
  std::vector<std::size_t> prefix(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    prefix[i + 1] = prefix[i] + (member[i] ? 1 : 0);

  BoundarySeq b;
  auto visit = [&](auto&& self, std::size_t pos, unsigned j) -> void {
    const std::size_t width = std::size_t{1} << j;
    const std::size_t count = prefix[pos + width] - prefix[pos];
    if (count == width) {
      b.push_back({s.right_descendant(pos, j), j, pos});
    } else if (count > 0) {
      self(self, pos, j - 1);
      self(self, pos + width / 2, j - 1);
    }
  };
  for (std::size_t t = 0; t < s.tree_roots().size(); ++t)
    visit(visit, s.tree_offsets()[t], s.tree_depths()[t]);
  return b;
}

bool is_triangular(const BoundarySeq& b) {
  const std::size_t n = b.size();
  if (n == 0)
    return true;
  auto adjacent = [&](std::size_t i) {
    return b[i].first + (std::size_t{1} << b[i].depth) == b[i + 1].first;
  };
  // inc[j]: b[0..j] is consecutive and strictly increasing.
  std::vector<bool> inc(n, false);
  inc[0] = true;
  for (std::size_t i = 1; i < n && inc[i - 1]; ++i)
    inc[i] = adjacent(i - 1) && b[i - 1].depth < b[i].depth;
  // dec[j]: b[j..n-1] is consecutive and strictly decreasing.
  std::vector<bool> dec(n + 1, false);
  dec[n] = true;
  dec[n - 1] = true;
  for (std::size_t i = n - 1; i-- > 0 && dec[i + 1];)
    dec[i] = adjacent(i) && b[i].depth > b[i + 1].depth;
  for (std::size_t j = 0; j < n; ++j)
    if (inc[j] && dec[j + 1])
      return true;
  return false;
}

bool is_triangular(const LeftistCircuit& s, const std::vector<bool>& member) {
  return is_triangular(boundary_scan(s, member));
}

bool is_triangular(const LeftistCircuit& s, const TriangularSet& k) {
  std::vector<bool> member(s.size(), false);
  for (auto p : k.positions())
    member.at(p) = true;
  return is_triangular(s, member);
}

SymPrepResult sym_prep(Circuit& c, const LeftistCircuit& s, const TriangularSet& k,
                       const std::vector<NodeId>& extra, std::uint32_t depth_offset) {
  std::vector<ArrivalItem> items;
  for (const auto& v : boundary_triangular(s, k))
    items.push_back({v.node, c.depth(v.node) - depth_offset});
  for (auto v : extra)
    items.push_back({v, c.depth(v) - depth_offset});
  if (items.empty())
    throw std::invalid_argument("sym_prep: K and L are both empty");
  const std::size_t before = c.size();
  const NodeId root = huffman_tree(c, s.kind(), items);
  return {root, c.size() - before};
}

TriangularSet extract_triangular_subset(const LeftistCircuit& s, const TriangularSet& n) {
  const std::size_t count = n.size();
  if (count == 0)
    throw std::invalid_argument("extract_triangular_subset: empty set");
  const unsigned d = static_cast<unsigned>(std::bit_width(count));
  const std::size_t half = std::size_t{1} << (d - 1);
  const auto b = boundary_triangular(s, n);

  for (const auto& v : b)
    if (v.depth == d - 1)
      return TriangularSet(Interval{v.first, v.first + half});

  // Deepest tree depth that occurs twice; the range between its two
  // occurrences holds exactly 2^(d-1) elements of N.
  std::size_t j0 = b.size(), j1 = b.size();
  unsigned best = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = b.size(); j-- > i + 1;) {
      if (b[j].depth == b[i].depth && (j0 == b.size() || b[i].depth > best)) {
        j0 = i;
        j1 = j;
        best = b[i].depth;
        break;
      }
    }
  }
  if (j0 == b.size())
    throw std::logic_error("extract_triangular_subset: no repeated depth in boundary");
  const Interval range{b[j0].first, b[j1].first + (std::size_t{1} << best)};
  std::vector<Interval> runs;
  for (const auto& r : n.runs())
    runs.push_back({std::max(r.begin, range.begin), std::min(r.end, range.end)});
  for (auto& r : runs)
    if (r.begin > r.end)
      r.end = r.begin;
  TriangularSet k(std::move(runs));
  if (k.size() != half)
    throw std::logic_error("extract_triangular_subset: set is not triangular");
  return k;
}

} // namespace aoc
