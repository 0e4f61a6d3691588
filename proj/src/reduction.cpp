#include "fairdiv/reduction.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

int BipartiteGraph::degree_a(int a) const {
  int d = 0;
  for (const auto& e : edges) d += e.first == a;
  return d;
}

int BipartiteGraph::degree_b(int b) const {
  int d = 0;
  for (const auto& e : edges) d += e.second == b;
  return d;
}

void BipartiteGraph::validate() const {
  if (a_count < 0 || b_count < 0) fail(ErrorKind::domain, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= a_count || e.second < 0 || e.second >= b_count)
      fail(ErrorKind::parse, "edge (" + std::to_string(e.first) + ", " +
                                 std::to_string(e.second) + ") out of range");
    if (!seen.insert(e).second)
      fail(ErrorKind::parse, "duplicate edge (" + std::to_string(e.first) + ", " +
                                 std::to_string(e.second) + ")");
  }
}

int ReductionOutput::b_agent(int b) const {
  return instance.agent_count - static_cast<int>(filler_goods.size()) + b;
}

ReductionOutput build_reduction(const BipartiteGraph& g, int k,
                                std::optional<Rational> epsilon) {
  g.validate();
  if (k < 3) fail(ErrorKind::domain, "k must be at least 3");
  for (int a = 0; a < g.a_count; ++a)
    if (g.degree_a(a) > k + 1)
      fail(ErrorKind::domain, "A-vertex " + std::to_string(a) +
                                  " has degree above k+1");
  for (int b = 0; b < g.b_count; ++b)
    if (g.degree_b(b) > k + 1)
      fail(ErrorKind::domain, "B-vertex " + std::to_string(b) +
                                  " has degree above k+1");

  ReductionOutput red;
  red.k = k;
  int n = g.a_count + g.b_count;
  int m = static_cast<int>(g.edges.size()) + (k + 1) * g.b_count;
  if (n < 1) fail(ErrorKind::domain, "reduction needs at least one vertex");

  Rational bound = m > 0 ? Rational(1, BigInt(k) * m) : Rational(1, k);
  red.epsilon = epsilon ? *epsilon : bound / 2;
  if (red.epsilon <= 0 || red.epsilon >= bound)
    fail(ErrorKind::domain, "epsilon " + format_rational(red.epsilon) +
                                " is outside (0, " + format_rational(bound) + ")");

  Instance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.large_bits.assign(static_cast<size_t>(n) * m, 0);
  Rational ratio_a = Rational(1) + Rational(1, k);
  Rational ratio_b = Rational(1) + (Rational(1) + red.epsilon) / k;
  for (int a = 0; a < g.a_count; ++a) inst.ratios.push_back(ratio_a);
  for (int b = 0; b < g.b_count; ++b) inst.ratios.push_back(ratio_b);

  Allocation alloc = Allocation::unassigned(m);
  int next_good = 0;
  for (const auto& e : g.edges) {
    int good = next_good++;
    red.item_of_edge.push_back(good);
    inst.set_large(e.first, good, true);
    inst.set_large(g.a_count + e.second, good, true);
    alloc.owner[good] = e.first;
  }
  red.filler_goods.assign(g.b_count, {});
  for (int b = 0; b < g.b_count; ++b)
    for (int i = 0; i < k + 1; ++i) {
      int good = next_good++;
      red.filler_goods[b].push_back(good);
      alloc.owner[good] = g.a_count + b;
    }

  inst.validate();
  check_dimensions(inst, alloc);
  red.instance = std::move(inst);
  red.allocation = std::move(alloc);
  return red;
}

namespace {

std::optional<RegularSubgraph> subgraph_from_mask(const BipartiteGraph& g, int k,
                                                  unsigned long long mask) {
  std::vector<int> deg_a(g.a_count, 0), deg_b(g.b_count, 0);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (!(mask >> e & 1)) continue;
    ++deg_a[g.edges[e].first];
    ++deg_b[g.edges[e].second];
  }
  RegularSubgraph sub;
  for (int a = 0; a < g.a_count; ++a) {
    if (deg_a[a] == 0) continue;
    if (deg_a[a] != k) return std::nullopt;
    sub.a_vertices.push_back(a);
  }
  for (int b = 0; b < g.b_count; ++b) {
    if (deg_b[b] == 0) continue;
    if (deg_b[b] != k) return std::nullopt;
    sub.b_vertices.push_back(b);
  }
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (mask >> e & 1) sub.edge_indices.push_back(static_cast<int>(e));
  return sub;
}

}  // namespace

std::optional<RegularSubgraph> find_k_regular_subgraph(const BipartiteGraph& g,
                                                       int k, long long budget) {
  g.validate();
  size_t edge_count = g.edges.size();
  if (edge_count >= 63 ||
      (1ULL << edge_count) > static_cast<unsigned long long>(budget))
    fail(ErrorKind::budget, "2^" + std::to_string(edge_count) +
                                " edge subsets exceed budget " +
                                std::to_string(budget));
  for (unsigned long long mask = 1; mask < (1ULL << edge_count); ++mask)
    if (auto sub = subgraph_from_mask(g, k, mask)) return sub;
  return std::nullopt;
}

namespace {

// Certificate transfers for a set of edge-goods whose A-side degrees are all
// exactly k and B-side degrees all exactly k: edge-goods travel to their
// B-endpoints and the B-agents' fillers are dealt round-robin to the A-agents.
Improvement improvement_from_edges(const ReductionOutput& red,
                                   const std::vector<int>& edge_indices,
                                   const BipartiteGraph& g,
                                   const std::vector<int>& a_vertices,
                                   const std::vector<int>& b_vertices) {
  int a_base = 0;
  int b_base = red.instance.agent_count - static_cast<int>(red.filler_goods.size());
  Improvement imp;
  for (int e : edge_indices) {
    const auto& [a, b] = g.edges[e];
    imp.transfers.push_back({red.item_of_edge[e], a_base + a, b_base + b});
  }
  size_t slot = 0;
  for (int b : b_vertices)
    for (int good : red.filler_goods[b]) {
      int a = a_vertices[slot % a_vertices.size()];
      imp.transfers.push_back({good, b_base + b, a_base + a});
      ++slot;
    }
  return imp;
}

}  // namespace

Improvement certificate_from_subgraph(const ReductionOutput& red,
                                      const RegularSubgraph& subgraph) {
  if (subgraph.edge_indices.empty())
    fail(ErrorKind::domain, "empty subgraph has no certificate");
  BipartiteGraph g;
  g.b_count = static_cast<int>(red.filler_goods.size());
  g.a_count = red.instance.agent_count - g.b_count;
  // Recover the edge list from the reduction's large matrix.
  for (int good : red.item_of_edge) {
    int a = -1, b = -1;
    for (int i = 0; i < red.instance.agent_count; ++i) {
      if (!red.instance.is_large(i, good)) continue;
      if (i < g.a_count) a = i;
      else b = i - g.a_count;
    }
    g.edges.emplace_back(a, b);
  }

  std::vector<int> deg_a(g.a_count, 0), deg_b(g.b_count, 0);
  for (int e : subgraph.edge_indices) {
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
      fail(ErrorKind::domain, "subgraph names edge " + std::to_string(e) +
                                  " outside the graph");
    ++deg_a[g.edges[e].first];
    ++deg_b[g.edges[e].second];
  }
  for (int a = 0; a < g.a_count; ++a)
    if (deg_a[a] != 0 && deg_a[a] != red.k)
      fail(ErrorKind::domain, "subgraph is not k-regular at A-vertex " +
                                  std::to_string(a));
  for (int b = 0; b < g.b_count; ++b)
    if (deg_b[b] != 0 && deg_b[b] != red.k)
      fail(ErrorKind::domain, "subgraph is not k-regular at B-vertex " +
                                  std::to_string(b));

  std::vector<int> a_vertices, b_vertices;
  for (int a = 0; a < g.a_count; ++a)
    if (deg_a[a] > 0) a_vertices.push_back(a);
  for (int b = 0; b < g.b_count; ++b)
    if (deg_b[b] > 0) b_vertices.push_back(b);
  return improvement_from_edges(red, subgraph.edge_indices, g, a_vertices,
                                b_vertices);
}

std::optional<Improvement> restricted_shape_search(const ReductionOutput& red,
                                                   long long budget) {
  int b_count = static_cast<int>(red.filler_goods.size());
  int a_count = red.instance.agent_count - b_count;
  size_t edge_count = red.item_of_edge.size();
  if (edge_count >= 63 ||
      (1ULL << edge_count) > static_cast<unsigned long long>(budget))
    fail(ErrorKind::budget, "2^" + std::to_string(edge_count) +
                                " exchange subsets exceed budget " +
                                std::to_string(budget));

  BipartiteGraph g;
  g.a_count = a_count;
  g.b_count = b_count;
  for (int good : red.item_of_edge) {
    int a = -1, b = -1;
    for (int i = 0; i < red.instance.agent_count; ++i) {
      if (!red.instance.is_large(i, good)) continue;
      if (i < a_count) a = i;
      else b = i - a_count;
    }
    g.edges.emplace_back(a, b);
  }

  for (unsigned long long mask = 1; mask < (1ULL << edge_count); ++mask) {
    auto sub = subgraph_from_mask(g, red.k, mask);
    if (!sub) continue;
    Improvement imp = improvement_from_edges(red, sub->edge_indices, g,
                                             sub->a_vertices, sub->b_vertices);
    // Validate by exact arithmetic on the allocation itself; apply throws if
    // the exchange fails to dominate.
    apply_improvement(red.instance, red.allocation, imp);
    return imp;
  }
  return std::nullopt;
}

}  // namespace fairdiv
