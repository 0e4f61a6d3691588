#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/pareto.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fairdiv {

struct BipartiteGraph {
  int a_count = 0;
  int b_count = 0;
  std::vector<std::pair<int, int>> edges;  // (a-index, b-index), no duplicates

  int degree_a(int a) const;
  int degree_b(int b) const;
  void validate() const;  // index ranges and duplicate edges
};

/// The allocation instance derived from a bipartite graph for a given k:
/// one agent per vertex, one good per edge (large exactly for its two
/// endpoint agents, held by the A-endpoint) and k+1 everywhere-small filler
/// goods per B-agent (held by that agent). A-agents get ratio 1 + 1/k,
/// B-agents 1 + (1+eps)/k with eps strictly below 1/(k*m).
struct ReductionOutput {
  Instance instance;
  Allocation allocation;
  int k = 0;
  std::vector<int> item_of_edge;           // edge index -> good index
  std::vector<std::vector<int>> filler_goods;  // per B-agent, k+1 goods
  Rational epsilon;

  int a_agent(int a) const { return a; }
  int b_agent(int b) const;
};

/// Builds the reduction; every vertex degree must be at most k+1 (violations
/// are reported by vertex). eps defaults to half its upper bound.
ReductionOutput build_reduction(const BipartiteGraph& g, int k,
                                std::optional<Rational> epsilon = std::nullopt);

struct RegularSubgraph {
  std::vector<int> a_vertices;
  std::vector<int> b_vertices;
  std::vector<int> edge_indices;  // into BipartiteGraph::edges
};

/// Exhaustive search for a subgraph in which every touched vertex has degree
/// exactly k. Enumerates edge subsets in ascending bitmask order and returns
/// the first hit; refuses when 2^|E| exceeds the budget.
std::optional<RegularSubgraph> find_k_regular_subgraph(
    const BipartiteGraph& g, int k, long long budget = kDefaultBudget);

/// Converts a k-regular subgraph into a Pareto-improvement of the reduction
/// allocation: each participating A-agent sends its subgraph edge-goods to
/// their B-endpoints, and every participating B-agent's k+1 fillers are dealt
/// round-robin to the participating A-agents. A-agents end up exactly even;
/// B-agents gain exactly eps.
Improvement certificate_from_subgraph(const ReductionOutput& red,
                                      const RegularSubgraph& subgraph);

/// Searches the reduction allocation directly for an improvement of the
/// forced exchange shape (each participating A-agent gives exactly k large
/// goods and takes k+1 fillers; each participating B-agent the converse),
/// validating candidates with exact allocation arithmetic. Agrees with
/// find_k_regular_subgraph by construction of the instance.
std::optional<Improvement> restricted_shape_search(
    const ReductionOutput& red, long long budget = kDefaultBudget);

}  // namespace fairdiv
