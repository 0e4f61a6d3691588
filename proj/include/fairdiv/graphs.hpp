#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairdiv {

/// How the two endpoint agents of a transfer value the moved good:
/// source perspective first, target second.
enum class EdgeType { LL, LS, SL, SS };

const char* edge_type_name(EdgeType t);

EdgeType classify_transfer(const Instance& inst, int good, int from, int to);

struct ExchangeEdge {
  int item = 0;
  int from = 0;
  int to = 0;
  EdgeType type = EdgeType::SS;
  friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

/// Multi-digraph over agents: one typed edge per good whose owner differs
/// between two allocations.
struct ItemExchangeGraph {
  int agent_count = 0;
  std::vector<ExchangeEdge> edges;
};

/// Agent digraph with an edge (i, j) whenever i holds a good that j values as
/// large; one witness good is recorded per edge. No self-loops.
struct TransferPossibilityGraph {
  int agent_count = 0;
  std::vector<std::vector<std::uint8_t>> adjacency;  // [from][to]
  std::vector<std::vector<int>> witness;             // good index or -1
};

ItemExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& x1,
                                       const Allocation& x2);

TransferPossibilityGraph build_transfer_graph(const Instance& inst,
                                              const Allocation& x);

/// Searches for a small-to-large exchange cycle: a_1 sends a good it values
/// small to a_2 who values it large, a large-for-both chain forwards a
/// replacement, and the last agent closes back to a_1 with any good that is
/// not large-for-sender-only. Sound for arbitrary ratios; together with the
/// one-to-many search it is complete when every ratio is an integer.
///
/// Enumeration is lexicographic over ordered pairs (a_1, a_2) with a
/// deterministic BFS, so the returned certificate is reproducible.
std::optional<Improvement> find_type1_cycle(const Instance& inst,
                                            const Allocation& x);

/// Searches for a one-to-many exchange cycle: a_k hands r_{a_1} goods that
/// both agents value small to a_1, and one large-for-both good travels along
/// a chain from a_1 back to a_k. Requires integer ratios (the small-good
/// count equals a ratio) and r_{a_1} < r_{a_k}.
std::optional<Improvement> find_type2_cycle(const Instance& inst,
                                            const Allocation& x);

/// Structural category of a minimum Pareto-improvement graph.
enum class ImprovementShape {
  type1,  // single cycle: SL, then LL..., closed by LL/SL/SS
  type2,  // r_{a_1} parallel SS edges a_k -> a_1 plus an LL path a_1 -> a_k
  other,
};

ImprovementShape classify_improvement_shape(const Instance& inst,
                                            const ItemExchangeGraph& g);

// Structural predicates used to sanity-check minimum improvement graphs.
bool has_source_or_sink(const ItemExchangeGraph& g);
bool contains_edge_type(const ItemExchangeGraph& g, EdgeType t);
bool has_consecutive_ss(const ItemExchangeGraph& g);

// DOT export, one edge per line: from -> to [label="item:type"].
std::string to_dot(const ItemExchangeGraph& g);
std::string to_dot(const Instance& inst, const TransferPossibilityGraph& g);

}  // namespace fairdiv
