#include "fairdiv/graphs.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace fairdiv {

const char* edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::LL: return "LL";
    case EdgeType::LS: return "LS";
    case EdgeType::SL: return "SL";
    case EdgeType::SS: return "SS";
  }
  return "??";
}

EdgeType classify_transfer(const Instance& inst, int good, int from, int to) {
  bool src = inst.is_large(from, good);
  bool dst = inst.is_large(to, good);
  if (src) return dst ? EdgeType::LL : EdgeType::LS;
  return dst ? EdgeType::SL : EdgeType::SS;
}

ItemExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& x1,
                                       const Allocation& x2) {
  check_dimensions(inst, x1);
  check_dimensions(inst, x2);
  if (!x1.complete() || !x2.complete())
    fail(ErrorKind::domain, "item-exchange graph needs complete allocations");
  ItemExchangeGraph g{inst.agent_count, {}};
  for (int item = 0; item < inst.good_count; ++item) {
    int from = x1.owner[item];
    int to = x2.owner[item];
    if (from == to) continue;
    g.edges.push_back({item, from, to, classify_transfer(inst, item, from, to)});
  }
  return g;
}

TransferPossibilityGraph build_transfer_graph(const Instance& inst,
                                              const Allocation& x) {
  check_dimensions(inst, x);
  if (!x.complete())
    fail(ErrorKind::domain, "transfer possibility graph needs a complete allocation");
  int n = inst.agent_count;
  TransferPossibilityGraph g;
  g.agent_count = n;
  g.adjacency.assign(n, std::vector<std::uint8_t>(n, 0));
  g.witness.assign(n, std::vector<int>(n, -1));
  for (int good = 0; good < inst.good_count; ++good) {
    int holder = x.owner[good];
    for (int j = 0; j < n; ++j) {
      if (j == holder || !inst.is_large(j, good)) continue;
      if (!g.adjacency[holder][j]) {
        g.adjacency[holder][j] = 1;
        g.witness[holder][j] = good;  // goods scanned ascending: lowest witness
      }
    }
  }
  return g;
}

namespace {

std::vector<std::vector<int>> goods_by_holder(const Instance& inst,
                                              const Allocation& x) {
  std::vector<std::vector<int>> held(inst.agent_count);
  for (int g = 0; g < inst.good_count; ++g) held[x.owner[g]].push_back(g);
  return held;
}

// Lowest-indexed good in the holder's bundle with the requested
// (large-for-holder, large-for-target) signature; -1 when none.
int find_witness(const Instance& inst, const std::vector<std::vector<int>>& held,
                 int holder, int target, bool holder_large, bool target_large) {
  for (int g : held[holder])
    if (inst.is_large(holder, g) == holder_large &&
        inst.is_large(target, g) == target_large)
      return g;
  return -1;
}

// Lowest-indexed good the holder can send to the target without the transfer
// being large-for-sender-only (LS transfers never appear in an improvement).
int find_closing_good(const Instance& inst, const std::vector<std::vector<int>>& held,
                      int holder, int target) {
  for (int g : held[holder])
    if (!(inst.is_large(holder, g) && !inst.is_large(target, g))) return g;
  return -1;
}

}  // namespace

std::optional<Improvement> find_type1_cycle(const Instance& inst,
                                            const Allocation& x) {
  check_dimensions(inst, x);
  if (!x.complete()) fail(ErrorKind::domain, "cycle search needs a complete allocation");
  int n = inst.agent_count;
  auto held = goods_by_holder(inst, x);

  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      if (a2 == a1) continue;
      int opener = find_witness(inst, held, a1, a2, /*holder_large=*/false,
                                /*target_large=*/true);
      if (opener < 0) continue;

      // BFS from a2 over realizable large-for-both edges, a1 excluded as an
      // intermediate. Each visited agent sends at most one good, so one
      // witness per traversed edge suffices.
      std::vector<int> parent(n, -1), parent_good(n, -1);
      std::vector<std::uint8_t> visited(n, 0);
      std::deque<int> queue{a2};
      visited[a2] = 1;
      while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        int closer = find_closing_good(inst, held, w, a1);
        if (closer >= 0) {
          Improvement imp;
          imp.transfers.push_back({opener, a1, a2});
          std::vector<Transfer> chain;
          for (int cur = w; cur != a2; cur = parent[cur])
            chain.push_back({parent_good[cur], parent[cur], cur});
          std::reverse(chain.begin(), chain.end());
          imp.transfers.insert(imp.transfers.end(), chain.begin(), chain.end());
          imp.transfers.push_back({closer, w, a1});
          return imp;
        }
        for (int v = 0; v < n; ++v) {
          if (v == a1 || visited[v]) continue;
          int g = find_witness(inst, held, w, v, true, true);
          if (g < 0) continue;
          visited[v] = 1;
          parent[v] = w;
          parent_good[v] = g;
          queue.push_back(v);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Improvement> find_type2_cycle(const Instance& inst,
                                            const Allocation& x) {
  check_dimensions(inst, x);
  if (!x.complete()) fail(ErrorKind::domain, "cycle search needs a complete allocation");
  if (!inst.integral_ratios())
    fail(ErrorKind::guard,
         "one-to-many cycle search requires integer ratios; use the exhaustive oracle");
  int n = inst.agent_count;
  auto held = goods_by_holder(inst, x);

  for (int ak = 0; ak < n; ++ak) {
    for (int a1 = 0; a1 < n; ++a1) {
      if (a1 == ak || !(inst.ratios[a1] < inst.ratios[ak])) continue;
      long long need = floor_rational(inst.ratios[a1]).convert_to<long long>();
      std::vector<int> smalls;
      for (int g : held[ak])
        if (!inst.is_large(ak, g) && !inst.is_large(a1, g)) {
          smalls.push_back(g);
          if (static_cast<long long>(smalls.size()) == need) break;
        }
      if (static_cast<long long>(smalls.size()) < need) continue;

      // BFS from a1 over large-for-both edges until ak is reached.
      std::vector<int> parent(n, -1), parent_good(n, -1);
      std::vector<std::uint8_t> visited(n, 0);
      std::deque<int> queue{a1};
      visited[a1] = 1;
      int reached = -1;
      while (!queue.empty() && reached < 0) {
        int w = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
          if (visited[v]) continue;
          int g = find_witness(inst, held, w, v, true, true);
          if (g < 0) continue;
          visited[v] = 1;
          parent[v] = w;
          parent_good[v] = g;
          if (v == ak) {
            reached = v;
            break;
          }
          queue.push_back(v);
        }
      }
      if (reached < 0) continue;

      Improvement imp;
      for (int g : smalls) imp.transfers.push_back({g, ak, a1});
      std::vector<Transfer> chain;
      for (int cur = ak; cur != a1; cur = parent[cur])
        chain.push_back({parent_good[cur], parent[cur], cur});
      std::reverse(chain.begin(), chain.end());
      imp.transfers.insert(imp.transfers.end(), chain.begin(), chain.end());
      return imp;
    }
  }
  return std::nullopt;
}

namespace {

struct DegreeInfo {
  std::vector<int> in, out;
  std::vector<int> touched;  // nodes incident to at least one edge
};

DegreeInfo degrees(const ItemExchangeGraph& g) {
  DegreeInfo d;
  d.in.assign(g.agent_count, 0);
  d.out.assign(g.agent_count, 0);
  for (const auto& e : g.edges) {
    ++d.out[e.from];
    ++d.in[e.to];
  }
  for (int v = 0; v < g.agent_count; ++v)
    if (d.in[v] + d.out[v] > 0) d.touched.push_back(v);
  return d;
}

bool matches_type1_sequence(const std::vector<EdgeType>& seq) {
  size_t k = seq.size();
  if (k < 2 || seq[0] != EdgeType::SL) return false;
  for (size_t i = 1; i + 1 < k; ++i)
    if (seq[i] != EdgeType::LL) return false;
  return seq[k - 1] != EdgeType::LS;
}

}  // namespace

ImprovementShape classify_improvement_shape(const Instance& inst,
                                            const ItemExchangeGraph& g) {
  if (g.edges.empty() || contains_edge_type(g, EdgeType::LS))
    return ImprovementShape::other;
  auto d = degrees(g);

  bool has_sl = contains_edge_type(g, EdgeType::SL);
  if (has_sl) {
    // Candidate single cycle: every touched node has in = out = 1 and the
    // walk visits all edges.
    for (int v : d.touched)
      if (d.in[v] != 1 || d.out[v] != 1) return ImprovementShape::other;
    std::vector<int> next_edge(g.agent_count, -1);
    for (size_t e = 0; e < g.edges.size(); ++e) next_edge[g.edges[e].from] = static_cast<int>(e);
    // Rotate so the walk starts at an SL edge; any SL start may match.
    for (size_t start = 0; start < g.edges.size(); ++start) {
      if (g.edges[start].type != EdgeType::SL) continue;
      std::vector<EdgeType> seq;
      int origin = g.edges[start].from;
      int cur = origin;
      bool closed = false;
      for (size_t steps = 0; steps < g.edges.size(); ++steps) {
        const auto& e = g.edges[next_edge[cur]];
        seq.push_back(e.type);
        cur = e.to;
        if (cur == origin) {
          closed = steps + 1 == g.edges.size();
          break;
        }
      }
      if (closed && matches_type1_sequence(seq)) return ImprovementShape::type1;
    }
    return ImprovementShape::other;
  }

  // No SL edges: candidate one-to-many shape. All SS edges must be parallel
  // (ak -> a1) and the LL edges must form a simple path a1 -> ... -> ak.
  std::vector<const ExchangeEdge*> ss, ll;
  for (const auto& e : g.edges)
    (e.type == EdgeType::SS ? ss : ll).push_back(&e);
  if (ss.empty() || ll.empty()) return ImprovementShape::other;
  int ak = ss[0]->from, a1 = ss[0]->to;
  for (const auto* e : ss)
    if (e->from != ak || e->to != a1) return ImprovementShape::other;
  std::vector<int> next(g.agent_count, -1);
  std::vector<int> ll_in(g.agent_count, 0);
  for (const auto* e : ll) {
    if (next[e->from] != -1) return ImprovementShape::other;
    next[e->from] = e->to;
    ++ll_in[e->to];
  }
  if (ll_in[a1] != 0 || next[ak] != -1) return ImprovementShape::other;
  int cur = a1;
  size_t used = 0;
  while (next[cur] != -1) {
    cur = next[cur];
    ++used;
    if (used > ll.size()) return ImprovementShape::other;
  }
  if (cur != ak || used != ll.size()) return ImprovementShape::other;
  // The parallel SS count equals the path head's ratio, which must be the
  // strictly smaller of the two endpoint ratios.
  if (!is_integral(inst.ratios[a1])) return ImprovementShape::other;
  if (BigInt(ss.size()) != numerator(inst.ratios[a1])) return ImprovementShape::other;
  if (!(inst.ratios[a1] < inst.ratios[ak])) return ImprovementShape::other;
  return ImprovementShape::type2;
}

bool has_source_or_sink(const ItemExchangeGraph& g) {
  auto d = degrees(g);
  for (int v : d.touched)
    if (d.in[v] == 0 || d.out[v] == 0) return true;
  return false;
}

bool contains_edge_type(const ItemExchangeGraph& g, EdgeType t) {
  return std::any_of(g.edges.begin(), g.edges.end(),
                     [&](const ExchangeEdge& e) { return e.type == t; });
}

bool has_consecutive_ss(const ItemExchangeGraph& g) {
  std::vector<std::uint8_t> in_ss(g.agent_count, 0), out_ss(g.agent_count, 0);
  for (const auto& e : g.edges) {
    if (e.type != EdgeType::SS) continue;
    out_ss[e.from] = 1;
    in_ss[e.to] = 1;
  }
  for (int v = 0; v < g.agent_count; ++v)
    if (in_ss[v] && out_ss[v]) return true;
  return false;
}

std::string to_dot(const ItemExchangeGraph& g) {
  std::ostringstream out;
  out << "digraph H {\n";
  for (const auto& e : g.edges)
    out << "  " << e.from << " -> " << e.to << " [label=\"" << e.item << ":"
        << edge_type_name(e.type) << "\"]\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Instance& inst, const TransferPossibilityGraph& g) {
  std::ostringstream out;
  out << "digraph I {\n";
  for (int i = 0; i < g.agent_count; ++i)
    for (int j = 0; j < g.agent_count; ++j) {
      if (!g.adjacency[i][j]) continue;
      int w = g.witness[i][j];
      out << "  " << i << " -> " << j << " [label=\"" << w << ":"
          << edge_type_name(classify_transfer(inst, w, i, j)) << "\"]\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace fairdiv
