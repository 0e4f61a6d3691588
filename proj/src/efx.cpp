#include "fairdiv/efx.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace fairdiv {

namespace {

bool try_augment(const Instance& inst, int agent, const std::vector<int>& goods,
                 std::vector<std::uint8_t>& visited, Matching& t) {
  for (int g : goods) {
    if (!inst.is_large(agent, g) || visited[g]) continue;
    visited[g] = 1;
    if (t.agent_of[g] == -1 || try_augment(inst, t.agent_of[g], goods, visited, t)) {
      t.agent_of[g] = agent;
      t.good_of[agent] = g;
      return true;
    }
  }
  return false;
}

void assert_matching_invariants(const Instance& inst, const Matching& t) {
  for (int g = 0; g < inst.good_count; ++g) {
    int a = t.agent_of[g];
    if (a == -1) continue;
    if (t.good_of[a] != g || !inst.is_large(a, g))
      fail(ErrorKind::internal, "matching lost the large-edge invariant");
  }
}

// Alternating-path BFS from an unmatched root: agents are discovered through
// a non-matching edge followed by the good's matching edge. Calls found() for
// every newly discovered matched agent; returning true stops the search.
template <typename Found>
void alternating_bfs(const Instance& inst, const std::vector<int>& goods,
                     const Matching& t, int root, std::vector<int>& parent_agent,
                     std::vector<int>& parent_good, Found found) {
  std::vector<std::uint8_t> seen_agent(inst.agent_count, 0);
  std::vector<std::uint8_t> seen_good(inst.good_count, 0);
  std::deque<int> queue{root};
  seen_agent[root] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int g : goods) {
      if (!inst.is_large(u, g) || seen_good[g] || t.good_of[u] == g) continue;
      seen_good[g] = 1;
      int v = t.agent_of[g];
      if (v == -1)
        fail(ErrorKind::internal,
             "augmenting path found while the matching was assumed maximum");
      if (seen_agent[v]) continue;
      seen_agent[v] = 1;
      parent_agent[v] = u;
      parent_good[v] = g;
      if (found(v)) return;
      queue.push_back(v);
    }
  }
}

}  // namespace

Matching max_matching(const Instance& inst, const std::vector<int>& agents,
                      const std::vector<int>& goods) {
  Matching t{std::vector<int>(inst.agent_count, -1),
             std::vector<int>(inst.good_count, -1), 0};
  for (int a : agents) {
    std::vector<std::uint8_t> visited(inst.good_count, 0);
    if (try_augment(inst, a, goods, visited, t)) ++t.size;
  }
  return t;
}

Matching adjust_matching(const Instance& inst, const std::vector<int>& agents,
                         const std::vector<int>& goods, Matching matching,
                         std::vector<std::pair<int, int>>* flips) {
  int before = matching.size;
  for (;;) {
    std::vector<int> roots;
    for (int a : agents)
      if (matching.good_of[a] == -1) roots.push_back(a);
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
      return inst.ratios[b] < inst.ratios[a];
    });

    bool flipped = false;
    for (int root : roots) {
      std::vector<int> parent_agent(inst.agent_count, -1);
      std::vector<int> parent_good(inst.agent_count, -1);
      int demoted = -1;
      alternating_bfs(inst, goods, matching, root, parent_agent, parent_good,
                      [&](int v) {
                        if (inst.ratios[v] < inst.ratios[root]) {
                          demoted = v;
                          return true;
                        }
                        return false;
                      });
      if (demoted == -1) continue;
      // Flip the path: every good on it moves to the preceding agent, the
      // root becomes matched and the demoted endpoint drops out.
      matching.good_of[demoted] = -1;
      for (int cur = demoted; cur != root; cur = parent_agent[cur]) {
        int g = parent_good[cur];
        int u = parent_agent[cur];
        matching.agent_of[g] = u;
        matching.good_of[u] = g;
      }
      if (flips) flips->emplace_back(root, demoted);
      flipped = true;
      break;
    }
    if (!flipped) break;
  }
  if (matching.size != before)
    fail(ErrorKind::internal, "adjustment changed the matching cardinality");
  assert_matching_invariants(inst, matching);
  return matching;
}

std::vector<long long> freeze_agents(const Instance& inst,
                                     const std::vector<int>& agents,
                                     const std::vector<int>& goods,
                                     const Matching& matching) {
  std::vector<long long> spans(inst.agent_count, 0);
  for (int root : agents) {
    if (matching.good_of[root] != -1) continue;
    long long span =
        floor_rational(inst.ratios[root] - 1).convert_to<long long>();
    std::vector<int> parent_agent(inst.agent_count, -1);
    std::vector<int> parent_good(inst.agent_count, -1);
    alternating_bfs(inst, goods, matching, root, parent_agent, parent_good,
                    [&](int v) {
                      spans[v] = std::max(spans[v], span);
                      return false;
                    });
  }
  return spans;
}

namespace {

struct MmfRun {
  const Instance& inst;
  const MmfOptions& options;
  RoundState st;
  std::vector<std::uint8_t> got_small;

  explicit MmfRun(const Instance& inst_, const MmfOptions& options_)
      : inst(inst_), options(options_) {
    int n = inst.agent_count;
    int m = inst.good_count;
    st.unfrozen.assign(n, 1);
    st.freeze_remaining.assign(n, 0);
    st.freeze_round.assign(n, -1);
    st.remaining.assign(m, 1);
    st.remaining_count = m;
    st.partial = Allocation::unassigned(m);
    got_small.assign(n, 0);
  }

  void assign(int agent, int good, const char* kind) {
    st.partial.owner[good] = agent;
    st.remaining[good] = 0;
    --st.remaining_count;
    if (options.check_invariants) {
      if (inst.is_large(agent, good)) {
        if (got_small[agent])
          fail(ErrorKind::internal,
               "agent " + std::to_string(agent) +
                   " received a large good after a small one");
      }
    }
    if (!inst.is_large(agent, good)) got_small[agent] = 1;
    if (options.trace)
      *options.trace << kind << ' ' << agent << ' ' << good << '\n';
  }

  int lowest_remaining() const {
    for (int g = 0; g < inst.good_count; ++g)
      if (st.remaining[g]) return g;
    fail(ErrorKind::internal, "no goods left to hand out");
  }

  std::vector<int> active_agents() const {
    std::vector<int> out;
    for (int a = 0; a < inst.agent_count; ++a)
      if (st.unfrozen[a]) out.push_back(a);
    return out;
  }

  std::vector<int> active_goods() const {
    std::vector<int> out;
    for (int g = 0; g < inst.good_count; ++g)
      if (st.remaining[g]) out.push_back(g);
    return out;
  }

  void check_partial_efx() {
    if (!options.check_invariants) return;
    if (auto v = efx_violation(inst, st.partial))
      fail(ErrorKind::internal,
           "partial allocation lost EFX: agent " + std::to_string(v->envier) +
               " envies agent " + std::to_string(v->envied));
  }

  void apply_freezes(const std::vector<long long>& spans) {
    // Agents frozen in earlier rounds sit out this round's successor as well:
    // decrement them first, then record the new spans.
    for (int a = 0; a < inst.agent_count; ++a) {
      if (st.unfrozen[a] || st.freeze_round[a] == st.round) continue;
      if (--st.freeze_remaining[a] == 0) st.unfrozen[a] = 1;
    }
    for (int a = 0; a < inst.agent_count; ++a) {
      if (spans[a] <= 0) continue;
      if (options.check_invariants) {
        if (st.freeze_round[a] != -1)
          fail(ErrorKind::internal,
               "agent " + std::to_string(a) + " frozen a second time");
        if (Rational(spans[a]) > inst.ratios[a] - 1)
          fail(ErrorKind::internal,
               "freeze span exceeds ratio bound for agent " + std::to_string(a));
        for (int g = 0; g < inst.good_count; ++g)
          if (st.remaining[g] && inst.is_large(a, g))
            fail(ErrorKind::internal,
                 "agent " + std::to_string(a) +
                     " frozen while a remaining good is large for her");
      }
      st.unfrozen[a] = 0;
      st.freeze_remaining[a] = spans[a];
      st.freeze_round[a] = st.round;
      if (options.trace)
        *options.trace << "freeze " << a << ' ' << spans[a] << '\n';
    }
  }

  void final_distribution(const std::vector<int>& agents) {
    // Never-frozen agents first (by index), then previously frozen agents by
    // descending freeze round (ties by index).
    std::vector<int> order = agents;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      bool na = st.freeze_round[a] == -1;
      bool nb = st.freeze_round[b] == -1;
      if (na != nb) return na;
      if (na) return false;
      return st.freeze_round[a] > st.freeze_round[b];
    });
    for (int a : order) {
      if (st.remaining_count == 0) break;
      assign(a, lowest_remaining(), "final");
    }
    check_partial_efx();
  }

  Allocation run() {
    while (st.remaining_count > 0) {
      auto agents = active_agents();
      if (agents.empty()) fail(ErrorKind::internal, "every agent is frozen");
      auto goods = active_goods();
      if (static_cast<int>(goods.size()) < static_cast<int>(agents.size())) {
        final_distribution(agents);
        break;
      }
      ++st.round;
      if (options.trace) *options.trace << "round " << st.round << '\n';
      Matching t = max_matching(inst, agents, goods);
      std::vector<std::pair<int, int>> flips;
      t = adjust_matching(inst, agents, goods, std::move(t),
                          options.trace ? &flips : nullptr);
      if (options.trace)
        for (const auto& [promoted, demoted] : flips)
          *options.trace << "adjust " << promoted << ' ' << demoted << '\n';
      auto spans = freeze_agents(inst, agents, goods, t);
      for (int a : agents)
        if (t.good_of[a] != -1) assign(a, t.good_of[a], "match");
      for (int a : agents)
        if (t.good_of[a] == -1) assign(a, lowest_remaining(), "give");
      apply_freezes(spans);
      check_partial_efx();
    }
    return st.partial;
  }
};

}  // namespace

Allocation match_modify_freeze(const Instance& inst, const MmfOptions& options) {
  inst.validate();
  MmfRun run(inst, options);
  return run.run();
}

std::optional<EfxViolation> efx_violation(const Instance& inst,
                                          const Allocation& alloc) {
  check_dimensions(inst, alloc);
  auto weights = detail::integer_weights(inst);
  auto bundles = alloc.bundles(inst.agent_count);
  for (int i = 0; i < inst.agent_count; ++i) {
    long long own = 0;
    for (int g : bundles[i]) own += weights[i][g];
    for (int j = 0; j < inst.agent_count; ++j) {
      if (j == i || bundles[j].empty()) continue;
      long long total = 0, least = -1;
      int least_good = -1;
      for (int g : bundles[j]) {
        total += weights[i][g];
        if (least_good == -1 || weights[i][g] < least) {
          least = weights[i][g];
          least_good = g;
        }
      }
      if (own < total - least) return EfxViolation{i, j, least_good};
    }
  }
  return std::nullopt;
}

std::optional<EfxViolation> check_efx(const Instance& inst,
                                      const Allocation& alloc) {
  check_dimensions(inst, alloc);
  if (!alloc.complete())
    fail(ErrorKind::domain, "EFX verdicts are defined on complete allocations");
  return efx_violation(inst, alloc);
}

}  // namespace fairdiv
