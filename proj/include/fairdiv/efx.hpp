#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace fairdiv {

/// Agent-good matching; every matched pair (i, g) has g large for i.
struct Matching {
  std::vector<int> good_of;   // per agent, -1 when unmatched
  std::vector<int> agent_of;  // per good, -1 when unmatched
  int size = 0;
};

/// Maximum-cardinality matching between the given agents and goods over
/// large-good edges, built by augmenting paths with agents inserted in
/// ascending index order (goods probed in ascending order), so the result is
/// deterministic.
Matching max_matching(const Instance& inst, const std::vector<int>& agents,
                      const std::vector<int>& goods);

/// Re-routes matched goods toward larger-ratio agents: while some unmatched
/// agent can reach, along an alternating path, a matched agent with a
/// strictly smaller ratio, the path is flipped so the larger-ratio agent
/// becomes matched. Cardinality and the large-edge invariant are preserved.
/// Roots are scanned by descending ratio (ties by index) and the search is
/// recomputed after every flip. When given, flips receives one
/// (promoted, demoted) agent pair per applied flip.
Matching adjust_matching(const Instance& inst, const std::vector<int>& agents,
                         const std::vector<int>& goods, Matching matching,
                         std::vector<std::pair<int, int>>* flips = nullptr);

/// Freeze spans: every matched agent reachable by an alternating path from an
/// unmatched agent i_0 receives max over such roots of floor(r_{i_0} - 1).
/// Agents on no such path get 0.
std::vector<long long> freeze_agents(const Instance& inst,
                                     const std::vector<int>& agents,
                                     const std::vector<int>& goods,
                                     const Matching& matching);

/// Round-loop state of the allocation procedure.
struct RoundState {
  std::vector<std::uint8_t> unfrozen;     // exactly the agents with no pending span
  std::vector<long long> freeze_remaining;
  std::vector<int> freeze_round;          // round the agent froze in, -1 if never
  std::vector<std::uint8_t> remaining;    // goods not yet allocated
  int remaining_count = 0;
  Allocation partial;
  int round = 0;
};

struct MmfOptions {
  std::ostream* trace = nullptr;   // per-round line-oriented log
  bool check_invariants = false;   // verify round invariants, throw on breakage
};

/// Computes a complete allocation that is envy-free up to any good, for any
/// personalized bi-valued instance (fractional ratios included). Rounds match
/// unfrozen agents to large goods, re-route matches toward larger ratios,
/// hand one leftover good to each unmatched agent, then freeze matched agents
/// reachable from unmatched ones. When fewer goods remain than unfrozen
/// agents, the leftovers go to never-frozen agents first (by index), then to
/// previously frozen agents by descending freeze round.
Allocation match_modify_freeze(const Instance& inst, const MmfOptions& options = {});

struct EfxViolation {
  int envier = 0;
  int envied = 0;
  int witness_good = 0;  // removing this good still leaves envy
  friend bool operator==(const EfxViolation&, const EfxViolation&) = default;
};

/// EFX check over the assigned goods of any (possibly partial) allocation:
/// nullopt when no agent envies another agent's bundle after removing the
/// other's least valuable good.
std::optional<EfxViolation> efx_violation(const Instance& inst,
                                          const Allocation& alloc);

/// EFX check for complete allocations; partial input is an error.
std::optional<EfxViolation> check_efx(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv
