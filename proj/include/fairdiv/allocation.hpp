#pragma once

#include "fairdiv/instance.hpp"

#include <vector>

namespace fairdiv {

inline constexpr int kUnassigned = -1;

/// Owner index per good; kUnassigned marks goods not yet allocated.
/// Storing the owner per good makes transfers O(1); bundle views are derived.
struct Allocation {
  std::vector<int> owner;

  static Allocation unassigned(int good_count) {
    return Allocation{std::vector<int>(good_count, kUnassigned)};
  }

  bool complete() const;
  std::vector<std::vector<int>> bundles(int agent_count) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// One good moving from one agent to another.
struct Transfer {
  int good = 0;
  int from = 0;
  int to = 0;
  friend bool operator==(const Transfer&, const Transfer&) = default;
};

/// An ordered transfer list certifying a Pareto-improvement. Validity (each
/// good moved at most once, senders own their goods, result dominates) is
/// enforced when the improvement is applied.
struct Improvement {
  std::vector<Transfer> transfers;
  friend bool operator==(const Improvement&, const Improvement&) = default;
};

/// Throws Error(dimension) when the allocation does not fit the instance.
void check_dimensions(const Instance& inst, const Allocation& alloc);

/// Sum over the agent's goods of r_i (large) or 1 (small), exact.
Rational utility(const Instance& inst, const Allocation& alloc, int agent);

Rational total_utility(const Instance& inst, const Allocation& alloc);

/// True iff x_new weakly improves every agent and strictly improves at least
/// one. Both allocations must be complete.
bool dominates(const Instance& inst, const Allocation& x_new, const Allocation& x_old);

}  // namespace fairdiv
