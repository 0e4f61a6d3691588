#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/graphs.hpp"
#include "fairdiv/instance.hpp"

#include <optional>
#include <vector>

namespace fairdiv {

/// Default cap on exhaustive enumeration (number of candidate allocations,
/// n^m). Exceeding the cap is a refusal, never a guess.
inline constexpr long long kDefaultBudget = 20'000'000;

/// Polynomial-time Pareto-optimality check for integer ratios. Returns the
/// certificate of a violation (small-to-large cycle tried first, then
/// one-to-many cycle) or nullopt when the allocation is Pareto-optimal.
/// Fractional ratios raise Error(guard); use brute_force_po for those.
std::optional<Improvement> verify_po(const Instance& inst, const Allocation& x);

/// Applies a non-empty improvement, checking that each sender owns the good
/// it gives away, and asserts the result dominates the input.
Allocation apply_improvement(const Instance& inst, const Allocation& x,
                             const Improvement& imp);

struct ImproveResult {
  Allocation allocation;
  std::vector<Improvement> trace;
};

/// Repeatedly applies verify_po certificates until the allocation is
/// Pareto-optimal. Each step raises total normalized welfare by at least 1,
/// so the loop terminates within m * max_i r_i steps.
ImproveResult improve_to_po(const Instance& inst, const Allocation& x);

/// Exhaustive Pareto-optimality oracle, exact for arbitrary ratios. Returns
/// the lexicographically first dominating allocation, or nullopt when none
/// exists. Refuses when n^m exceeds the budget.
std::optional<Allocation> brute_force_po(const Instance& inst, const Allocation& x,
                                         long long budget = kDefaultBudget);

/// Among all dominating allocations, returns the item-exchange graph with the
/// fewest edges (ties broken by lexicographically smallest owner vector);
/// nullopt when the allocation is Pareto-optimal.
std::optional<ItemExchangeGraph> min_improvement_graph(
    const Instance& inst, const Allocation& x, long long budget = kDefaultBudget);

/// Exhaustive maximum-Nash-welfare allocation under raw values when present,
/// normalized values otherwise. Allocations leaving fewer agents at zero
/// utility win first; products are compared exactly; ties break to the
/// lexicographically smallest owner vector.
Allocation brute_force_mnw(const Instance& inst, long long budget = kDefaultBudget);

}  // namespace fairdiv
