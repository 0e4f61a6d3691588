#include "fairdiv/allocation.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>

namespace fairdiv {

bool Allocation::complete() const {
  return std::none_of(owner.begin(), owner.end(),
                      [](int o) { return o == kUnassigned; });
}

std::vector<std::vector<int>> Allocation::bundles(int agent_count) const {
  std::vector<std::vector<int>> out(agent_count);
  for (int g = 0; g < static_cast<int>(owner.size()); ++g)
    if (owner[g] != kUnassigned) out[owner[g]].push_back(g);
  return out;
}

void check_dimensions(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.owner.size()) != inst.good_count)
    fail(ErrorKind::dimension, "allocation covers " +
                                   std::to_string(alloc.owner.size()) +
                                   " goods, instance has " +
                                   std::to_string(inst.good_count));
  for (int g = 0; g < inst.good_count; ++g) {
    int o = alloc.owner[g];
    if (o != kUnassigned && (o < 0 || o >= inst.agent_count))
      fail(ErrorKind::dimension,
           "good " + std::to_string(g) + " owned by out-of-range agent " +
               std::to_string(o));
  }
}

Rational utility(const Instance& inst, const Allocation& alloc, int agent) {
  check_dimensions(inst, alloc);
  if (agent < 0 || agent >= inst.agent_count)
    fail(ErrorKind::dimension, "agent index out of range");
  // Tally large/small counts; one rational expression at the end.
  long long large = 0, small = 0;
  for (int g = 0; g < inst.good_count; ++g) {
    if (alloc.owner[g] != agent) continue;
    if (inst.is_large(agent, g)) ++large;
    else ++small;
  }
  return inst.ratios[agent] * large + small;
}

Rational total_utility(const Instance& inst, const Allocation& alloc) {
  Rational sum(0);
  for (int i = 0; i < inst.agent_count; ++i) sum += utility(inst, alloc, i);
  return sum;
}

bool dominates(const Instance& inst, const Allocation& x_new, const Allocation& x_old) {
  check_dimensions(inst, x_new);
  check_dimensions(inst, x_old);
  if (!x_new.complete() || !x_old.complete())
    fail(ErrorKind::domain, "dominance is defined on complete allocations");
  // Per-agent comparison over the agent's fixed denominator: integer weights.
  auto weights = detail::integer_weights(inst);
  bool strict = false;
  for (int i = 0; i < inst.agent_count; ++i) {
    long long acc_new = 0, acc_old = 0;
    for (int g = 0; g < inst.good_count; ++g) {
      if (x_new.owner[g] == i) acc_new += weights[i][g];
      if (x_old.owner[g] == i) acc_old += weights[i][g];
    }
    if (acc_new < acc_old) return false;
    if (acc_new > acc_old) strict = true;
  }
  return strict;
}

}  // namespace fairdiv
