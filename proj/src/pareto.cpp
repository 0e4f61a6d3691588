#include "fairdiv/pareto.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

std::optional<Improvement> verify_po(const Instance& inst, const Allocation& x) {
  if (!inst.integral_ratios())
    fail(ErrorKind::guard,
         "polynomial verification requires integer ratios; "
         "run the exhaustive oracle (--oracle) instead");
  if (auto imp = find_type1_cycle(inst, x)) return imp;
  return find_type2_cycle(inst, x);
}

Allocation apply_improvement(const Instance& inst, const Allocation& x,
                             const Improvement& imp) {
  check_dimensions(inst, x);
  if (imp.transfers.empty())
    fail(ErrorKind::domain, "an improvement must move at least one good");
  Allocation out = x;
  std::set<int> moved;
  for (const Transfer& t : imp.transfers) {
    if (t.good < 0 || t.good >= inst.good_count)
      fail(ErrorKind::domain, "transfer names good " + std::to_string(t.good) +
                                  " outside the instance");
    if (t.to < 0 || t.to >= inst.agent_count || t.from == t.to)
      fail(ErrorKind::domain, "transfer has an invalid agent pair");
    if (!moved.insert(t.good).second)
      fail(ErrorKind::domain,
           "good " + std::to_string(t.good) + " moved more than once");
    if (out.owner[t.good] != t.from)
      fail(ErrorKind::domain, "agent " + std::to_string(t.from) +
                                  " does not own good " + std::to_string(t.good));
    out.owner[t.good] = t.to;
  }
  if (!dominates(inst, out, x))
    fail(ErrorKind::internal, "improvement certificate does not dominate");
  return out;
}

ImproveResult improve_to_po(const Instance& inst, const Allocation& x) {
  ImproveResult result{x, {}};
  // Welfare rises by >= 1 per step in normalized units, so this terminates.
  while (auto cert = verify_po(inst, result.allocation)) {
    result.allocation = apply_improvement(inst, result.allocation, *cert);
    result.trace.push_back(std::move(*cert));
  }
  return result;
}

namespace {

long long enumeration_size(int n, int m, long long budget) {
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > budget / n)
      fail(ErrorKind::budget, "enumeration of " + std::to_string(n) + "^" +
                                  std::to_string(m) + " allocations exceeds budget " +
                                  std::to_string(budget));
    total *= n;
  }
  return total;
}

// Walks every complete owner vector in lexicographic order (owner[0] most
// significant), maintaining per-agent weight sums incrementally, and invokes
// visit(owner) for each candidate.
template <typename Visit>
void enumerate_allocations(const Instance& inst,
                           const std::vector<std::vector<long long>>& weights,
                           std::vector<long long>& score, Visit visit) {
  int n = inst.agent_count;
  int m = inst.good_count;
  std::vector<int> owner(m, 0);
  for (int g = 0; g < m; ++g) score[0] += weights[0][g];
  while (true) {
    visit(owner);
    int pos = m - 1;
    while (pos >= 0 && owner[pos] == n - 1) {
      score[n - 1] -= weights[n - 1][pos];
      owner[pos] = 0;
      score[0] += weights[0][pos];
      --pos;
    }
    if (pos < 0) break;
    score[owner[pos]] -= weights[owner[pos]][pos];
    ++owner[pos];
    score[owner[pos]] += weights[owner[pos]][pos];
  }
}

}  // namespace

std::optional<Allocation> brute_force_po(const Instance& inst, const Allocation& x,
                                         long long budget) {
  check_dimensions(inst, x);
  if (!x.complete()) fail(ErrorKind::domain, "oracle needs a complete allocation");
  int n = inst.agent_count;
  int m = inst.good_count;
  enumeration_size(n, m, budget);
  auto weights = detail::integer_weights(inst);

  std::vector<long long> base(n, 0);
  for (int g = 0; g < m; ++g) base[x.owner[g]] += weights[x.owner[g]][g];

  std::optional<Allocation> witness;
  std::vector<long long> score(n, 0);
  enumerate_allocations(inst, weights, score, [&](const std::vector<int>& owner) {
    if (witness) return;
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      if (score[i] < base[i]) return;
      if (score[i] > base[i]) strict = true;
    }
    if (strict) witness = Allocation{owner};
  });
  return witness;
}

std::optional<ItemExchangeGraph> min_improvement_graph(const Instance& inst,
                                                       const Allocation& x,
                                                       long long budget) {
  check_dimensions(inst, x);
  if (!x.complete()) fail(ErrorKind::domain, "oracle needs a complete allocation");
  int n = inst.agent_count;
  int m = inst.good_count;
  enumeration_size(n, m, budget);
  auto weights = detail::integer_weights(inst);

  std::vector<long long> base(n, 0);
  for (int g = 0; g < m; ++g) base[x.owner[g]] += weights[x.owner[g]][g];

  std::optional<Allocation> best;
  int best_edges = m + 1;
  std::vector<long long> score(n, 0);
  enumerate_allocations(inst, weights, score, [&](const std::vector<int>& owner) {
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      if (score[i] < base[i]) return;
      if (score[i] > base[i]) strict = true;
    }
    if (!strict) return;
    int edges = 0;
    for (int g = 0; g < m; ++g) edges += owner[g] != x.owner[g];
    // Strict comparison keeps the lexicographically first minimizer.
    if (edges < best_edges) {
      best_edges = edges;
      best = Allocation{owner};
    }
  });
  if (!best) return std::nullopt;
  return build_exchange_graph(inst, x, *best);
}

Allocation brute_force_mnw(const Instance& inst, long long budget) {
  inst.validate();
  int n = inst.agent_count;
  int m = inst.good_count;
  enumeration_size(n, m, budget);

  std::optional<Allocation> best;
  int best_positive = -1;
  Rational best_product(0);
  std::vector<int> owner(m, 0);
  while (true) {
    std::vector<Rational> util(n, Rational(0));
    for (int g = 0; g < m; ++g) util[owner[g]] += inst.raw_value(owner[g], g);
    int positive = 0;
    Rational product(1);
    for (int i = 0; i < n; ++i) {
      if (util[i] > 0) ++positive;
      product *= util[i];
    }
    if (positive > best_positive ||
        (positive == best_positive && product > best_product)) {
      best_positive = positive;
      best_product = product;
      best = Allocation{owner};
    }
    int pos = m - 1;
    while (pos >= 0 && owner[pos] == n - 1) owner[pos--] = 0;
    if (pos < 0) break;
    ++owner[pos];
  }
  return *best;
}

}  // namespace fairdiv
