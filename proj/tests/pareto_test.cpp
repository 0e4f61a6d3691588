#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/error.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/pareto.hpp"

using namespace fairdiv;

namespace {

Instance mnw_counterexample() { return normalize({{50, 50, 1, 1}, {3, 1, 1, 1}}); }
Instance fractional_counterexample() {
  return normalize({{6, 6, 1, 1}, {3, 3, 1, 1}});
}

GeneratorConfig small_config(std::uint64_t seed) {
  GeneratorConfig config;
  config.seed = seed;
  config.n_min = 2;
  config.n_max = 4;
  config.m_min = 2;
  config.m_max = 6;
  return config;
}

}  // namespace

TEST_CASE("verifier on the canonical small cases") {
  Instance hoarder = make_instance({Rational(2), Rational(3)}, {"LSL", "SLL"});
  CHECK_FALSE(verify_po(hoarder, Allocation{{0, 0, 0}}));

  // Ratios (6, 3): Pareto-optimal, confirmed exhaustively below.
  Instance b = fractional_counterexample();
  Allocation split{{0, 1, 0, 1}};
  CHECK_FALSE(verify_po(b, split));
  CHECK_FALSE(brute_force_po(b, split));

  Instance type2 = make_instance({Rational(3), Rational(2)}, {"SSL", "SSL"});
  auto cert = verify_po(type2, Allocation{{0, 0, 1}});
  REQUIRE(cert);
  CHECK(cert->transfers ==
        std::vector<Transfer>{{0, 0, 1}, {1, 0, 1}, {2, 1, 0}});
  CHECK(brute_force_po(type2, Allocation{{0, 0, 1}}));

  Instance frac = make_instance({Rational(3, 2), Rational(2)}, {"SS", "SS"});
  CHECK_THROWS_AS(verify_po(frac, Allocation{{0, 1}}), Error);
}

TEST_CASE("small-to-large certificates win over one-to-many ones") {
  // Both cycle kinds exist; the swap certificate is reported.
  Instance inst = make_instance({Rational(3), Rational(2)}, {"SSLS", "SSLL"});
  Allocation x{{0, 0, 1, 0}};
  auto cert = verify_po(inst, x);
  REQUIRE(cert);
  CHECK(cert->transfers == std::vector<Transfer>{{3, 0, 1}, {2, 1, 0}});
  CHECK(find_type2_cycle(inst, x));
}

TEST_CASE("apply_improvement validates its certificate") {
  Instance two = make_instance({Rational(2), Rational(3)}, {"SL", "LL"});
  Allocation x{{0, 1}};
  CHECK_THROWS_AS(apply_improvement(two, x, Improvement{}), Error);
  CHECK_THROWS_AS(apply_improvement(two, x, Improvement{{{0, 1, 0}}}), Error);
  CHECK_THROWS_AS(apply_improvement(two, x, Improvement{{{0, 0, 1}, {0, 1, 0}}}),
                  Error);
  // A transfer list that moves goods without helping anyone is rejected.
  CHECK_THROWS_AS(
      apply_improvement(two, Allocation{{1, 0}}, Improvement{{{1, 0, 1}}}), Error);

  Allocation swapped =
      apply_improvement(two, x, Improvement{{{0, 0, 1}, {1, 1, 0}}});
  CHECK(swapped == Allocation{{1, 0}});

  Instance type2 = make_instance({Rational(3), Rational(2)}, {"SSL", "SSL"});
  Allocation y = apply_improvement(type2, Allocation{{0, 0, 1}},
                                   Improvement{{{0, 0, 1}, {1, 0, 1}, {2, 1, 0}}});
  CHECK(y == Allocation{{1, 1, 0}});
}

TEST_CASE("improvement loop reaches a Pareto-optimal allocation") {
  Instance a = mnw_counterexample();
  Allocation already{{1, 0, 1, 1}};
  auto steady = improve_to_po(a, already);
  CHECK(steady.allocation == already);
  CHECK(steady.trace.empty());

  Instance type2 = make_instance({Rational(3), Rational(2)}, {"SSL", "SSL"});
  auto one_step = improve_to_po(type2, Allocation{{0, 0, 1}});
  CHECK(one_step.trace.size() == 1);
  CHECK_FALSE(verify_po(type2, one_step.allocation));

  // Two swaps chain: the first swap hands agent 1 the good that lets the
  // second cycle fire.
  Instance chained = make_instance({Rational(2), Rational(2), Rational(2)},
                                   {"SLSS", "LLLS", "LSSS"});
  Allocation x{{0, 1, 2, 2}};
  auto run = improve_to_po(chained, x);
  REQUIRE(run.trace.size() == 2);
  CHECK(run.trace[0].transfers == std::vector<Transfer>{{0, 0, 1}, {1, 1, 0}});
  CHECK(run.trace[1].transfers == std::vector<Transfer>{{2, 2, 1}, {0, 1, 2}});
  CHECK(run.allocation == Allocation{{2, 0, 1, 2}});
  CHECK_FALSE(verify_po(chained, run.allocation));
  CHECK_FALSE(brute_force_po(chained, run.allocation));
  CHECK(dominates(chained, run.allocation, x));
}

TEST_CASE("welfare rises by at least one per improvement step") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Instance inst = generate_instance(small_config(seed + 500));
    SeededRng rng(seed * 13 + 7);
    Allocation x = random_allocation(rng, inst.agent_count, inst.good_count);
    auto run = improve_to_po(inst, x);
    Allocation cur = x;
    for (const auto& step : run.trace) {
      Allocation next = apply_improvement(inst, cur, step);
      CHECK(total_utility(inst, next) - total_utility(inst, cur) >= 1);
      cur = next;
    }
    CHECK(cur == run.allocation);
  }
}

TEST_CASE("exhaustive oracle on the canonical instances") {
  Instance a = mnw_counterexample();
  CHECK_FALSE(brute_force_po(a, Allocation{{1, 0, 1, 1}}));

  Instance b = fractional_counterexample();
  CHECK_FALSE(brute_force_po(b, Allocation{{0, 0, 1, 1}}));

  Instance wide = make_instance(
      {Rational(2), Rational(2), Rational(2)},
      {"SSSSSSSSSSSSSSSSSSSS", "SSSSSSSSSSSSSSSSSSSS", "SSSSSSSSSSSSSSSSSSSS"});
  CHECK_THROWS_AS(brute_force_po(wide, Allocation{std::vector<int>(20, 0)}),
                  Error);
}

TEST_CASE("verifier and oracle verdicts agree on integer-ratio fuzz") {
  int not_po = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Instance inst = generate_instance(small_config(seed));
    SeededRng rng(seed ^ 0xabcdef);
    for (int rep = 0; rep < 2; ++rep) {
      Allocation x = random_allocation(rng, inst.agent_count, inst.good_count);
      auto cert = verify_po(inst, x);
      auto witness = brute_force_po(inst, x);
      CHECK(cert.has_value() == witness.has_value());
      if (cert) {
        ++not_po;
        Allocation improved = apply_improvement(inst, x, *cert);
        CHECK(dominates(inst, improved, x));
      }
    }
  }
  CHECK(not_po > 50);
}

TEST_CASE("minimum improvement graph invariants on fuzzed instances") {
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance inst = generate_instance(small_config(seed + 900));
    SeededRng rng(seed + 31);
    Allocation x = random_allocation(rng, inst.agent_count, inst.good_count);
    auto g = min_improvement_graph(inst, x);
    if (!g) {
      CHECK_FALSE(brute_force_po(inst, x));
      continue;
    }
    ++graphs;
    CHECK_FALSE(has_source_or_sink(*g));
    CHECK_FALSE(contains_edge_type(*g, EdgeType::LS));
    CHECK_FALSE(has_consecutive_ss(*g));
    CHECK(classify_improvement_shape(inst, *g) != ImprovementShape::other);
  }
  CHECK(graphs > 30);
}

TEST_CASE("minimum improvement graph is absent exactly when optimal") {
  Instance type1 = make_instance({Rational(2), Rational(3)}, {"SL", "LL"});
  CHECK_FALSE(min_improvement_graph(type1, Allocation{{1, 0}}));
  auto g = min_improvement_graph(type1, Allocation{{0, 1}});
  REQUIRE(g);
  CHECK(g->edges.size() == 2);
}

TEST_CASE("exhaustive Nash welfare maximization") {
  Instance a = mnw_counterexample();
  CHECK(brute_force_mnw(a) == Allocation{{1, 0, 1, 1}});

  Instance solo = make_instance({Rational(2)}, {"LS"});
  CHECK(brute_force_mnw(solo) == Allocation{{0, 0}});

  Instance twins = make_instance({Rational(2), Rational(2)}, {"LL", "LL"});
  Allocation best = brute_force_mnw(twins);
  CHECK(best == Allocation{{0, 1}});
  CHECK(utility(twins, best, 0) * utility(twins, best, 1) == 4);

  // More positive-utility agents beat a larger product.
  Instance three = make_instance({Rational(2), Rational(2), Rational(2)},
                                 {"LL", "LL", "LL"});
  Allocation spread = brute_force_mnw(three);
  int assigned_agents = 0;
  for (int i = 0; i < 3; ++i)
    assigned_agents += utility(three, spread, i) > 0;
  CHECK(assigned_agents == 2);
}
