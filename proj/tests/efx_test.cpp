#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/efx.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/generator.hpp"

#include <deque>
#include <sstream>

using namespace fairdiv;

namespace {

std::vector<int> iota_vec(int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = i;
  return v;
}

// Removal-enumeration EFX oracle in plain rational arithmetic, independent of
// the integer fast path in the library checker.
bool efx_by_enumeration(const Instance& inst, const Allocation& alloc) {
  auto bundles = alloc.bundles(inst.agent_count);
  for (int i = 0; i < inst.agent_count; ++i) {
    Rational own(0);
    for (int g : bundles[i]) own += inst.value(i, g);
    for (int j = 0; j < inst.agent_count; ++j) {
      if (i == j) continue;
      for (int removed : bundles[j]) {
        Rational rest(0);
        for (int g : bundles[j])
          if (g != removed) rest += inst.value(i, g);
        if (own < rest) return false;
      }
    }
  }
  return true;
}

// Independent check of the adjustment postcondition: no unmatched agent may
// reach, along an alternating path, a matched agent with a smaller ratio.
bool has_pending_adjustment(const Instance& inst, const std::vector<int>& agents,
                            const std::vector<int>& goods, const Matching& t) {
  for (int root : agents) {
    if (t.good_of[root] != -1) continue;
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
        if (v == -1 || seen_agent[v]) continue;
        seen_agent[v] = 1;
        if (inst.ratios[v] < inst.ratios[root]) return true;
        queue.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("maximum matching over large-good edges") {
  Instance none = make_instance({Rational(2), Rational(2)}, {"SS", "SS"});
  CHECK(max_matching(none, iota_vec(2), iota_vec(2)).size == 0);

  Instance all = make_instance({Rational(2), Rational(2)}, {"LL", "LL"});
  auto perfect = max_matching(all, iota_vec(2), iota_vec(2));
  CHECK(perfect.size == 2);
  // The augmenting DFS re-routes agent 0 to good 1 when agent 1 claims good 0.
  CHECK(perfect.good_of[0] == 1);
  CHECK(perfect.good_of[1] == 0);

  Instance contested = make_instance({Rational(2), Rational(2)}, {"LS", "LS"});
  auto one = max_matching(contested, iota_vec(2), iota_vec(2));
  CHECK(one.size == 1);
  CHECK(one.agent_of[0] == 0);

  // Augmenting through an occupied good.
  Instance chain = make_instance({Rational(2), Rational(2)}, {"LL", "LS"});
  auto two = max_matching(chain, iota_vec(2), iota_vec(2));
  CHECK(two.size == 2);
  CHECK(two.good_of[0] == 1);
  CHECK(two.good_of[1] == 0);
}

TEST_CASE("matching adjustment prefers larger ratios") {
  Instance shared = make_instance({Rational(2), Rational(3)}, {"LS", "LS"});
  auto t = max_matching(shared, iota_vec(2), iota_vec(2));
  REQUIRE(t.agent_of[0] == 0);
  std::vector<std::pair<int, int>> flips;
  t = adjust_matching(shared, iota_vec(2), iota_vec(2), std::move(t), &flips);
  CHECK(t.agent_of[0] == 1);
  CHECK(t.size == 1);
  CHECK(flips == std::vector<std::pair<int, int>>{{1, 0}});

  Instance reversed = make_instance({Rational(3), Rational(2)}, {"LS", "LS"});
  auto u = max_matching(reversed, iota_vec(2), iota_vec(2));
  u = adjust_matching(reversed, iota_vec(2), iota_vec(2), std::move(u));
  CHECK(u.agent_of[0] == 0);

  Instance perfect = make_instance({Rational(2), Rational(3)}, {"LL", "LL"});
  auto p = max_matching(perfect, iota_vec(2), iota_vec(2));
  auto q = adjust_matching(perfect, iota_vec(2), iota_vec(2), p);
  CHECK(q.good_of == p.good_of);
}

TEST_CASE("adjustment reaches its fixpoint on fuzzed inputs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig config;
    config.seed = seed + 40'000;
    config.n_min = 2;
    config.n_max = 5;
    config.m_min = 1;
    config.m_max = 8;
    config.ratio_pool = {Rational(3, 2), Rational(2), Rational(7, 3), Rational(3)};
    Instance inst = generate_instance(config);
    auto agents = iota_vec(inst.agent_count);
    auto goods = iota_vec(inst.good_count);
    auto t = max_matching(inst, agents, goods);
    int size_before = t.size;
    t = adjust_matching(inst, agents, goods, std::move(t));
    CHECK(t.size == size_before);
    CHECK_FALSE(has_pending_adjustment(inst, agents, goods, t));
    for (int g = 0; g < inst.good_count; ++g)
      if (t.agent_of[g] != -1) CHECK(inst.is_large(t.agent_of[g], g));
  }
}

TEST_CASE("freeze spans derive from unmatched roots") {
  Instance perfect = make_instance({Rational(2), Rational(3)}, {"LL", "LL"});
  auto p = max_matching(perfect, iota_vec(2), iota_vec(2));
  CHECK(freeze_agents(perfect, iota_vec(2), iota_vec(2), p) ==
        std::vector<long long>{0, 0});

  Instance shared = make_instance({Rational(3), Rational(3)}, {"LS", "LS"});
  auto t = max_matching(shared, iota_vec(2), iota_vec(2));
  t = adjust_matching(shared, iota_vec(2), iota_vec(2), std::move(t));
  CHECK(freeze_agents(shared, iota_vec(2), iota_vec(2), t) ==
        std::vector<long long>{2, 0});

  Instance fractional = make_instance({Rational(7, 2), Rational(7, 2)}, {"LS", "LS"});
  auto f = max_matching(fractional, iota_vec(2), iota_vec(2));
  CHECK(freeze_agents(fractional, iota_vec(2), iota_vec(2), f) ==
        std::vector<long long>{2, 0});
}

TEST_CASE("allocation runs on the canonical instances") {
  Instance twins = make_instance({Rational(2), Rational(2)}, {"LL", "LL"});
  Allocation t = match_modify_freeze(twins, {nullptr, true});
  CHECK(t == Allocation{{1, 0}});
  CHECK_FALSE(check_efx(twins, t));

  Instance a = normalize({{50, 50, 1, 1}, {3, 1, 1, 1}});
  Allocation xa = match_modify_freeze(a, {nullptr, true});
  CHECK_FALSE(check_efx(a, xa));
  CHECK(efx_by_enumeration(a, xa));

  Instance b = normalize({{6, 6, 1, 1}, {3, 3, 1, 1}});
  Allocation xb = match_modify_freeze(b, {nullptr, true});
  CHECK_FALSE(check_efx(b, xb));
  for (int i = 0; i < 2; ++i) {
    int large_held = (xb.owner[0] == i) + (xb.owner[1] == i);
    int small_held = (xb.owner[2] == i) + (xb.owner[3] == i);
    CHECK(large_held == 1);
    CHECK(small_held == 1);
  }

  Instance empty = make_instance({Rational(2), Rational(2)},
                                 std::vector<std::string>{"", ""});
  Allocation xe = match_modify_freeze(empty, {nullptr, true});
  CHECK(xe.owner.empty());
  CHECK_FALSE(check_efx(empty, xe));
}

TEST_CASE("round trace pins matching, hand-outs, adjustments and freezes") {
  // One large-for-both good and four fillers: agent 0 wins the matching,
  // freezes for two rounds, and rejoins for the short final round.
  Instance inst = make_instance({Rational(3), Rational(3)}, {"LSSSS", "LSSSS"});
  std::ostringstream trace;
  Allocation x = match_modify_freeze(inst, {&trace, true});
  CHECK(x == Allocation{{0, 1, 1, 1, 1}});
  CHECK(trace.str() ==
        "round 1\n"
        "match 0 0\n"
        "give 1 1\n"
        "freeze 0 2\n"
        "round 2\n"
        "give 1 2\n"
        "round 3\n"
        "give 1 3\n"
        "final 1 4\n");

  // The shared good moves to the larger-ratio agent before allocation.
  Instance shared = make_instance({Rational(2), Rational(3)}, {"LS", "LS"});
  std::ostringstream trace2;
  Allocation y = match_modify_freeze(shared, {&trace2, true});
  CHECK(y == Allocation{{1, 0}});
  CHECK(trace2.str() ==
        "round 1\n"
        "adjust 1 0\n"
        "match 1 0\n"
        "give 0 1\n"
        "freeze 1 1\n");
}

TEST_CASE("EFX checker finds the binding removal") {
  Instance a = normalize({{50, 50, 1, 1}, {3, 1, 1, 1}});
  auto v = check_efx(a, Allocation{{1, 0, 1, 1}});
  REQUIRE(v);
  CHECK(*v == EfxViolation{0, 1, 2});

  CHECK_FALSE(check_efx(normalize({{6, 6, 1, 1}, {3, 3, 1, 1}}),
                        Allocation{{0, 1, 0, 1}}));

  Instance two = make_instance({Rational(2), Rational(2)}, {"LL", "LL"});
  CHECK_THROWS_AS(check_efx(two, Allocation{{0, kUnassigned}}), Error);
  CHECK_FALSE(efx_violation(two, Allocation{{0, kUnassigned}}));
}

TEST_CASE("checker agrees with removal enumeration on fuzzed allocations") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig config;
    config.seed = seed + 77'000;
    config.n_min = 2;
    config.n_max = 4;
    config.m_min = 0;
    config.m_max = 8;
    config.ratio_pool = {Rational(3, 2), Rational(2), Rational(7, 3), Rational(5)};
    Instance inst = generate_instance(config);
    SeededRng rng(seed);
    Allocation alloc = random_allocation(rng, inst.agent_count, inst.good_count);
    CHECK(!check_efx(inst, alloc) == efx_by_enumeration(inst, alloc));
  }
}

TEST_CASE("allocation passes the checker across fuzzed instances") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GeneratorConfig config;
    config.seed = seed + 123'000;
    config.n_min = 2;
    config.n_max = 6;
    config.m_min = 1;
    config.m_max = 20;
    config.ratio_pool = {Rational(3, 2), Rational(2), Rational(7, 3), Rational(3),
                         Rational(5)};
    config.large_density = (seed % 10) / 10.0;
    Instance inst = generate_instance(config);
    Allocation x = match_modify_freeze(inst, {nullptr, true});
    CHECK(x.complete());
    CHECK_FALSE(check_efx(inst, x));
  }
}
