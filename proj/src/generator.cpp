#include "fairdiv/generator.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

long long SeededRng::below(long long bound) {
  if (bound <= 0) fail(ErrorKind::internal, "empty draw range");
  return static_cast<long long>(next() % static_cast<std::uint64_t>(bound));
}

long long SeededRng::in_range(long long lo, long long hi) {
  return lo + below(hi - lo + 1);
}

double SeededRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void GeneratorConfig::validate() const {
  if (n_min < 1 || n_min > n_max)
    fail(ErrorKind::domain, "invalid agent-count range");
  if (m_min < 0 || m_min > m_max)
    fail(ErrorKind::domain, "invalid good-count range");
  if (ratio_pool.empty()) fail(ErrorKind::domain, "empty ratio pool");
  for (const Rational& r : ratio_pool)
    if (r <= 1)
      fail(ErrorKind::domain,
           "ratio " + format_rational(r) + " in pool is not greater than 1");
  if (large_density < 0.0 || large_density > 1.0)
    fail(ErrorKind::domain, "density must lie in [0, 1]");
}

Instance generate_instance(const GeneratorConfig& config) {
  config.validate();
  SeededRng rng(config.seed);
  Instance inst;
  inst.agent_count = static_cast<int>(rng.in_range(config.n_min, config.n_max));
  inst.good_count = static_cast<int>(rng.in_range(config.m_min, config.m_max));
  for (int i = 0; i < inst.agent_count; ++i)
    inst.ratios.push_back(
        config.ratio_pool[rng.below(static_cast<long long>(config.ratio_pool.size()))]);
  inst.large_bits.assign(
      static_cast<size_t>(inst.agent_count) * inst.good_count, 0);
  for (int i = 0; i < inst.agent_count; ++i)
    for (int g = 0; g < inst.good_count; ++g)
      inst.set_large(i, g, rng.unit() < config.large_density);
  inst.validate();
  return inst;
}

Allocation random_allocation(SeededRng& rng, int agent_count, int good_count) {
  Allocation alloc;
  alloc.owner.resize(good_count);
  for (int g = 0; g < good_count; ++g)
    alloc.owner[g] = static_cast<int>(rng.below(agent_count));
  return alloc;
}

}  // namespace fairdiv
