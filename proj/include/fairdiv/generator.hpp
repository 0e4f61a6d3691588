#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fairdiv {

/// Deterministic random source. The bounded draws avoid
/// std::uniform_int_distribution on purpose: its output is not pinned by the
/// standard, and generated files must be reproducible across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  long long below(long long bound);                 // uniform-ish in [0, bound)
  long long in_range(long long lo, long long hi);   // inclusive
  double unit();                                    // [0, 1)

 private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n_min = 2, n_max = 4;
  int m_min = 2, m_max = 7;
  std::vector<Rational> ratio_pool = {Rational(2), Rational(3), Rational(4),
                                      Rational(5)};
  double large_density = 0.5;

  void validate() const;
};

/// Instance fully determined by the config (draw order: n, m, per-agent
/// ratios, then the large matrix row by row).
Instance generate_instance(const GeneratorConfig& config);

/// Complete allocation with every owner drawn uniformly.
Allocation random_allocation(SeededRng& rng, int agent_count, int good_count);

}  // namespace fairdiv
