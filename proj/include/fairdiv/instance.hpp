#pragma once

#include "fairdiv/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fairdiv {

/// A personalized bi-valued instance in ratio-normalized form: agent i values
/// every good at either r_i (large) or 1 (small), with r_i > 1.
///
/// When the instance was derived from a denormalized value matrix, the original
/// values are kept in raw_values (used only where denormalized utilities are
/// explicitly wanted, e.g. Nash-welfare maximization).
struct Instance {
  int agent_count = 0;
  int good_count = 0;
  std::vector<Rational> ratios;              // per agent, each > 1
  std::vector<std::uint8_t> large_bits;      // row-major agent x good
  std::vector<std::vector<Rational>> raw_values;  // empty unless denormalized input

  bool is_large(int agent, int good) const {
    return large_bits[static_cast<size_t>(agent) * good_count + good] != 0;
  }
  void set_large(int agent, int good, bool large) {
    large_bits[static_cast<size_t>(agent) * good_count + good] = large ? 1 : 0;
  }

  bool has_raw_values() const { return !raw_values.empty(); }

  /// Normalized value of a good for an agent: r_i or 1.
  Rational value(int agent, int good) const;

  /// Denormalized value when raw values are present, normalized otherwise.
  Rational raw_value(int agent, int good) const;

  bool integral_ratios() const;

  /// Throws Error on inconsistent dimensions or a ratio <= 1.
  void validate() const;
};

/// Builds an instance from ratios and rows of 'L'/'S' characters.
Instance make_instance(std::vector<Rational> ratios,
                       const std::vector<std::string>& large_rows);

/// Derives the normalized instance from a positive value matrix in which each
/// agent's row takes exactly two distinct values a_i > b_i > 0. The ratio
/// becomes a_i/b_i and a good is large exactly when it is valued at a_i.
/// Rows with one distinct value (or more than two, or non-positive entries)
/// are rejected with an error naming the agent.
Instance normalize(std::vector<std::vector<Rational>> raw);

namespace detail {

/// Per-agent integer weights over the agent's fixed denominator: with
/// r_i = p_i/q_i in lowest terms, a large good weighs p_i and a small one q_i.
/// Utility comparisons for one agent across bundles reduce to integer
/// comparisons of weight sums.
std::vector<std::vector<long long>> integer_weights(const Instance& inst);

}  // namespace detail

}  // namespace fairdiv
