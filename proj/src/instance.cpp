#include "fairdiv/instance.hpp"

#include "fairdiv/error.hpp"

#include <algorithm>
#include <limits>

namespace fairdiv {

Rational Instance::value(int agent, int good) const {
  return is_large(agent, good) ? ratios[agent] : Rational(1);
}

Rational Instance::raw_value(int agent, int good) const {
  if (has_raw_values()) return raw_values[agent][good];
  return value(agent, good);
}

bool Instance::integral_ratios() const {
  return std::all_of(ratios.begin(), ratios.end(),
                     [](const Rational& r) { return is_integral(r); });
}

void Instance::validate() const {
  if (agent_count < 1) fail(ErrorKind::domain, "instance needs at least one agent");
  if (good_count < 0) fail(ErrorKind::domain, "negative good count");
  if (static_cast<int>(ratios.size()) != agent_count)
    fail(ErrorKind::dimension, "ratio count does not match agent count");
  if (large_bits.size() != static_cast<size_t>(agent_count) * good_count)
    fail(ErrorKind::dimension, "large matrix does not match instance dimensions");
  for (int i = 0; i < agent_count; ++i) {
    if (ratios[i] <= 1)
      fail(ErrorKind::domain,
           "agent " + std::to_string(i) + ": ratio " + format_rational(ratios[i]) +
               " is not greater than 1");
  }
  if (!raw_values.empty()) {
    if (static_cast<int>(raw_values.size()) != agent_count)
      fail(ErrorKind::dimension, "raw value matrix does not match agent count");
    for (const auto& row : raw_values)
      if (static_cast<int>(row.size()) != good_count)
        fail(ErrorKind::dimension, "raw value row does not match good count");
  }
}

Instance make_instance(std::vector<Rational> ratios,
                       const std::vector<std::string>& large_rows) {
  Instance inst;
  inst.agent_count = static_cast<int>(ratios.size());
  inst.good_count = large_rows.empty() ? 0 : static_cast<int>(large_rows[0].size());
  inst.ratios = std::move(ratios);
  if (static_cast<int>(large_rows.size()) != inst.agent_count)
    fail(ErrorKind::dimension, "large row count does not match agent count");
  inst.large_bits.assign(static_cast<size_t>(inst.agent_count) * inst.good_count, 0);
  for (int i = 0; i < inst.agent_count; ++i) {
    const std::string& row = large_rows[i];
    if (static_cast<int>(row.size()) != inst.good_count)
      fail(ErrorKind::dimension, "agent " + std::to_string(i) + ": ragged large row");
    for (int g = 0; g < inst.good_count; ++g) {
      if (row[g] != 'L' && row[g] != 'S')
        fail(ErrorKind::parse, std::string("bad large/small character '") + row[g] + "'");
      inst.set_large(i, g, row[g] == 'L');
    }
  }
  inst.validate();
  return inst;
}

Instance normalize(std::vector<std::vector<Rational>> raw) {
  if (raw.empty()) fail(ErrorKind::domain, "value matrix needs at least one agent");
  Instance inst;
  inst.agent_count = static_cast<int>(raw.size());
  inst.good_count = static_cast<int>(raw[0].size());
  inst.large_bits.assign(static_cast<size_t>(inst.agent_count) * inst.good_count, 0);
  inst.ratios.reserve(inst.agent_count);
  for (int i = 0; i < inst.agent_count; ++i) {
    const auto& row = raw[i];
    if (static_cast<int>(row.size()) != inst.good_count)
      fail(ErrorKind::dimension, "agent " + std::to_string(i) + ": ragged value row");
    Rational low(0), high(0);
    int distinct = 0;
    for (const Rational& v : row) {
      if (v <= 0)
        fail(ErrorKind::domain,
             "agent " + std::to_string(i) + ": non-positive value " + format_rational(v));
      if (distinct == 0) {
        low = high = v;
        distinct = 1;
      } else if (v != low && v != high) {
        if (distinct == 2)
          fail(ErrorKind::domain,
               "agent " + std::to_string(i) + ": more than two distinct values");
        distinct = 2;
        if (v < low) low = v;
        else high = v;
      }
    }
    if (distinct != 2)
      fail(ErrorKind::domain,
           "agent " + std::to_string(i) +
               ": row does not take exactly two distinct values");
    inst.ratios.push_back(high / low);
    for (int g = 0; g < inst.good_count; ++g) inst.set_large(i, g, row[g] == high);
  }
  inst.raw_values = std::move(raw);
  inst.validate();
  return inst;
}

namespace detail {

std::vector<std::vector<long long>> integer_weights(const Instance& inst) {
  constexpr long long kLimit = 1'000'000'000'000LL;
  std::vector<std::vector<long long>> w(inst.agent_count,
                                        std::vector<long long>(inst.good_count));
  for (int i = 0; i < inst.agent_count; ++i) {
    const BigInt& p = numerator(inst.ratios[i]);
    const BigInt& q = denominator(inst.ratios[i]);
    if (p > kLimit || q > kLimit)
      fail(ErrorKind::budget, "ratio magnitude exceeds the exact integer fast path");
    long long pl = p.convert_to<long long>();
    long long ql = q.convert_to<long long>();
    if (inst.good_count > 0 &&
        pl > std::numeric_limits<long long>::max() / (inst.good_count + 1))
      fail(ErrorKind::budget, "instance too large for the exact integer fast path");
    for (int g = 0; g < inst.good_count; ++g)
      w[i][g] = inst.is_large(i, g) ? pl : ql;
  }
  return w;
}

}  // namespace detail

}  // namespace fairdiv
