#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "shor/closedform.hpp"
#include "shor/numtheory.hpp"

namespace shor::oracle {

using numtheory::Factorization;
using numtheory::OrderContext;

/// Everything the brute-force route knows about one residue a mod N.
struct ElementRecord {
  Integer a;
  Integer gcd_with_n;
  std::optional<Integer> order;       // present iff gcd_with_n = 1
  bool order_is_even = false;
  std::optional<Integer> half_power;  // a^(order/2), present iff order even
  bool is_minus_one = false;          // half_power = N - 1
  bool success = false;               // unit, even order, half-power != -1
  std::vector<Integer> factors_found; // nontrivial gcd(half_power +- 1, N)
};

/// Exhaustive counts over a in {0, ..., N-1}.
struct OracleCensus {
  Integer n;
  std::uint64_t total = 0;
  std::uint64_t coprime_count = 0;
  std::uint64_t even_order_count = 0;
  std::uint64_t odd_order_count = 0;
  std::uint64_t minus_one_count = 0;   // even order with half-power = -1
  std::uint64_t success_count = 0;
  std::uint64_t gcd_shortcut_count = 0;  // 1 < gcd(a, N) < N

  bool operator==(const OracleCensus& other) const = default;
};

inline constexpr std::uint64_t kDefaultCensusLimit = 1'000'000;

struct CensusOptions {
  std::uint64_t limit = kDefaultCensusLimit;
  unsigned workers = 0;  // 0 = hardware concurrency
};

ElementRecord element_record(const Integer& a, const Factorization& f);
ElementRecord element_record(const Integer& a, const Factorization& f,
                             const OrderContext& ctx);

/// Full enumeration; partitioned over workers, merged by addition, so the
/// counts are identical for every worker count. Throws ResourceLimitError
/// when N exceeds opts.limit.
OracleCensus census(const Factorization& f, const CensusOptions& opts = {});

/// Streams the per-element records in order of a (single pass) and returns
/// the same census the counting route produces.
OracleCensus for_each_element(const Factorization& f, const CensusOptions& opts,
                              const std::function<void(const ElementRecord&)>& sink);

/// Count-to-ratio conversion: (coprime/total, even/coprime, success/even,
/// success/total), success/even = 0 by convention when even = 0.
closedform::StepProbabilities oracle_probabilities(const OracleCensus& c);

}  // namespace shor::oracle
