#pragma once

#include <cstddef>
#include <optional>

#include "shor/numtheory.hpp"
#include "shor/rational.hpp"

namespace shor::closedform {

using numtheory::Factorization;

/// The quantities every closed form is assembled from.
struct ClosedFormTerms {
  unsigned long sum_s = 0;                 // sum of the s_i
  Integer two_pow_sum;                     // 2^(sum of s_i)
  std::size_t l = 0;                       // number of odd primes
  std::optional<unsigned long> s_min;      // min s_i, defined when l >= 1
  std::optional<Integer> t_count;          // T = (2^(l*s_min)-1)/(2^l-1)
  Integer m_product;                       // prod m_i
  Integer p_product;                       // prod p_i
  Integer mprime_product;                  // prod m'_i
};

ClosedFormTerms closed_form_terms(const Factorization& f);

enum class FailureKind {
  StepTwoFails,                 // N = 2
  StepThreeFailsFour,           // N = 4
  StepThreeFailsPrimePower,     // N = p^k, p odd
  StepThreeFailsTwicePrimePower,// N = 2 p^k, p odd
  CanSucceed,
};

struct FailureClass {
  FailureKind kind = FailureKind::CanSucceed;
  std::optional<numtheory::PrimePower> witness;  // (p, k) for the p^k shapes
};

/// Stable string tags used by every external surface.
const char* failure_tag(FailureKind kind);

struct StepProbabilities {
  Rational p_coprime;
  Rational p_even_given_coprime;
  Rational p_good_given_even;
  Rational p_overall;  // exact product of the three
};

/// Probability that uniform a in [0, N) is coprime to N: phi(N)/N.
Rational step1_probability(const Factorization& f);

/// Conditional probability of even order given coprimality:
/// 1 - 2^-E with E = max(k0-1, 0) + sum s_i.
Rational step2_probability(const Factorization& f);

/// Conditional probability that an even-order unit has half-power != -1.
/// Zero by convention for N = 2, where no even-order element exists.
Rational step3_probability(const Factorization& f);

/// All three step probabilities and their exact product.
StepProbabilities overall_probability(const Factorization& f);

/// The two overall theorems evaluated literally as printed; kept separate
/// from the composed product for cross-checking. Throws UnsupportedCaseError
/// for N = 2 (outside both printed domains).
Rational printed_overall_probability(const Factorization& f);

FailureClass classify_failure(const Factorization& f);

}  // namespace shor::closedform
