#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shor/rational.hpp"

namespace shor::numtheory {

struct PrimePower {
  Integer p;
  unsigned long k = 1;
};

/// Odd prime power p^k together with the 2-adic split p - 1 = 2^s * m.
struct OddFactor {
  Integer p;
  unsigned long k = 1;
  unsigned long s = 1;   // 2-adic valuation of p - 1
  Integer m;             // odd part of p - 1
  Integer m_prime;       // m * p^(k-1), odd part of (p-1)p^(k-1)
};

/// N = 2^k0 * prod p_i^k_i with the p_i odd, distinct, strictly increasing.
/// k0 = 0 and an empty odd list are both permitted (but not simultaneously).
struct Factorization {
  Integer n;
  unsigned long k0 = 0;
  std::vector<OddFactor> odd_factors;
};

/// Greatest common divisor; throws InvalidInputError when both are zero.
Integer gcd(const Integer& a, const Integer& b);

/// base^exp mod modulus (modulus >= 2, exp >= 0).
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus);

/// 64-bit fast path of mod_pow; products run through 128-bit intermediates.
std::uint64_t mod_pow_u64(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t modulus);

/// Primality test: deterministic Miller-Rabin witness set below 2^64,
/// `rounds` pseudorandom witnesses (deterministic per n) above.
bool is_prime(const Integer& n, int rounds = 64);

/// Sorted list of prime powers of n >= 2. Trial division to a fixed bound,
/// then Pollard rho with primality certification of every cofactor.
std::vector<PrimePower> prime_power_list(const Integer& n);

Factorization factorize(const Integer& n);

/// Builds a validated Factorization from prime powers (duplicates merged,
/// every base required to pass is_prime).
Factorization factorization_from_prime_powers(std::vector<PrimePower> parts);

Integer euler_phi(const Factorization& f);

/// Exponent of the unit group: lcm of lambda(2^k0) and (p_i-1)p_i^(k_i-1).
Integer carmichael_lambda(const Factorization& f);

/// lambda(N) and its factorization, precomputed once and shared by the
/// per-element order queries of a census sweep.
class OrderContext {
 public:
  explicit OrderContext(const Factorization& f);

  /// Least r >= 1 with a^r = 1 mod N; throws NotAUnitError if gcd(a, N) != 1.
  Integer order_of(const Integer& a) const;

  /// Same on the 64-bit fast path; valid only when has_fast_path().
  std::uint64_t order_of_u64(std::uint64_t a) const;

  bool has_fast_path() const { return fast_; }
  std::uint64_t modulus_u64() const { return n64_; }

  const Integer& modulus() const { return n_; }
  const Integer& lambda() const { return lambda_; }
  const std::vector<PrimePower>& lambda_factors() const {
    return lambda_factors_;
  }

 private:
  Integer n_;
  Integer lambda_;
  std::vector<PrimePower> lambda_factors_;
  bool fast_ = false;
  std::uint64_t n64_ = 0;
  std::uint64_t lambda64_ = 0;
  std::vector<std::pair<std::uint64_t, int>> lambda_factors64_;
};

/// Convenience wrapper: builds an OrderContext for a single query.
Integer multiplicative_order(const Integer& a, const Factorization& f);

}  // namespace shor::numtheory
