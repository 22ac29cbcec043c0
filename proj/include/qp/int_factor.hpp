#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qp/bigint.hpp"

namespace qp {

struct PrimePower {
  BigInt p;
  unsigned long exp;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive rational integer, primes strictly increasing.
struct IntFactorization {
  std::vector<PrimePower> factors;

  BigInt product() const;
  friend bool operator==(const IntFactorization&, const IntFactorization&) = default;
};

/// Miller-Rabin with the first thirteen prime bases, which is deterministic
/// below 3.3e24. Above that bound the answer is a strong probable prime.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Trial division up to 10^6, then Brent's variant of Pollard rho on the
/// remaining cofactor with Miller-Rabin certification of each factor.
/// factor_rational(1) is the empty factorization.
IntFactorization factor_rational(const BigInt& n);

/// Largest k with p^k | n. Throws NotPrime or ZeroInput.
unsigned long int_valuation(const BigInt& p, const BigInt& n);

/// Sieved primes below `limit` (limit <= 10^7).
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

}  // namespace qp
