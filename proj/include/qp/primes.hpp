#pragma once

#include <vector>

#include "qp/bigint.hpp"
#include "qp/int_factor.hpp"
#include "qp/rings.hpp"

namespace qp {

enum class PrimeClass { Inert, Ramified, Split };

const char* prime_class_name(PrimeClass c);

/// Behaviour of the rational prime p in the ring. Throws Error(NotPrime).
PrimeClass classify_rational_prime(const BigInt& p, RingId ring);

/// Search range |b| <= ceil(2 sqrt(p/|d|)) used when solving N(x) = p.
BigInt norm_equation_bound(const BigInt& p, RingId ring);

/// Canonical prime lying above p: p itself when inert, otherwise the
/// sector-canonical solution of N(pi) = p. For split p the two conjugate
/// solutions are ordered by argument and the one closer to the positive
/// real axis is returned (2+i rather than 1+2i).
QuadInt prime_above(const BigInt& p, RingId ring);

/// Sector-canonical associate of conj(pi).
QuadInt conjugate_prime(const QuadInt& pi);

bool is_prime_element(const QuadInt& x);

struct QuadPrimePower {
  QuadInt prime;
  unsigned long exp;

  friend bool operator==(const QuadPrimePower&, const QuadPrimePower&) = default;
};

struct QuadFactorization {
  QuadInt unit;
  std::vector<QuadPrimePower> factors;  // sorted by (norm, a, b)

  RingId ring() const { return unit.ring(); }
  QuadInt product() const;
};

QuadFactorization factor(const QuadInt& z);

/// Largest k with pi^k | z.
unsigned long valuation(const QuadInt& pi, const QuadInt& z);

}  // namespace qp
