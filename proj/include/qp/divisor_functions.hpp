#pragma once

#include <vector>

#include "qp/bigint.hpp"
#include "qp/primes.hpp"
#include "qp/rings.hpp"

namespace qp {

// One sector-canonical representative per associate class of divisors,
// sorted by (norm, a, b).
using DivisorList = std::vector<QuadInt>;

inline constexpr std::size_t kMaxDivisors = std::size_t{1} << 20;
inline constexpr long kNaiveNormGuard = 1'000'000;

/// Throws TooLarge above kMaxDivisors.
DivisorList divisors(const QuadInt& z);
DivisorList divisors(const QuadFactorization& f);

/// Sum of |x|^n = N(x)^(n/2) over canonical divisors x, via the multiplicative
/// closed form. n must be even and nonzero; negative n gives a rational.
ExactRational delta(long n, const QuadInt& z);
ExactRational delta(long n, const QuadFactorization& f);

/// Literal sum over divisors(z); the oracle for delta. Requires N(z) <= 10^6.
ExactRational delta_naive(long n, const QuadInt& z);

/// delta_n(z) / N(z)^(n/2) for positive even n.
ExactRational index(long n, const QuadInt& z);

bool is_powerfully_perfect(long n, long t, const QuadInt& z);

/// sigma_k(n) = sum of c^k over positive divisors c of n, by the closed form
/// over the factorization of n.
ExactRational sigma_int(long k, const BigInt& n);

}  // namespace qp
