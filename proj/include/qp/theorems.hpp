#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qp/bigint.hpp"
#include "qp/primes.hpp"
#include "qp/report.hpp"
#include "qp/rings.hpp"

namespace qp {

enum class NormTwoPrime { Xi, Epsilon, EpsilonBar };

const char* norm_two_prime_name(NormTwoPrime p);

/// The prime of norm 2 in d = -1, -2, -7: 1+i, sqrt(-2), (1+sqrt(-7))/2.
/// Throws PreconditionFailed for rings where 2 is inert.
QuadInt norm_two_prime(RingId ring);

/// z = xi^gamma * x for a 2-powerfully perfect z of even norm, with
/// delta_2(x) = 2^(gamma+1) m, N(x) = q m, q = 2^(gamma+1) - 1, m = q^k v.
struct EvenNormDecomposition {
  QuadInt z;
  QuadInt xi;
  NormTwoPrime which = NormTwoPrime::Xi;
  unsigned long gamma = 0;
  QuadInt x;
  BigInt q;
  BigInt m;
  unsigned long k = 0;
  BigInt v;
  BigInt delta2_x;
  BigInt norm_x;
};

/// Requires d in {-1, -2, -7}, even N(z) and I_2(z) = 2 (PreconditionFailed).
/// In d = -7 throws Thm23Violation if both eps and its conjugate divide z.
EvenNormDecomposition decompose_even(const QuadInt& z);

// Check ids accepted by `qp verify --theorem`.
inline constexpr const char* kCheckEvenIdentity = "2.1";
inline constexpr const char* kCheckEvenBounds = "2.2";
inline constexpr const char* kCheckSplitTwoIdentity = "2.3";
inline constexpr const char* kCheckSplitTwoBounds = "2.4";
inline constexpr const char* kCheckOddShape = "2.5";
inline constexpr const char* kCheckPrimeCount = "count";
inline constexpr const char* kCheckLift = "lift";
inline constexpr const char* kConjectureScan = "conjecture";

/// q = 2^(gamma+1) - 1 is prime and inert; in d = -7 also q = 3 (mod 7) and
/// gamma = 1 (mod 3).
VerifierReport check_mersenne_inert(unsigned long gamma, RingId ring);

/// gamma >= 1, x coprime to the norm-2 primes, delta_2(x) = 2^(gamma+1) m,
/// N(x) = q m with m odd, and q an inert Mersenne prime.
VerifierReport check_even_identity(const EvenNormDecomposition& dec);

/// k odd, v >= q + 2, m >= q^(k+1) + (q+3) sum_{j<=(k-1)/2} q^(2j) >= q^2+q+3,
/// rho_q(x) = (k+1)/2; the d = -7 congruences as well.
VerifierReport check_structure_bounds(const EvenNormDecomposition& dec);

/// Shape of an odd-norm 2-powerfully perfect number: exactly one prime with
/// odd exponent k, and k = N(pi) = 1 (mod 4). The factorization overload
/// checks the shape alone, for synthetic inputs.
VerifierReport check_odd_shape(const QuadFactorization& f);
VerifierReport check_odd_structure(const QuadInt& z);

std::size_t count_nonassociated_primes(const QuadInt& z);

/// 5 for d in {-1, -2}, 11 for d = -7, nullopt elsewhere.
std::optional<std::size_t> prime_count_threshold(RingId ring);

/// The `count` primes of smallest odd norm, one per associate class.
std::vector<QuadInt> odd_norm_prime_table(RingId ring, std::size_t count);

/// Reports the implication "I_2(z) = 2 and N(z) odd => at least threshold
/// nonassociated prime divisors", together with the bound that forces it:
/// the product of N/(N-1) over the threshold-1 smallest admissible odd-norm
/// primes is below 2.
VerifierReport check_prime_count(const QuadInt& z);

/// Product of N(pi)/(N(pi)-1); the supremum of I_2 over elements built from
/// these primes.
ExactRational index_supremum(const std::vector<QuadInt>& primes);

/// xi * z for odd-norm z; I_2(xi z) = (3/2) I_2(z). Requires d in {-1,-2,-7}
/// and odd N(z).
QuadInt multiply_by_norm_two_prime(const QuadInt& z);

/// xi * z for I_2(z) = 2 and odd N(z); the result is 2-powerfully 3-perfect.
QuadInt lift_to_3perfect(const QuadInt& z);
VerifierReport check_lift(const QuadInt& z);

/// Searches N <= bound for 2-powerfully perfect numbers and records k for
/// every even-norm hit; the report passes iff every such k equals 1.
VerifierReport conjecture_scan(RingId ring, std::uint64_t bound);

/// Dispatch by check id (see the kCheck* constants).
VerifierReport verify(const std::string& check_id, const QuadInt& z);

}  // namespace qp
