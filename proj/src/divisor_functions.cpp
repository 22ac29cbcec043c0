#include "qp/divisor_functions.hpp"

#include <algorithm>

#include "qp/error.hpp"

namespace qp {

namespace {

void require_even_nonzero(long n) {
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, "delta needs n != 0");
  if (n % 2 != 0) {
    throw Error(ErrorKind::OddExponent,
                "odd n=" + std::to_string(n) + " gives irrational |x|^n; only even n is exact");
  }
}

// N^(n/2) for even n, exact.
ExactRational norm_power(const BigInt& norm_value, long n) {
  const unsigned long h = static_cast<unsigned long>(n > 0 ? n / 2 : -n / 2);
  const BigInt p = pow(norm_value, h);
  if (n > 0) return ExactRational(p);
  return make_rational(1, p);
}

// 1 + x + x^2 + ... + x^e
ExactRational geometric(const ExactRational& x, unsigned long e) {
  ExactRational sum = 1, term = 1;
  for (unsigned long j = 0; j < e; ++j) {
    term *= x;
    sum += term;
  }
  return sum;
}

}  // namespace

DivisorList divisors(const QuadFactorization& f) {
  std::size_t count = 1;
  for (const auto& pp : f.factors) {
    count *= pp.exp + 1;
    if (count > kMaxDivisors) {
      throw Error(ErrorKind::TooLarge, "more than 2^20 divisors; use the closed form");
    }
  }
  const RingId ring = f.ring();
  DivisorList out{QuadInt::one(ring)};
  out.reserve(count);
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    QuadInt power = QuadInt::one(ring);
    for (unsigned long j = 1; j <= pp.exp; ++j) {
      power = power * pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  for (QuadInt& x : out) x = canonical_associate(x);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

DivisorList divisors(const QuadInt& z) { return divisors(factor(z)); }

ExactRational delta(long n, const QuadFactorization& f) {
  require_even_nonzero(n);
  ExactRational r = 1;
  for (const auto& pp : f.factors) r *= geometric(norm_power(norm(pp.prime), n), pp.exp);
  return r;
}

ExactRational delta(long n, const QuadInt& z) {
  require_even_nonzero(n);
  return delta(n, factor(z));
}

ExactRational delta_naive(long n, const QuadInt& z) {
  require_even_nonzero(n);
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "delta_naive: zero element");
  if (norm(z) > kNaiveNormGuard) {
    throw Error(ErrorKind::TooLarge, "delta_naive limited to N(z) <= 10^6");
  }
  ExactRational sum = 0;
  for (const QuadInt& x : divisors(z)) sum += norm_power(norm(x), n);
  return sum;
}

ExactRational index(long n, const QuadInt& z) {
  if (n <= 0) throw Error(ErrorKind::PreconditionFailed, "index needs a positive n");
  require_even_nonzero(n);
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "index: zero element");
  return delta(n, z) / norm_power(norm(z), n);
}

bool is_powerfully_perfect(long n, long t, const QuadInt& z) {
  return index(n, z) == ExactRational(t);
}

ExactRational sigma_int(long k, const BigInt& n) {
  if (n < 1) throw Error(ErrorKind::ZeroInput, "sigma_int needs n >= 1");
  if (k == 0) throw Error(ErrorKind::PreconditionFailed, "sigma_int needs k != 0");
  ExactRational r = 1;
  const unsigned long mag = static_cast<unsigned long>(k > 0 ? k : -k);
  for (const auto& [p, e] : factor_rational(n).factors) {
    const BigInt pk = pow(p, mag);
    r *= geometric(k > 0 ? ExactRational(pk) : make_rational(1, pk), e);
  }
  return r;
}

}  // namespace qp
