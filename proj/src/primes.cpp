#include "qp/primes.hpp"

#include <algorithm>
#include <cmath>

#include "qp/error.hpp"

namespace qp {

namespace {

void require_prime(const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not a rational prime");
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// All (a, b) with N(a + b*w) = p, as raw coordinates.
std::vector<QuadInt> norm_solutions(const BigInt& p, RingId ring) {
  std::vector<QuadInt> out;
  const long absd = -ring.d();
  const BigInt bound = norm_equation_bound(p, ring);
  const BigInt target = ring.half_integer() ? BigInt(4 * p) : p;

  auto emit = [&](const BigInt& u, const BigInt& b) {
    for (int su : {1, -1}) {
      for (int sb : {1, -1}) {
        BigInt uu = su * u, bb = sb * b;
        if (ring.half_integer()) {
          // u = 2a + b
          BigInt twice_a = uu - bb;
          if (!mpz_even_p(twice_a.get_mpz_t())) continue;
          out.emplace_back(ring, BigInt(twice_a / 2), bb);
        } else {
          out.emplace_back(ring, uu, bb);
        }
      }
    }
  };

  if (target < BigInt(1) << 60) {
    const auto t = static_cast<std::uint64_t>(*to_int64(target));
    const auto bmax = static_cast<std::uint64_t>(*to_int64(bound));
    for (std::uint64_t b = 0; b <= bmax; ++b) {
      const std::uint64_t sub = static_cast<std::uint64_t>(absd) * b * b;
      if (sub > t) break;
      const std::uint64_t r = t - sub;
      const std::uint64_t u = isqrt_u64(r);
      if (u * u == r) emit(from_uint64(u), from_uint64(b));
    }
  } else {
    for (BigInt b = 0; b <= bound; ++b) {
      const BigInt r = target - absd * b * b;
      if (sgn(r) < 0) break;
      if (mpz_perfect_square_p(r.get_mpz_t())) {
        BigInt u;
        mpz_sqrt(u.get_mpz_t(), r.get_mpz_t());
        emit(u, b);
      }
    }
  }
  return out;
}

void divide_out(QuadInt& rest, const QuadInt& pi, unsigned long times) {
  for (unsigned long i = 0; i < times; ++i) {
    auto q = exact_divide(rest, pi);
    if (!q) {
      throw Error(ErrorKind::TheoremViolation,
                  "factor: expected " + format_element(pi) + " to divide " + format_element(rest));
    }
    rest = std::move(*q);
  }
}

}  // namespace

const char* prime_class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::Inert: return "inert";
    case PrimeClass::Ramified: return "ramified";
    case PrimeClass::Split: return "split";
  }
  return "?";
}

PrimeClass classify_rational_prime(const BigInt& p, RingId ring) {
  require_prime(p);
  const int d = ring.d();
  if (p == 2) {
    if (d == -1 || d == -2) return PrimeClass::Ramified;
    if (d == -7) return PrimeClass::Split;
    return PrimeClass::Inert;
  }
  if (mpz_divisible_p(BigInt(-d).get_mpz_t(), p.get_mpz_t())) return PrimeClass::Ramified;
  BigInt residue = d % p;
  if (sgn(residue) < 0) residue += p;
  return mpz_legendre(residue.get_mpz_t(), p.get_mpz_t()) == 1 ? PrimeClass::Split
                                                               : PrimeClass::Inert;
}

BigInt norm_equation_bound(const BigInt& p, RingId ring) {
  const long absd = -ring.d();
  const BigInt four_p = 4 * p;
  BigInt s;
  const BigInt q = four_p / absd;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  if (s * s * absd < four_p) ++s;
  return s;
}

QuadInt prime_above(const BigInt& p, RingId ring) {
  const PrimeClass c = classify_rational_prime(p, ring);
  if (c == PrimeClass::Inert) return QuadInt(ring, p, 0);

  std::optional<QuadInt> best;
  for (const QuadInt& s : norm_solutions(p, ring)) {
    if (!in_fundamental_sector(s)) continue;
    // Equal norms: the larger real part has the smaller argument.
    if (!best || twice_real_part(s) > twice_real_part(*best)) best = s;
  }
  if (!best) {
    throw Error(ErrorKind::TheoremViolation,
                "no element of norm " + p.get_str() + " found although p is not inert");
  }
  return *best;
}

QuadInt conjugate_prime(const QuadInt& pi) { return canonical_associate(conjugate(pi)); }

bool is_prime_element(const QuadInt& x) {
  if (x.is_zero()) return false;
  const BigInt n = norm(x);
  if (is_prime(n)) return true;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  BigInt q;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  if (!is_prime(q) || classify_rational_prime(q, x.ring()) != PrimeClass::Inert) return false;
  return is_associated(x, QuadInt(x.ring(), q, 0));
}

QuadInt QuadFactorization::product() const {
  QuadInt r = unit;
  for (const auto& f : factors) r = r * pow(f.prime, f.exp);
  return r;
}

QuadFactorization factor(const QuadInt& z) {
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "factor: zero element");
  const RingId ring = z.ring();
  QuadInt rest = z;
  std::vector<QuadPrimePower> factors;

  for (const auto& [p, e] : factor_rational(norm(z)).factors) {
    switch (classify_rational_prime(p, ring)) {
      case PrimeClass::Inert: {
        if (e % 2 != 0) {
          throw Error(ErrorKind::TheoremViolation,
                      "inert prime " + p.get_str() + " has odd valuation in a norm");
        }
        QuadInt q(ring, p, 0);
        divide_out(rest, q, e / 2);
        factors.push_back({q, e / 2});
        break;
      }
      case PrimeClass::Ramified: {
        QuadInt pi = prime_above(p, ring);
        divide_out(rest, pi, e);
        factors.push_back({pi, e});
        break;
      }
      case PrimeClass::Split: {
        QuadInt pi = prime_above(p, ring);
        QuadInt pibar = conjugate_prime(pi);
        unsigned long rho = 0;
        while (rho < e) {
          auto q = exact_divide(rest, pi);
          if (!q) break;
          rest = std::move(*q);
          ++rho;
        }
        divide_out(rest, pibar, e - rho);
        if (rho > 0) factors.push_back({pi, rho});
        if (e - rho > 0) factors.push_back({pibar, e - rho});
        break;
      }
    }
  }
  if (!is_unit(rest)) {
    throw Error(ErrorKind::TheoremViolation,
                "factor: cofactor " + format_element(rest) + " is not a unit");
  }
  std::sort(factors.begin(), factors.end(),
            [](const QuadPrimePower& x, const QuadPrimePower& y) {
              return canonical_less(x.prime, y.prime);
            });
  return QuadFactorization{rest, std::move(factors)};
}

unsigned long valuation(const QuadInt& pi, const QuadInt& z) {
  if (!is_prime_element(pi)) {
    throw Error(ErrorKind::NotPrime, format_element(pi) + " is not a prime element");
  }
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of zero");
  unsigned long k = 0;
  QuadInt rest = z;
  while (auto q = exact_divide(rest, pi)) {
    rest = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace qp
