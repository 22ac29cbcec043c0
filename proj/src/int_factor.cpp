#include "qp/int_factor.hpp"

#include <algorithm>
#include <map>

#include "qp/error.hpp"

namespace qp {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kSmallWheelLimit = 10'000'000'000;
constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kTrialLimit + 1);
  return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool witness_u64(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool witness_mpz(const BigInt& n, unsigned long a, const BigInt& d, unsigned long s) {
  const BigInt nm1 = n - 1;
  BigInt x;
  const BigInt base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

// Nontrivial factor of a composite n without factors below the trial limit.
BigInt brent_rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long steps = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          q = q * abs(BigInt(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched gcd overshot; replay one step at a time.
      do {
        ys = f(ys);
        const BigInt diff = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(const BigInt& n, std::map<BigInt, unsigned long>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  BigInt root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_large(root, acc);
    split_large(root, acc);
    return;
  }
  const BigInt g = brent_rho(n);
  split_large(g, acc);
  split_large(BigInt(n / g), acc);
}

}  // namespace

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  if (limit > 10'000'000) throw Error(ErrorKind::TooLarge, "primes_below limit above 10^7");
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

BigInt IntFactorization::product() const {
  BigInt r = 1;
  for (const auto& f : factors) r *= pow(f.p, f.exp);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned long a : kWitnesses) {
    if (!witness_u64(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (auto small = to_int64(n)) return is_prime(static_cast<std::uint64_t>(*small));
  for (unsigned long p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
  }
  BigInt d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : kWitnesses) {
    if (!witness_mpz(n, a, d, s)) return false;
  }
  return true;
}

IntFactorization factor_rational(const BigInt& n) {
  if (n < 1) throw Error(ErrorKind::ZeroInput, "factor_rational needs n >= 1");
  IntFactorization out;
  BigInt rest = n;

  if (auto small = to_int64(rest)) {
    u64 m = static_cast<u64>(*small);
    auto strip = [&](u64 p) {
      if (m % p != 0) return;
      unsigned long e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.factors.push_back({from_uint64(p), e});
    };
    if (m < kSmallWheelLimit) {
      // Small inputs skip the sieve: 2, 3, then 6j +- 1.
      strip(2);
      strip(3);
      for (u64 p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
      }
      if (m > 1) out.factors.push_back({from_uint64(m), 1});
      return out;
    }
    for (std::uint32_t p : trial_primes()) {
      if (u64{p} * p > m) break;
      strip(p);
    }
    rest = from_uint64(m);
    if (m > 1 && m < u64{kTrialLimit} * kTrialLimit) {
      // Every prime below the trial limit was tried, so m is prime.
      out.factors.push_back({rest, 1});
      return out;
    }
  } else {
    for (std::uint32_t p : trial_primes()) {
      if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
      unsigned long e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.factors.push_back({BigInt(p), e});
    }
    if (rest > 1 && rest < BigInt(kTrialLimit) * kTrialLimit) {
      out.factors.push_back({rest, 1});
      return out;
    }
  }

  std::map<BigInt, unsigned long> large;
  split_large(rest, large);
  for (auto& [p, e] : large) out.factors.push_back({p, e});
  return out;
}

unsigned long int_valuation(const BigInt& p, const BigInt& n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  if (sgn(n) == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  BigInt rest = n;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace qp
