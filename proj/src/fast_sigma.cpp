#include "fast_sigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qp/int_factor.hpp"

namespace qp::detail {

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = static_cast<std::uint64_t>(u128{r} * base % m);
    base = static_cast<std::uint64_t>(u128{base} * base % m);
    exp >>= 1;
  }
  return r;
}

unsigned vp(std::uint64_t p, std::int64_t x) {
  if (x == 0) return ~0U;
  std::uint64_t m = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

// 1 + p + ... + p^e
u128 sigma(u128 p, unsigned e) {
  u128 s = 1, t = 1;
  for (unsigned j = 0; j < e; ++j) {
    t *= p;
    s += t;
  }
  return s;
}

}  // namespace

SmallDelta2::SmallDelta2(int d, std::uint64_t max_norm) : d_(d) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(max_norm))) + 2;
  primes_ = primes_below(static_cast<std::uint32_t>(root + 1));
}

SmallDelta2::Kind SmallDelta2::classify(std::uint64_t p) const {
  if (p == 2) {
    if (d_ == -1 || d_ == -2) return Kind::Ramified;
    return d_ == -7 ? Kind::Split : Kind::Inert;
  }
  const auto absd = static_cast<std::uint64_t>(-d_);
  if (absd % p == 0) return Kind::Ramified;
  const std::uint64_t residue = p - absd % p;  // d mod p
  return powmod(residue, (p - 1) / 2, p) == 1 ? Kind::Split : Kind::Inert;
}

u128 SmallDelta2::operator()(std::int64_t a, std::int64_t b, std::uint64_t norm) const {
  u128 result = 1;
  std::uint64_t m = norm;
  auto account = [&](std::uint64_t p, unsigned e) {
    switch (classify(p)) {
      case Kind::Inert:
        if (e % 2 != 0) throw std::logic_error("inert prime with odd exponent in a norm");
        result *= sigma(u128{p} * p, e / 2);
        break;
      case Kind::Ramified:
        result *= sigma(p, e);
        break;
      case Kind::Split: {
        const unsigned s = std::min({vp(p, a), vp(p, b), e});
        result *= sigma(p, s) * sigma(p, e - s);
        break;
      }
    }
  };
  for (std::uint32_t p : primes_) {
    if (std::uint64_t{p} * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    account(p, e);
  }
  if (m > 1) account(m, 1);
  return result;
}

}  // namespace qp::detail
