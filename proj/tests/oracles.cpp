#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

bool half(int d) { return ((d % 4) + 4) % 4 == 1; }

Elem conj(int d, Elem x) { return half(d) ? Elem{x.a + x.b, -x.b} : Elem{x.a, -x.b}; }

}  // namespace

std::int64_t norm(int d, Elem x) {
  if (half(d)) return x.a * x.a + x.a * x.b + x.b * x.b * ((1 - d) / 4);
  return x.a * x.a - d * x.b * x.b;
}

Elem mul(int d, Elem x, Elem y) {
  if (half(d)) {
    const std::int64_t c = (d - 1) / 4;
    return {x.a * y.a + c * x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

bool divides(int d, Elem y, Elem x) {
  const std::int64_t n = norm(d, y);
  if (n == 0) throw std::invalid_argument("oracle: division by zero");
  const Elem p = mul(d, x, conj(d, y));
  return p.a % n == 0 && p.b % n == 0;
}

std::vector<Elem> unit_group(int d) {
  // Every element of norm 1, by scanning a box that must contain them.
  std::vector<Elem> out;
  for (std::int64_t a = -2; a <= 2; ++a) {
    for (std::int64_t b = -2; b <= 2; ++b) {
      if (norm(d, {a, b}) == 1) out.push_back({a, b});
    }
  }
  return out;
}

Elem class_key(int d, Elem x) {
  Elem best = x;
  for (const Elem& u : unit_group(d)) best = std::min(best, mul(d, u, x));
  return best;
}

std::vector<Elem> lattice_box(int d, std::int64_t bound) {
  std::vector<Elem> out;
  // N >= |d| b^2 / 4 and N >= (3/4) a^2 in every basis used here.
  const auto bmax = static_cast<std::int64_t>(std::sqrt(4.0 * bound / -d)) + 1;
  const auto amax = static_cast<std::int64_t>(std::sqrt(4.0 * bound / 3.0)) + bmax + 1;
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    for (std::int64_t a = -amax; a <= amax; ++a) {
      const std::int64_t n = norm(d, {a, b});
      if (n >= 1 && n <= bound) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<Elem> lattice_divisors(int d, Elem z) {
  const std::int64_t nz = norm(d, z);
  std::set<Elem> classes;
  for (const Elem& x : lattice_box(d, nz)) {
    if (nz % norm(d, x) != 0) continue;
    if (divides(d, x, z)) classes.insert(class_key(d, x));
  }
  return {classes.begin(), classes.end()};
}

std::int64_t lattice_delta2(int d, Elem z) {
  std::int64_t sum = 0;
  for (const Elem& x : lattice_divisors(d, z)) sum += norm(d, x);
  return sum;
}

char classify_by_residues(int d, std::int64_t p) {
  if (p == 2) throw std::invalid_argument("residue scan needs odd p");
  const std::int64_t dm = ((d % p) + p) % p;
  if (dm == 0) return 'R';
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == dm) return 'S';
  }
  return 'I';
}

char classify_by_norm_form(int d, std::int64_t p) {
  for (const Elem& x : lattice_box(d, p)) {
    if (norm(d, x) != p) continue;
    const Elem c = conj(d, x);
    return class_key(d, x) == class_key(d, c) ? 'R' : 'S';
  }
  return 'I';
}

std::int64_t sigma_direct(int k, std::int64_t n) {
  std::int64_t sum = 0;
  for (std::int64_t c = 1; c <= n; ++c) {
    if (n % c != 0) continue;
    std::int64_t term = 1;
    for (int i = 0; i < k; ++i) term *= c;
    sum += term;
  }
  return sum;
}

bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

}  // namespace oracle
