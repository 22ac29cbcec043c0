#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qp/divisor_functions.hpp"
#include "qp/error.hpp"
#include "qp/search.hpp"
#include "qp/serialize.hpp"

namespace qp {
namespace {

QuadInt el(int d, long a, long b) { return QuadInt(RingId(d), a, b); }

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<long> norms_of(const DivisorList& xs) {
  std::vector<long> out;
  for (const QuadInt& x : xs) out.push_back(norm(x).get_si());
  return out;
}

TEST(Divisors, Examples) {
  const DivisorList ds = divisors(el(-1, 9, 3));
  auto ns = norms_of(ds);
  std::sort(ns.begin(), ns.end());
  EXPECT_EQ(ns, (std::vector<long>{1, 2, 5, 9, 10, 18, 45, 90}));

  const DivisorList five = divisors(el(-1, 5, 0));
  EXPECT_EQ(five, (DivisorList{el(-1, 1, 0), el(-1, 1, 2), el(-1, 2, 1), el(-1, 5, 0)}));
  EXPECT_TRUE(is_associated(five[1], el(-1, 2, -1)));

  for (int d : RingId::admissible()) {
    for (const QuadInt& u : units(RingId(d))) EXPECT_EQ(divisors(u), DivisorList{QuadInt::one(RingId(d))});
  }
  EXPECT_THROW(divisors(el(-1, 0, 0)), Error);
}

TEST(Divisors, InvariantsAgainstLatticeScan) {
  for (int d : RingId::admissible()) {
    const RingId r(d);
    for (const QuadInt& z : enumerate_canonical(r, 300)) {
      const DivisorList ds = divisors(z);
      std::size_t count = 1;
      for (const auto& pp : factor(z).factors) count *= pp.exp + 1;
      ASSERT_EQ(ds.size(), count);
      for (std::size_t i = 0; i < ds.size(); ++i) {
        ASSERT_TRUE(in_fundamental_sector(ds[i]));
        ASSERT_TRUE(divides(ds[i], z));
        if (i > 0) ASSERT_TRUE(canonical_less(ds[i - 1], ds[i]));
      }
      const oracle::Elem oz{z.a().get_si(), z.b().get_si()};
      ASSERT_EQ(ds.size(), oracle::lattice_divisors(d, oz).size()) << "d=" << d << " " << format_element(z);
      ASSERT_EQ(delta(2, z), oracle::lattice_delta2(d, oz));
    }
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(2, el(-1, 9, 3)), 180);
  EXPECT_EQ(delta(-2, el(-1, 9, 3)), 2);
  EXPECT_EQ(delta_naive(2, el(-1, 9, 3)), 180);
  EXPECT_EQ(delta_naive(2, el(-1, 30, 30)), 5400);
  // (1+i)^3 * 3 * (2+i) * (2-i) up to a unit: 4*2*2*2 classes.
  EXPECT_EQ(divisors(el(-1, 30, 30)).size(), 32u);
  EXPECT_EQ(oracle::lattice_divisors(-1, {30, 30}).size(), 32u);
  EXPECT_EQ(delta_naive(2, el(-1, 7, 0)), 50);
  EXPECT_EQ(delta(4, el(-1, 7, 0)), 1 + 49 * 49);
  EXPECT_EQ(delta(-4, el(-1, 7, 0)), q(2402, 2401));
  for (int d : RingId::admissible()) {
    for (const QuadInt& u : units(RingId(d))) {
      EXPECT_EQ(delta(2, u), 1);
      EXPECT_EQ(index(2, u), 1);
    }
  }
}

TEST(Delta, Errors) {
  EXPECT_THROW(delta(2, el(-1, 0, 0)), Error);
  try {
    delta(3, el(-1, 9, 3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddExponent);
  }
  EXPECT_THROW(index(1, el(-1, 9, 3)), Error);
  EXPECT_THROW(index(-2, el(-1, 9, 3)), Error);
  EXPECT_THROW(delta(0, el(-1, 9, 3)), Error);
  try {
    delta_naive(2, el(-1, 1001, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Index, Examples) {
  EXPECT_EQ(index(2, el(-1, 9, 3)), 2);
  EXPECT_EQ(index(2, el(-1, 30, 30)), 3);
  EXPECT_EQ(index(2, el(-1, 84, 4788)), 3);
  EXPECT_EQ(index(2, el(-1, 1764, 4452)), 3);
  EXPECT_EQ(index(2, el(-1, 5, 0)), q(36, 25));
  EXPECT_EQ(index(2, el(-1, 1, 1)), q(3, 2));
  EXPECT_TRUE(is_powerfully_perfect(2, 2, el(-1, 3, 9)));
  EXPECT_TRUE(is_powerfully_perfect(2, 3, el(-1, 30, 30)));
  EXPECT_FALSE(is_powerfully_perfect(2, 2, el(-1, 5, 0)));
  EXPECT_FALSE(is_powerfully_perfect(2, 2, el(-1, 30, 30)));
}

TEST(SigmaInt, ExamplesAndDirectSum) {
  EXPECT_EQ(sigma_int(1, 6), 12);
  EXPECT_EQ(sigma_int(1, 28), 56);
  EXPECT_EQ(sigma_int(2, 10), 130);
  EXPECT_EQ(sigma_int(-1, 6), 2);
  EXPECT_EQ(sigma_int(1, 1), 1);
  for (int k = 1; k <= 3; ++k) {
    for (long n = 1; n <= 500; ++n) ASSERT_EQ(sigma_int(k, n), oracle::sigma_direct(k, n)) << k << " " << n;
  }
  for (long n = 1; n <= 500; ++n) ASSERT_EQ(sigma_int(-1, n), make_rational(oracle::sigma_direct(1, n), n));
}

TEST(Properties, OracleEquivalenceUpToNormThreeHundred) {
  for (int d : RingId::admissible()) {
    for (const QuadInt& z : enumerate_canonical(RingId(d), 300)) {
      ASSERT_EQ(delta(2, z), delta_naive(2, z));
      ASSERT_EQ(delta(-2, z), delta_naive(-2, z));
      ASSERT_EQ(index(2, z), delta(-2, z));
    }
  }
}

// Random elements with controlled factorizations: products of small primes.
class ElementGen {
 public:
  ElementGen(RingId r, std::uint64_t seed) : ring_(r), rng_(seed) {
    for (long p = 2; p < 60; ++p) {
      if (!oracle::is_prime_trial(p)) continue;
      const QuadInt pi = prime_above(p, r);
      primes_.push_back(pi);
      if (classify_rational_prime(p, r) == PrimeClass::Split) primes_.push_back(conjugate_prime(pi));
    }
  }
  const std::vector<QuadInt>& primes() const { return primes_; }
  QuadInt from(const std::vector<std::size_t>& which) {
    const auto us = units(ring_);
    QuadInt z = us[rng_() % us.size()];
    for (std::size_t i : which) z = z * pow(primes_[i], 1 + rng_() % 3);
    return z;
  }
  QuadInt any() {
    std::vector<std::size_t> which;
    const std::size_t count = rng_() % 4;
    for (std::size_t i = 0; i < count; ++i) which.push_back(rng_() % primes_.size());
    return from(which);
  }
  std::pair<QuadInt, QuadInt> coprime_pair() {
    std::vector<std::size_t> idx(primes_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    const std::size_t nx = rng_() % 3, ny = rng_() % 3;
    return {from({idx.begin(), idx.begin() + nx}), from({idx.begin() + nx, idx.begin() + nx + ny})};
  }
  std::mt19937_64& rng() { return rng_; }

 private:
  RingId ring_;
  std::mt19937_64 rng_;
  std::vector<QuadInt> primes_;
};

TEST(Properties, TheoremOneOneSuite) {
  for (int d : RingId::admissible()) {
    const RingId r(d);
    ElementGen gen(r, 1000 + static_cast<std::uint64_t>(-d));
    for (int i = 0; i < 300; ++i) {
      const QuadInt z = gen.any();
      const ExactRational iz = index(2, z);
      // Range and units.
      ASSERT_GE(iz, 1);
      ASSERT_EQ(iz == 1, is_unit(z));
      // Duality and integrality.
      ASSERT_EQ(iz, delta(-2, z));
      ASSERT_EQ(iz, delta(-2, factor(z)));
      const ExactRational d2 = delta(2, z);
      ASSERT_EQ(d2.get_den(), 1);
      ASSERT_GE(d2, 1);
      // Associate and conjugation invariance.
      for (const QuadInt& u : units(r)) ASSERT_EQ(index(2, u * z), iz);
      ASSERT_EQ(delta(2, conjugate(z)), d2);
      // Monotonicity over the divisors of z.
      for (const QuadInt& x : divisors(z)) {
        if (is_associated(x, z)) {
          ASSERT_EQ(index(2, x), iz);
        } else {
          ASSERT_LT(index(2, x), iz);
        }
      }
      // Multiplicativity on coprime pairs.
      const auto [x, y] = gen.coprime_pair();
      ASSERT_EQ(index(2, x * y), index(2, x) * index(2, y));
      ASSERT_EQ(delta(2, x * y), delta(2, x) * delta(2, y));
      ASSERT_EQ(delta(4, x * y), delta(4, x) * delta(4, y));
    }
  }
}

TEST(Json, DivisorFunctionRecord) {
  EXPECT_EQ(divisor_function_record(2, el(-1, 9, 3)).dump(),
            R"({"delta2":"180","index2":{"den":"1","num":"2"}})");
}

}  // namespace
}  // namespace qp
