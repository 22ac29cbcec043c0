#include "qp/theorems.hpp"

#include <algorithm>

#include "qp/divisor_functions.hpp"
#include "qp/error.hpp"
#include "qp/search.hpp"

namespace qp {

namespace {

bool two_not_inert(RingId ring) {
  const int d = ring.d();
  return d == -1 || d == -2 || d == -7;
}

void require_two_not_inert(RingId ring, const char* what) {
  if (!two_not_inert(ring)) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(what) + " needs d in {-1, -2, -7}, got d=" + std::to_string(ring.d()));
  }
}

std::string parity(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) ? "odd" : "even"; }

Check eq_check(std::string name, const std::string& expected, const std::string& actual) {
  return Check{std::move(name), "==", expected, actual, expected == actual};
}

Check ge_check(std::string name, const BigInt& bound, const BigInt& actual) {
  return Check{std::move(name), ">=", bound.get_str(), actual.get_str(), actual >= bound};
}

Check odd_check(std::string name, const BigInt& actual) {
  return Check{std::move(name), "odd", "odd", actual.get_str(), parity(actual) == "odd"};
}

Check premise(std::string name, bool holds) {
  return Check{std::move(name), "premise", "", holds ? "true" : "false", true};
}

BigInt as_integer(const ExactRational& r) {
  if (r.get_den() != 1) {
    throw Error(ErrorKind::TheoremViolation, "expected an integer, got " + to_string(r));
  }
  return r.get_num();
}

// Exponent of q in x without requiring q to be a prime element.
unsigned long divide_count(const QuadInt& x, const QuadInt& q) {
  unsigned long k = 0;
  QuadInt rest = x;
  while (auto next = exact_divide(rest, q)) {
    rest = std::move(*next);
    ++k;
  }
  return k;
}

const char* even_identity_id(RingId ring) {
  return ring.d() == -7 ? kCheckSplitTwoIdentity : kCheckEvenIdentity;
}

const char* even_bounds_id(RingId ring) {
  return ring.d() == -7 ? kCheckSplitTwoBounds : kCheckEvenBounds;
}

void append_split_two_congruences(VerifierReport& report, const BigInt& q, unsigned long gamma) {
  report.checks.push_back(eq_check("q mod 7", "3", BigInt(q % 7).get_str()));
  report.checks.push_back(eq_check("gamma mod 3", "1", std::to_string(gamma % 3)));
}

}  // namespace

const char* norm_two_prime_name(NormTwoPrime p) {
  switch (p) {
    case NormTwoPrime::Xi: return "xi";
    case NormTwoPrime::Epsilon: return "eps";
    case NormTwoPrime::EpsilonBar: return "eps-bar";
  }
  return "?";
}

QuadInt norm_two_prime(RingId ring) {
  require_two_not_inert(ring, "norm_two_prime");
  if (ring.d() == -1) return QuadInt(ring, 1L, 1L);
  return QuadInt(ring, 0L, 1L);  // sqrt(-2), or (1+sqrt(-7))/2
}

EvenNormDecomposition decompose_even(const QuadInt& z) {
  const RingId ring = z.ring();
  require_two_not_inert(ring, "decompose_even");
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "decompose_even: zero element");
  if (mpz_odd_p(norm(z).get_mpz_t())) {
    throw Error(ErrorKind::PreconditionFailed, "decompose_even: N(z) is odd");
  }
  if (!is_powerfully_perfect(2, 2, z)) {
    throw Error(ErrorKind::PreconditionFailed,
                "decompose_even: " + format_element(z) + " is not 2-powerfully perfect");
  }

  EvenNormDecomposition dec{z, z, NormTwoPrime::Xi, 0, z, 0, 0, 0, 0, 0, 0};
  if (ring.d() == -7) {
    const QuadInt eps = QuadInt::omega(ring);
    const QuadInt eps_bar = conjugate(eps);
    const unsigned long g1 = valuation(eps, z);
    const unsigned long g2 = valuation(eps_bar, z);
    if (g1 > 0 && g2 > 0) {
      throw Error(ErrorKind::Thm23Violation,
                  "both eps and eps-bar divide " + format_element(z) + " (exponents " +
                      std::to_string(g1) + ", " + std::to_string(g2) + ")");
    }
    dec.xi = g1 > 0 ? eps : eps_bar;
    dec.which = g1 > 0 ? NormTwoPrime::Epsilon : NormTwoPrime::EpsilonBar;
    dec.gamma = g1 > 0 ? g1 : g2;
  } else {
    dec.xi = norm_two_prime(ring);
    dec.gamma = valuation(dec.xi, z);
  }

  auto x = exact_divide(z, pow(dec.xi, dec.gamma));
  if (!x) throw Error(ErrorKind::TheoremViolation, "xi^gamma does not divide z");
  dec.x = std::move(*x);
  dec.delta2_x = as_integer(delta(2, dec.x));
  dec.norm_x = norm(dec.x);

  const BigInt two_power = pow(BigInt(2), dec.gamma + 1);
  dec.q = two_power - 1;
  if (two_power * dec.norm_x != dec.q * dec.delta2_x) {
    throw Error(ErrorKind::TheoremViolation,
                "2^(gamma+1) N(x) != q delta_2(x) for " + format_element(z));
  }
  dec.m = dec.delta2_x / two_power;
  dec.v = dec.m;
  while (mpz_divisible_p(dec.v.get_mpz_t(), dec.q.get_mpz_t())) {
    dec.v /= dec.q;
    ++dec.k;
  }
  return dec;
}

VerifierReport check_mersenne_inert(unsigned long gamma, RingId ring) {
  VerifierReport report;
  report.theorem = "mersenne-inert";
  const BigInt q = pow(BigInt(2), gamma + 1) - 1;
  const bool prime = is_prime(q);
  report.checks.push_back(Check{"q = 2^(gamma+1)-1 prime", "prime", "prime", q.get_str(), prime});
  report.checks.push_back(eq_check("q inert", "inert",
                                prime ? prime_class_name(classify_rational_prime(q, ring))
                                      : "not prime"));
  if (ring.d() == -7) append_split_two_congruences(report, q, gamma);
  return report;
}

VerifierReport check_even_identity(const EvenNormDecomposition& dec) {
  const RingId ring = dec.z.ring();
  VerifierReport report;
  report.subject = dec.z;
  report.theorem = even_identity_id(ring);
  const BigInt two_power = pow(BigInt(2), dec.gamma + 1);

  report.checks.push_back(ge_check("gamma", 1, dec.gamma));
  if (ring.d() == -7) {
    const QuadInt eps = QuadInt::omega(ring);
    const bool both = divides(eps, dec.z) && divides(conjugate(eps), dec.z);
    report.checks.push_back(eq_check("eps and eps-bar not both dividing z", "false",
                                  both ? "true" : "false"));
    report.notes.push_back(std::string("z = ") + norm_two_prime_name(dec.which) + "^gamma x");
  }
  report.checks.push_back(eq_check("xi divides x", "false", divides(dec.xi, dec.x) ? "true" : "false"));
  report.checks.push_back(odd_check("N(x)", dec.norm_x));
  report.checks.push_back(eq_check("2^(gamma+1) N(x) = q delta_2(x)", BigInt(dec.q * dec.delta2_x).get_str(),
                                BigInt(two_power * dec.norm_x).get_str()));
  report.checks.push_back(
      eq_check("delta_2(x) = 2^(gamma+1) m", BigInt(two_power * dec.m).get_str(), dec.delta2_x.get_str()));
  report.checks.push_back(eq_check("N(x) = q m", BigInt(dec.q * dec.m).get_str(), dec.norm_x.get_str()));
  report.checks.push_back(odd_check("m", dec.m));

  const VerifierReport mersenne = check_mersenne_inert(dec.gamma, ring);
  report.checks.insert(report.checks.end(), mersenne.checks.begin(), mersenne.checks.end());
  return report;
}

VerifierReport check_structure_bounds(const EvenNormDecomposition& dec) {
  const RingId ring = dec.z.ring();
  VerifierReport report;
  report.subject = dec.z;
  report.theorem = even_bounds_id(ring);
  const BigInt& q = dec.q;

  report.checks.push_back(odd_check("k", dec.k));
  report.checks.push_back(ge_check("v >= q+2", q + 2, dec.v));

  // (q+3) * sum_{j=0}^{(k-1)/2} q^(2j); empty when k = 0.
  BigInt tail = 0;
  if (dec.k >= 1) {
    const unsigned long top = (dec.k - 1) / 2;
    for (unsigned long j = 0; j <= top; ++j) tail += pow(q, 2 * j);
  }
  tail *= q + 3;
  report.checks.push_back(ge_check("m >= q^(k+1) + (q+3) sum q^(2j)", pow(q, dec.k + 1) + tail, dec.m));
  report.checks.push_back(ge_check("m >= q^2+q+3", q * q + q + 3, dec.m));

  const unsigned long rho = divide_count(dec.x, QuadInt(ring, q, 0));
  report.checks.push_back(eq_check("rho_q(x) = (k+1)/2", to_string(make_rational(dec.k + 1, 2)),
                                std::to_string(rho)));
  if (ring.d() == -7) append_split_two_congruences(report, q, dec.gamma);
  report.notes.push_back("q=" + q.get_str() + " m=" + dec.m.get_str() + " k=" + std::to_string(dec.k) +
                         " v=" + dec.v.get_str() + " gamma=" + std::to_string(dec.gamma));
  return report;
}

VerifierReport check_odd_shape(const QuadFactorization& f) {
  VerifierReport report;
  report.subject = f.product();
  report.theorem = kCheckOddShape;

  BigInt n = 1;
  std::vector<const QuadPrimePower*> odd_exponent;
  for (const auto& pp : f.factors) {
    n *= pow(norm(pp.prime), pp.exp);
    if (pp.exp % 2 == 1) odd_exponent.push_back(&pp);
  }
  report.checks.push_back(odd_check("N(z)", n));
  report.checks.push_back(
      eq_check("primes with odd exponent", "1", std::to_string(odd_exponent.size())));
  if (odd_exponent.size() == 1) {
    const QuadPrimePower& pp = *odd_exponent.front();
    report.checks.push_back(eq_check("k mod 4", "1", std::to_string(pp.exp % 4)));
    report.checks.push_back(eq_check("N(pi) mod 4", "1", BigInt(norm(pp.prime) % 4).get_str()));
    report.notes.push_back("pi = " + format_element(pp.prime) + ", k = " + std::to_string(pp.exp));
  }
  return report;
}

VerifierReport check_odd_structure(const QuadInt& z) {
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "check_odd_structure: zero element");
  if (!mpz_odd_p(norm(z).get_mpz_t())) {
    throw Error(ErrorKind::PreconditionFailed, "check_odd_structure: N(z) is even");
  }
  const QuadFactorization f = factor(z);
  if (index(2, z) != 2) {
    throw Error(ErrorKind::PreconditionFailed,
                "check_odd_structure: " + format_element(z) + " is not 2-powerfully perfect");
  }
  VerifierReport report = check_odd_shape(f);
  report.subject = z;
  const BigInt d2 = as_integer(delta(2, f));
  report.checks.push_back(eq_check("delta_2(z) mod 4", "2", BigInt(d2 % 4).get_str()));
  return report;
}

std::size_t count_nonassociated_primes(const QuadInt& z) {
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "count_nonassociated_primes: zero element");
  return factor(z).factors.size();
}

std::optional<std::size_t> prime_count_threshold(RingId ring) {
  if (ring.d() == -1 || ring.d() == -2) return 5;
  if (ring.d() == -7) return 11;
  return std::nullopt;
}

std::vector<QuadInt> odd_norm_prime_table(RingId ring, std::size_t count) {
  std::vector<QuadInt> found;
  for (unsigned long limit = 64;; limit *= 2) {
    found.clear();
    for (unsigned long p = 3; p <= limit; p += 2) {
      if (!is_prime(static_cast<std::uint64_t>(p))) continue;
      const BigInt bp(p);
      switch (classify_rational_prime(bp, ring)) {
        case PrimeClass::Inert:
          if (p * p <= limit) found.emplace_back(ring, bp, 0);
          break;
        case PrimeClass::Ramified:
          found.push_back(prime_above(bp, ring));
          break;
        case PrimeClass::Split: {
          const QuadInt pi = prime_above(bp, ring);
          found.push_back(pi);
          found.push_back(conjugate_prime(pi));
          break;
        }
      }
    }
    if (found.size() >= count) break;
  }
  std::sort(found.begin(), found.end(), canonical_less);
  found.erase(found.begin() + static_cast<std::ptrdiff_t>(count), found.end());
  return found;
}

ExactRational index_supremum(const std::vector<QuadInt>& primes) {
  ExactRational r = 1;
  for (const QuadInt& pi : primes) {
    const BigInt n = norm(pi);
    r *= make_rational(n, n - 1);
  }
  return r;
}

VerifierReport check_prime_count(const QuadInt& z) {
  const RingId ring = z.ring();
  const auto threshold = prime_count_threshold(ring);
  if (!threshold) {
    throw Error(ErrorKind::PreconditionFailed,
                "no prime-count threshold for d=" + std::to_string(ring.d()));
  }
  VerifierReport report;
  report.subject = z;
  report.theorem = kCheckPrimeCount;

  const bool odd_norm = mpz_odd_p(norm(z).get_mpz_t()) != 0;
  const bool holds = odd_norm && index(2, z) == 2;
  const std::size_t count = count_nonassociated_primes(z);
  report.checks.push_back(premise("N(z) odd and I_2(z) = 2", holds));
  report.checks.push_back(Check{"nonassociated prime divisors", ">=", std::to_string(*threshold),
                                std::to_string(count), !holds || count >= *threshold});

  // Any odd-norm element with fewer primes has I_2 below this product.
  std::vector<QuadInt> witness;
  if (ring.d() == -2) {
    // 3 = (1+sqrt-2)(1-sqrt-2) with N = 3 = 3 (mod 4): both would need even
    // exponents, which already pushes I_2 past 2, so at most one is usable.
    const auto table = odd_norm_prime_table(ring, 6);
    const ExactRational both = index(2, pow(table[0], 2)) * index(2, pow(table[1], 2));
    report.checks.push_back(Check{"I_2(pi^2) I_2(pibar^2) for the primes over 3", ">", "2", to_string(both), both > 2});
    witness = {table[0], table[2], table[3], table[4]};
  } else {
    witness = odd_norm_prime_table(ring, *threshold - 1);
  }
  const ExactRational sup = index_supremum(witness);
  report.checks.push_back(Check{"product N/(N-1) over the " + std::to_string(witness.size()) +
                                    " smallest admissible odd-norm primes",
                                "<", "2", to_string(sup), sup < 2});
  return report;
}

QuadInt multiply_by_norm_two_prime(const QuadInt& z) {
  require_two_not_inert(z.ring(), "multiply_by_norm_two_prime");
  if (z.is_zero()) throw Error(ErrorKind::ZeroElement, "multiply_by_norm_two_prime: zero element");
  if (!mpz_odd_p(norm(z).get_mpz_t())) {
    throw Error(ErrorKind::PreconditionFailed, "multiply_by_norm_two_prime: N(z) is even");
  }
  return norm_two_prime(z.ring()) * z;
}

QuadInt lift_to_3perfect(const QuadInt& z) {
  const QuadInt lifted = multiply_by_norm_two_prime(z);
  if (index(2, z) != 2) {
    throw Error(ErrorKind::PreconditionFailed,
                "lift_to_3perfect: " + format_element(z) + " is not 2-powerfully perfect");
  }
  if (index(2, lifted) != 3) {
    throw Error(ErrorKind::TheoremViolation, "I_2(xi z) != 3 for " + format_element(z));
  }
  return lifted;
}

VerifierReport check_lift(const QuadInt& z) {
  const RingId ring = z.ring();
  require_two_not_inert(ring, "check_lift");
  VerifierReport report;
  report.subject = z;
  report.theorem = kCheckLift;
  const bool odd_norm = mpz_odd_p(norm(z).get_mpz_t()) != 0;
  report.checks.push_back(odd_check("N(z)", norm(z)));
  const QuadInt lifted = norm_two_prime(ring) * z;
  const ExactRational before = index(2, z);
  const ExactRational after = index(2, lifted);
  report.checks.push_back(
      eq_check("I_2(xi z) = (3/2) I_2(z)", to_string(ExactRational(before * make_rational(3, 2))),
            to_string(after)));
  if (odd_norm && before == 2) report.checks.push_back(eq_check("I_2(xi z)", "3", to_string(after)));
  report.notes.push_back("xi z = " + format_element(lifted));
  return report;
}

VerifierReport conjecture_scan(RingId ring, std::uint64_t bound) {
  require_two_not_inert(ring, "conjecture_scan");
  const SearchReport search = search_perfect(ring, 2, 2, bound);
  VerifierReport report;
  report.theorem = kConjectureScan;
  report.notes.push_back("norm bound " + std::to_string(bound) + ", " +
                         std::to_string(search.hits.size()) + " hit(s)");
  report.checks.push_back(Check{"2-powerfully perfect hits", "info", "",
                                std::to_string(search.hits.size()), true});
  for (const QuadInt& z : search.hits) {
    const std::string label = format_element(z);
    if (mpz_odd_p(norm(z).get_mpz_t())) {
      report.notes.push_back("odd-norm hit " + label + " (outside the even-norm decomposition)");
      continue;
    }
    try {
      const EvenNormDecomposition dec = decompose_even(z);
      report.checks.push_back(eq_check("k for " + label, "1", std::to_string(dec.k)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Thm23Violation) throw;
      report.checks.push_back(eq_check("k for " + label, "1", std::string("undefined: ") + e.what()));
    }
  }
  return report;
}

VerifierReport verify(const std::string& check_id, const QuadInt& z) {
  const int d = z.ring().d();
  auto require_rings = [&](bool ok, const char* which) {
    if (!ok) {
      throw Error(ErrorKind::PreconditionFailed,
                  "check " + check_id + " applies to " + which + ", got d=" + std::to_string(d));
    }
  };
  if (check_id == kCheckEvenIdentity || check_id == kCheckEvenBounds) {
    require_rings(d == -1 || d == -2, "d = -1, -2");
    const auto dec = decompose_even(z);
    return check_id == kCheckEvenIdentity ? check_even_identity(dec) : check_structure_bounds(dec);
  }
  if (check_id == kCheckSplitTwoIdentity || check_id == kCheckSplitTwoBounds) {
    require_rings(d == -7, "d = -7");
    const auto dec = decompose_even(z);
    return check_id == kCheckSplitTwoIdentity ? check_even_identity(dec)
                                              : check_structure_bounds(dec);
  }
  if (check_id == kCheckOddShape) return check_odd_structure(z);
  if (check_id == kCheckPrimeCount) return check_prime_count(z);
  if (check_id == kCheckLift) return check_lift(z);
  throw Error(ErrorKind::PreconditionFailed, "unknown check id '" + check_id + "'");
}

}  // namespace qp
