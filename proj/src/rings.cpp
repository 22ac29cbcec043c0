#include "qp/rings.hpp"

#include <algorithm>
#include <cctype>

#include "qp/error.hpp"

namespace qp {

namespace {

constexpr std::array<int, 9> kAdmissible = {-163, -67, -43, -19, -11, -7, -3, -2, -1};

void require_same_ring(const QuadInt& x, const QuadInt& y) {
  if (!(x.ring() == y.ring())) {
    throw Error(ErrorKind::MixedRings,
                "operands from different rings (d=" + std::to_string(x.ring().d()) +
                    ", d=" + std::to_string(y.ring().d()) + ")");
  }
}

void require_nonzero(const QuadInt& x, const char* what) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, std::string(what) + ": zero element");
}

}  // namespace

RingId::RingId(int d) : d_(d), half_(false) {
  if (!is_admissible(d)) {
    throw Error(ErrorKind::InvalidRing,
                "d=" + std::to_string(d) +
                    " is not one of -163,-67,-43,-19,-11,-7,-3,-2,-1");
  }
  // d is negative; d = 1 (mod 4) in the mathematical sense.
  half_ = ((d % 4) + 4) % 4 == 1;
}

std::span<const int> RingId::admissible() { return kAdmissible; }

bool RingId::is_admissible(int d) {
  return std::find(kAdmissible.begin(), kAdmissible.end(), d) != kAdmissible.end();
}

int RingId::unit_count() const noexcept {
  if (d_ == -1) return 4;
  if (d_ == -3) return 6;
  return 2;
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  return QuadInt(x.ring(), x.a() + y.a(), x.b() + y.b());
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  return QuadInt(x.ring(), x.a() - y.a(), x.b() - y.b());
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  const RingId r = x.ring();
  BigInt bb = x.b() * y.b();
  BigInt a = x.a() * y.a() + r.w_constant() * bb;
  BigInt b = x.a() * y.b() + y.a() * x.b();
  if (r.w_linear() != 0) b += bb;
  return QuadInt(r, std::move(a), std::move(b));
}

QuadInt arithmetic(ArithOp op, const QuadInt& x, const std::optional<QuadInt>& y) {
  if (op == ArithOp::Neg) return -x;
  if (!y) throw Error(ErrorKind::PreconditionFailed, "binary operation needs two operands");
  switch (op) {
    case ArithOp::Add: return x + *y;
    case ArithOp::Sub: return x - *y;
    case ArithOp::Mul: return x * *y;
    case ArithOp::Neg: break;
  }
  return -x;
}

QuadInt pow(const QuadInt& x, unsigned long exp) {
  QuadInt result = QuadInt::one(x.ring());
  QuadInt base = x;
  while (exp != 0) {
    if (exp & 1UL) result = result * base;
    exp >>= 1;
    if (exp != 0) base = base * base;
  }
  return result;
}

QuadInt conjugate(const QuadInt& x) {
  if (x.ring().half_integer()) return QuadInt(x.ring(), x.a() + x.b(), -x.b());
  return QuadInt(x.ring(), x.a(), -x.b());
}

BigInt norm(const QuadInt& x) {
  const RingId r = x.ring();
  if (r.half_integer()) {
    // a^2 + ab + b^2 (1-d)/4
    return x.a() * x.a() + x.a() * x.b() + x.b() * x.b() * ((1 - r.d()) / 4);
  }
  return x.a() * x.a() - r.d() * x.b() * x.b();
}

bool is_unit(const QuadInt& x) { return norm(x) == 1; }

std::vector<QuadInt> units(RingId ring) {
  std::vector<QuadInt> out{QuadInt(ring, 1L, 0L), QuadInt(ring, -1L, 0L)};
  if (ring.d() == -1) {
    out.emplace_back(ring, 0L, 1L);
    out.emplace_back(ring, 0L, -1L);
  } else if (ring.d() == -3) {
    // +-w = +-(1+sqrt(-3))/2 and +-(1-w) = +-(1-sqrt(-3))/2
    out.emplace_back(ring, 0L, 1L);
    out.emplace_back(ring, 0L, -1L);
    out.emplace_back(ring, 1L, -1L);
    out.emplace_back(ring, -1L, 1L);
  }
  return out;
}

std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide by zero");
  const BigInt n = norm(y);
  const QuadInt p = x * conjugate(y);
  if (!mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt a, b;
  mpz_divexact(a.get_mpz_t(), p.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), p.b().get_mpz_t(), n.get_mpz_t());
  return QuadInt(x.ring(), std::move(a), std::move(b));
}

bool divides(const QuadInt& y, const QuadInt& x) { return exact_divide(x, y).has_value(); }

bool is_associated(const QuadInt& x, const QuadInt& y) {
  require_same_ring(x, y);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  const auto q = exact_divide(x, y);
  return q && is_unit(*q);
}

bool in_fundamental_sector(const QuadInt& x) {
  require_nonzero(x, "in_fundamental_sector");
  const int d = x.ring().d();
  if (d == -1 || d == -3) return sgn(x.a()) > 0 && sgn(x.b()) >= 0;
  // Im(x) has the sign of b in both bases; on the real axis Re = a.
  return sgn(x.b()) > 0 || (sgn(x.b()) == 0 && sgn(x.a()) > 0);
}

QuadInt canonical_associate(const QuadInt& x) {
  require_nonzero(x, "canonical_associate");
  for (const QuadInt& u : units(x.ring())) {
    QuadInt y = u * x;
    if (in_fundamental_sector(y)) return y;
  }
  throw Error(ErrorKind::TheoremViolation,
              "no unit multiple of " + format_element(x) + " lies in the fundamental sector");
}

std::strong_ordering canonical_order(const QuadInt& x, const QuadInt& y) {
  if (int c = cmp(norm(x), norm(y)); c != 0) return c <=> 0;
  if (int c = cmp(x.a(), y.a()); c != 0) return c <=> 0;
  return cmp(x.b(), y.b()) <=> 0;
}

BigInt twice_real_part(const QuadInt& x) {
  BigInt r = 2 * x.a();
  if (x.ring().half_integer()) r += x.b();
  return r;
}

std::string format_element(const QuadInt& x) {
  std::string s = x.a().get_str();
  const int sb = sgn(x.b());
  if (sb != 0) {
    s += sb > 0 ? '+' : '-';
    s += BigInt(abs(x.b())).get_str();
    s += "*w";
  }
  return s;
}

namespace {

// Parses an unsigned decimal run starting at pos; returns false if empty.
bool take_digits(std::string_view text, std::size_t& pos, std::string& out) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  out.assign(text.substr(start, pos - start));
  return pos > start;
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw Error(ErrorKind::Parse,
              "cannot parse element '" + std::string(text) + "': " + why +
                  " (expected <int>[(+|-)<uint>*w], e.g. 3+9*w)");
}

}  // namespace

QuadInt parse_element(RingId ring, std::string_view text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  std::string digits;
  if (!take_digits(text, pos, digits)) parse_fail(text, "missing integer part");
  BigInt a(digits);
  if (neg) a = -a;
  BigInt b = 0;
  if (pos < text.size()) {
    const char sign = text[pos];
    if (sign != '+' && sign != '-') parse_fail(text, "expected '+' or '-'");
    ++pos;
    if (!take_digits(text, pos, digits)) parse_fail(text, "missing coefficient of w");
    b = BigInt(digits);
    if (sign == '-') b = -b;
    const std::string_view suffix = text.substr(pos);
    const bool ok = suffix == "*w" || (ring.d() == -1 && suffix == "*i");
    if (!ok) parse_fail(text, "expected '*w' after the coefficient");
  }
  return QuadInt(ring, std::move(a), std::move(b));
}

std::string format_gaussian(const QuadInt& x) {
  const int sb = sgn(x.b());
  if (sb == 0) return x.a().get_str();
  const BigInt mag = abs(x.b());
  const std::string coeff = mag == 1 ? "" : mag.get_str();
  if (sgn(x.a()) == 0) return (sb < 0 ? "-" : "") + coeff + "i";
  return x.a().get_str() + (sb < 0 ? "-" : "+") + coeff + "i";
}

std::string describe_omega(RingId ring) {
  const std::string root = "sqrt(" + std::to_string(ring.d()) + ")";
  if (ring.half_integer()) return "w = (1+" + root + ")/2";
  if (ring.d() == -1) return "w = i = " + root;
  return "w = " + root;
}

}  // namespace qp
