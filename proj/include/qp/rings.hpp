#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qp/bigint.hpp"

namespace qp {

enum class BasisKind { Plain, HalfInteger };

/// One of the nine imaginary quadratic rings with unique factorization,
/// identified by its squarefree d.
///
/// Elements are written a + b*w in the integral basis {1, w}, where
/// w = sqrt(d) when d = 2, 3 (mod 4) and w = (1 + sqrt(d))/2 when d = 1 (mod 4).
class RingId {
 public:
  /// Throws Error(InvalidRing) unless d is one of admissible().
  explicit RingId(int d);

  static std::span<const int> admissible();
  static bool is_admissible(int d);

  int d() const noexcept { return d_; }
  BasisKind basis_kind() const noexcept {
    return half_ ? BasisKind::HalfInteger : BasisKind::Plain;
  }
  bool half_integer() const noexcept { return half_; }
  int unit_count() const noexcept;

  // w^2 = w_linear * w + w_constant.
  int w_linear() const noexcept { return half_ ? 1 : 0; }
  int w_constant() const noexcept { return half_ ? (d_ - 1) / 4 : d_; }

  friend bool operator==(RingId, RingId) = default;

 private:
  int d_;
  bool half_;
};

class QuadInt {
 public:
  explicit QuadInt(RingId ring, BigInt a = 0, BigInt b = 0)
      : ring_(ring), a_(std::move(a)), b_(std::move(b)) {}
  QuadInt(RingId ring, long a, long b) : ring_(ring), a_(a), b_(b) {}

  static QuadInt zero(RingId ring) { return QuadInt(ring); }
  static QuadInt one(RingId ring) { return QuadInt(ring, 1L, 0L); }
  static QuadInt omega(RingId ring) { return QuadInt(ring, 0L, 1L); }

  RingId ring() const noexcept { return ring_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  QuadInt operator-() const { return QuadInt(ring_, -a_, -b_); }

  // Mixed-ring operands throw Error(MixedRings).
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);

 private:
  RingId ring_;
  BigInt a_;
  BigInt b_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Dispatching form of the ring operations; `y` is ignored for Neg and
/// required otherwise.
QuadInt arithmetic(ArithOp op, const QuadInt& x,
                   const std::optional<QuadInt>& y = std::nullopt);

QuadInt pow(const QuadInt& x, unsigned long exp);

QuadInt conjugate(const QuadInt& x);
BigInt norm(const QuadInt& x);
bool is_unit(const QuadInt& x);

std::vector<QuadInt> units(RingId ring);

/// x / y when y divides x in the ring. Computed as x * conj(y) / N(y)
/// coordinate-wise, so divisibility holds iff both divisions are exact.
/// Throws Error(DivisionByZero) for y == 0.
std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y);

bool divides(const QuadInt& y, const QuadInt& x);
bool is_associated(const QuadInt& x, const QuadInt& y);

// Integer-only forms of the half-open angular sectors:
//   d = -1: a > 0, b >= 0   (0 <= arg < pi/2)
//   d = -3: a > 0, b >= 0   (0 <= arg < pi/3, in the {1, w} basis)
//   else:   b > 0, or b == 0 and a > 0   (0 <= arg < pi)
bool in_fundamental_sector(const QuadInt& x);

/// The unique unit multiple of x in the fundamental sector.
QuadInt canonical_associate(const QuadInt& x);

/// Total order by (norm, a, b), used for every sorted list of elements.
std::strong_ordering canonical_order(const QuadInt& x, const QuadInt& y);
inline bool canonical_less(const QuadInt& x, const QuadInt& y) {
  return canonical_order(x, y) < 0;
}

/// Twice the real part: 2a + b for the half-integer basis, 2a otherwise.
BigInt twice_real_part(const QuadInt& x);

// Text form `<int> [ ("+"|"-") <uint> "*w" ]`, no whitespace.
std::string format_element(const QuadInt& x);
/// For d = -1, "*i" is accepted in place of "*w". Throws Error(Parse).
QuadInt parse_element(RingId ring, std::string_view text);
/// "9+3i" style rendering; only meaningful for d = -1.
std::string format_gaussian(const QuadInt& x);
/// Human-readable definition of w for the ring, e.g. "w = (1+sqrt(-7))/2".
std::string describe_omega(RingId ring);

}  // namespace qp
