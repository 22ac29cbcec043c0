#include <limits>

#include "qp/bigint.hpp"
#include "qp/error.hpp"

namespace qp {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  static const BigInt lo = from_int64(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = from_int64(std::numeric_limits<std::int64_t>::max());
  if (x < lo || x > hi) return std::nullopt;
  // mpz_get_si is only guaranteed for long; long is 64-bit on every target
  // this builds for, but go through the string path if that ever changes.
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(x.get_si());
  } else {
    return std::stoll(x.get_str());
  }
}

BigInt from_int64(std::int64_t x) {
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return BigInt(static_cast<long>(x));
  } else {
    return BigInt(std::to_string(x));
  }
}

BigInt from_uint64(std::uint64_t x) {
  if constexpr (sizeof(unsigned long) == sizeof(std::uint64_t)) {
    return BigInt(static_cast<unsigned long>(x));
  } else {
    return BigInt(std::to_string(x));
  }
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OddExponent: return "OddExponent";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Thm23Violation: return "Thm23Violation";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qp
