#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace qp {

using BigInt = mpz_class;

// Always canonical (lowest terms, positive denominator). gmpxx keeps results
// of arithmetic canonical; values built from a raw (num, den) pair must go
// through make_rational.
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& num, const BigInt& den);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const ExactRational& x);

// Value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(const BigInt& x);
BigInt from_int64(std::int64_t x);
BigInt from_uint64(std::uint64_t x);

BigInt pow(const BigInt& base, unsigned long exp);

}  // namespace qp
