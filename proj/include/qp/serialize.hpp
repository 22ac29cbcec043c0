#pragma once

#include <json.hpp>

#include "qp/divisor_functions.hpp"
#include "qp/primes.hpp"
#include "qp/report.hpp"
#include "qp/search.hpp"
#include "qp/theorems.hpp"

// JSON forms used by the CLI. Objects use nlohmann::json's sorted keys, so
// output is byte-stable. Element coordinates are JSON integers (strings if
// they exceed 64 bits); every other big integer is a decimal string.
namespace qp {

using Json = nlohmann::json;

Json to_json(const QuadInt& x);          // {"a": 3, "b": 9, "d": -1}
Json to_json(const ExactRational& r);    // {"den": "1", "num": "2"}
Json to_json(const QuadFactorization& f);
Json to_json(const IntFactorization& f);
Json to_json(const SearchReport& r);
Json to_json(const VerifierReport& r);
Json to_json(const EvenNormDecomposition& dec);

/// {"delta<n>": ..., "index<n>": {...}}; the delta value is a decimal string
/// for n > 0 and a {"num","den"} object for n < 0. Index only for n > 0.
Json divisor_function_record(long n, const QuadInt& z);

/// Inverse of to_json(QuadInt).
QuadInt element_from_json(const Json& j);

}  // namespace qp
