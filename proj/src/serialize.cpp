#include "qp/serialize.hpp"

#include "qp/error.hpp"

namespace qp {

namespace {

Json coordinate(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

BigInt coordinate_value(const Json& j) {
  if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorKind::Parse, "element coordinate must be an integer or a decimal string");
}

}  // namespace

Json to_json(const QuadInt& x) {
  return Json{{"d", x.ring().d()}, {"a", coordinate(x.a())}, {"b", coordinate(x.b())}};
}

QuadInt element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("a") || !j.contains("b")) {
    throw Error(ErrorKind::Parse, "element JSON needs keys d, a, b");
  }
  return QuadInt(RingId(j.at("d").get<int>()), coordinate_value(j.at("a")),
                 coordinate_value(j.at("b")));
}

Json to_json(const ExactRational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json to_json(const QuadFactorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) {
    factors.push_back(
        Json{{"prime", to_json(pp.prime)}, {"exp", pp.exp}, {"norm", norm(pp.prime).get_str()}});
  }
  return Json{{"unit", to_json(f.unit)}, {"factors", std::move(factors)}};
}

Json to_json(const IntFactorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json{{"p", pp.p.get_str()}, {"exp", pp.exp}});
  return Json{{"factors", std::move(factors)}};
}

Json to_json(const VerifierReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"relation", c.relation},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
  }
  return Json{{"subject", r.subject ? to_json(*r.subject) : Json(nullptr)},
              {"theorem", r.theorem},
              {"checks", std::move(checks)},
              {"notes", r.notes},
              {"overall", r.overall()}};
}

Json to_json(const SearchReport& r) {
  Json hits = Json::array();
  for (const QuadInt& z : r.hits) hits.push_back(to_json(z));
  Json out{{"ring", r.ring.d()},
           {"n", r.n},
           {"t", r.t},
           {"norm_bound", std::to_string(r.norm_bound)},
           {"odd_norm", r.odd_norm_only},
           {"hits", std::move(hits)},
           {"elements_scanned", std::to_string(r.elements_scanned)},
           {"wall_time_ms", r.wall_time_ms}};
  if (r.odd_norm_only) {
    Json verifications = Json::array();
    for (const auto& v : r.verifications) verifications.push_back(to_json(v));
    out["verifications"] = std::move(verifications);
  }
  return out;
}

Json to_json(const EvenNormDecomposition& dec) {
  return Json{{"z", to_json(dec.z)},
              {"xi", to_json(dec.xi)},
              {"xi_kind", norm_two_prime_name(dec.which)},
              {"gamma", dec.gamma},
              {"x", to_json(dec.x)},
              {"q", dec.q.get_str()},
              {"m", dec.m.get_str()},
              {"k", dec.k},
              {"v", dec.v.get_str()},
              {"delta2_x", dec.delta2_x.get_str()},
              {"norm_x", dec.norm_x.get_str()}};
}

Json divisor_function_record(long n, const QuadInt& z) {
  const ExactRational value = delta(n, z);
  const std::string suffix = std::to_string(n);
  Json out = Json::object();
  if (n > 0) {
    out["delta" + suffix] = value.get_num().get_str();
    out["index" + suffix] = to_json(ExactRational(index(n, z)));
  } else {
    out["delta" + suffix] = to_json(value);
  }
  return out;
}

}  // namespace qp
