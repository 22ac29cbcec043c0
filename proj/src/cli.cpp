#include "qp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qp/divisor_functions.hpp"
#include "qp/error.hpp"
#include "qp/primes.hpp"
#include "qp/search.hpp"
#include "qp/serialize.hpp"
#include "qp/theorems.hpp"

namespace qp::cli {

namespace {

constexpr std::uint64_t kDefaultBoundLimit = 100'000'000;

constexpr const char* kGrammar =
    "usage: qp <sub> --d <int in K> [--elem <elem>] [--n <even int>] [--t <int>=2>]\n"
    "          [--bound <int>] [--odd-norm] [--theorem <id>] [--json] [--force] [--out <file>]\n"
    "  sub:  factor | delta | index | divisors | classify | search | verify | conjecture\n"
    "  K:    -163 -67 -43 -19 -11 -7 -3 -2 -1\n"
    "  elem: <int>[(+|-)<uint>*w], e.g. 3+9*w, -2+1*w, 5  (d=-1 also accepts *i)\n"
    "  id:   2.1 2.2 2.3 2.4 2.5 count lift\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int d = 0;
  std::string elem;
  std::string p;
  long n = 2;
  long t = 2;
  std::uint64_t bound = 0;
  bool odd_norm = false;
  std::string theorem;
  bool json = false;
  bool force = false;
  std::string out_file;
  unsigned threads = 0;
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

RingId ring_of(const Options& o) {
  try {
    return RingId(o.d);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

QuadInt element_of(const Options& o, RingId ring) {
  if (o.elem.empty()) throw UsageError("--elem is required");
  try {
    return parse_element(ring, o.elem);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void check_bound(const Options& o) {
  if (o.bound < 1) throw UsageError("--bound must be >= 1");
  if (o.bound > kDefaultBoundLimit && !o.force) {
    throw UsageError("--bound above 10^8 needs --force");
  }
}

void emit(const Options& o, std::ostream& out, const Json& json,
          const std::function<void(std::ostream&)>& text) {
  if (o.json) {
    out << json.dump(2) << '\n';
  } else {
    text(out);
  }
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw Error(ErrorKind::PreconditionFailed, "cannot write " + o.out_file);
    file << json.dump(2) << '\n';
  }
}

void print_element_header(std::ostream& os, const QuadInt& z) {
  os << "z     " << format_element(z) << "   (" << describe_omega(z.ring()) << ")\n";
  os << "norm  " << norm(z).get_str() << '\n';
}

void print_report(std::ostream& os, const VerifierReport& r) {
  if (r.subject) os << "subject  " << format_element(*r.subject) << '\n';
  os << "check    " << r.theorem << '\n';
  Table t({"check", "rel", "expected", "actual", "result"});
  for (const Check& c : r.checks) {
    t.add({c.name, c.relation, c.expected, c.actual, c.pass ? "PASS" : "FAIL"});
  }
  t.print(os);
  for (const auto& note : r.notes) os << "note: " << note << '\n';
  os << "overall  " << (r.overall() ? "PASS" : "FAIL") << '\n';
}

int cmd_factor(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  const QuadInt z = element_of(o, ring);
  const QuadFactorization f = factor(z);
  emit(o, out, to_json(f), [&](std::ostream& os) {
    print_element_header(os, z);
    os << "unit  " << format_element(f.unit) << '\n';
    Table t({"prime", "exp", "norm"});
    for (const auto& pp : f.factors) {
      t.add({format_element(pp.prime), std::to_string(pp.exp), norm(pp.prime).get_str()});
    }
    t.print(os);
  });
  return kExitOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  const QuadInt z = element_of(o, ring);
  const ExactRational value = delta(o.n, z);
  emit(o, out, divisor_function_record(o.n, z),
       [&](std::ostream& os) { os << to_string(value) << '\n'; });
  return kExitOk;
}

int cmd_index(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  const QuadInt z = element_of(o, ring);
  const ExactRational value = index(o.n, z);
  emit(o, out, divisor_function_record(o.n, z),
       [&](std::ostream& os) { os << to_string(value) << '\n'; });
  return kExitOk;
}

int cmd_divisors(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  const QuadInt z = element_of(o, ring);
  const DivisorList divs = divisors(z);
  Json list = Json::array();
  for (const QuadInt& x : divs) list.push_back(Json{{"elem", to_json(x)}, {"norm", norm(x).get_str()}});
  Json json{{"z", to_json(z)}, {"count", divs.size()}, {"divisors", std::move(list)}};
  emit(o, out, json, [&](std::ostream& os) {
    print_element_header(os, z);
    Table t({"divisor", "norm"});
    for (const QuadInt& x : divs) t.add({format_element(x), norm(x).get_str()});
    t.print(os);
    os << divs.size() << " divisor(s)\n";
  });
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  std::string text = !o.p.empty() ? o.p : o.elem;
  if (text.empty()) throw UsageError("classify needs --p <prime> (or --elem <prime>)");
  QuadInt parsed = QuadInt::zero(ring);
  try {
    parsed = parse_element(ring, text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (sgn(parsed.b()) != 0 || sgn(parsed.a()) <= 0) {
    throw UsageError("classify needs a positive rational integer");
  }
  const BigInt p = parsed.a();
  const PrimeClass c = classify_rational_prime(p, ring);
  std::vector<QuadInt> above{prime_above(p, ring)};
  if (c == PrimeClass::Split) above.push_back(conjugate_prime(above.front()));
  Json primes = Json::array();
  for (const QuadInt& pi : above) primes.push_back(to_json(pi));
  Json json{{"d", ring.d()}, {"p", p.get_str()}, {"class", prime_class_name(c)},
            {"primes", std::move(primes)}};
  emit(o, out, json, [&](std::ostream& os) {
    os << p.get_str() << " is " << prime_class_name(c) << " in d=" << ring.d() << '\n';
    Table t({"prime above", "norm"});
    for (const QuadInt& pi : above) t.add({format_element(pi), norm(pi).get_str()});
    t.print(os);
  });
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  check_bound(o);
  SearchOptions opts{o.threads};
  const SearchReport r = o.odd_norm ? search_odd_norm(ring, o.bound, opts)
                                    : search_perfect(ring, o.n, o.t, o.bound, opts);
  emit(o, out, to_json(r), [&](std::ostream& os) {
    os << "ring d=" << ring.d() << "  n=" << r.n << "  t=" << r.t << "  norm bound " << r.norm_bound
       << (r.odd_norm_only ? "  (odd norms only)" : "") << '\n';
    os << "scanned " << r.elements_scanned << " element(s) in " << r.wall_time_ms << " ms\n";
    os << r.hits.size() << " hit(s)\n";
    if (!r.hits.empty()) {
      Table t({"hit", "norm"});
      for (const QuadInt& z : r.hits) t.add({format_element(z), norm(z).get_str()});
      t.print(os);
    }
    for (const auto& v : r.verifications) print_report(os, v);
  });
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  const QuadInt z = element_of(o, ring);
  if (o.theorem.empty()) throw UsageError("verify needs --theorem");
  static const std::vector<std::string> ids = {kCheckEvenIdentity, kCheckEvenBounds,
                                               kCheckSplitTwoIdentity, kCheckSplitTwoBounds,
                                               kCheckOddShape, kCheckPrimeCount, kCheckLift};
  if (std::find(ids.begin(), ids.end(), o.theorem) == ids.end()) {
    throw UsageError("unknown --theorem '" + o.theorem + "'");
  }
  const VerifierReport r = verify(o.theorem, z);
  Json json = to_json(r);
  if (o.theorem == kCheckEvenIdentity || o.theorem == kCheckEvenBounds ||
      o.theorem == kCheckSplitTwoIdentity || o.theorem == kCheckSplitTwoBounds) {
    json["decomposition"] = to_json(decompose_even(z));
  }
  emit(o, out, json, [&](std::ostream& os) { print_report(os, r); });
  return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const RingId ring = ring_of(o);
  check_bound(o);
  const VerifierReport r = conjecture_scan(ring, o.bound);
  emit(o, out, to_json(r), [&](std::ostream& os) { print_report(os, r); });
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--d", o.d, "ring discriminant, one of K")->required()->allow_extra_args(false);
  sub->add_flag("--json", o.json, "emit JSON");
  sub->add_option("--out", o.out_file, "also write the JSON record to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divisor functions and abundancy indices in imaginary quadratic UFDs", "qp"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*handler)(const Options&, std::ostream&);
  };
  const std::vector<Sub> subs = {
      {"factor", "unique factorization of an element", cmd_factor},
      {"delta", "delta_n(z) for even n", cmd_delta},
      {"index", "abundancy index I_n(z) for positive even n", cmd_index},
      {"divisors", "canonical divisors, one per associate class", cmd_divisors},
      {"classify", "behaviour of a rational prime", cmd_classify},
      {"search", "exhaustive search for n-powerfully t-perfect numbers", cmd_search},
      {"verify", "run a structure check on an element", cmd_verify},
      {"conjecture", "record k for every even-norm 2-powerfully perfect number", cmd_conjecture},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    const std::string name = s.name;
    if (name != "search" && name != "conjecture" && name != "classify") {
      sub->add_option("--elem", o.elem, "element, e.g. 3+9*w");
    }
    if (name == "delta" || name == "index" || name == "search") {
      sub->add_option("--n", o.n, "even exponent (default 2)");
    }
    if (name == "search") {
      sub->add_option("--t", o.t, "target index t >= 2 (default 2)");
      sub->add_flag("--odd-norm", o.odd_norm, "scan odd norms for I_2 = 2");
      sub->add_option("--threads", o.threads, "worker threads (default: all cores)");
    }
    if (name == "search" || name == "conjecture") {
      sub->add_option("--bound", o.bound, "norm bound")->required();
      sub->add_flag("--force", o.force, "allow bounds above 10^8");
    }
    if (name == "classify") {
      sub->add_option("--p", o.p, "rational prime");
      sub->add_option("--elem", o.elem, "rational prime (alternative to --p)");
    }
    if (name == "verify") sub->add_option("--theorem", o.theorem, "check id")->required();
    registered.emplace_back(sub, &s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kGrammar;
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qp: " << e.what() << '\n' << kGrammar;
    return kExitUsage;
  }

  for (const auto& [sub, s] : registered) {
    if (!sub->parsed()) continue;
    try {
      return s->handler(o, out);
    } catch (const UsageError& e) {
      err << "qp: " << e.what() << '\n' << kGrammar;
      return kExitUsage;
    } catch (const Error& e) {
      err << "qp: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
      return kExitComputation;
    } catch (const std::exception& e) {
      err << "qp: " << e.what() << '\n';
      return kExitComputation;
    }
  }
  err << kGrammar;
  return kExitUsage;
}

}  // namespace qp::cli
