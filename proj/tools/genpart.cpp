// genpart: generalized partition functions, asymptotics and congruence certificates.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genpart/asymptotics.hpp"
#include "genpart/congruence.hpp"
#include "genpart/corpus.hpp"
#include "genpart/json_io.hpp"
#include "genpart/partition_series.hpp"

using namespace genpart;
using nlohmann::json;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string real(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*Lg", digits, x);
  return buf;
}

std::string set_text(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string vec_text(const std::vector<std::int64_t>& v) { return ExponentVector(v).to_string(); }

ExponentVector nonzero_vector(const std::string& spec) {
  auto e = ExponentVector::parse(spec);
  if (e.is_zero()) throw Usage("vector " + spec + " is zero");
  return e;
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv") throw Usage("unknown format '" + f + "'");
}

// expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string e;
  std::size_t n = 0;
  std::uint64_t mod = 0;
  std::string format = "text";
};

template <class Series, class Emit>
void stream_series(const Series& s, const std::string& format, const std::string& ring, const ExponentVector& e,
                   Emit emit) {
  auto& out = std::cout;
  if (format == "csv") {
    out << "n,coefficient\n";
    for (std::size_t i = 0; i < s.precision(); ++i) {
      out << i << ',';
      emit(out, s[i]);
      out << '\n';
    }
  } else if (format == "json") {
    out << "{\"e\":" << json(e).dump() << ",\"ring\":" << json(ring).dump() << ",\"precision\":" << s.precision()
        << ",\"coefficients\":[";
    for (std::size_t i = 0; i < s.precision(); ++i) {
      if (i) out << ',';
      emit(out, s[i]);
    }
    out << "]}\n";
  } else {
    for (std::size_t i = 0; i < s.precision(); ++i) {
      if (i) out << ',';
      emit(out, s[i]);
    }
    out << '\n';
  }
}

int cmd_expand(const ExpandArgs& a) {
  check_format(a.format);
  const auto e = nonzero_vector(a.e);
  if (a.n < 1) throw Usage("--n must be at least 1");
  if (a.mod) {
    if (a.mod < 2) throw Usage("--mod must be at least 2");
    const ModularRing ring(a.mod);
    const auto s = expand_generalized(e, a.n, ring);
    stream_series(s, a.format, s.spec().to_string(), e, [](std::ostream& o, std::uint64_t v) { o << v; });
  } else {
    const auto s = expand_generalized(e, a.n, IntegerRing{});
    // exact coefficients are quoted in json so they survive any parser
    const bool quote = a.format == "json";
    stream_series(s, a.format, "ZZ", e, [quote](std::ostream& o, const mpz_class& v) {
      if (quote) o << '"' << v.get_str() << '"';
      else o << v.get_str();
    });
  }
  return 0;
}

// asym -----------------------------------------------------------------

struct AsymArgs {
  std::string e;
  std::vector<std::int64_t> table;
  std::string format = "text";
  int digits = 6;
};

int cmd_asym(const AsymArgs& a) {
  check_format(a.format);
  const auto e = nonzero_vector(a.e);
  for (std::size_t m = 1; m <= e.size(); ++m)
    if (e[m] < 0)
      throw Usage("the asymptotic formula needs every e_m >= 0, but e_" + std::to_string(m) + " = " +
                  std::to_string(e[m]) + " in " + e.to_string());
  const auto prof = profile(e);
  const long double lambda = std::exp(prof.lambda_log);
  const long double H = 2 * std::sqrt(prof.A);
  const int dg = a.digits;

  std::optional<RatioTable> table;
  if (!a.table.empty()) table = ratio_table(e, a.table);

  if (a.format == "json") {
    json j{{"e", e},
           {"d", prof.d},
           {"beta", prof.beta},
           {"gamma", prof.gamma},
           {"delta", prof.delta.get_str()},
           {"lambda", static_cast<double>(lambda)},
           {"A", static_cast<double>(prof.A)},
           {"H", static_cast<double>(H)}};
    if (table) {
      json rows = json::array();
      for (const auto& r : table->rows)
        rows.push_back({{"n", r.n},
                        {"p_exact", r.p_exact.get_str()},
                        {"P", r.P.render(dg)},
                        {"log_P", static_cast<double>(r.P.log_value)},
                        {"ratio", r.ratio}});
      j["table"] = rows;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (a.format == "csv") {
    if (table) {
      std::cout << table->to_csv();
    } else {
      std::cout << "d,beta,gamma,delta,lambda,A,H\n"
                << prof.d << ',' << prof.beta << ',' << prof.gamma << ',' << prof.delta.get_str() << ','
                << real(lambda, dg) << ',' << real(prof.A, dg) << ',' << real(H, dg) << '\n';
    }
    return 0;
  }
  std::cout << "e        " << e.to_string() << '\n'
            << "d        " << prof.d << '\n'
            << "beta     " << prof.beta << '\n'
            << "gamma    " << prof.gamma << '\n'
            << "delta    " << prof.delta.get_str() << " = " << real(prof.delta.get_d(), dg) << '\n'
            << "lambda   " << real(lambda, dg) << '\n'
            << "A        " << real(prof.A, dg) << '\n'
            << "H~       " << real(H, dg) << "   (2 sqrt(A))\n";
  if (table) std::cout << '\n' << table->to_text();
  return 0;
}

// sturm ----------------------------------------------------------------

struct SturmArgs {
  std::string e;
  std::int64_t ell = 0;
  bool strict = false;
  std::string format = "text";
};

int cmd_sturm(const SturmArgs& a) {
  check_format(a.format);
  const auto e = nonzero_vector(a.e);
  if (!is_prime(a.ell)) throw Usage("--ell must be prime, got " + std::to_string(a.ell));
  const auto reduced = reduce_mod_ell(e, a.ell);
  const auto datum = build_c_vector(reduced, a.ell, CVectorOptions{a.strict ? 0 : VerifyOptions{}.max_beta_escalations});
  const auto delta = delta_ell(e, a.ell);
  std::optional<std::int64_t> K, Kp;
  std::optional<ResidueSets> sets;
  std::string no_type2;
  if (a.ell >= 5) K = bound_K(datum, a.ell);
  try {
    if (a.ell == 3 && vector_alpha(e) % 3 != 0) throw std::invalid_argument("alpha is not divisible by 3");
    sets = s_sets(e, a.ell);
    Kp = bound_Kprime(datum, a.ell);
  } catch (const std::exception& err) {
    no_type2 = err.what();
  }

  if (a.format == "json") {
    json j{{"e", e}, {"ell", a.ell}, {"datum", datum}, {"delta_ell", delta}};
    j["S_plus"] = sets ? json(sets->plus) : json(nullptr);
    j["S_minus"] = sets ? json(sets->minus) : json(nullptr);
    j["K"] = K ? json(*K) : json(nullptr);
    j["K_prime"] = Kp ? json(*Kp) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (a.format == "csv") {
    std::cout << "field,value\n";
    std::cout << "reduced,\"" << datum.e_reduced.to_string() << "\"\nc,\"" << vec_text(datum.c) << "\"\ne_prime,\""
              << datum.e_prime.to_string() << "\"\nw," << datum.w << "\nomega," << datum.omega << "\nN0," << datum.N0
              << "\nN," << datum.N << "\ndelta_ell," << delta << "\nbeta_e," << datum.beta_e << "\nK,"
              << (K ? std::to_string(*K) : "") << "\nK_prime," << (Kp ? std::to_string(*Kp) : "") << '\n';
    return 0;
  }
  std::cout << "e          " << e.to_string() << "  mod " << a.ell << '\n'
            << "reduced    " << datum.e_reduced.to_string() << "   alpha = " << datum.alpha_reduced << '\n'
            << "beta_e     " << datum.beta_e;
  if (datum.beta_escalations) std::cout << "   (advanced " << datum.beta_escalations << " period(s))";
  std::cout << '\n'
            << "c          " << vec_text(datum.c) << '\n'
            << "e'         " << datum.e_prime.to_string() << '\n'
            << "w          " << datum.w << '\n'
            << "omega      " << datum.omega << '\n'
            << "N          " << datum.N << "   (N0 = " << datum.N0 << ")\n"
            << "delta      " << delta << '\n';
  if (sets) std::cout << "S+         " << set_text(sets->plus) << "\nS-         " << set_text(sets->minus) << '\n';
  if (K)
    std::cout << "K          " << *K << "   Type 1: p(" << a.ell << "n+" << delta << ") for n <= K\n";
  else
    std::cout << "K          n/a   Type 1 needs ell >= 5\n";
  if (Kp)
    std::cout << "K'         " << *Kp << "   Type 2: p(" << a.ell << "n+B), B in S+ or S-, for n <= K'\n";
  else
    std::cout << "K'         n/a   " << no_type2 << '\n';
  return 0;
}

// verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string e;
  std::int64_t ell = 0;
  std::vector<std::int64_t> b;
  bool allow_partial = false;
  std::int64_t depth = 2000;
  std::string format = "text";
};

void print_certificate(const SturmCertificate& c) {
  std::cout << "claim      " << c.claim.to_string() << '\n'
            << "kind       " << to_string(c.kind) << '\n'
            << "bound      " << c.bound << '\n'
            << "checked    indices up to " << c.checked_max_index << '\n'
            << "verdict    " << to_string(c.verdict) << '\n';
  if (c.counterexample) {
    const auto& x = *c.counterexample;
    std::cout << "counter    p(" << x.index << ") = p(" << c.claim.ell << "*" << x.n << "+" << x.residue
              << ") == " << x.value_mod_ell << " (mod " << c.claim.ell << ")\n";
  }
  if (!c.note.empty()) std::cout << "note       " << c.note << '\n';
}

int cmd_verify(const VerifyArgs& a) {
  check_format(a.format);
  CongruenceClaim claim;
  claim.e = nonzero_vector(a.e);
  claim.ell = a.ell;
  claim.residues.insert(a.b.begin(), a.b.end());
  claim.validate();
  VerifyOptions opts;
  opts.numeric_depth = a.depth;
  const auto certs = verify_planned(claim, opts);

  bool refuted = false, partial = false;
  for (const auto& c : certs) {
    refuted = refuted || c.verdict == Verdict::Refuted;
    partial = partial || c.verdict == Verdict::Inconclusive;
  }
  if (a.format == "json") {
    std::cout << json(certs).dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << "residues,kind,bound,checked_max_index,verdict,counterexample_index\n";
    for (const auto& c : certs)
      std::cout << '"' << set_text(c.claim.residues) << "\"," << to_string(c.kind) << ',' << c.bound << ','
                << c.checked_max_index << ',' << to_string(c.verdict) << ','
                << (c.counterexample ? std::to_string(c.counterexample->index) : "") << '\n';
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (i) std::cout << '\n';
      print_certificate(certs[i]);
    }
  }
  if (refuted) {
    for (const auto& c : certs)
      if (c.counterexample)
        std::cerr << "refuted: p(" << c.counterexample->index << ")_" << claim.e.to_string() << " == "
                  << c.counterexample->value_mod_ell << " (mod " << claim.ell << ")\n";
    return 1;
  }
  if (partial && !a.allow_partial) {
    std::cerr << "inconclusive: numeric check only (pass --allow-partial to accept)\n";
    return 3;
  }
  return 0;
}

// corpus ---------------------------------------------------------------

struct CorpusArgs {
  std::string file;
  unsigned jobs = 1;
  std::string report;
  std::int64_t depth = 2000;
  std::uint64_t seed = RunOptions{}.seed;
  bool no_timing = false;
  bool quiet = false;
};

int cmd_corpus(const CorpusArgs& a) {
  const auto corpus = parse_corpus(a.file);
  const auto grouped = group_claims(corpus.entries);
  for (const auto& w : grouped.warnings) std::cerr << "warning: " << w << '\n';
  RunOptions opts;
  opts.parallelism = std::max(1u, a.jobs);
  opts.numeric_depth = a.depth;
  opts.seed = a.seed;
  const auto report = run_corpus(grouped.claims, opts);
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw std::runtime_error("cannot write " + a.report);
    out << report_to_json(report, !a.no_timing).dump(2) << '\n';
  }
  const auto table = report_to_table(report);
  if (a.quiet) std::cout << table.substr(table.find("\nclaims:") + 1);
  else std::cout << table;
  if (report.failing()) {
    std::cerr << "corpus run failed: " << report.errors.size() << " error(s), "
              << report.claims_by_verdict().at("Refuted") << " refuted claim(s)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized partition functions p(n)_e: expansion, asymptotics and congruence certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "genpart 1.0");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "coefficients of prod_m prod_n (1 - q^{mn})^{-e_m}");
  expand->add_option("--e", ex.e, "exponent vector, dense 2,0,0,4 or sparse 1:2,4:4")->required();
  expand->add_option("--n", ex.n, "number of coefficients")->required();
  expand->add_option("--mod", ex.mod, "reduce modulo m");
  expand->add_option("--format", ex.format, "text|json|csv");

  AsymArgs as;
  auto* asym = app.add_subcommand("asym", "asymptotic constants and exact/asymptotic ratio table");
  asym->add_option("--e", as.e, "exponent vector with nonnegative entries")->required();
  asym->add_option("--table", as.table, "comma separated n values")->delimiter(',');
  asym->add_option("--format", as.format, "text|json|csv");
  asym->add_option("--digits", as.digits, "significant digits for real numbers")->check(CLI::Range(1, 30));

  SturmArgs st;
  auto* sturm = app.add_subcommand("sturm", "eta-quotient datum and the bounds K, K'");
  sturm->add_option("--e", st.e, "exponent vector")->required();
  sturm->add_option("--ell", st.ell, "prime modulus")->required();
  sturm->add_flag("--strict", st.strict, "never advance beta_e");
  sturm->add_option("--format", st.format, "text|json|csv");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "certify p(ell n + B)_e == 0 (mod ell)");
  verify->add_option("--e", ve.e, "exponent vector")->required();
  verify->add_option("--ell", ve.ell, "prime modulus")->required();
  verify->add_option("--b", ve.b, "residues B, comma separated")->required()->delimiter(',');
  verify->add_flag("--allow-partial", ve.allow_partial, "exit 0 on a clean numeric-only check");
  verify->add_option("--depth", ve.depth, "progression depth for numeric-only checks");
  verify->add_option("--format", ve.format, "text|json|csv");

  CorpusArgs co;
  auto* corpus = app.add_subcommand("corpus", "batch verification of a claim corpus");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "verify every claim in a corpus file");
  run->add_option("file", co.file, "corpus JSON")->required();
  run->add_option("--jobs", co.jobs, "worker threads");
  run->add_option("--report", co.report, "write the JSON report here");
  run->add_option("--depth", co.depth, "progression depth for numeric-only checks");
  run->add_option("--seed", co.seed, "spot-check sampling seed");
  run->add_flag("--no-timing", co.no_timing, "omit timing from the report");
  run->add_flag("--quiet", co.quiet, "print only the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (*expand) return cmd_expand(ex);
    if (*asym) return cmd_asym(as);
    if (*sturm) return cmd_sturm(st);
    if (*verify) return cmd_verify(ve);
    if (*run) return cmd_corpus(co);
  } catch (const std::exception& err) {
    std::cerr << "genpart: error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
