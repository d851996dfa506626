#include "genpart/congruence.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include <gmpxx.h>

#include "genpart/partition_series.hpp"

namespace genpart {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t div_floor(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t div_ceil(std::int64_t a, std::int64_t b) { return -div_floor(-a, b); }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % m);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % m);
    exp >>= 1;
  }
  return result;
}

// Inverse of a modulo m for gcd(a, m) = 1, by brute force: m is 24 or a small prime.
std::int64_t small_inverse(std::int64_t a, std::int64_t m) {
  a = mod_floor(a, m);
  for (std::int64_t x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  throw std::logic_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

void require_prime(std::int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not prime");
}

bool type2_applicable(const ExponentVector& e, std::int64_t ell) {
  if (ell == 2) return false;  // no Legendre symbol convention mod 2
  if (ell == 3) return mod_floor(vector_alpha(e), 3) == 0;
  return true;
}

std::string residues_to_string(const std::set<std::int64_t>& r) {
  std::string s;
  for (auto b : r) s += (s.empty() ? "" : ",") + std::to_string(b);
  return s;
}

// Correction term (omega - delta) / ell, clamped at 0. For ell | 24 the
// quotient need not be integral and is rounded up.
std::int64_t correction_term(const EtaDatum& d, std::int64_t ell) {
  const std::int64_t num = d.omega - d.delta_ell;
  if (num % ell != 0) {
    if (24 % ell != 0)
      throw std::logic_error("non-integral correction term (omega - delta_ell) / ell = " + std::to_string(num) +
                             "/" + std::to_string(ell));
    return std::max<std::int64_t>(0, div_ceil(num, ell));
  }
  return std::max<std::int64_t>(0, num / ell);
}

}  // namespace

void CongruenceClaim::validate() const {
  if (e.is_zero()) throw std::invalid_argument("claim vector is zero");
  require_prime(ell);
  if (residues.empty()) throw std::invalid_argument("claim has no residues");
  for (auto b : residues)
    if (b < 1 || b > ell - 1)
      throw std::invalid_argument("residue " + std::to_string(b) + " outside [1, " + std::to_string(ell - 1) + "]");
}

std::string CongruenceClaim::to_string() const {
  return "p(" + std::to_string(ell) + "n+{" + residues_to_string(residues) + "})_" + e.to_string();
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Type1: return "Type1";
    case ClaimKind::Type2Plus: return "Type2Plus";
    case ClaimKind::Type2Minus: return "Type2Minus";
    case ClaimKind::PartialNumeric: return "PartialNumeric";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ClaimKind claim_kind_from_string(const std::string& s) {
  for (auto k : {ClaimKind::Type1, ClaimKind::Type2Plus, ClaimKind::Type2Minus, ClaimKind::PartialNumeric})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown claim kind '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Verified, Verdict::Refuted, Verdict::Inconclusive})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

ExponentVector reduce_mod_ell(const ExponentVector& e, std::int64_t ell) {
  require_prime(ell);
  std::vector<std::int64_t> r(e.size());
  for (std::size_t m = 1; m <= e.size(); ++m) {
    const std::int64_t v = mod_floor(e[m], ell);
    r[m - 1] = v == 0 ? 0 : v - ell;
  }
  return ExponentVector(std::move(r));
}

std::int64_t delta_ell(const ExponentVector& e, std::int64_t ell) {
  require_prime(ell);
  if (24 % ell == 0) return 0;
  return mod_floor(mod_floor(vector_alpha(e), ell) * small_inverse(24, ell), ell);
}

std::int64_t beta_e(const ExponentVector& e_reduced, std::int64_t ell) {
  require_prime(ell);
  const std::int64_t alpha = vector_alpha(e_reduced);
  std::int64_t period = 24;
  std::int64_t n = 0;
  if (24 % ell != 0) {
    n = mod_floor(small_inverse(ell, 24) * mod_floor(alpha, 24), 24);
  } else {
    if (alpha % ell != 0)
      throw std::invalid_argument("ell = " + std::to_string(ell) + " requires ell | alpha, but alpha = " +
                                  std::to_string(alpha));
    period = 24 / ell;
    n = mod_floor(alpha / ell, period);
  }
  while (n <= 1) n += period;
  return n;
}

EtaDatum build_c_vector(const ExponentVector& e_reduced, std::int64_t ell, CVectorOptions options) {
  require_prime(ell);
  for (auto v : e_reduced.entries())
    if (v > 0 || v < -ell + 1)
      throw std::invalid_argument("build_c_vector needs entries in [-ell + 1, 0]; got " + e_reduced.to_string());
  if (e_reduced.is_zero())
    throw ConstructionFailure("vector reduces to zero mod " + std::to_string(ell) + "; no eta-quotient to build");

  const std::size_t k = e_reduced.size();
  const std::int64_t base_beta = beta_e(e_reduced, ell);
  const std::int64_t period = 24 % ell != 0 ? 24 : 24 / ell;
  std::int64_t entry_sum = 0;
  for (auto v : e_reduced.entries()) entry_sum += v;

  for (int esc = 0; esc <= options.max_beta_escalations; ++esc) {
    const std::int64_t beta = base_beta + esc * period;

    std::vector<std::int64_t> c(k, 0);
    std::int64_t rest = beta;
    for (std::size_t m = k; m >= 2; --m) {
      if (e_reduced[m] == 0) continue;
      c[m - 1] = rest / static_cast<std::int64_t>(m);
      rest -= static_cast<std::int64_t>(m) * c[m - 1];
    }
    c[0] = rest;

    const auto c_sum = [&] { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
    if (mod_floor(entry_sum - ell * c_sum(), 2) != 0) {
      std::size_t j = 0;
      for (std::size_t m = 2; m <= k && j == 0; m += 2)
        if (c[m - 1] > 0) j = m;
      if (j != 0) {
        c[j - 1] -= 1;
        c[0] += static_cast<std::int64_t>(j);
      } else {
        for (std::size_t m = 3; m <= k && j == 0; m += 2)
          if (c[m - 1] > 0) j = m;
        if (j == 0) continue;  // no fix-up applies at this beta
        c[j - 1] -= 1;
        c[j - 2] += 1;
        c[0] += 1;
      }
    }

    EtaDatum d;
    d.ell = ell;
    d.e_reduced = e_reduced;
    d.alpha_reduced = vector_alpha(e_reduced);
    d.delta_ell = delta_ell(e_reduced, ell);
    d.beta_e = beta;
    d.beta_escalations = esc;
    std::vector<std::int64_t> ep(k);
    for (std::size_t m = 1; m <= k; ++m) ep[m - 1] = e_reduced[m] - ell * c[m - 1];
    d.c = std::move(c);
    d.e_prime = ExponentVector(ep);

    std::int64_t weighted = 0, plain = 0;
    for (std::size_t m = 1; m <= k; ++m) {
      weighted += static_cast<std::int64_t>(m) * ep[m - 1];
      plain += ep[m - 1];
    }
    d.w = -plain / 2;
    d.omega = weighted / 24;
    d.N0 = 1;
    for (auto m : d.e_prime.support()) d.N0 = std::lcm(d.N0, static_cast<std::int64_t>(m));
    std::int64_t level_sum = 0;
    for (auto m : d.e_prime.support()) level_sum += d.N0 / static_cast<std::int64_t>(m) * d.e_prime[m];
    d.N = 24 * d.N0 / std::gcd<std::int64_t>(24, level_sum);
    check_datum(d);
    return d;
  }
  throw ConstructionFailure("no parity fix-up applies for " + e_reduced.to_string() + " mod " + std::to_string(ell) +
                            " (beta_e = " + std::to_string(base_beta) + ", " +
                            std::to_string(options.max_beta_escalations) + " escalations allowed)");
}

void check_datum(const EtaDatum& d) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("eta datum for " + d.e_reduced.to_string() + " mod " + std::to_string(d.ell) + ": " +
                           what);
  };
  const std::int64_t ell = d.ell;
  const std::size_t k = std::max(d.e_reduced.size(), d.c.size());
  std::int64_t c_weighted = 0, weighted = 0, plain = 0;
  for (std::size_t m = 1; m <= k; ++m) {
    const std::int64_t cm = m <= d.c.size() ? d.c[m - 1] : 0;
    if (cm < 0) fail("negative c entry");
    if (d.e_prime[m] != d.e_reduced[m] - ell * cm) fail("e' != e - ell c");
    if (d.e_prime[m] > 0) fail("condition (i): positive e' entry");
    c_weighted += static_cast<std::int64_t>(m) * cm;
    weighted += static_cast<std::int64_t>(m) * d.e_prime[m];
    plain += d.e_prime[m];
  }
  if (d.e_prime.size() > k) fail("e' longer than e and c");
  if (c_weighted != d.beta_e) fail("sum m c_m != beta_e");
  if (weighted % 24 != 0 || weighted / 24 != d.omega) fail("condition (ii): omega not integral");
  if (plain % 2 != 0 || -plain / 2 != d.w) fail("condition (iii): w not integral");
  if (d.w < 1) fail("weight w must be positive");
  std::int64_t n0 = 1;
  for (auto m : d.e_prime.support()) n0 = std::lcm(n0, static_cast<std::int64_t>(m));
  if (n0 != d.N0) fail("N0 is not the lcm of the support of e'");
  std::int64_t level_sum = 0, check_sum = 0;
  for (auto m : d.e_prime.support()) {
    level_sum += d.N0 / static_cast<std::int64_t>(m) * d.e_prime[m];
    if (d.N % static_cast<std::int64_t>(m) != 0) fail("N not divisible by a support index");
    check_sum += d.N / static_cast<std::int64_t>(m) * d.e_prime[m];
  }
  if (d.N != 24 * d.N0 / std::gcd<std::int64_t>(24, level_sum)) fail("N does not match its definition");
  if (check_sum % 24 != 0) fail("condition (iv): sum (N/m) e'_m not divisible by 24");
  if (24 % ell != 0 && mod_floor(d.omega - d.delta_ell, ell) != 0) fail("omega != delta_ell (mod ell)");
}

std::int64_t sturm_term(std::int64_t w, std::int64_t N) {
  if (w < 1 || N < 1) throw std::invalid_argument("sturm_term needs w >= 1 and N >= 1");
  mpz_class num = mpz_class(static_cast<long>(w)) * static_cast<long>(N);
  mpz_class den = 12;
  for (auto p : prime_divisors(N)) {
    num *= static_cast<long>(p + 1);
    den *= static_cast<long>(p);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

std::int64_t bound_K(const EtaDatum& datum, std::int64_t ell) {
  if (ell < 5) throw std::invalid_argument("the Type 1 bound needs ell >= 5");
  return sturm_term(datum.w, datum.N) + correction_term(datum, ell);
}

std::int64_t bound_Kprime(const EtaDatum& datum, std::int64_t ell) {
  require_prime(ell);
  return sturm_term(datum.w, datum.N * ell * ell) + correction_term(datum, ell);
}

int legendre(std::int64_t a, std::int64_t ell) {
  if (ell == 2) throw std::invalid_argument("Legendre symbol mod 2 is not supported");
  require_prime(ell);
  const std::int64_t r = mod_floor(a, ell);
  if (r == 0) return 0;
  return pow_mod(r, (ell - 1) / 2, ell) == 1 ? 1 : -1;
}

ResidueSets s_sets(const ExponentVector& e, std::int64_t ell) {
  if (ell == 2) throw std::invalid_argument("S_+/S_- are not defined for ell = 2");
  const std::int64_t delta = delta_ell(e, ell);
  ResidueSets s;
  for (std::int64_t g = 0; g < ell; ++g) {
    const int l = legendre(g - delta, ell);
    if (l == 1) s.plus.insert(g);
    if (l == -1) s.minus.insert(g);
  }
  return s;
}

ClaimKind classify_claim(const CongruenceClaim& claim) {
  claim.validate();
  const std::int64_t ell = claim.ell;
  if (ell >= 5 && claim.residues == std::set<std::int64_t>{delta_ell(claim.e, ell)}) return ClaimKind::Type1;
  if (type2_applicable(claim.e, ell)) {
    const auto sets = s_sets(claim.e, ell);
    if (claim.residues == sets.plus) return ClaimKind::Type2Plus;
    if (claim.residues == sets.minus) return ClaimKind::Type2Minus;
  }
  return ClaimKind::PartialNumeric;
}

namespace {

struct Prepared {
  CongruenceClaim claim;
  ClaimKind kind = ClaimKind::PartialNumeric;
  std::optional<EtaDatum> datum;
  std::int64_t bound = 0;
  std::size_t precision = 0;
  std::string note;
};

Prepared prepare(const CongruenceClaim& claim, const VerifyOptions& options, bool numeric_only = false) {
  Prepared p;
  p.claim = claim;
  p.kind = numeric_only ? ClaimKind::PartialNumeric : classify_claim(claim);
  const std::int64_t ell = claim.ell;
  const CVectorOptions cv{options.max_beta_escalations};
  if (p.kind == ClaimKind::PartialNumeric) {
    try {
      p.datum = build_c_vector(reduce_mod_ell(claim.e, ell), ell, cv);
    } catch (const std::exception&) {
      // the datum is informational for numeric checks
    }
    if (options.numeric_depth < 0) throw std::invalid_argument("numeric depth must be >= 0");
    p.bound = options.numeric_depth;
    p.note = numeric_only ? "residue list is truncated in the source; numeric check only"
                          : "no theorem applies to this residue set; numeric check only";
  } else {
    p.datum = build_c_vector(reduce_mod_ell(claim.e, ell), ell, cv);
    p.bound = p.kind == ClaimKind::Type1 ? bound_K(*p.datum, ell) : bound_Kprime(*p.datum, ell);
    if (p.datum->beta_escalations > 0)
      p.note = "beta_e advanced " + std::to_string(p.datum->beta_escalations) + " period(s) to admit a parity fix-up";
  }
  p.precision = static_cast<std::size_t>(ell * p.bound + *claim.residues.rbegin() + 1);
  return p;
}

SturmCertificate conclude(const Prepared& p, const ModularSeries& series) {
  SturmCertificate cert{p.claim, p.kind, p.datum, p.bound, 0, Verdict::Verified, std::nullopt, p.note};
  const std::int64_t ell = p.claim.ell;
  for (std::int64_t n = 0; n <= p.bound; ++n) {
    for (auto b : p.claim.residues) {
      const std::int64_t idx = ell * n + b;
      const auto v = series[static_cast<std::size_t>(idx)];
      if (v != 0) {
        cert.verdict = Verdict::Refuted;
        cert.counterexample = Counterexample{n, b, idx, v};
        cert.checked_max_index = idx;
        return cert;
      }
    }
  }
  cert.checked_max_index = ell * p.bound + *p.claim.residues.rbegin();
  if (p.kind == ClaimKind::PartialNumeric) cert.verdict = Verdict::Inconclusive;
  return cert;
}

ModularSeries expand_for(const CongruenceClaim& claim, std::size_t precision) {
  return expand_by_product(claim.e, precision, ModularRing(static_cast<std::uint64_t>(claim.ell)));
}

}  // namespace

SturmCertificate verify(const CongruenceClaim& claim, const VerifyOptions& options) {
  const auto p = prepare(claim, options);
  return conclude(p, expand_for(claim, p.precision));
}

std::vector<PlannedCheck> plan_claim(const CongruenceClaim& claim) {
  claim.validate();
  const std::int64_t ell = claim.ell;
  std::vector<PlannedCheck> plan;
  std::set<std::int64_t> left = claim.residues;

  auto piece = [&](std::set<std::int64_t> residues, std::set<std::int64_t> claimed, bool completed,
                   const std::string& tag, bool numeric_only = false) {
    CongruenceClaim c = claim;
    c.residues = std::move(residues);
    c.source = claim.source.empty() ? tag : claim.source + " " + tag;
    plan.push_back({std::move(c), std::move(claimed), completed, numeric_only});
  };

  const std::int64_t delta = delta_ell(claim.e, ell);
  if (ell >= 5 && left.contains(delta)) {
    left.erase(delta);
    piece({delta}, {delta}, false, "[delta]");
  }
  if (type2_applicable(claim.e, ell)) {
    const auto sets = s_sets(claim.e, ell);
    for (const auto* s : {&sets.plus, &sets.minus}) {
      const char* name = s == &sets.plus ? "S+" : "S-";
      if (s->contains(0)) continue;  // p(0)_e = 1, never a congruence class
      std::set<std::int64_t> covered;
      std::set_intersection(s->begin(), s->end(), left.begin(), left.end(), std::inserter(covered, covered.end()));
      if (covered.empty()) continue;
      const bool full = covered.size() == s->size();
      for (auto b : covered) left.erase(b);
      piece(*s, covered, !full, full ? std::string("[") + name + "]" : std::string("[") + name + " completed]");
    }
  }
  if (!left.empty()) piece(left, left, false, "[partial]");
  if (claim.truncated) piece(claim.residues, claim.residues, false, "[truncated]", true);
  return plan;
}

std::vector<SturmCertificate> verify_planned(const CongruenceClaim& claim, const VerifyOptions& options) {
  const auto plan = plan_claim(claim);
  std::vector<Prepared> prepared;
  std::size_t precision = 0;
  for (const auto& piece : plan) {
    prepared.push_back(prepare(piece.claim, options, piece.numeric_only));
    precision = std::max(precision, prepared.back().precision);
  }
  const auto series = expand_for(claim, precision);

  std::vector<SturmCertificate> certs;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    auto cert = conclude(prepared[i], series);
    if (plan[i].completed) {
      cert.note = (cert.note.empty() ? "" : cert.note + "; ") + "residue set completed from claimed {" +
                  residues_to_string(plan[i].claimed) + "}";
      if (cert.verdict == Verdict::Refuted && !plan[i].claimed.contains(cert.counterexample->residue)) {
        CongruenceClaim fallback = plan[i].claim;
        fallback.residues = plan[i].claimed;
        const auto p = prepare(fallback, options);
        cert = conclude(p, p.precision <= series.precision() ? series : expand_for(fallback, p.precision));
        cert.note = "completed set fails at an unclaimed residue; numeric check of the claimed residues only";
      }
    }
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace genpart
