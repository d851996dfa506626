#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "genpart/congruence.hpp"
#include "genpart/corpus.hpp"
#include "genpart/partition_series.hpp"
#include "oracles.hpp"

using namespace genpart;

namespace {

using oracle::mod;
using oracle::datum_violation;

// Index of Gamma_0(N) in SL_2(Z) from the factorization.
std::int64_t gamma0_index(std::int64_t N) {
  std::int64_t idx = 1;
  for (std::int64_t p = 2; N > 1; ++p) {
    if (N % p) continue;
    std::int64_t pk = 1;
    while (N % p == 0) N /= p, pk *= p;
    idx *= pk / p * (p + 1);
  }
  return idx;
}

std::set<std::int64_t> squares_mod(std::int64_t ell) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < ell; ++x) s.insert(x * x % ell);
  return s;
}

CongruenceClaim claim_of(ExponentVector e, std::int64_t ell, std::set<std::int64_t> b) {
  CongruenceClaim c;
  c.e = std::move(e);
  c.ell = ell;
  c.residues = std::move(b);
  return c;
}

}  // namespace

TEST_CASE("worked example (2,0,0,4) mod 5") {
  const ExponentVector e{2, 0, 0, 4};
  const auto red = reduce_mod_ell(e, 5);
  CHECK(red == ExponentVector{-3, 0, 0, -1});
  CHECK(delta_ell(e, 5) == 2);
  CHECK(beta_e(red, 5) == 13);
  const auto d = build_c_vector(red, 5);
  CHECK(d.c == std::vector<std::int64_t>{1, 0, 0, 3});
  CHECK(d.e_prime == ExponentVector{-8, 0, 0, -16});
  CHECK(d.w == 12);
  CHECK(d.omega == -3);
  CHECK(d.N == 4);
  CHECK(bound_K(d, 5) == 6);

  const auto cert = verify(claim_of(e, 5, {2}));
  CHECK(cert.kind == ClaimKind::Type1);
  CHECK(cert.bound == 6);
  CHECK(cert.verdict == Verdict::Verified);
  CHECK(cert.checked_max_index == 32);
  const auto s = expand_by_recurrence(e, 33);
  for (int n = 0; n <= 6; ++n) CHECK(oracle::mod_of(s[static_cast<std::size_t>(5 * n + 2)], 5) == 0);
}

TEST_CASE("worked example (2,0,0,2) mod 5") {
  const ExponentVector e{2, 0, 0, 2};
  const auto d = build_c_vector(reduce_mod_ell(e, 5), 5);
  CHECK(d.beta_e == 21);
  CHECK(d.c == std::vector<std::int64_t>{1, 0, 0, 5});
  CHECK(d.e_prime == ExponentVector{-8, 0, 0, -28});
  CHECK(d.w == 18);
  CHECK(d.omega == -5);
  CHECK(d.N == 8);
  CHECK(bound_Kprime(d, 5) == 540);
  const auto sets = s_sets(e, 5);
  CHECK(sets.minus == std::set<std::int64_t>{2, 3});

  const auto cert = verify(claim_of(e, 5, {2, 3}));
  CHECK(cert.kind == ClaimKind::Type2Minus);
  CHECK(cert.bound == 540);
  CHECK(cert.verdict == Verdict::Verified);
  const auto s = expand_generalized(e, 5 * 540 + 4, ModularRing(5));
  for (int n = 0; n <= 540; ++n) {
    CHECK(s[static_cast<std::size_t>(5 * n + 2)] == 0);
    CHECK(s[static_cast<std::size_t>(5 * n + 3)] == 0);
  }
}

TEST_CASE("small data by hand") {
  const auto d = build_c_vector(reduce_mod_ell(ExponentVector{1}, 5), 5);
  CHECK(d.c == std::vector<std::int64_t>{4});
  CHECK(d.e_prime == ExponentVector{-24});
  CHECK(d.w == 12);
  CHECK(d.N == 1);
  CHECK(d.omega == -1);
  CHECK(bound_K(d, 5) == 1);

  const ExponentVector e{1, 1};
  const auto d3 = build_c_vector(reduce_mod_ell(e, 3), 3);
  CHECK(d3.c == std::vector<std::int64_t>{2, 2});
  CHECK(d3.e_prime == ExponentVector{-8, -8});
  CHECK(d3.w == 8);
  CHECK(d3.N == 2);
  CHECK(d3.omega == -1);
  CHECK(classify_claim(claim_of(e, 3, {2})) == ClaimKind::Type2Minus);
  CHECK(verify(claim_of(e, 3, {2})).verdict == Verdict::Verified);
}

TEST_CASE("Ramanujan congruences and their failures") {
  const std::pair<std::int64_t, std::int64_t> cases[] = {{5, 4}, {7, 5}, {11, 6}};
  for (auto [ell, B] : cases) {
    CHECK(delta_ell(ExponentVector{1}, ell) == B);
    const auto ok = verify(claim_of(ExponentVector{1}, ell, {B}));
    CHECK(ok.kind == ClaimKind::Type1);
    CHECK(ok.verdict == Verdict::Verified);
    for (std::int64_t b = 1; b < ell; ++b) {
      if (b == B) continue;
      const auto bad = verify(claim_of(ExponentVector{1}, ell, {b}));
      CHECK(bad.verdict == Verdict::Refuted);
      REQUIRE(bad.counterexample.has_value());
      const auto x = *bad.counterexample;
      CHECK(x.index == ell * x.n + b);
      CHECK(oracle::count_partitions(static_cast<int>(x.index), static_cast<int>(x.index)) % ell == x.value_mod_ell);
      CHECK(x.value_mod_ell != 0);
    }
  }
  const auto bad = verify(claim_of(ExponentVector{1}, 5, {3}));
  CHECK(bad.counterexample->index == 3);
  CHECK(bad.counterexample->value_mod_ell == 3);
}

TEST_CASE("construction failure and beta escalation") {
  const auto red = reduce_mod_ell(ExponentVector{8, 0, 0, 8}, 11);
  CHECK(beta_e(red, 11) == 3);
  CHECK_THROWS_AS(build_c_vector(red, 11), ConstructionFailure);
  const auto d = build_c_vector(red, 11, CVectorOptions{8});
  CHECK(d.beta_escalations >= 1);
  CHECK(datum_violation(d, red) == "");
  CHECK_THROWS_AS(build_c_vector(ExponentVector{}, 5), ConstructionFailure);
  CHECK_THROWS_AS(build_c_vector(reduce_mod_ell(ExponentVector{5, 10}, 5), 5), ConstructionFailure);
  CHECK_THROWS(build_c_vector(ExponentVector{1}, 5));  // entries must be reduced
}

TEST_CASE("Legendre symbol and S sets") {
  for (std::int64_t ell : {3, 5, 7, 11, 13, 17}) {
    const auto sq = squares_mod(ell);
    for (std::int64_t a = -30; a <= 30; ++a) {
      const int want = mod(a, ell) == 0 ? 0 : (sq.contains(mod(a, ell)) ? 1 : -1);
      CHECK(legendre(a, ell) == want);
    }
  }
  CHECK_THROWS(legendre(1, 2));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto e = oracle::random_vector(rng, 6, -5, 5);
    for (std::int64_t ell : {5, 7, 11, 13}) {
      const auto s = s_sets(e, ell);
      const auto delta = delta_ell(e, ell);
      CHECK(s.plus.size() == static_cast<std::size_t>((ell - 1) / 2));
      CHECK(s.minus.size() == static_cast<std::size_t>((ell - 1) / 2));
      CHECK(!s.plus.contains(delta));
      CHECK(!s.minus.contains(delta));
      for (auto g : s.plus) CHECK(squares_mod(ell).contains(mod(g - delta, ell)));
    }
  }
}

TEST_CASE("delta and beta against their definitions") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const auto e = oracle::random_vector(rng, 8, -9, 9);
    for (std::int64_t ell : {5, 7, 11, 13}) {
      const auto alpha = vector_alpha(e);
      const auto delta = delta_ell(e, ell);
      CHECK(mod(24 * delta - alpha, ell) == 0);
      const auto red = reduce_mod_ell(e, ell);
      for (std::size_t m = 1; m <= e.size(); ++m) {
        CHECK(red[m] <= 0);
        CHECK(red[m] > -ell);
        CHECK(mod(red[m] - e[m], ell) == 0);
      }
      if (red.is_zero()) continue;
      const auto b = beta_e(red, ell);
      CHECK(b > 1);
      CHECK(b <= 25);
      CHECK(mod(ell * b - vector_alpha(red), 24) == 0);
    }
  }
}

TEST_CASE("Sturm term against the index of Gamma_0(N)") {
  CHECK(gamma0_index(1) == 1);
  CHECK(gamma0_index(4) == 6);
  for (std::int64_t N : {1, 2, 4, 8, 12, 25, 36, 100, 1210, 169 * 24}) {
    for (std::int64_t w : {1, 6, 12, 17, 40}) CHECK(sturm_term(w, N) == w * gamma0_index(N) / 12);
  }
}

TEST_CASE("claim validation and classification") {
  CHECK_THROWS(claim_of(ExponentVector{1}, 4, {1}).validate());
  CHECK_THROWS(claim_of(ExponentVector{1}, 5, {5}).validate());
  CHECK_THROWS(claim_of(ExponentVector{1}, 5, {0}).validate());
  CHECK_THROWS(claim_of(ExponentVector{}, 5, {1}).validate());
  CHECK_THROWS(claim_of(ExponentVector{1}, 5, {}).validate());
  CHECK(classify_claim(claim_of(ExponentVector{1}, 5, {4})) == ClaimKind::Type1);
  CHECK(classify_claim(claim_of(ExponentVector{1}, 5, {1, 2})) == ClaimKind::Type2Minus);
  CHECK(classify_claim(claim_of(ExponentVector{1}, 5, {1})) == ClaimKind::PartialNumeric);
  CHECK(classify_claim(claim_of(ExponentVector{1}, 2, {1})) == ClaimKind::PartialNumeric);
  CHECK(classify_claim(claim_of(ExponentVector{1}, 3, {2})) == ClaimKind::PartialNumeric);  // alpha = 1
}

TEST_CASE("planning splits mixed residue sets") {
  // (2) mod 5: delta = 3, S+ = {2,4}, S- = {0,1}
  const auto plan = plan_claim(claim_of(ExponentVector{2}, 5, {2, 3, 4}));
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].claim.residues == std::set<std::int64_t>{3});
  CHECK(plan[1].claim.residues == std::set<std::int64_t>{2, 4});
  const auto certs = verify_planned(claim_of(ExponentVector{2}, 5, {2, 3, 4}));
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].kind == ClaimKind::Type1);
  CHECK(certs[1].kind == ClaimKind::Type2Plus);
  for (const auto& c : certs) CHECK(c.verdict == Verdict::Verified);

  auto truncated = claim_of(ExponentVector{2}, 5, {2});
  truncated.truncated = true;
  const auto tp = plan_claim(truncated);
  REQUIRE(tp.size() == 2);
  CHECK(tp[0].completed);
  CHECK(tp[0].claim.residues == std::set<std::int64_t>{2, 4});
  CHECK(tp[1].numeric_only);
  const auto tc = verify_planned(truncated, VerifyOptions{300, 8});
  CHECK(tc[0].verdict == Verdict::Verified);
  CHECK(tc[1].kind == ClaimKind::PartialNumeric);
  CHECK(tc[1].bound == 300);
  CHECK(tc[1].verdict == Verdict::Inconclusive);
}

TEST_CASE("eta datum conditions on random inputs") {
  std::mt19937_64 rng(33);
  const std::int64_t primes[] = {5, 7, 11, 13};
  int built = 0, escalated = 0, failed = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto e = oracle::random_vector(rng, 10, -30, 30);
    const auto ell = primes[rng() % 4];
    const auto red = reduce_mod_ell(e, ell);
    if (red.is_zero()) continue;
    try {
      const auto d = build_c_vector(red, ell, CVectorOptions{8});
      const auto why = datum_violation(d, red);
      if (!why.empty()) FAIL_CHECK(why << " for " << e.to_string() << " mod " << ell);
      ++built;
      escalated += d.beta_escalations > 0;
    } catch (const ConstructionFailure& err) {
      ++failed;
      FAIL_CHECK(err.what());
    }
  }
  MESSAGE("built " << built << ", escalated " << escalated << ", failed " << failed);
  CHECK(built > 9000);
}

TEST_CASE("eta datum conditions on the corpus") {
  const auto corpus = parse_corpus(GENPART_DATA_DIR "/bacher.json");
  for (const auto& claim : group_claims(corpus.entries).claims) {
    const auto red = reduce_mod_ell(claim.e, claim.ell);
    const auto d = build_c_vector(red, claim.ell, CVectorOptions{8});
    CHECK(datum_violation(d, red) == "");
  }
}

TEST_CASE("reduction mod ell preserves progression congruences") {
  // F_e = F_red * F_{(e - red)/ell}(q^ell) (mod ell), so on every progression
  // ell n + B the two series vanish together.
  std::mt19937_64 rng(34);
  const std::int64_t primes[] = {5, 7, 11, 13};
  const std::size_t P = 500;
  for (int t = 0; t < 100; ++t) {
    const auto e = oracle::random_vector(rng, 8, -40, 40);
    const auto ell = primes[rng() % 4];
    const ModularRing r(static_cast<std::uint64_t>(ell));
    const auto red = reduce_mod_ell(e, ell);
    std::vector<std::int64_t> quotient(e.size());
    for (std::size_t m = 1; m <= e.size(); ++m) quotient[m - 1] = (e[m] - red[m]) / ell;
    const auto lifted = expand_generalized(ExponentVector(quotient), P, r);
    ModularSeries spread(r, P);
    for (std::size_t i = 0; i * static_cast<std::size_t>(ell) < P; ++i)
      spread.set(i * static_cast<std::size_t>(ell), lifted[i]);
    const auto full = expand_generalized(e, P, r);
    const auto reduced = expand_generalized(red, P, r);
    CHECK(full == ps_mul(reduced, spread));

    for (std::int64_t B = 0; B < ell; ++B) {
      // first nonzero index on the progression is the same for both
      auto first = [&](const ModularSeries& s) {
        for (auto i = static_cast<std::size_t>(B); i < P; i += static_cast<std::size_t>(ell))
          if (s[i] != 0) return i;
        return P;
      };
      CHECK(first(full) == first(reduced));
    }
  }
}

TEST_CASE("checking past the bound never overturns a verified claim") {
  const auto corpus = parse_corpus(GENPART_DATA_DIR "/bacher.json");
  const auto claims = group_claims(corpus.entries).claims;
  std::mt19937_64 rng(35);
  int checked = 0;
  for (int attempt = 0; attempt < 200 && checked < 10; ++attempt) {
    const auto& claim = claims[rng() % claims.size()];
    for (const auto& cert : verify_planned(claim)) {
      if (cert.verdict != Verdict::Verified || cert.bound > 1500 || checked >= 10) continue;
      const auto ell = cert.claim.ell;
      const auto top = 3 * cert.bound;
      const auto s = expand_generalized(cert.claim.e, static_cast<std::size_t>(ell * top + ell), ModularRing(ell));
      bool clean = true;
      for (std::int64_t n = 0; n <= top; ++n)
        for (auto b : cert.claim.residues) clean = clean && s[static_cast<std::size_t>(ell * n + b)] == 0;
      CHECK(clean);
      ++checked;
    }
  }
  CHECK(checked == 10);
}
