#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genpart/partition_series.hpp"
#include "oracles.hpp"

using namespace genpart;

namespace {

std::vector<mpz_class> as_vector(const ExactSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_CASE("exponent vector parsing and canonical form") {
  CHECK(ExponentVector::parse("2,0,0,4") == ExponentVector{2, 0, 0, 4});
  CHECK(ExponentVector::parse("(2,0,0,4)") == ExponentVector{2, 0, 0, 4});
  CHECK(ExponentVector::parse("1:2,8:2") == ExponentVector{2, 0, 0, 0, 0, 0, 0, 2});
  CHECK(ExponentVector::parse("1,2,0,0") == ExponentVector{1, 2});
  CHECK(ExponentVector::parse("-3, 0 ,+1").to_string() == "(-3,0,1)");
  CHECK(ExponentVector::parse("0,0").is_zero());
  CHECK_THROWS_AS(ExponentVector::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(ExponentVector::parse("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(ExponentVector::parse("1:1,1:2"), std::invalid_argument);
  CHECK_THROWS_AS(ExponentVector::parse(""), std::invalid_argument);
  const ExponentVector e{0, 3, 0, -1};
  CHECK(e.support() == std::vector<std::size_t>{2, 4});
  CHECK(e[9] == 0);
  CHECK(ExponentVector::from_sparse(e.to_sparse()) == e);
  CHECK((ExponentVector{1, 2} + ExponentVector{-1, -2, 3}) == ExponentVector{0, 0, 3});
}

TEST_CASE("d, alpha and compression") {
  CHECK(vector_d(ExponentVector{0, 2, 0, 4}) == 2);
  CHECK(vector_d(ExponentVector{0, 0, 1, 0, 0, 5}) == 3);
  CHECK(vector_d(ExponentVector{1, 0, 1}) == 1);
  CHECK_THROWS(vector_d(ExponentVector{}));
  CHECK(compress_vector(ExponentVector{0, 1}) == ExponentVector{1});
  CHECK(compress_vector(ExponentVector{0, 2, 0, 4}) == ExponentVector{2, 4});
  CHECK(vector_alpha(ExponentVector{2, 0, 0, 4}) == 18);
  CHECK(vector_alpha(ExponentVector{-3, 0, 0, -1}) == -7);
}

TEST_CASE("e = (1) matches partition enumeration") {
  const auto s = expand_by_recurrence(ExponentVector{1}, 40);
  for (int n = 0; n < 40; ++n) CHECK(s[static_cast<std::size_t>(n)] == oracle::count_partitions(n, n));
  CHECK(s[4] == 5);
  CHECK(s[9] == 30);
}

TEST_CASE("small closed forms") {
  // even parts only
  const auto even = expand_by_recurrence(ExponentVector{0, 1}, 7);
  CHECK(as_vector(even) == std::vector<mpz_class>{1, 0, 1, 0, 2, 0, 3});
  // pairs of partitions
  const auto two = expand_by_recurrence(ExponentVector{2}, 5);
  CHECK(as_vector(two) == std::vector<mpz_class>{1, 2, 5, 10, 20});
  // the inverse of the partition series is the pentagonal series
  const auto pent = expand_by_recurrence(ExponentVector{-1}, 16);
  CHECK(as_vector(pent) == std::vector<mpz_class>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1});
  CHECK(expand_by_recurrence(ExponentVector{}, 5) == ExactSeries::one(IntegerRing{}, 5));
}

TEST_CASE("log-derivative weights") {
  // e = (1): c(j) = sigma_1(j)
  CHECK(log_derivative_weights(ExponentVector{1}, 7) == std::vector<std::int64_t>{0, 1, 3, 4, 7, 6, 12});
  // e = (0,1): c(j) = 2 sigma_1(j/2) on even j
  CHECK(log_derivative_weights(ExponentVector{0, 1}, 7) == std::vector<std::int64_t>{0, 0, 2, 0, 6, 0, 8});
}

TEST_CASE("both expansions agree with factor-by-factor multiplication") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const auto e = oracle::random_vector(rng, 8, -6, 6);
    const std::size_t n = 1 + rng() % 300;
    const auto ref = oracle::factor_by_factor(e, n);
    const auto rec = expand_by_recurrence(e, n);
    const auto prod = expand_by_product(e, n, IntegerRing{});
    CHECK(as_vector(rec) == ref);
    CHECK(rec == prod);
  }
}

TEST_CASE("modular expansion is the reduction of the exact one") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const auto e = oracle::random_vector(rng, 8, -6, 6);
    const std::size_t n = 1 + rng() % 250;
    const auto exact = expand_generalized(e, n, IntegerRing{});
    for (std::uint64_t m : {2ull, 3ull, 13ull, 1000000007ull, (1ull << 35) + 53}) {
      const auto mod = expand_generalized(e, n, ModularRing(m));
      bool same = true;
      for (std::size_t i = 0; i < n; ++i) same = same && mod[i] == oracle::mod_of(exact[i], m);
      CHECK(same);
    }
  }
}

TEST_CASE("additivity: series(e + f) = series(e) series(f)") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto e = oracle::random_vector(rng, 6, -4, 4);
    const auto f = oracle::random_vector(rng, 6, -4, 4);
    const std::size_t n = 1 + rng() % 200;
    const IntegerRing z;
    CHECK(expand_generalized(e + f, n, z) == ps_mul(expand_generalized(e, n, z), expand_generalized(f, n, z)));
    const ModularRing r(7);
    CHECK(expand_generalized(e + f, n, r) == ps_mul(expand_generalized(e, n, r), expand_generalized(f, n, r)));
  }
}

TEST_CASE("compression: p(dn)_e = p(n)_{compressed}, zero off multiples of d") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 30; ++t) {
    const auto base = oracle::random_vector(rng, 4, 0, 3);
    const std::int64_t scale = 2 + static_cast<std::int64_t>(rng() % 3);
    std::map<std::int64_t, std::int64_t> sparse;
    for (const auto& [m, v] : base.to_sparse()) sparse[m * scale] = v;
    const auto e = ExponentVector::from_sparse(sparse);
    const auto d = vector_d(e);
    const std::size_t n = 90;
    const auto full = expand_by_recurrence(e, n * static_cast<std::size_t>(d));
    const auto small = expand_by_recurrence(compress_vector(e), n);
    for (std::size_t i = 0; i < full.precision(); ++i) {
      if (i % static_cast<std::size_t>(d) == 0) CHECK(full[i] == small[i / static_cast<std::size_t>(d)]);
      else CHECK(full[i] == 0);
    }
  }
}
