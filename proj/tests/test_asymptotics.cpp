#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "genpart/asymptotics.hpp"
#include "genpart/partition_series.hpp"

using namespace genpart;

namespace {

constexpr long double pi = std::numbers::pi_v<long double>;

std::string sig6(long double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%#.6Lg", x);
  return buf;
}

}  // namespace

TEST_CASE("profile of the ordinary partition function") {
  const auto p = profile(ExponentVector{1});
  CHECK(p.d == 1);
  CHECK(p.beta == 1);
  CHECK(p.gamma == 1);
  CHECK(p.delta == 1);
  CHECK(p.A_over_pi2 == mpq_class(1, 6));
  CHECK(std::fabs(p.A - pi * pi / 6) < 1e-15L);
  CHECK(sig6(p.A) == "1.64493");
  CHECK(sig6(growth_rate(ExponentVector{1})) == "2.56510");
  CHECK(std::fabs(growth_rate(ExponentVector{1}) - pi * std::sqrt(2.0L / 3)) < 1e-15L);
}

TEST_CASE("profile of (1,0,1) and compressed vectors") {
  const auto p = profile(ExponentVector{1, 0, 1});
  CHECK(p.beta == 4);
  CHECK(p.gamma == 2);
  CHECK(p.delta == mpq_class(4, 3));
  CHECK(growth_rate_squared_over_pi2(p) == mpq_class(8, 9));

  const auto q = profile(ExponentVector{0, 1});
  CHECK(q.d == 2);
  const auto r = profile(ExponentVector{1});
  CHECK(q.delta == r.delta);
  CHECK(q.A == r.A);
  CHECK(q.lambda_log == r.lambda_log);

  CHECK_THROWS_AS(profile(ExponentVector{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(profile(ExponentVector{}), std::invalid_argument);
}

TEST_CASE("Hardy-Ramanujan anchor") {
  for (std::int64_t n : {10, 100, 1000}) {
    const long double nn = static_cast<long double>(n);
    const long double log_hr = pi * std::sqrt(2 * nn / 3) - std::log(4 * nn * std::sqrt(3.0L));
    const long double rel = std::expm1(evaluate_P(ExponentVector{1}, n).log_value - log_hr);
    CHECK(std::fabs(rel) < 5e-11L);
  }
}

TEST_CASE("closed form for (1,0,1)") {
  for (std::int64_t n : {1, 50, 1000, 10000}) {
    const long double nn = static_cast<long double>(n);
    const long double closed = 2 * pi * std::sqrt(2 * nn) / 3 - std::log(6 * std::pow(2.0L, 0.25L) * std::pow(nn, 1.25L));
    CHECK(std::fabs(std::expm1(evaluate_P(ExponentVector{1, 0, 1}, n).log_value - closed)) < 1e-12L);
  }
}

TEST_CASE("scientific rendering") {
  CHECK(render_scientific(mpz_class("11545008"), 4) == "1.155e7");
  CHECK(render_scientific(mpz_class("99995"), 4) == "1.000e5");
  CHECK(render_scientific(mpz_class(7), 4) == "7.000e0");
  CHECK(LogReal{std::log(1187.4L)}.render() == "1.187e3");
}

TEST_CASE("ratio table rows for (1,0,1)") {
  const std::vector<std::int64_t> ns{1000, 2000, 3000};
  const auto t = ratio_table(ExponentVector{1, 0, 1}, ns);
  REQUIRE(t.rows.size() == 3);
  const char* exact[] = {"1.155e36", "3.459e52", "1.775e65"};
  const char* asym[] = {"1.187e36", "3.527e52", "1.804e65"};
  const char* ratio[] = {"0.97266", "0.98057", "0.98410"};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(render_scientific(t.rows[i].p_exact) == exact[i]);
    CHECK(t.rows[i].P.render() == asym[i]);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.5f", t.rows[i].ratio);
    CHECK(std::string(buf) == ratio[i]);
  }
  // exact values agree with a direct expansion
  const auto s = expand_by_recurrence(ExponentVector{1, 0, 1}, 1001);
  CHECK(t.rows[0].p_exact == s[1000]);
  CHECK(t.to_csv().rfind("n,p_exact,P,ratio\n", 0) == 0);
  CHECK_THROWS_AS(ratio_table(ExponentVector{1}, std::vector<std::int64_t>{50}, 10), BudgetExceeded);
}

TEST_CASE("ratio increases toward 1 on n = 200..2000") {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 200; n <= 2000; n += 200) ns.push_back(n);
  const auto t = ratio_table(ExponentVector{1, 0, 1}, ns);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].ratio > t.rows[i - 1].ratio);
  CHECK(t.rows.back().ratio < 1.0);
}

TEST_CASE("alternating-group series") {
  const auto alt = alt_conjugacy_series(501);
  const auto two = expand_by_recurrence(ExponentVector{2}, 501);
  const auto even = expand_by_recurrence(ExponentVector{0, 1}, 501);
  for (std::size_t n = 0; n < 501; ++n) CHECK(2 * alt[n] == two[n] + even[n]);
  CHECK(alt[0] == 1);
  CHECK(alt[1] == 1);
  CHECK(alt[2] == 3);
  const long double H = growth_rate(ExponentVector{2});
  CHECK(std::fabs(H - 2 * pi / std::sqrt(3.0L)) < 1e-15L);
  CHECK(sig6(H) == "3.62760");
}
