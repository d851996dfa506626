#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "genpart/exponent_vector.hpp"
#include "genpart/series.hpp"

namespace genpart {

/// Constants of the leading asymptotic
///   p(dn)_e ~ lambda A^{(1+gamma)/4} / (2 sqrt(pi) n^{(3+gamma)/4}) exp(2 sqrt(A n))
/// for a nonzero vector with nonnegative entries.
struct AsymptoticProfile {
  std::int64_t d = 1;
  std::int64_t beta = 0;   // sum n e_{dn}
  std::int64_t gamma = 0;  // sum e_{dn}
  mpq_class delta;         // sum e_{dn} / n
  long double lambda_log = 0;  // log of prod_m (m / 2 pi)^{e_{dm} / 2}
  long double A = 0;           // pi^2 delta / 6
  mpq_class A_over_pi2;        // delta / 6, exact
};

/// A positive real carried as its natural logarithm.
struct LogReal {
  long double log_value = 0;

  long double value() const;
  /// 4 significant digits and a decimal exponent, e.g. "1.187e36".
  std::string render(int significant = 4) const;
};

/// Throws std::invalid_argument for the zero vector or any negative entry.
AsymptoticProfile profile(const ExponentVector& e);

LogReal evaluate_P(const AsymptoticProfile& prof, std::int64_t n);
LogReal evaluate_P(const ExponentVector& e, std::int64_t n);

/// Modified exponential growth rate 2 sqrt(A).
long double growth_rate(const ExponentVector& e);
/// (2 sqrt(A))^2 / pi^2 = 4 delta / 6, exact.
mpq_class growth_rate_squared_over_pi2(const AsymptoticProfile& prof);

/// Decimal rendering of an exact positive integer with round-half-up to
/// `significant` digits, e.g. 1154500... -> "1.155e36".
std::string render_scientific(const mpz_class& v, int significant = 4);

struct RatioRow {
  std::int64_t n = 0;
  mpz_class p_exact;  // p(dn)_e
  LogReal P;
  double ratio = 0;
};

struct RatioTable {
  ExponentVector e;
  AsymptoticProfile prof;
  std::vector<RatioRow> rows;

  std::string to_text() const;
  /// Header "n,p_exact,P,ratio"; p_exact in full decimal digits.
  std::string to_csv() const;
};

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultExactBudget = 20000;

/// Exact-versus-asymptotic comparison. The exact values come from one
/// expansion to max(ns) * d, which must stay within `budget` coefficients.
RatioTable ratio_table(const ExponentVector& e, std::span<const std::int64_t> ns,
                       std::size_t budget = kDefaultExactBudget);

/// ( sum p(n)_{(2)} q^n + sum p(n)_{(0,1)} q^n ) / 2, the conjugacy growth
/// series of the finitary alternating group. Throws std::logic_error if a
/// coefficient sum is odd.
ExactSeries alt_conjugacy_series(std::size_t precision);

}  // namespace genpart
