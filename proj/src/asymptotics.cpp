#include "genpart/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "genpart/partition_series.hpp"

namespace genpart {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

long double to_long_double(const mpq_class& q) {
  return static_cast<long double>(q.get_num().get_si()) / static_cast<long double>(q.get_den().get_si());
}

// Scientific rendering of 10^x for real x.
std::string render_log10(long double x, int significant) {
  auto exponent = static_cast<long long>(std::floor(x));
  long double mant = std::pow(10.0L, x - static_cast<long double>(exponent));
  const long double scale = std::pow(10.0L, significant - 1);
  mant = std::round(mant * scale) / scale;
  if (mant >= 10.0L) {
    mant /= 10.0L;
    ++exponent;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lfe%lld", significant - 1, mant, exponent);
  return buf;
}

long double log_of(const mpz_class& v) {
  long exp2 = 0;
  const double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(static_cast<long double>(m)) + static_cast<long double>(exp2) * std::numbers::ln2_v<long double>;
}

}  // namespace

long double LogReal::value() const { return std::exp(log_value); }

std::string LogReal::render(int significant) const { return render_log10(log_value / kLn10, significant); }

AsymptoticProfile profile(const ExponentVector& e) {
  if (e.is_zero()) throw std::invalid_argument("asymptotic profile needs a nonzero vector");
  if (!e.all_nonnegative())
    throw std::invalid_argument("asymptotic profile requires e_m >= 0 for all m; got " + e.to_string());

  AsymptoticProfile p;
  p.d = vector_d(e);
  const auto compressed = compress_vector(e);
  p.delta = 0;
  for (std::size_t n = 1; n <= compressed.size(); ++n) {
    const std::int64_t v = compressed[n];
    if (v == 0) continue;
    p.beta += static_cast<std::int64_t>(n) * v;
    p.gamma += v;
    p.delta += mpq_class(static_cast<long>(v), static_cast<unsigned long>(n));
    p.lambda_log += 0.5L * static_cast<long double>(v) * std::log(static_cast<long double>(n) / (2 * kPi));
  }
  p.delta.canonicalize();
  p.A_over_pi2 = p.delta / 6;
  p.A_over_pi2.canonicalize();
  p.A = kPi * kPi * to_long_double(p.A_over_pi2);
  return p;
}

LogReal evaluate_P(const AsymptoticProfile& prof, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("evaluate_P needs n >= 1");
  const long double g = static_cast<long double>(prof.gamma);
  const long double x = static_cast<long double>(n);
  return {prof.lambda_log + (1 + g) / 4 * std::log(prof.A) - std::log(2.0L) - 0.5L * std::log(kPi) -
          (3 + g) / 4 * std::log(x) + 2 * std::sqrt(prof.A * x)};
}

LogReal evaluate_P(const ExponentVector& e, std::int64_t n) { return evaluate_P(profile(e), n); }

long double growth_rate(const ExponentVector& e) { return 2 * std::sqrt(profile(e).A); }

mpq_class growth_rate_squared_over_pi2(const AsymptoticProfile& prof) {
  mpq_class r = 4 * prof.A_over_pi2;
  r.canonicalize();
  return r;
}

std::string render_scientific(const mpz_class& v, int significant) {
  if (sgn(v) <= 0) throw std::invalid_argument("render_scientific needs a positive integer");
  const std::string digits = v.get_str();
  const long long exponent = static_cast<long long>(digits.size()) - 1;
  if (static_cast<int>(digits.size()) <= significant) {
    std::string padded = digits + std::string(static_cast<std::size_t>(significant) - digits.size(), '0');
    return padded.substr(0, 1) + (significant > 1 ? "." + padded.substr(1) : "") + "e" + std::to_string(exponent);
  }
  mpz_class head(digits.substr(0, static_cast<std::size_t>(significant)));
  if (digits[static_cast<std::size_t>(significant)] >= '5') head += 1;
  std::string h = head.get_str();
  long long e10 = exponent;
  if (static_cast<int>(h.size()) > significant) {  // 9.999.. rounded up to 10.00
    h.pop_back();
    ++e10;
  }
  return h.substr(0, 1) + (significant > 1 ? "." + h.substr(1) : "") + "e" + std::to_string(e10);
}

RatioTable ratio_table(const ExponentVector& e, std::span<const std::int64_t> ns, std::size_t budget) {
  RatioTable t{e, profile(e), {}};
  if (ns.empty()) return t;
  for (auto n : ns)
    if (n < 1) throw std::invalid_argument("ratio_table needs n >= 1");
  const auto max_n = static_cast<std::size_t>(*std::max_element(ns.begin(), ns.end()));
  const auto d = static_cast<std::size_t>(t.prof.d);
  if (max_n * d + 1 > budget)
    throw BudgetExceeded("exact expansion to index " + std::to_string(max_n * d) + " exceeds the budget of " +
                         std::to_string(budget) + " coefficients");

  // p(dn)_e = p(n)_{e'}, so expanding the compressed vector is enough
  const auto series = expand_by_recurrence(compress_vector(e), max_n + 1);
  for (auto n : ns) {
    RatioRow row;
    row.n = n;
    row.p_exact = series[static_cast<std::size_t>(n)];
    row.P = evaluate_P(t.prof, n);
    row.ratio = static_cast<double>(std::exp(log_of(row.p_exact) - row.P.log_value));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string RatioTable::to_text() const {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%8s  %14s  %14s  %8s\n", "n", "p(n)_e", "P(n)_e", "ratio");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%8lld  %14s  %14s  %8.5f\n", static_cast<long long>(r.n),
                  render_scientific(r.p_exact).c_str(), r.P.render().c_str(), r.ratio);
    os << buf;
  }
  return os.str();
}

std::string RatioTable::to_csv() const {
  std::ostringstream os;
  os << "n,p_exact,P,ratio\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.5f", r.ratio);
    os << r.n << ',' << r.p_exact.get_str() << ',' << r.P.render(12) << ',' << buf << '\n';
  }
  return os.str();
}

ExactSeries alt_conjugacy_series(std::size_t precision) {
  const auto two = expand_by_recurrence(ExponentVector{2}, precision);
  const auto shifted = expand_by_recurrence(ExponentVector{0, 1}, precision);
  ExactSeries out(IntegerRing{}, precision);
  auto c = out.coeffs_mut();
  for (std::size_t n = 0; n < precision; ++n) {
    mpz_class s = two[n] + shifted[n];
    if (mpz_odd_p(s.get_mpz_t()))
      throw std::logic_error("Alt series: p(" + std::to_string(n) + ")_(2) + p(" + std::to_string(n) +
                             ")_(0,1) is odd");
    mpz_divexact_ui(c[n].get_mpz_t(), s.get_mpz_t(), 2);
  }
  return out;
}

}  // namespace genpart
