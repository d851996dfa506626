#include "genpart/partition_series.hpp"

#include <numeric>
#include <stdexcept>

namespace genpart {

std::int64_t vector_d(const ExponentVector& e) {
  if (e.is_zero()) throw std::invalid_argument("vector_d: zero vector");
  std::int64_t d = 0;
  for (auto m : e.support()) d = std::gcd(d, static_cast<std::int64_t>(m));
  return d;
}

ExponentVector compress_vector(const ExponentVector& e) {
  const auto d = static_cast<std::size_t>(vector_d(e));
  std::vector<std::int64_t> out(e.size() / d);
  for (std::size_t m = 1; m <= out.size(); ++m) out[m - 1] = e[d * m];
  return ExponentVector(std::move(out));
}

std::int64_t vector_alpha(const ExponentVector& e) {
  std::int64_t a = 0;
  for (std::size_t m = 1; m <= e.size(); ++m) a += static_cast<std::int64_t>(m) * e[m];
  return a;
}

std::vector<std::int64_t> log_derivative_weights(const ExponentVector& e, std::size_t precision) {
  std::vector<std::int64_t> sigma(precision, 0);
  for (std::size_t d = 1; d < precision; ++d)
    for (std::size_t j = d; j < precision; j += d) sigma[j] += static_cast<std::int64_t>(d);

  std::vector<std::int64_t> c(precision, 0);
  for (std::size_t m : e.support()) {
    const std::int64_t weight = e[m] * static_cast<std::int64_t>(m);
    for (std::size_t j = m; j < precision; j += m) c[j] += weight * sigma[j / m];
  }
  return c;
}

ExactSeries expand_by_recurrence(const ExponentVector& e, std::size_t precision) {
  auto s = ExactSeries::one(IntegerRing{}, precision);
  if (precision <= 1) return s;
  const auto c = log_derivative_weights(e, precision);
  auto a = s.coeffs_mut();
  mpz_class acc;
  for (std::size_t n = 1; n < precision; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t w = c[j];
      if (w > 0)
        mpz_addmul_ui(acc.get_mpz_t(), a[n - j].get_mpz_t(), static_cast<unsigned long>(w));
      else if (w < 0)
        mpz_submul_ui(acc.get_mpz_t(), a[n - j].get_mpz_t(), static_cast<unsigned long>(-w));
    }
    mpz_divexact_ui(a[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return s;
}

}  // namespace genpart
