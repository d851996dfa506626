#pragma once
// Reference implementations used only by the tests. They share no code with
// the library kernels.

#include <cstdint>
#include <numeric>
#include <string>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "genpart/congruence.hpp"
#include "genpart/exponent_vector.hpp"

namespace oracle {

// Number of partitions of n into parts <= max_part, by plain recursion.
inline std::uint64_t count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  std::uint64_t total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// prod_m prod_j (1 - q^{mj})^{-e_m} one factor at a time: division by
// (1 - q^k) is a running prefix sum, multiplication a shifted difference.
inline std::vector<mpz_class> factor_by_factor(const genpart::ExponentVector& e, std::size_t precision) {
  std::vector<mpz_class> s(precision, 0);
  if (precision) s[0] = 1;
  for (std::size_t m = 1; m <= e.size(); ++m) {
    const auto em = e[m];
    for (std::int64_t copy = 0; copy < (em < 0 ? -em : em); ++copy) {
      for (std::size_t k = m; k < precision; k += m) {
        if (em > 0) {
          for (std::size_t i = k; i < precision; ++i) s[i] += s[i - k];
        } else {
          for (std::size_t i = precision; i-- > k;) s[i] -= s[i - k];
        }
      }
    }
  }
  return s;
}

inline std::vector<mpz_class> naive_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const auto n = std::min(a.size(), b.size());
  std::vector<mpz_class> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline std::uint64_t mod_of(const mpz_class& v, std::uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

inline genpart::ExponentVector random_vector(std::mt19937_64& rng, int max_len, int lo, int hi) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> val(lo, hi);
  for (;;) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = val(rng);
    genpart::ExponentVector e(v);
    if (!e.is_zero()) return e;
  }
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Conditions on e' checked from scratch: nonpositive entries, even weight sum,
// integral omega, level condition, plus the bookkeeping identities.
inline std::string datum_violation(const genpart::EtaDatum& d, const genpart::ExponentVector& e_red) {
  const auto ell = d.ell;
  std::int64_t sum = 0, msum = 0, csum = 0, N0 = 1;
  for (std::size_t m = 1; m <= std::max(d.e_prime.size(), d.c.size()); ++m) {
    const auto c = m <= d.c.size() ? d.c[m - 1] : 0;
    if (c < 0) return "negative c";
    if (d.e_prime[m] != e_red[m] - ell * c) return "e' != e - ell c";
    if (d.e_prime[m] > 0) return "e'_m > 0";
    sum += d.e_prime[m];
    msum += static_cast<std::int64_t>(m) * d.e_prime[m];
    csum += static_cast<std::int64_t>(m) * c;
    if (d.e_prime[m] != 0) N0 = std::lcm(N0, static_cast<std::int64_t>(m));
  }
  if (mod(sum, 2) != 0) return "sum e' odd";
  if (mod(msum, 24) != 0) return "sum m e' not divisible by 24";
  if (d.w != -sum / 2) return "w";
  if (d.omega != msum / 24) return "omega";
  if (d.N0 != N0) return "N0";
  std::int64_t level = 0;
  for (std::size_t m = 1; m <= d.e_prime.size(); ++m)
    if (d.e_prime[m] != 0) level += (d.N / static_cast<std::int64_t>(m)) * d.e_prime[m];
  if (d.N % N0 != 0 || mod(level, 24) != 0) return "level condition";
  if (csum != d.beta_e) return "sum m c_m != beta_e";
  if (d.beta_e <= 1) return "beta_e <= 1";
  if (ell >= 5 && mod(d.omega - genpart::delta_ell(e_red, ell), ell) != 0) return "omega != delta mod ell";
  return "";
}

}  // namespace oracle
