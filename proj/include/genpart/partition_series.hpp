#pragma once

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "genpart/exponent_vector.hpp"
#include "genpart/series.hpp"

namespace genpart {

/// gcd of the indices m with e_m != 0. Throws on the zero vector.
std::int64_t vector_d(const ExponentVector& e);

/// e'_m = e_{dm}; p(dn)_e = p(n)_{e'}.
ExponentVector compress_vector(const ExponentVector& e);

/// sum_m m * e_m
std::int64_t vector_alpha(const ExponentVector& e);

/// Weights of the logarithmic derivative of the generating function: index j
/// of the result holds c(j) = sum_{m | j} e_m * m * sigma_1(j / m); index 0 is 0.
std::vector<std::int64_t> log_derivative_weights(const ExponentVector& e, std::size_t precision);

/// Exact p(0..precision-1)_e from n a(n) = sum_{j=1}^{n} c(j) a(n-j). Exact ring only (needs division by n).
ExactSeries expand_by_recurrence(const ExponentVector& e, std::size_t precision);

/// prod_m E_m^{-e_m} where E_m = prod_n (1 - q^{mn}), via the sparse pentagonal
/// expansion of E_m: one sparse multiply per unit of a negative e_m, one sparse
/// division per unit of a positive e_m.
template <class Ring>
PowerSeries<Ring> expand_by_product(const ExponentVector& e, std::size_t precision, const Ring& ring) {
  auto s = PowerSeries<Ring>::one(ring, precision);
  for (std::size_t m : e.support()) {
    if (m >= precision) continue;
    const auto terms = pentagonal_terms(m, precision);
    const std::int64_t em = e[m];
    for (std::int64_t i = 0; i < (em < 0 ? -em : em); ++i) {
      if (em > 0)
        divide_by_sparse(s, std::span<const SparseTerm>(terms));
      else
        multiply_by_sparse(s, std::span<const SparseTerm>(terms));
    }
  }
  return s;
}

/// Coefficients p(0..precision-1)_e. The exact ring uses the divisor-sum
/// recurrence, modular rings the pentagonal product; both agree.
template <class Ring>
PowerSeries<Ring> expand_generalized(const ExponentVector& e, std::size_t precision, const Ring& ring) {
  if constexpr (std::is_same_v<Ring, IntegerRing>)
    return expand_by_recurrence(e, precision);
  else
    return expand_by_product(e, precision, ring);
}

}  // namespace genpart
