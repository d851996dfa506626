#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "genpart/ring.hpp"

namespace genpart {

/// Dense truncated power series sum_{i < precision} c_i q^i over `Ring`.
///
/// Only the coefficients below `precision()` are meaningful; binary operations
/// return the smaller of the two operand precisions.
template <class Ring>
class PowerSeries {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  PowerSeries(Ring ring, std::size_t precision) : ring_(std::move(ring)), coeffs_(precision, ring_.zero()) {}

  PowerSeries(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = ring_.normalize(c);
  }

  static PowerSeries one(Ring ring, std::size_t precision) {
    PowerSeries s(std::move(ring), precision);
    if (precision > 0) s.coeffs_[0] = s.ring_.one();
    return s;
  }

  static PowerSeries from_ints(Ring ring, std::initializer_list<std::int64_t> values) {
    std::vector<value_type> c;
    c.reserve(values.size());
    for (auto v : values) c.push_back(ring.from_int(v));
    return PowerSeries(std::move(ring), std::move(c));
  }

  std::size_t precision() const { return coeffs_.size(); }
  const Ring& ring() const { return ring_; }
  RingSpec spec() const { return ring_.spec(); }

  const value_type& operator[](std::size_t i) const { return coeffs_[i]; }
  void set(std::size_t i, value_type v) { coeffs_[i] = ring_.normalize(std::move(v)); }

  std::span<const value_type> coeffs() const { return coeffs_; }
  // Raw access for the in-place kernels; callers keep entries normalized.
  std::span<value_type> coeffs_mut() { return coeffs_; }

  PowerSeries truncated(std::size_t precision) const {
    PowerSeries r(ring_, std::min(precision, coeffs_.size()));
    std::copy_n(coeffs_.begin(), r.coeffs_.size(), r.coeffs_.begin());
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Ring ring_;
  std::vector<value_type> coeffs_;
};

using ExactSeries = PowerSeries<IntegerRing>;
using ModularSeries = PowerSeries<ModularRing>;

namespace detail {

template <class Ring>
void require_same_ring(const PowerSeries<Ring>& a, const PowerSeries<Ring>& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatch("ring mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
}

}  // namespace detail

template <class Ring>
PowerSeries<Ring> ps_mul(const PowerSeries<Ring>& a, const PowerSeries<Ring>& b) {
  detail::require_same_ring(a, b);
  const auto& ring = a.ring();
  const std::size_t n = std::min(a.precision(), b.precision());
  PowerSeries<Ring> r(ring, n);
  auto out = r.coeffs_mut();

  bool done = false;
  if constexpr (std::is_same_v<Ring, ModularRing>) {
    // products fit in 64 bits; an unreduced 128-bit sum of 2^32 of them cannot overflow
    const std::uint64_t m = ring.modulus();
    if (m <= (std::uint64_t{1} << 32) && n <= (std::size_t{1} << 32)) {
      for (std::size_t k = 0; k < n; ++k) {
        unsigned __int128 acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += static_cast<unsigned __int128>(a[i] * b[k - i]);
        out[k] = static_cast<std::uint64_t>(acc % m);
      }
      done = true;
    }
  }
  if (!done) {
    for (std::size_t k = 0; k < n; ++k) {
      auto acc = ring.zero();
      for (std::size_t i = 0; i <= k; ++i) ring.add_mul(acc, a[i], b[k - i]);
      out[k] = std::move(acc);
    }
  }
  return r;
}

/// Multiplicative inverse; the constant term must be a unit.
template <class Ring>
PowerSeries<Ring> ps_invert(const PowerSeries<Ring>& a) {
  const auto& ring = a.ring();
  const std::size_t n = a.precision();
  PowerSeries<Ring> r(ring, n);
  if (n == 0) return r;
  if (!ring.is_unit(a[0])) throw NonUnitError("cannot invert series: constant term is not a unit");
  auto out = r.coeffs_mut();
  const auto inv0 = ring.inverse(a[0]);
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    auto acc = ring.zero();
    for (std::size_t i = 1; i <= k; ++i) ring.add_mul(acc, a[i], out[k - i]);
    out[k] = ring.neg(ring.mul(inv0, acc));
  }
  return r;
}

/// Integer power by binary exponentiation; negative exponents go through ps_invert.
template <class Ring>
PowerSeries<Ring> ps_pow(const PowerSeries<Ring>& a, std::int64_t exponent) {
  PowerSeries<Ring> base = exponent < 0 ? ps_invert(a) : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  auto result = PowerSeries<Ring>::one(a.ring(), a.precision());
  while (e != 0) {
    if (e & 1) result = ps_mul(result, base);
    e >>= 1;
    if (e != 0) base = ps_mul(base, base);
  }
  return result;
}

/// Nonzero term of a series whose coefficients are all in {-1, 0, +1}.
struct SparseTerm {
  std::size_t index;
  int sign;
};

/// Terms of prod_{n>=1} (1 - q^{m n}) below `precision`, ascending by index,
/// starting with the constant term: +-1 at m * j(3j -+ 1)/2 with sign (-1)^j.
inline std::vector<SparseTerm> pentagonal_terms(std::uint64_t m, std::size_t precision) {
  if (m == 0) throw std::invalid_argument("Euler factor index m must be >= 1");
  std::vector<SparseTerm> terms;
  if (precision == 0) return terms;
  terms.push_back({0, 1});
  for (std::uint64_t j = 1;; ++j) {
    const int sign = (j % 2 == 0) ? 1 : -1;
    const std::uint64_t lo = m * (j * (3 * j - 1) / 2);
    const std::uint64_t hi = m * (j * (3 * j + 1) / 2);
    if (lo >= precision) break;
    terms.push_back({static_cast<std::size_t>(lo), sign});
    if (hi < precision) terms.push_back({static_cast<std::size_t>(hi), sign});
  }
  return terms;
}

template <class Ring>
PowerSeries<Ring> euler_factor_series(std::uint64_t m, std::size_t precision, const Ring& ring) {
  PowerSeries<Ring> s(ring, precision);
  for (const auto& t : pentagonal_terms(m, precision)) s.set(t.index, ring.from_int(t.sign));
  return s;
}

namespace detail {

// The modular fast path accumulates +-1 multiples in int64 and reduces once per index.
inline bool fits_accumulator(const ModularRing& ring, std::size_t terms) {
  return ring.modulus() < (std::uint64_t{1} << 31) && terms < (std::size_t{1} << 31);
}

}  // namespace detail

namespace detail {

template <bool Divide>
void sparse_fast(PowerSeries<ModularRing>& s, std::span<const SparseTerm> t) {
  auto c = s.coeffs_mut();
  const auto m = static_cast<std::int64_t>(s.ring().modulus());
  const std::size_t n = c.size();
  auto step = [&](std::size_t k) {
    std::int64_t acc = static_cast<std::int64_t>(c[k]);
    for (std::size_t j = 1; j < t.size() && t[j].index <= k; ++j) {
      const auto v = static_cast<std::int64_t>(c[k - t[j].index]);
      acc += (t[j].sign > 0) != Divide ? v : -v;
    }
    acc %= m;
    c[k] = static_cast<std::uint64_t>(acc < 0 ? acc + m : acc);
  };
  if constexpr (Divide)
    for (std::size_t k = 0; k < n; ++k) step(k);
  else
    for (std::size_t k = n; k-- > 0;) step(k);
}

template <bool Divide, class Ring>
void sparse_generic(PowerSeries<Ring>& s, std::span<const SparseTerm> t) {
  auto c = s.coeffs_mut();
  const auto& ring = s.ring();
  const std::size_t n = c.size();
  auto step = [&](std::size_t k) {
    auto acc = c[k];
    for (std::size_t j = 1; j < t.size() && t[j].index <= k; ++j)
      acc = (t[j].sign > 0) != Divide ? ring.add(acc, c[k - t[j].index]) : ring.sub(acc, c[k - t[j].index]);
    c[k] = std::move(acc);
  };
  if constexpr (Divide)
    for (std::size_t k = 0; k < n; ++k) step(k);
  else
    for (std::size_t k = n; k-- > 0;) step(k);
}

template <bool Divide, class Ring>
void sparse_apply(PowerSeries<Ring>& s, std::span<const SparseTerm> t) {
  if (t.empty() || t.front().index != 0 || t.front().sign != 1)
    throw std::invalid_argument("sparse factor must have constant term 1");
  if constexpr (std::is_same_v<Ring, ModularRing>) {
    if (fits_accumulator(s.ring(), t.size())) return sparse_fast<Divide>(s, t);
  }
  sparse_generic<Divide>(s, t);
}

}  // namespace detail

/// In place: s <- s * t, where t is a sparse +-1 series with t[0] = 1.
template <class Ring>
void multiply_by_sparse(PowerSeries<Ring>& s, std::span<const SparseTerm> t) {
  detail::sparse_apply<false>(s, t);
}

/// In place: s <- s / t, where t is a sparse +-1 series with t[0] = 1.
template <class Ring>
void divide_by_sparse(PowerSeries<Ring>& s, std::span<const SparseTerm> t) {
  detail::sparse_apply<true>(s, t);
}

}  // namespace genpart
