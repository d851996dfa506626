#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace genpart {

enum class RingKind { exact, modular };

/// Runtime description of a coefficient ring: the integers, or Z/mZ for m >= 2.
struct RingSpec {
  RingKind kind = RingKind::exact;
  std::optional<std::uint64_t> modulus;

  static RingSpec exact() { return {}; }
  static RingSpec modular(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return {RingKind::modular, m};
  }

  std::string to_string() const {
    return kind == RingKind::exact ? "ZZ" : "ZZ/" + std::to_string(*modulus);
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary precision integers.
struct IntegerRing {
  using value_type = mpz_class;

  RingSpec spec() const { return RingSpec::exact(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  value_type normalize(value_type v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  value_type inverse(const value_type& a) const {
    if (!is_unit(a)) throw NonUnitError("constant term is not a unit in ZZ");
    return a;
  }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// Z/mZ for any m >= 2 (not necessarily prime). Elements are stored in [0, m).
class ModularRing {
 public:
  using value_type = std::uint64_t;

  explicit ModularRing(std::uint64_t modulus) : m_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  }

  std::uint64_t modulus() const { return m_; }
  RingSpec spec() const { return RingSpec::modular(m_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(m_);
    return r < 0 ? static_cast<value_type>(r + static_cast<std::int64_t>(m_)) : static_cast<value_type>(r);
  }
  value_type from_mpz(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m_);
    return r.get_ui();
  }
  value_type normalize(value_type v) const { return v % m_; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return (s >= m_ || s < a) ? s - m_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m_ - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % m_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return gcd(a, m_) == 1; }

  value_type inverse(value_type a) const {
    // extended Euclid on signed 128-bit to cover the full 64-bit modulus range
    __int128 r0 = m_, r1 = a % m_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (r0 != 1)
      throw NonUnitError("constant term " + std::to_string(a) + " is not a unit mod " + std::to_string(m_));
    if (t0 < 0) t0 += m_;
    return static_cast<value_type>(t0);
  }

  friend bool operator==(const ModularRing& a, const ModularRing& b) { return a.m_ == b.m_; }

 private:
  static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
      std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::uint64_t m_;
};

}  // namespace genpart
