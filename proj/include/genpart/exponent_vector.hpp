#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace genpart {

/// Integer vector e = (e_1, ..., e_k); entry m weights the Euler factor
/// prod_n (1 - q^{mn})^{-e_m}. Stored canonically with trailing zeros trimmed,
/// so equality and hashing ignore them. The zero vector is representable
/// (reductions mod l can produce it); operations that need a nonzero vector
/// check for it.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::int64_t> entries);
  ExponentVector(std::initializer_list<std::int64_t> entries)
      : ExponentVector(std::vector<std::int64_t>(entries)) {}

  /// From m -> e_m pairs (m >= 1).
  static ExponentVector from_sparse(const std::map<std::int64_t, std::int64_t>& entries);

  /// Accepts "2,0,0,4" (dense) or "1:2,8:2" (sparse, index:value).
  static ExponentVector parse(std::string_view text);

  /// k: the largest index with a nonzero entry (0 for the zero vector).
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// e_m for m >= 1; zero past the end.
  std::int64_t operator[](std::size_t m) const { return m >= 1 && m <= entries_.size() ? entries_[m - 1] : 0; }

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::vector<std::size_t> support() const;
  std::map<std::int64_t, std::int64_t> to_sparse() const;

  bool all_nonnegative() const;
  bool all_nonpositive() const;

  /// "(2,0,0,4)"; the zero vector prints as "()".
  std::string to_string() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

}  // namespace genpart
