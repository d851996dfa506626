#include "genpart/exponent_vector.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace genpart {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed vector '" + std::string(whole) + "': bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

ExponentVector ExponentVector::from_sparse(const std::map<std::int64_t, std::int64_t>& entries) {
  std::vector<std::int64_t> dense;
  for (const auto& [m, v] : entries) {
    if (m < 1) throw std::invalid_argument("vector index must be >= 1, got " + std::to_string(m));
    if (static_cast<std::size_t>(m) > dense.size()) dense.resize(static_cast<std::size_t>(m), 0);
    dense[static_cast<std::size_t>(m) - 1] = v;
  }
  return ExponentVector(std::move(dense));
}

ExponentVector ExponentVector::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (body.empty()) throw std::invalid_argument("empty vector specification");

  const bool sparse = body.find(':') != std::string_view::npos;
  std::vector<std::int64_t> dense;
  std::map<std::int64_t, std::int64_t> map;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto end = std::min(body.find(',', start), body.size());
    const auto item = body.substr(start, end - start);
    if (sparse) {
      const auto colon = item.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("malformed sparse vector '" + std::string(text) + "': expected index:value");
      const auto m = parse_int(item.substr(0, colon), text);
      if (map.contains(m)) throw std::invalid_argument("duplicate index " + std::to_string(m) + " in vector");
      map[m] = parse_int(item.substr(colon + 1), text);
    } else {
      dense.push_back(parse_int(item, text));
    }
    start = end + 1;
  }
  return sparse ? from_sparse(map) : ExponentVector(std::move(dense));
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 0) s.push_back(i + 1);
  return s;
}

std::map<std::int64_t, std::int64_t> ExponentVector::to_sparse() const {
  std::map<std::int64_t, std::int64_t> s;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 0) s[static_cast<std::int64_t>(i + 1)] = entries_[i];
  return s;
}

bool ExponentVector::all_nonnegative() const {
  for (auto v : entries_)
    if (v < 0) return false;
  return true;
}

bool ExponentVector::all_nonpositive() const {
  for (auto v : entries_)
    if (v > 0) return false;
  return true;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> r(std::max(a.size(), b.size()), 0);
  for (std::size_t m = 1; m <= r.size(); ++m) r[m - 1] = a[m] + b[m];
  return ExponentVector(std::move(r));
}

}  // namespace genpart
