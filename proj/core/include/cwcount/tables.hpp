#ifndef CWCOUNT_TABLES_HPP
#define CWCOUNT_TABLES_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwcount/big_count.hpp"
#include "cwcount/vectors.hpp"

namespace cwcount {

// Sparse tables only: absent key == count 0.  Zero values are never stored,
// so table equality is plain map equality.

// ---- matching-cover table -------------------------------------------------
// Key: (M, C) where M counts matched vertices per label and C counts cover
// vertices per label.

struct MCKey {
  LabelVector matched;
  LabelVector cover;

  bool operator==(const MCKey& o) const {
    return matched == o.matched && cover == o.cover;
  }
  bool operator<(const MCKey& o) const {
    if (matched < o.matched) return true;
    if (o.matched < matched) return false;
    return cover < o.cover;
  }
  friend MCKey operator+(const MCKey& a, const MCKey& b) {
    return {a.matched + b.matched, a.cover + b.cover};
  }
  int width() const { return matched.width(); }
  std::string to_string() const {
    return "M=" + matched.to_string() + " C=" + cover.to_string();
  }
};

struct MCKeyHash {
  size_t operator()(const MCKey& k) const {
    size_t h = hash_ints(k.matched.raw().data(), k.matched.raw().size());
    return hash_ints(k.cover.raw().data(), k.cover.raw().size(), h);
  }
};

using MCTable = std::unordered_map<MCKey, BigCount, MCKeyHash>;

// ---- plain matching table -------------------------------------------------
// Key: matched vertices per label.

using MatchedTable = std::unordered_map<LabelVector, BigCount, LabelVectorHash>;

// ---- path matching table --------------------------------------------------

using PMTable = std::unordered_map<PairVector, BigCount, PairVectorHash>;

namespace detail {
inline int key_width(const MCKey& k) { return k.width(); }
inline int key_width(const LabelVector& k) { return k.width(); }
inline int key_width(const PairVector& k) { return k.width(); }
}  // namespace detail

// Count 0 for absent keys; never allocates.
template <class Table>
const BigCount& lookup(const Table& t, const typename Table::key_type& key) {
  auto it = t.find(key);
  return it == t.end() ? big_zero() : it->second;
}

template <class Table>
BigCount table_mass(const Table& t) {
  BigCount total = 0;
  for (const auto& [k, v] : t) total += v;
  return total;
}

// Sparse Cauchy product over componentwise key addition: iterates nonzero
// pairs only.  Throws std::invalid_argument on width mismatch.
template <class Table>
Table table_convolve(const Table& a, const Table& b) {
  if (!a.empty() && !b.empty() &&
      detail::key_width(a.begin()->first) != detail::key_width(b.begin()->first)) {
    throw std::invalid_argument("table_convolve: width mismatch");
  }
  const Table& outer = a.size() <= b.size() ? a : b;
  const Table& inner = a.size() <= b.size() ? b : a;
  Table out;
  out.reserve(outer.size() * 2);
  for (const auto& [ka, va] : outer) {
    for (const auto& [kb, vb] : inner) {
      out[ka + kb] += va * vb;
    }
  }
  return out;
}

// Sorted keys, for deterministic reporting.
template <class Table>
std::vector<typename Table::key_type> sorted_keys(const Table& t) {
  std::vector<typename Table::key_type> keys;
  keys.reserve(t.size());
  for (const auto& [k, v] : t) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

// First key (in sorted order) whose counts differ, if any.
template <class Table>
std::optional<typename Table::key_type> first_difference(const Table& a,
                                                         const Table& b) {
  std::vector<typename Table::key_type> keys = sorted_keys(a);
  for (const auto& [k, v] : b) {
    if (a.find(k) == a.end()) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& k : keys) {
    if (lookup(a, k) != lookup(b, k)) return k;
  }
  return std::nullopt;
}

}  // namespace cwcount

#endif  // CWCOUNT_TABLES_HPP
