#include "cwcount/vectors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cwcount {

int32_t LabelVector::sum() const {
  int32_t s = 0;
  for (int32_t c : comps_) s += c;
  return s;
}

LabelVector LabelVector::delta(int r, int width) {
  if (r < 1 || r > width) {
    throw std::out_of_range("LabelVector::delta: index " + std::to_string(r) +
                            " not in 1.." + std::to_string(width));
  }
  LabelVector v(width);
  v.set(r, 1);
  return v;
}

LabelVector LabelVector::fold(int from, int to) const {
  LabelVector out = *this;
  out.add(to, out.get(from));
  out.set(from, 0);
  return out;
}

LabelVector& LabelVector::operator+=(const LabelVector& o) {
  for (size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

std::string LabelVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < comps_.size(); ++k) {
    if (k) os << ',';
    os << comps_[k];
  }
  os << ')';
  return os.str();
}

PairVector::PairVector(int width)
    : width_(width),
      comps_(static_cast<size_t>(width) * (width + 3) / 2, 0) {}

size_t PairVector::index_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j < 1 || j > width_) {
    throw std::out_of_range("PairVector: pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") invalid for width " +
                            std::to_string(width_));
  }
  // Layout: (0,1)..(0,l), (1,1)..(1,l), (2,2)..(2,l), ..., (l,l).
  if (i == 0) return static_cast<size_t>(j - 1);
  size_t base = static_cast<size_t>(width_);
  for (int t = 1; t < i; ++t) base += static_cast<size_t>(width_ - t + 1);
  return base + static_cast<size_t>(j - i);
}

std::pair<int, int> PairVector::pair_at(size_t idx) const {
  if (idx < static_cast<size_t>(width_)) return {0, static_cast<int>(idx) + 1};
  size_t base = static_cast<size_t>(width_);
  for (int i = 1; i <= width_; ++i) {
    size_t row = static_cast<size_t>(width_ - i + 1);
    if (idx < base + row) return {i, i + static_cast<int>(idx - base)};
    base += row;
  }
  throw std::out_of_range("PairVector::pair_at: index out of range");
}

PairVector PairVector::delta(int r, int s, int width) {
  if (r > s) std::swap(r, s);
  if (r < 0 || s < 1 || s > width || (r == 0 && s == 0)) {
    throw std::out_of_range("PairVector::delta: pair (" + std::to_string(r) +
                            "," + std::to_string(s) + ") invalid for width " +
                            std::to_string(width));
  }
  PairVector v(width);
  v.set(r, s, 1);
  return v;
}

PairVector PairVector::fold(int from, int to) const {
  PairVector out(width_);
  for (size_t idx = 0; idx < comps_.size(); ++idx) {
    if (comps_[idx] == 0) continue;
    auto [a, b] = pair_at(idx);
    if (a == from) a = to;
    if (b == from) b = to;
    out.add(a, b, comps_[idx]);
  }
  return out;
}

bool PairVector::has_negative() const {
  return std::any_of(comps_.begin(), comps_.end(),
                     [](int32_t c) { return c < 0; });
}

int32_t PairVector::uncovered_total() const {
  int32_t s = 0;
  for (int a = 1; a <= width_; ++a) s += get(0, a);
  return s;
}

int32_t PairVector::path_total() const {
  int32_t s = 0;
  for (int a = 1; a <= width_; ++a)
    for (int b = a; b <= width_; ++b) s += get(a, b);
  return s;
}

PairVector& PairVector::operator+=(const PairVector& o) {
  for (size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

std::string PairVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t idx = 0; idx < comps_.size(); ++idx) {
    if (comps_[idx] == 0) continue;
    auto [a, b] = pair_at(idx);
    if (!first) os << ' ';
    first = false;
    os << "k[" << a << ',' << b << "]=" << comps_[idx];
  }
  if (first) os << "0";
  os << '}';
  return os.str();
}

size_t hash_ints(const int32_t* data, size_t n, size_t seed) {
  // FNV-1a, 64-bit.
  size_t h = seed ^ 14695981039346656037ull;
  for (size_t k = 0; k < n; ++k) {
    uint32_t w = static_cast<uint32_t>(data[k]);
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (w >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace cwcount
