#ifndef CWCOUNT_VECTORS_HPP
#define CWCOUNT_VECTORS_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace cwcount {

// ---- LabelVector -----------------------------------------------------------
// One integer per label class 1..l.  Used for matched-vertex counts, cover
// counts and per-label vertex counts.  Lookups of states outside the valid
// range are handled at the table level: such keys are simply absent and read
// as count 0.

class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(int width) : comps_(static_cast<size_t>(width), 0) {}

  int width() const { return static_cast<int>(comps_.size()); }

  // r is 1-based.
  int32_t get(int r) const { return comps_[static_cast<size_t>(r) - 1]; }
  void set(int r, int32_t v) { comps_[static_cast<size_t>(r) - 1] = v; }
  void add(int r, int32_t dv) { comps_[static_cast<size_t>(r) - 1] += dv; }

  int32_t sum() const;

  // Unit vector with 1 at position r.  Throws std::out_of_range unless
  // 1 <= r <= width.
  static LabelVector delta(int r, int width);

  // Merge class `from` into class `to`: to += from, from = 0.
  LabelVector fold(int from, int to) const;

  LabelVector& operator+=(const LabelVector& o);
  friend LabelVector operator+(LabelVector a, const LabelVector& b) {
    a += b;
    return a;
  }

  bool operator==(const LabelVector& o) const { return comps_ == o.comps_; }
  bool operator<(const LabelVector& o) const { return comps_ < o.comps_; }

  const std::vector<int32_t>& raw() const { return comps_; }

  std::string to_string() const;  // "(a,b,c)"

 private:
  std::vector<int32_t> comps_;
};

// ---- PairVector ------------------------------------------------------------
// One integer per unordered index pair (i,j) with 0 <= i <= j <= l and
// (i,j) != (0,0); size l(l+3)/2.  Component (0,a) counts uncovered vertices
// of class a, component (a,b) with a,b >= 1 counts paths whose extremities
// lie in classes a and b.  Only the upper triangle is stored; accessing
// (i,j) with i > j reads (j,i).

class PairVector {
 public:
  PairVector() = default;
  explicit PairVector(int width);

  int width() const { return width_; }
  size_t size() const { return comps_.size(); }

  int32_t get(int i, int j) const { return comps_[index_of(i, j)]; }
  void set(int i, int j, int32_t v) { comps_[index_of(i, j)] = v; }
  void add(int i, int j, int32_t dv) { comps_[index_of(i, j)] += dv; }

  // Unit pair-vector at (r,s).  Throws std::out_of_range unless
  // 0 <= r,s <= width and (r,s) != (0,0).
  static PairVector delta(int r, int s, int width);

  // Merge label `from` into label `to` across both coordinates; colliding
  // components add.
  PairVector fold(int from, int to) const;

  bool has_negative() const;

  // Sum of the (0,a) components: vertices left uncovered.
  int32_t uncovered_total() const;
  // Sum of the (a,b) components with a,b >= 1: number of paths.
  int32_t path_total() const;

  PairVector& operator+=(const PairVector& o);
  friend PairVector operator+(PairVector a, const PairVector& b) {
    a += b;
    return a;
  }

  bool operator==(const PairVector& o) const {
    return width_ == o.width_ && comps_ == o.comps_;
  }
  bool operator<(const PairVector& o) const { return comps_ < o.comps_; }

  const std::vector<int32_t>& raw() const { return comps_; }

  std::string to_string() const;  // nonzero components, e.g. "{k[0,1]=2 k[1,2]=1}"

  // Flat position of pair (i,j), i <= j after swapping.  Public so the DP
  // engines can iterate components directly.
  size_t index_of(int i, int j) const;
  // Inverse of index_of: the (i,j) pair stored at a flat position.
  std::pair<int, int> pair_at(size_t idx) const;

 private:
  int width_ = 0;
  std::vector<int32_t> comps_;
};

// FNV-1a over 32-bit components; same scheme for every table key.
size_t hash_ints(const int32_t* data, size_t n, size_t seed = 0);

struct LabelVectorHash {
  size_t operator()(const LabelVector& v) const {
    return hash_ints(v.raw().data(), v.raw().size());
  }
};

struct PairVectorHash {
  size_t operator()(const PairVector& v) const {
    return hash_ints(v.raw().data(), v.raw().size());
  }
};

}  // namespace cwcount

#endif  // CWCOUNT_VECTORS_HPP
