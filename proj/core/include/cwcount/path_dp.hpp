#ifndef CWCOUNT_PATH_DP_HPP
#define CWCOUNT_PATH_DP_HPP

#include <unordered_map>
#include <vector>

#include "cwcount/expression.hpp"
#include "cwcount/tables.hpp"

namespace cwcount {

// Bottom-up tables of path matchings (linear forests).  Keys classify a path
// matching by uncovered vertices per label (component (0,i)) and by path
// count per unordered extremity-label pair (component (i,j)).

struct PMNodeResult {
  PMTable table;
  LabelVector label_counts;
  int vertex_count = 0;
};

PMNodeResult pm_singleton(int label, int width);
PMNodeResult pm_rename(const PMNodeResult& r, int from, int to);
PMNodeResult pm_union(const PMNodeResult& a, const PMNodeResult& b);
PMNodeResult pm_edge_create(const PMNodeResult& r, int a, int b);
PMNodeResult run_pm(const ExprPtr& expr, int width = 0);

// Simple paths with at least one edge: root entries holding exactly one path.
BigCount count_paths(const ExprPtr& expr, int width = 0);

struct PathMatchingTotals {
  BigCount including_empty;
  BigCount excluding_empty;
};
PathMatchingTotals count_path_matchings(const ExprPtr& expr, int width = 0);

// ---- extension recursion --------------------------------------------------
// Edge creation between labels i < j is resolved by processing the label-i
// extremities one at a time and branching over the new edges a vertex can
// receive.  The state is the evolving classification K plus X[c] = label-i
// vertices not yet processed whose path partner lies in class c (X[0] counts
// the uncovered ones; X[i] counts both ends of every (i,i)-path and stays
// even).  Branch coefficients are read from the current K, so earlier
// decisions are visible to later vertices.

struct TStateKey {
  std::vector<int32_t> data;  // K components then X components
  bool operator==(const TStateKey& o) const { return data == o.data; }
};

struct TStateKeyHash {
  size_t operator()(const TStateKey& k) const {
    return hash_ints(k.data.data(), k.data.size());
  }
};

// Valid for a single (i, j, k_target) batch.
struct TMemo {
  std::unordered_map<TStateKey, BigCount, TStateKeyHash> values;
};

// X for the start of the recursion, from the source classification.
std::vector<int> remaining_from_source(int i, const PairVector& source);

// Number of ways to finish processing X so that K becomes exactly k_target.
BigCount t_value(int i, int j, const PairVector& k_target, const PairVector& k,
                 const std::vector<int>& x, TMemo& memo);

// Extensions across the new i-j edges from class k_source that land in class
// k_target; label order is normalized internally.
BigCount derive_N(int i, int j, const PairVector& k_source,
                  const PairVector& k_target);

// Memoized traversal shared by every source key of one edge-creation node.
class ExtensionEngine {
 public:
  // Requires label_a != label_b; stores them ordered.
  ExtensionEngine(int label_a, int label_b, int width);

  BigCount count(const PairVector& source, const PairVector& target);
  const PMTable& distribution(const PairVector& source);

 private:
  const PMTable& dist_rec(const PairVector& k, const std::vector<int>& x);

  int i_;
  int j_;
  int width_;
  std::unordered_map<TStateKey, PMTable, TStateKeyHash> memo_;
};

}  // namespace cwcount

#endif  // CWCOUNT_PATH_DP_HPP
