#ifndef CWCOUNT_MATCHING_DP_HPP
#define CWCOUNT_MATCHING_DP_HPP

#include <map>

#include "cwcount/expression.hpp"
#include "cwcount/tables.hpp"

namespace cwcount {

// Bottom-up tables of matching-cover pairs: a matching m plus a vertex set c
// disjoint from m's endpoints such that every edge has an endpoint in
// V(m) union c.  Keys classify pairs by matched and cover vertices per label.

struct MCNodeResult {
  MCTable table;
  LabelVector label_counts;
  int vertex_count = 0;
};

// AllowUncoveredEdges drops the edge-coverage filter in mc_edge_create and is
// for tests only: it admits pairs that leave a created edge uncovered.
enum class CoverageRule { RequireCoveredEdges, AllowUncoveredEdges };

MCNodeResult mc_singleton(int label, int width);
MCNodeResult mc_rename(const MCNodeResult& r, int from, int to);
MCNodeResult mc_union(const MCNodeResult& a, const MCNodeResult& b);
MCNodeResult mc_edge_create(const MCNodeResult& r, int a, int b,
                            CoverageRule rule = CoverageRule::RequireCoveredEdges);
MCNodeResult run_mc(const ExprPtr& expr, int width = 0,
                    CoverageRule rule = CoverageRule::RequireCoveredEdges);

// Maximal matchings are the pairs with an empty cover, grouped by edge count.
std::map<int, BigCount> maximal_matchings_by_size(const MCNodeResult& root);

std::map<int, BigCount> count_maximal_matchings(const ExprPtr& expr,
                                                int width = 0);
BigCount count_perfect_matchings(const ExprPtr& expr, int width = 0);

struct MinMaximal {
  int size = 0;
  BigCount count;
};
MinMaximal count_min_maximal_matchings(const ExprPtr& expr, int width = 0);

// Plain matchings classified by edge count, empty matching included.
std::map<int, BigCount> count_matchings(const ExprPtr& expr, int width = 0);

// Root table of the plain-matching run, classified by matched vertices per
// label; the size map above is its fold.
MatchedTable run_matchings(const ExprPtr& expr, int width = 0);

}  // namespace cwcount

#endif  // CWCOUNT_MATCHING_DP_HPP
