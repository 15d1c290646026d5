#ifndef CWCOUNT_ORACLE_HPP
#define CWCOUNT_ORACLE_HPP

#include <map>
#include <utility>
#include <vector>

#include "cwcount/labeled_graph.hpp"
#include "cwcount/tables.hpp"

namespace cwcount {

// Exhaustive enumeration on small graphs, used as ground truth for the DP
// engines.  Each entry point refuses graphs above its size cap with
// std::length_error; the caps exist only to keep accidental large runs from
// hanging and can be raised explicitly.

inline constexpr int kOracleMatchingCap = 10;
inline constexpr int kOraclePathCap = 8;

// Edges as vertex pairs of the host graph, normalized u < v.
using EdgeSubset = std::vector<std::pair<int, int>>;

// All matchings, classified by matched vertices per label.
MatchedTable enumerate_matchings(const LabeledGraph& g,
                                 int size_cap = kOracleMatchingCap);

// All matching-cover pairs: a matching plus a set of unmatched vertices that
// together touch every edge; classified by (matched, cover) per label.
MCTable enumerate_mc(const LabeledGraph& g, int size_cap = kOracleMatchingCap);

// Matchings to which no edge can be added, classified by edge count.
std::map<int, BigCount> enumerate_maximal_matchings(
    const LabeledGraph& g, int size_cap = kOracleMatchingCap);

// All path matchings, classified by uncovered and extremity labels.
PMTable enumerate_pm(const LabeledGraph& g, int size_cap = kOraclePathCap);

// The path matchings themselves, for per-object checks.
std::vector<EdgeSubset> list_path_matchings(const LabeledGraph& g,
                                            int size_cap = kOraclePathCap);

// Classification key of one path matching; throws std::invalid_argument if
// the subset is not a path matching of g.
PairVector classify_path_matching(const LabeledGraph& g, const EdgeSubset& p);

// Extensions of p_prime across the new label i x label j edges: subsets of
// those edges whose union with p_prime stays a path matching, classified in
// the extended graph.  Requires that g has no i-j cross edge yet.
PMTable enumerate_extensions(const LabeledGraph& g, const EdgeSubset& p_prime,
                             int i, int j, int size_cap = kOraclePathCap);

// Simple paths with at least one edge, unordered endpoints.
BigCount enumerate_paths(const LabeledGraph& g, int size_cap = kOraclePathCap);

}  // namespace cwcount

#endif  // CWCOUNT_ORACLE_HPP
