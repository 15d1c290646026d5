#include "cwcount/matching_dp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cwcount/combinatorics.hpp"

namespace cwcount {

MCNodeResult mc_singleton(int label, int width) {
  LabelVector zero(width);
  MCNodeResult out{{}, LabelVector::delta(label, width), 1};
  out.table[{zero, zero}] = 1;
  out.table[{zero, out.label_counts}] = 1;
  return out;
}

MCNodeResult mc_rename(const MCNodeResult& r, int from, int to) {
  MCNodeResult out{{}, r.label_counts.fold(from, to), r.vertex_count};
  out.table.reserve(r.table.size());
  for (const auto& [key, count] : r.table) {
    out.table[{key.matched.fold(from, to), key.cover.fold(from, to)}] += count;
  }
  return out;
}

MCNodeResult mc_union(const MCNodeResult& a, const MCNodeResult& b) {
  return {table_convolve(a.table, b.table), a.label_counts + b.label_counts,
          a.vertex_count + b.vertex_count};
}

MCNodeResult mc_edge_create(const MCNodeResult& r, int a, int b,
                            CoverageRule rule) {
  MCNodeResult out{{}, r.label_counts, r.vertex_count};
  out.table.reserve(r.table.size());
  const int n_a = r.label_counts.get(a);
  const int n_b = r.label_counts.get(b);
  for (const auto& [key, count] : r.table) {
    // Vertices free of both the matching and the cover would leave a created
    // edge uncovered; moving cover vertices into the matching below does not
    // change the free counts, so the filter is independent of q.
    if (rule == CoverageRule::RequireCoveredEdges) {
      bool a_saturated = n_a - key.matched.get(a) - key.cover.get(a) == 0;
      bool b_saturated = n_b - key.matched.get(b) - key.cover.get(b) == 0;
      if (!a_saturated && !b_saturated) continue;
    }
    const int c_a = key.cover.get(a);
    const int c_b = key.cover.get(b);
    for (int q = 0; q <= std::min(c_a, c_b); ++q) {
      MCKey target = key;
      target.matched.add(a, q);
      target.matched.add(b, q);
      target.cover.add(a, -q);
      target.cover.add(b, -q);
      out.table[std::move(target)] +=
          count * binomial(c_a, q) * binomial(c_b, q) * factorial(q);
    }
  }
  return out;
}

MCNodeResult run_mc(const ExprPtr& expr, int width, CoverageRule rule) {
  if (!expr) throw std::invalid_argument("run_mc: null term");
  if (width == 0) width = expr->max_label();
  if (width < expr->max_label()) {
    throw std::invalid_argument("run_mc: width below the maximum label");
  }
  switch (expr->kind()) {
    case ExprKind::Singleton:
      return mc_singleton(expr->label_a(), width);
    case ExprKind::Rename:
      return mc_rename(run_mc(expr->left(), width, rule), expr->label_a(),
                       expr->label_b());
    case ExprKind::Union:
      return mc_union(run_mc(expr->left(), width, rule),
                      run_mc(expr->right(), width, rule));
    case ExprKind::EdgeCreate:
      return mc_edge_create(run_mc(expr->left(), width, rule), expr->label_a(),
                            expr->label_b(), rule);
  }
  throw std::logic_error("unreachable expression kind");
}

std::map<int, BigCount> maximal_matchings_by_size(const MCNodeResult& root) {
  std::map<int, BigCount> out;
  for (const auto& [key, count] : root.table) {
    if (key.cover.sum() != 0) continue;
    int matched = key.matched.sum();
    assert(matched % 2 == 0);
    out[matched / 2] += count;
  }
  return out;
}

std::map<int, BigCount> count_maximal_matchings(const ExprPtr& expr, int width) {
  return maximal_matchings_by_size(run_mc(expr, width));
}

BigCount count_perfect_matchings(const ExprPtr& expr, int width) {
  MCNodeResult root = run_mc(expr, width);
  BigCount out = 0;
  for (const auto& [key, count] : root.table) {
    if (key.cover.sum() == 0 && key.matched.sum() == root.vertex_count) {
      out += count;
    }
  }
  return out;
}

MinMaximal count_min_maximal_matchings(const ExprPtr& expr, int width) {
  std::map<int, BigCount> by_size = count_maximal_matchings(expr, width);
  for (const auto& [size, count] : by_size) {
    if (count != 0) return {size, count};
  }
  throw std::logic_error("no maximal matching found");
}

// ---- plain matchings ------------------------------------------------------
// Same tree walk with keys reduced to matched vertices per label; edge
// creation matches q new pairs of still-unmatched endpoints.

namespace {

struct MatchedNode {
  MatchedTable table;
  LabelVector label_counts;
};

MatchedNode matchings_rec(const ExprPtr& expr, int width) {
  switch (expr->kind()) {
    case ExprKind::Singleton: {
      MatchedNode out{{}, LabelVector::delta(expr->label_a(), width)};
      out.table[LabelVector(width)] = 1;
      return out;
    }
    case ExprKind::Rename: {
      MatchedNode child = matchings_rec(expr->left(), width);
      MatchedNode out{{}, child.label_counts.fold(expr->label_a(), expr->label_b())};
      out.table.reserve(child.table.size());
      for (const auto& [key, count] : child.table) {
        out.table[key.fold(expr->label_a(), expr->label_b())] += count;
      }
      return out;
    }
    case ExprKind::Union: {
      MatchedNode left = matchings_rec(expr->left(), width);
      MatchedNode right = matchings_rec(expr->right(), width);
      return {table_convolve(left.table, right.table),
              left.label_counts + right.label_counts};
    }
    case ExprKind::EdgeCreate: {
      MatchedNode child = matchings_rec(expr->left(), width);
      const int a = expr->label_a();
      const int b = expr->label_b();
      MatchedNode out{{}, child.label_counts};
      out.table.reserve(child.table.size());
      for (const auto& [key, count] : child.table) {
        const int free_a = child.label_counts.get(a) - key.get(a);
        const int free_b = child.label_counts.get(b) - key.get(b);
        for (int q = 0; q <= std::min(free_a, free_b); ++q) {
          LabelVector target = key;
          target.add(a, q);
          target.add(b, q);
          out.table[std::move(target)] +=
              count * binomial(free_a, q) * binomial(free_b, q) * factorial(q);
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

MatchedTable run_matchings(const ExprPtr& expr, int width) {
  if (!expr) throw std::invalid_argument("run_matchings: null term");
  if (width == 0) width = expr->max_label();
  if (width < expr->max_label()) {
    throw std::invalid_argument("run_matchings: width below the maximum label");
  }
  return matchings_rec(expr, width).table;
}

std::map<int, BigCount> count_matchings(const ExprPtr& expr, int width) {
  std::map<int, BigCount> out;
  for (const auto& [key, count] : run_matchings(expr, width)) {
    int matched = key.sum();
    assert(matched % 2 == 0);
    out[matched / 2] += count;
  }
  return out;
}

}  // namespace cwcount
