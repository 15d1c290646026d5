#include "cwcount/labeled_graph.hpp"

#include <algorithm>

namespace cwcount {

bool LabeledGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  std::pair<int, int> key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  return std::binary_search(edges.begin(), edges.end(), key);
}

LabelVector LabeledGraph::label_counts() const {
  LabelVector counts(width);
  for (int lab : labels) counts.add(lab, 1);
  return counts;
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
  std::vector<std::vector<int>> adj(labels.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

namespace {

void apply_rename(LabeledGraph& g, int from, int to) {
  for (int& lab : g.labels) {
    if (lab == from) lab = to;
  }
}

void append_disjoint(LabeledGraph& g, const LabeledGraph& right) {
  int offset = g.vertex_count();
  g.labels.insert(g.labels.end(), right.labels.begin(), right.labels.end());
  for (const auto& [u, v] : right.edges) {
    g.edges.emplace_back(u + offset, v + offset);
  }
}

// Cross pairs of the operation, before the edges are added.
void count_cross_pairs(const LabeledGraph& g, int a, int b, int& existing,
                       int& total) {
  existing = 0;
  total = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.labels[u] != a) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.labels[v] != b) continue;
      ++total;
      if (g.has_edge(u, v)) ++existing;
    }
  }
}

void apply_edge_create(LabeledGraph& g, int a, int b) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.labels[u] != a) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.labels[v] != b) continue;
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

LabeledGraph eval_node(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Singleton: {
      LabeledGraph g;
      g.labels.push_back(e->label_a());
      return g;
    }
    case ExprKind::Rename: {
      LabeledGraph g = eval_node(e->left());
      apply_rename(g, e->label_a(), e->label_b());
      return g;
    }
    case ExprKind::Union: {
      LabeledGraph g = eval_node(e->left());
      append_disjoint(g, eval_node(e->right()));
      return g;
    }
    case ExprKind::EdgeCreate: {
      LabeledGraph g = eval_node(e->left());
      apply_edge_create(g, e->label_a(), e->label_b());
      return g;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

int resolve_width(const ExprPtr& expr, int width) {
  if (!expr) throw std::invalid_argument("evaluate: null term");
  if (width == 0) return expr->max_label();
  if (width < expr->max_label()) {
    throw std::invalid_argument("width " + std::to_string(width) +
                                " is below the maximum label " +
                                std::to_string(expr->max_label()));
  }
  return width;
}

}  // namespace

LabeledGraph evaluate(const ExprPtr& expr, int width) {
  int resolved = resolve_width(expr, width);
  LabeledGraph g = eval_node(expr);
  g.width = resolved;
  return g;
}

namespace {

LabeledGraph walk_validate(const ExprPtr& e, int& preorder,
                           std::vector<RedundantEdgeOp>& out) {
  int at = preorder++;
  switch (e->kind()) {
    case ExprKind::Singleton: {
      LabeledGraph g;
      g.labels.push_back(e->label_a());
      return g;
    }
    case ExprKind::Rename: {
      LabeledGraph g = walk_validate(e->left(), preorder, out);
      apply_rename(g, e->label_a(), e->label_b());
      return g;
    }
    case ExprKind::Union: {
      LabeledGraph g = walk_validate(e->left(), preorder, out);
      append_disjoint(g, walk_validate(e->right(), preorder, out));
      return g;
    }
    case ExprKind::EdgeCreate: {
      LabeledGraph g = walk_validate(e->left(), preorder, out);
      int existing = 0, total = 0;
      count_cross_pairs(g, e->label_a(), e->label_b(), existing, total);
      if (existing >= 1) {
        out.push_back({at, e->label_a(), e->label_b(), existing, total});
      }
      apply_edge_create(g, e->label_a(), e->label_b());
      return g;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

std::vector<RedundantEdgeOp> validate_irredundant(const ExprPtr& expr) {
  if (!expr) throw std::invalid_argument("validate_irredundant: null term");
  std::vector<RedundantEdgeOp> out;
  int preorder = 0;
  walk_validate(expr, preorder, out);
  return out;
}

PartialRedundancyError::PartialRedundancyError(const RedundantEdgeOp& op)
    : std::runtime_error("edge operation at preorder " +
                         std::to_string(op.node_preorder) + " over labels (" +
                         std::to_string(op.label_a) + "," +
                         std::to_string(op.label_b) + ") re-adds " +
                         std::to_string(op.existing_pairs) + " of " +
                         std::to_string(op.total_pairs) + " cross pairs"),
      op_(op) {}

namespace {

struct DropResult {
  ExprPtr expr;
  LabeledGraph graph;
};

DropResult walk_drop(const ExprPtr& e, int& preorder) {
  int at = preorder++;
  switch (e->kind()) {
    case ExprKind::Singleton: {
      LabeledGraph g;
      g.labels.push_back(e->label_a());
      return {e, std::move(g)};
    }
    case ExprKind::Rename: {
      DropResult r = walk_drop(e->left(), preorder);
      apply_rename(r.graph, e->label_a(), e->label_b());
      r.expr = r.expr == e->left()
                   ? e
                   : Expr::rename(e->label_a(), e->label_b(), std::move(r.expr));
      return r;
    }
    case ExprKind::Union: {
      DropResult l = walk_drop(e->left(), preorder);
      DropResult r = walk_drop(e->right(), preorder);
      append_disjoint(l.graph, r.graph);
      l.expr = (l.expr == e->left() && r.expr == e->right())
                   ? e
                   : Expr::disjoint_union(std::move(l.expr), std::move(r.expr));
      return l;
    }
    case ExprKind::EdgeCreate: {
      DropResult r = walk_drop(e->left(), preorder);
      int existing = 0, total = 0;
      count_cross_pairs(r.graph, e->label_a(), e->label_b(), existing, total);
      if (existing == total) return r;  // adds nothing, including total == 0
      if (existing > 0) {
        throw PartialRedundancyError(
            {at, e->label_a(), e->label_b(), existing, total});
      }
      apply_edge_create(r.graph, e->label_a(), e->label_b());
      r.expr = r.expr == e->left() ? e
                                   : Expr::edge_create(e->label_a(), e->label_b(),
                                                       std::move(r.expr));
      return r;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

ExprPtr drop_null_edge_ops(const ExprPtr& expr) {
  if (!expr) throw std::invalid_argument("drop_null_edge_ops: null term");
  int preorder = 0;
  return walk_drop(expr, preorder).expr;
}

}  // namespace cwcount
