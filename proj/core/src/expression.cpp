#include "cwcount/expression.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cwcount {

namespace {

void require_label(int value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be >= 1, got " +
                                std::to_string(value));
  }
}

void require_child(const ExprPtr& child, const char* what) {
  if (!child) throw std::invalid_argument(std::string(what) + ": null child");
}

}  // namespace

Expr::Expr(ExprKind kind, int a, int b, ExprPtr left, ExprPtr right)
    : kind_(kind),
      label_a_(a),
      label_b_(b),
      left_(std::move(left)),
      right_(std::move(right)) {
  max_label_ = std::max(label_a_, label_b_);
  leaf_count_ = kind_ == ExprKind::Singleton ? 1 : 0;
  if (left_) {
    max_label_ = std::max(max_label_, left_->max_label_);
    leaf_count_ += left_->leaf_count_;
  }
  if (right_) {
    max_label_ = std::max(max_label_, right_->max_label_);
    leaf_count_ += right_->leaf_count_;
  }
}

ExprPtr Expr::singleton(int label) {
  require_label(label, "singleton label");
  return ExprPtr(new Expr(ExprKind::Singleton, label, 0, nullptr, nullptr));
}

ExprPtr Expr::rename(int from, int to, ExprPtr child) {
  require_label(from, "rename source");
  require_label(to, "rename target");
  if (from == to) throw std::invalid_argument("rename with equal labels");
  require_child(child, "rename");
  return ExprPtr(new Expr(ExprKind::Rename, from, to, std::move(child), nullptr));
}

ExprPtr Expr::disjoint_union(ExprPtr left, ExprPtr right) {
  require_child(left, "union");
  require_child(right, "union");
  return ExprPtr(
      new Expr(ExprKind::Union, 0, 0, std::move(left), std::move(right)));
}

ExprPtr Expr::edge_create(int a, int b, ExprPtr child) {
  require_label(a, "edge label");
  require_label(b, "edge label");
  if (a == b) throw std::invalid_argument("edge between a label and itself");
  require_child(child, "edge creation");
  return ExprPtr(new Expr(ExprKind::EdgeCreate, a, b, std::move(child), nullptr));
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->label_a() != b->label_a() ||
      a->label_b() != b->label_b()) {
    return false;
  }
  return structurally_equal(a->left(), b->left()) &&
         structurally_equal(a->right(), b->right());
}

}  // namespace cwcount
