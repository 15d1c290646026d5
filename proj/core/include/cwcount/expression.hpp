#ifndef CWCOUNT_EXPRESSION_HPP
#define CWCOUNT_EXPRESSION_HPP

#include <memory>

namespace cwcount {

// Construction terms for labeled graphs.  Labels are 1-based; a term never
// stores its width, which is inferred as the maximum label unless a caller
// supplies a larger one.

enum class ExprKind {
  Singleton,   // one vertex carrying label a
  Rename,      // every vertex labeled a takes label b
  Union,       // disjoint union of two subgraphs
  EdgeCreate,  // all edges between label-a and label-b vertices
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable; subtrees are shared freely.
class Expr {
 public:
  static ExprPtr singleton(int label);
  static ExprPtr rename(int from, int to, ExprPtr child);
  static ExprPtr disjoint_union(ExprPtr left, ExprPtr right);
  static ExprPtr edge_create(int a, int b, ExprPtr child);

  ExprKind kind() const { return kind_; }
  // Singleton label, rename source, or edge endpoint.
  int label_a() const { return label_a_; }
  // Rename target or second edge endpoint; 0 for other kinds.
  int label_b() const { return label_b_; }
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }

  // Largest label mentioned anywhere in the subtree.
  int max_label() const { return max_label_; }
  // Number of Singleton leaves == vertices of the evaluated graph.
  int leaf_count() const { return leaf_count_; }

 private:
  Expr(ExprKind kind, int a, int b, ExprPtr left, ExprPtr right);

  ExprKind kind_;
  int label_a_;
  int label_b_;
  ExprPtr left_;
  ExprPtr right_;
  int max_label_;
  int leaf_count_;
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace cwcount

#endif  // CWCOUNT_EXPRESSION_HPP
