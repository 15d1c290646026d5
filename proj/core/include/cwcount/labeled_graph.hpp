#ifndef CWCOUNT_LABELED_GRAPH_HPP
#define CWCOUNT_LABELED_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cwcount/expression.hpp"
#include "cwcount/vectors.hpp"

namespace cwcount {

// Concrete realization of a term.  Vertex ids are 0-based and assigned
// left-to-right over the Singleton leaves, so re-evaluating a term always
// yields the same ids.
struct LabeledGraph {
  int width = 0;
  std::vector<int> labels;                  // vertex id -> label, 1-based
  std::vector<std::pair<int, int>> edges;   // normalized u < v, sorted, unique

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  LabelVector label_counts() const;
  std::vector<std::vector<int>> adjacency() const;
};

// width 0 means "use the term's maximum label"; a smaller width is an error.
LabeledGraph evaluate(const ExprPtr& expr, int width = 0);

// An edge operation whose label pair already has cross edges in its child.
struct RedundantEdgeOp {
  int node_preorder;   // preorder position of the operator node, root = 0
  int label_a;
  int label_b;
  int existing_pairs;  // cross pairs already adjacent in the child graph
  int total_pairs;     // all label_a x label_b pairs in the child graph
};

// Empty result means the term is irredundant.
std::vector<RedundantEdgeOp> validate_irredundant(const ExprPtr& expr);

class PartialRedundancyError : public std::runtime_error {
 public:
  PartialRedundancyError(const RedundantEdgeOp& op);
  const RedundantEdgeOp& op() const { return op_; }

 private:
  RedundantEdgeOp op_;
};

// Removes edge operations that add no edge; the result evaluates to the same
// graph and is irredundant unless an operation adds some but not all of its
// cross pairs, which raises PartialRedundancyError.
ExprPtr drop_null_edge_ops(const ExprPtr& expr);

}  // namespace cwcount

#endif  // CWCOUNT_LABELED_GRAPH_HPP
