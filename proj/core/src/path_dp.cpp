#include "cwcount/path_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cwcount {

PMNodeResult pm_singleton(int label, int width) {
  PMNodeResult out{{}, LabelVector::delta(label, width), 1};
  out.table[PairVector::delta(0, label, width)] = 1;
  return out;
}

PMNodeResult pm_rename(const PMNodeResult& r, int from, int to) {
  PMNodeResult out{{}, r.label_counts.fold(from, to), r.vertex_count};
  out.table.reserve(r.table.size());
  for (const auto& [key, count] : r.table) {
    out.table[key.fold(from, to)] += count;
  }
  return out;
}

PMNodeResult pm_union(const PMNodeResult& a, const PMNodeResult& b) {
  return {table_convolve(a.table, b.table), a.label_counts + b.label_counts,
          a.vertex_count + b.vertex_count};
}

// ---- extension recursion --------------------------------------------------

namespace {

TStateKey make_state_key(const PairVector& k, const std::vector<int>& x) {
  TStateKey key;
  key.data = k.raw();
  key.data.reserve(key.data.size() + x.size());
  for (int value : x) key.data.push_back(static_cast<int32_t>(value));
  return key;
}

// Next class to process: partner-in-j vertices first, then uncovered ones,
// then the remaining partner classes in label order.
int select_class(const std::vector<int>& x, int i, int j) {
  if (x[j] > 0) return j;
  if (x[0] > 0) return 0;
  for (int c = 1; c < static_cast<int>(x.size()); ++c) {
    if (x[c] > 0) {
      if (c == i && x[i] % 2 != 0) {
        throw std::logic_error("odd extremity count for the paired class");
      }
      return c;
    }
  }
  return -1;
}

long exact_half(long product) {
  if (product % 2 != 0) {
    throw std::logic_error("same-slot pair count is not even");
  }
  return product / 2;
}

// Emits (coefficient, next K) for every way to attach new edges to one
// vertex of class `cls`; the caller owns the X decrement.
template <class Emit>
void expand_vertex(int i, int j, int cls, const PairVector& k, int width,
                   Emit&& emit) {
  auto v = [&k](int a, int b) -> long {
    return a == b ? 2L * k.get(a, a) : static_cast<long>(k.get(a, b));
  };
  auto push = [&emit](long coeff, PairVector k2) {
    if (coeff <= 0 || k2.has_negative()) return;
    emit(coeff, std::move(k2));
  };

  // no new edge
  push(1, k);

  if (cls == j) {
    // Extremity of an (i,j)-path: one edge at most.  Attaching to another
    // extremity merges two paths into one whose ends are our partner (in
    // G_j) and the chosen vertex's partner, leaving one (i,j)-path less.
    for (int a = 1; a <= width; ++a) {
      long coeff = a == i ? v(i, j) - 1 : v(j, a);  // not its own partner
      PairVector k2 = k;
      k2.add(i, j, -1);
      push(coeff, std::move(k2));
    }
    // Attaching to an uncovered G_j vertex extends the path by one vertex.
    PairVector k2 = k;
    k2.add(i, j, -1);
    k2.add(0, j, -1);
    k2.add(j, j, 1);
    push(v(0, j), std::move(k2));
    return;
  }

  if (cls == 0 || cls == i) {
    // An uncovered vertex can take two new edges; the two extremities of an
    // (i,i)-path are handled as one step and can take one new edge each,
    // which doubles every choice of a single attachment slot.
    const bool paired = cls == i;
    const long single = paired ? 2 : 1;
    auto consumed = [&](PairVector& k2) {
      if (paired) {
        k2.add(i, i, -1);
      } else {
        k2.add(0, i, -1);
      }
    };

    for (int a = 1; a <= width; ++a) {
      PairVector k2 = k;
      consumed(k2);
      k2.add(j, a, -1);
      k2.add(i, a, 1);
      push(single * v(j, a), std::move(k2));
    }
    {
      PairVector k2 = k;
      consumed(k2);
      k2.add(0, j, -1);
      k2.add(i, j, 1);
      push(single * v(0, j), std::move(k2));
    }
    for (int a = 1; a <= width; ++a) {
      for (int b = a + 1; b <= width; ++b) {
        PairVector k2 = k;
        consumed(k2);
        k2.add(j, a, -1);
        k2.add(j, b, -1);
        k2.add(a, b, 1);
        push(single * v(j, a) * v(j, b), std::move(k2));
      }
    }
    for (int a = 1; a <= width; ++a) {
      PairVector k2 = k;
      consumed(k2);
      k2.add(0, j, -1);
      push(single * v(j, a) * v(0, j), std::move(k2));
    }
    // Both edges into the same slot: unordered choice of two distinct
    // vertices, halved unless the two attachment points are distinguishable
    // extremities; two (j,j)-extremities must not close a cycle, which
    // forbids partners and leaves v(v-2) ordered choices.
    for (int a = 1; a <= width; ++a) {
      if (a == j) continue;
      long product = v(j, a) * (v(j, a) - 1);
      PairVector k2 = k;
      consumed(k2);
      k2.add(j, a, -2);
      k2.add(a, a, 1);
      push(paired ? product : exact_half(product), std::move(k2));
    }
    {
      long product = v(0, j) * (v(0, j) - 1);
      PairVector k2 = k;
      consumed(k2);
      k2.add(0, j, -2);
      k2.add(j, j, 1);
      push(paired ? product : exact_half(product), std::move(k2));
    }
    {
      long product = v(j, j) * (v(j, j) - 2);
      PairVector k2 = k;
      consumed(k2);
      k2.add(j, j, -1);
      push(paired ? product : exact_half(product), std::move(k2));
    }
    return;
  }

  // Extremity whose partner sits in a plain class c: one edge at most, and
  // the partner's classification moves from (i,c) to the merge result.
  for (int a = 1; a <= width; ++a) {
    PairVector k2 = k;
    k2.add(i, cls, -1);
    k2.add(j, a, -1);
    k2.add(cls, a, 1);
    push(v(j, a), std::move(k2));
  }
  PairVector k2 = k;
  k2.add(i, cls, -1);
  k2.add(0, j, -1);
  k2.add(j, cls, 1);
  push(v(0, j), std::move(k2));
}

void check_engine_labels(int i, int j, int width) {
  if (i == j) throw std::invalid_argument("edge between a label and itself");
  if (i < 1 || j < 1 || i > width || j > width) {
    throw std::invalid_argument("edge label out of range");
  }
}

}  // namespace

std::vector<int> remaining_from_source(int i, const PairVector& source) {
  std::vector<int> x(source.width() + 1, 0);
  x[0] = source.get(0, i);
  for (int c = 1; c <= source.width(); ++c) {
    x[c] = c == i ? 2 * source.get(i, i) : source.get(i, c);
  }
  return x;
}

BigCount t_value(int i, int j, const PairVector& k_target, const PairVector& k,
                 const std::vector<int>& x, TMemo& memo) {
  const int width = k.width();
  if (i >= j) throw std::invalid_argument("t_value: needs i < j");
  check_engine_labels(i, j, width);
  if (k_target.width() != width ||
      static_cast<int>(x.size()) != width + 1) {
    throw std::invalid_argument("t_value: width mismatch");
  }
  for (int value : x) {
    if (value < 0) throw std::invalid_argument("t_value: negative X component");
  }

  int cls = select_class(x, i, j);
  if (cls < 0) return k == k_target ? 1 : 0;

  TStateKey key = make_state_key(k, x);
  auto it = memo.values.find(key);
  if (it != memo.values.end()) return it->second;

  std::vector<int> x2 = x;
  if (cls == i) {
    x2[i] -= 2;
  } else {
    x2[cls] -= 1;
  }
  BigCount total = 0;
  expand_vertex(i, j, cls, k, width, [&](long coeff, PairVector k2) {
    total += coeff * t_value(i, j, k_target, k2, x2, memo);
  });
  return memo.values.emplace(std::move(key), std::move(total)).first->second;
}

BigCount derive_N(int i, int j, const PairVector& k_source,
                  const PairVector& k_target) {
  if (i > j) std::swap(i, j);
  TMemo memo;
  return t_value(i, j, k_target, k_source, remaining_from_source(i, k_source),
                 memo);
}

ExtensionEngine::ExtensionEngine(int label_a, int label_b, int width)
    : i_(std::min(label_a, label_b)),
      j_(std::max(label_a, label_b)),
      width_(width) {
  check_engine_labels(i_, j_, width_);
}

BigCount ExtensionEngine::count(const PairVector& source,
                                const PairVector& target) {
  return lookup(distribution(source), target);
}

const PMTable& ExtensionEngine::distribution(const PairVector& source) {
  if (source.width() != width_) {
    throw std::invalid_argument("distribution: width mismatch");
  }
  return dist_rec(source, remaining_from_source(i_, source));
}

const PMTable& ExtensionEngine::dist_rec(const PairVector& k,
                                         const std::vector<int>& x) {
  TStateKey key = make_state_key(k, x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  PMTable out;
  int cls = select_class(x, i_, j_);
  if (cls < 0) {
    out[k] = 1;
  } else {
    std::vector<int> x2 = x;
    if (cls == i_) {
      x2[i_] -= 2;
    } else {
      x2[cls] -= 1;
    }
    expand_vertex(i_, j_, cls, k, width_, [&](long coeff, PairVector k2) {
      // References into the memo stay valid while recursion inserts.
      const PMTable& sub = dist_rec(k2, x2);
      for (const auto& [reached, count] : sub) {
        out[reached] += coeff * count;
      }
    });
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

// ---- tree walk ------------------------------------------------------------

PMNodeResult pm_edge_create(const PMNodeResult& r, int a, int b) {
  ExtensionEngine engine(a, b, r.label_counts.width());
  PMNodeResult out{{}, r.label_counts, r.vertex_count};
  for (const auto& [source, weight] : r.table) {
    const PMTable& dist = engine.distribution(source);
    for (const auto& [reached, count] : dist) {
      out.table[reached] += weight * count;
    }
  }
  return out;
}

PMNodeResult run_pm(const ExprPtr& expr, int width) {
  if (!expr) throw std::invalid_argument("run_pm: null term");
  if (width == 0) width = expr->max_label();
  if (width < expr->max_label()) {
    throw std::invalid_argument("run_pm: width below the maximum label");
  }
  switch (expr->kind()) {
    case ExprKind::Singleton:
      return pm_singleton(expr->label_a(), width);
    case ExprKind::Rename:
      return pm_rename(run_pm(expr->left(), width), expr->label_a(),
                       expr->label_b());
    case ExprKind::Union:
      return pm_union(run_pm(expr->left(), width), run_pm(expr->right(), width));
    case ExprKind::EdgeCreate:
      return pm_edge_create(run_pm(expr->left(), width), expr->label_a(),
                            expr->label_b());
  }
  throw std::logic_error("unreachable expression kind");
}

BigCount count_paths(const ExprPtr& expr, int width) {
  PMNodeResult root = run_pm(expr, width);
  BigCount out = 0;
  for (const auto& [key, count] : root.table) {
    if (key.path_total() == 1) out += count;
  }
  return out;
}

PathMatchingTotals count_path_matchings(const ExprPtr& expr, int width) {
  PMNodeResult root = run_pm(expr, width);
  PathMatchingTotals totals;
  totals.including_empty = 0;
  totals.excluding_empty = 0;
  for (const auto& [key, count] : root.table) {
    totals.including_empty += count;
    if (key.path_total() != 0) totals.excluding_empty += count;
  }
  return totals;
}

}  // namespace cwcount
