#include "cwcount/generators.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cwcount/labeled_graph.hpp"

namespace cwcount {

namespace {

// Platform-independent bounded draw; the modulo bias is irrelevant at these
// bound sizes.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

void require_size(int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + " needs size >= 1");
  }
}

}  // namespace

ExprPtr gen_path(int n) {
  require_size(n, "gen_path");
  if (n == 1) return Expr::singleton(1);
  // Label 2 marks the growing end; new vertices arrive as label 3.
  ExprPtr e = Expr::singleton(2);
  for (int k = 1; k < n; ++k) {
    e = Expr::disjoint_union(std::move(e), Expr::singleton(3));
    e = Expr::edge_create(2, 3, std::move(e));
    e = Expr::rename(2, 1, std::move(e));
    e = Expr::rename(3, 2, std::move(e));
  }
  return e;
}

ExprPtr gen_clique(int n) {
  require_size(n, "gen_clique");
  ExprPtr e = Expr::singleton(1);
  for (int k = 1; k < n; ++k) {
    e = Expr::disjoint_union(std::move(e), Expr::singleton(2));
    e = Expr::edge_create(1, 2, std::move(e));
    e = Expr::rename(2, 1, std::move(e));
  }
  return e;
}

ExprPtr gen_complete_bipartite(int a, int b) {
  require_size(a, "gen_complete_bipartite");
  require_size(b, "gen_complete_bipartite");
  ExprPtr left = Expr::singleton(1);
  for (int k = 1; k < a; ++k) {
    left = Expr::disjoint_union(std::move(left), Expr::singleton(1));
  }
  ExprPtr right = Expr::singleton(2);
  for (int k = 1; k < b; ++k) {
    right = Expr::disjoint_union(std::move(right), Expr::singleton(2));
  }
  return Expr::edge_create(1, 2,
                           Expr::disjoint_union(std::move(left), std::move(right)));
}

namespace {

// All vertices keep label 1 so any two subtrees can be joined.
ExprPtr cograph_rec(int n, std::mt19937_64& rng) {
  if (n == 1) return Expr::singleton(1);
  int split = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(n - 1)));
  ExprPtr a = cograph_rec(split, rng);
  ExprPtr b = cograph_rec(n - split, rng);
  if (below(rng, 2) == 0) {
    return Expr::disjoint_union(std::move(a), std::move(b));
  }
  ExprPtr joined = Expr::edge_create(
      1, 2,
      Expr::disjoint_union(std::move(a), Expr::rename(1, 2, std::move(b))));
  return Expr::rename(2, 1, std::move(joined));
}

}  // namespace

ExprPtr gen_cograph(int n, std::uint64_t seed) {
  require_size(n, "gen_cograph");
  std::mt19937_64 rng(seed);
  return cograph_rec(n, rng);
}

namespace {

// Label pairs (i < j) with vertices on both sides and no cross edge yet.
std::vector<std::pair<int, int>> edge_candidates(const LabeledGraph& g) {
  LabelVector counts = g.label_counts();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= g.width; ++i) {
    if (counts.get(i) == 0) continue;
    for (int j = i + 1; j <= g.width; ++j) {
      if (counts.get(j) == 0) continue;
      bool adjacent = false;
      for (int u = 0; u < g.vertex_count() && !adjacent; ++u) {
        if (g.labels[u] != i) continue;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (g.labels[v] == j && g.has_edge(u, v)) {
            adjacent = true;
            break;
          }
        }
      }
      if (!adjacent) out.emplace_back(i, j);
    }
  }
  return out;
}

ExprPtr random_rec(int n, int width, std::mt19937_64& rng) {
  if (n == 1) {
    return Expr::singleton(1 + static_cast<int>(below(rng, width)));
  }
  int split = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(n - 1)));
  ExprPtr left = random_rec(split, width, rng);
  ExprPtr right = random_rec(n - split, width, rng);
  ExprPtr e = Expr::disjoint_union(std::move(left), std::move(right));
  if (width == 1) return e;
  int mutations = static_cast<int>(below(rng, 4));
  for (int m = 0; m < mutations; ++m) {
    if (below(rng, 2) == 0) {
      LabeledGraph g = evaluate(e, width);
      std::vector<std::pair<int, int>> candidates = edge_candidates(g);
      if (!candidates.empty()) {
        auto [i, j] = candidates[below(rng, candidates.size())];
        e = Expr::edge_create(i, j, std::move(e));
        continue;
      }
    }
    int from = 1 + static_cast<int>(below(rng, width));
    int to = 1 + static_cast<int>(below(rng, width - 1));
    if (to >= from) ++to;
    e = Expr::rename(from, to, std::move(e));
  }
  return e;
}

}  // namespace

ExprPtr gen_random(int n, int width, std::uint64_t seed) {
  require_size(n, "gen_random");
  require_size(width, "gen_random");
  std::mt19937_64 rng(seed);
  return random_rec(n, width, rng);
}

CorpusInstance random_corpus_instance(std::uint64_t seed, int max_n,
                                      int max_width) {
  require_size(max_n, "random_corpus_instance");
  require_size(max_width, "random_corpus_instance");
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_n)));
  int width =
      1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_width)));
  return {gen_random(n, width, rng()), width, n, seed};
}

}  // namespace cwcount
