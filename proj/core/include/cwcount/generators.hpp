#ifndef CWCOUNT_GENERATORS_HPP
#define CWCOUNT_GENERATORS_HPP

#include <cstdint>

#include "cwcount/expression.hpp"

namespace cwcount {

// Term generators for test corpora and benchmarks.  Every generator returns
// an irredundant term.  Randomized generators draw from a seeded mt19937_64
// through modulo reduction only, so output is identical across platforms.

// n vertices in a row; 3 labels for n >= 2.
ExprPtr gen_path(int n);

// Complete graph; 2 labels for n >= 2.
ExprPtr gen_clique(int n);

// Complete bipartite graph on a + b vertices; 2 labels.
ExprPtr gen_complete_bipartite(int a, int b);

// Random union/join tree over n vertices; 2 labels.
ExprPtr gen_cograph(int n, std::uint64_t seed);

// Random term over labels 1..width: recursive split into disjoint unions,
// then 0..3 mutations (renames, edge creations over label pairs with no
// existing cross edge) above each union node.
ExprPtr gen_random(int n, int width, std::uint64_t seed);

struct CorpusInstance {
  ExprPtr expr;
  int width;  // declared width, may exceed the maximum label used
  int n;
  std::uint64_t seed;
};

// One instance of the randomized cross-check corpus: n in 1..max_n and
// width in 1..max_width are drawn from the seed.
CorpusInstance random_corpus_instance(std::uint64_t seed, int max_n = 8,
                                      int max_width = 3);

}  // namespace cwcount

#endif  // CWCOUNT_GENERATORS_HPP
