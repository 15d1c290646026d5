#include "cwcount/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cwcount {

namespace {

void check_cap(const LabeledGraph& g, int size_cap, const char* what) {
  size_cap = std::min(size_cap, 31);  // vertex sets live in 32-bit masks
  if (g.vertex_count() > size_cap) {
    throw std::length_error(std::string(what) + ": " +
                            std::to_string(g.vertex_count()) +
                            " vertices exceed the oracle cap of " +
                            std::to_string(size_cap));
  }
}

// Walks every matching once: an edge with a used endpoint has no include
// branch, so the tree size is bounded by edges times matchings.
void for_each_matching(const LabeledGraph& g,
                       const std::function<void(std::uint32_t)>& visit) {
  std::uint32_t matched_mask = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == g.edges.size()) {
      visit(matched_mask);
      return;
    }
    rec(idx + 1);
    auto [u, v] = g.edges[idx];
    std::uint32_t bits = (1u << u) | (1u << v);
    if ((matched_mask & bits) == 0) {
      matched_mask |= bits;
      rec(idx + 1);
      matched_mask &= ~bits;
    }
  };
  rec(0);
}

LabelVector mask_labels(const LabeledGraph& g, std::uint32_t mask) {
  LabelVector out(g.width);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mask & (1u << v)) out.add(g.labels[v], 1);
  }
  return out;
}

int popcount(std::uint32_t mask) { return __builtin_popcount(mask); }

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Walks every subset of `pool` that keeps degrees <= 2 and stays acyclic on
// top of the preloaded state.
void for_each_path_matching(const EdgeSubset& pool, std::vector<int> degree,
                            Dsu dsu, EdgeSubset& chosen,
                            const std::function<void()>& visit) {
  std::function<void(size_t, Dsu&)> rec = [&](size_t idx, Dsu& state) {
    if (idx == pool.size()) {
      visit();
      return;
    }
    rec(idx + 1, state);
    auto [u, v] = pool[idx];
    if (degree[u] < 2 && degree[v] < 2 && state.find(u) != state.find(v)) {
      Dsu next = state;
      next.unite(u, v);
      degree[u] += 1;
      degree[v] += 1;
      chosen.push_back(pool[idx]);
      rec(idx + 1, next);
      chosen.pop_back();
      degree[u] -= 1;
      degree[v] -= 1;
    }
  };
  rec(0, dsu);
}

}  // namespace

MatchedTable enumerate_matchings(const LabeledGraph& g, int size_cap) {
  check_cap(g, size_cap, "enumerate_matchings");
  MatchedTable out;
  for_each_matching(g, [&](std::uint32_t matched_mask) {
    out[mask_labels(g, matched_mask)] += 1;
  });
  return out;
}

MCTable enumerate_mc(const LabeledGraph& g, int size_cap) {
  check_cap(g, size_cap, "enumerate_mc");
  const std::uint32_t all = g.vertex_count() == 32
                                ? ~0u
                                : (1u << g.vertex_count()) - 1;
  MCTable out;
  for_each_matching(g, [&](std::uint32_t matched_mask) {
    LabelVector matched = mask_labels(g, matched_mask);
    std::uint32_t free_mask = all & ~matched_mask;
    // Every subset of the unmatched vertices, including the empty one.
    std::uint32_t cover = free_mask;
    while (true) {
      bool covers = true;
      for (auto [u, v] : g.edges) {
        std::uint32_t touched = matched_mask | cover;
        if ((touched & ((1u << u) | (1u << v))) == 0) {
          covers = false;
          break;
        }
      }
      if (covers) out[{matched, mask_labels(g, cover)}] += 1;
      if (cover == 0) break;
      cover = (cover - 1) & free_mask;
    }
  });
  return out;
}

std::map<int, BigCount> enumerate_maximal_matchings(const LabeledGraph& g,
                                                    int size_cap) {
  check_cap(g, size_cap, "enumerate_maximal_matchings");
  std::map<int, BigCount> out;
  for_each_matching(g, [&](std::uint32_t matched_mask) {
    for (auto [u, v] : g.edges) {
      if ((matched_mask & ((1u << u) | (1u << v))) == 0) return;
    }
    out[popcount(matched_mask) / 2] += 1;
  });
  return out;
}

PMTable enumerate_pm(const LabeledGraph& g, int size_cap) {
  check_cap(g, size_cap, "enumerate_pm");
  PMTable out;
  EdgeSubset chosen;
  for_each_path_matching(g.edges, std::vector<int>(g.vertex_count(), 0),
                         Dsu(g.vertex_count()), chosen,
                         [&] { out[classify_path_matching(g, chosen)] += 1; });
  return out;
}

std::vector<EdgeSubset> list_path_matchings(const LabeledGraph& g,
                                            int size_cap) {
  check_cap(g, size_cap, "list_path_matchings");
  std::vector<EdgeSubset> out;
  EdgeSubset chosen;
  for_each_path_matching(g.edges, std::vector<int>(g.vertex_count(), 0),
                         Dsu(g.vertex_count()), chosen,
                         [&] { out.push_back(chosen); });
  return out;
}

PairVector classify_path_matching(const LabeledGraph& g, const EdgeSubset& p) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : p) {
    if (!g.has_edge(u, v)) {
      throw std::invalid_argument("classify_path_matching: edge not in graph");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  PairVector key(g.width);
  std::vector<bool> visited(n, false);
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 2) {
      throw std::invalid_argument("classify_path_matching: degree above 2");
    }
    if (adj[v].empty()) {
      key.add(0, g.labels[v], 1);
      visited[v] = true;
    }
  }
  // Walk each path from one extremity to the other.
  for (int start = 0; start < n; ++start) {
    if (visited[start] || adj[start].size() != 1) continue;
    int prev = -1;
    int cur = start;
    visited[cur] = true;
    while (true) {
      int next = -1;
      for (int w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
      visited[cur] = true;
    }
    key.add(g.labels[start], g.labels[cur], 1);
  }
  for (int v = 0; v < n; ++v) {
    if (!visited[v]) {
      throw std::invalid_argument("classify_path_matching: cycle in subset");
    }
  }
  return key;
}

PMTable enumerate_extensions(const LabeledGraph& g, const EdgeSubset& p_prime,
                             int i, int j, int size_cap) {
  check_cap(g, size_cap, "enumerate_extensions");
  classify_path_matching(g, p_prime);  // validates the base path matching

  EdgeSubset new_edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.labels[u] != i) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.labels[v] != j) continue;
      if (g.has_edge(u, v)) {
        throw std::invalid_argument(
            "enumerate_extensions: cross edge already present");
      }
      new_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  LabeledGraph extended = g;
  extended.edges.insert(extended.edges.end(), new_edges.begin(),
                        new_edges.end());
  std::sort(extended.edges.begin(), extended.edges.end());

  std::vector<int> degree(g.vertex_count(), 0);
  Dsu dsu(g.vertex_count());
  for (auto [u, v] : p_prime) {
    degree[u] += 1;
    degree[v] += 1;
    dsu.unite(u, v);
  }
  PMTable out;
  EdgeSubset chosen;
  for_each_path_matching(
      new_edges, std::move(degree), std::move(dsu), chosen, [&] {
        EdgeSubset whole = p_prime;
        whole.insert(whole.end(), chosen.begin(), chosen.end());
        out[classify_path_matching(extended, whole)] += 1;
      });
  return out;
}

BigCount enumerate_paths(const LabeledGraph& g, int size_cap) {
  check_cap(g, size_cap, "enumerate_paths");
  std::vector<std::vector<int>> adj = g.adjacency();
  std::vector<bool> visited(g.vertex_count(), false);
  BigCount twice = 0;
  std::function<void(int)> dfs = [&](int v) {
    for (int w : adj[v]) {
      if (visited[w]) continue;
      ++twice;  // every path is seen once from each end
      visited[w] = true;
      dfs(w);
      visited[w] = false;
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    visited[v] = true;
    dfs(v);
    visited[v] = false;
  }
  return twice / 2;
}

}  // namespace cwcount
