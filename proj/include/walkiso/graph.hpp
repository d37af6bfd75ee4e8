#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace walkiso {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a graph or permutation would violate its invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are stored normalized (first < second) and sorted; neighbor lists
/// are sorted as well so `has_edge` is a binary search.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are rejected unless `dedupe` is set.
  Graph(std::size_t n, std::vector<Edge> edges, bool dedupe = false) : n_(n) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    for (auto& e : edges) {
      if (e.first >= n || e.second >= n)
        throw GraphError("edge endpoint out of range: " + std::to_string(e.first) + " " +
                         std::to_string(e.second) + " (n=" + std::to_string(n) + ")");
      if (e.first == e.second) throw GraphError("self-loop at vertex " + std::to_string(e.first));
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      if (!dedupe)
        throw GraphError("duplicate edge " + std::to_string(dup->first) + " " +
                         std::to_string(dup->second));
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    edges_ = std::move(edges);
    adj_.assign(n, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = adj_[v].size();
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A bijection on {0..n-1}; `p[v]` is the image of `v`.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> mapping) : map_(std::move(mapping)) {
    std::vector<char> seen(map_.size(), 0);
    for (Vertex x : map_) {
      if (x >= map_.size() || seen[x])
        throw GraphError("not a permutation of 0.." + std::to_string(map_.size()) + "-1");
      seen[x] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return map_.size(); }
  Vertex operator[](std::size_t v) const { return map_[v]; }
  const std::vector<Vertex>& mapping() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<Vertex> inv(map_.size());
    for (std::size_t v = 0; v < map_.size(); ++v) inv[map_[v]] = static_cast<Vertex>(v);
    return Permutation(std::move(inv));
  }

  /// (this ∘ inner)(v) = this[inner[v]].
  Permutation after(const Permutation& inner) const {
    if (inner.size() != size()) throw GraphError("permutation length mismatch");
    std::vector<Vertex> m(size());
    for (std::size_t v = 0; v < size(); ++v) m[v] = map_[inner[v]];
    return Permutation(std::move(m));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> map_;
};

/// Relabels `g` so vertex v becomes p[v]: edge (i,j) is in the result iff
/// (p⁻¹(i), p⁻¹(j)) is an edge of g.
inline Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order())
    throw GraphError("permutation length " + std::to_string(p.size()) +
                     " does not match vertex count " + std::to_string(g.order()));
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
  return Graph(g.order(), std::move(edges));
}

/// True iff relabeling g1 by p yields exactly g2.
inline bool verify_mapping(const Graph& g1, const Graph& g2, const Permutation& p) {
  if (p.size() != g1.order() || g1.order() != g2.order())
    throw GraphError("mapping length does not match graph orders");
  if (g1.size() != g2.size()) return false;
  for (const auto& [u, v] : g1.edges())
    if (!g2.has_edge(p[u], p[v])) return false;
  return true;
}

}  // namespace walkiso
