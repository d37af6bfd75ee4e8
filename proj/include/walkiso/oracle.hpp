#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkiso/graph.hpp"

// Exact isomorphism by backtracking. Deliberately shares nothing with the
// walk-count machinery: pruning uses degrees and one round of neighbor
// degrees only.

namespace walkiso {

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes)
      : std::runtime_error("oracle node budget exhausted after " + std::to_string(nodes) +
                           " nodes"),
        nodes_(nodes) {}
  std::uint64_t nodes_explored() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct OracleResult {
  std::optional<Permutation> mapping;  // set iff isomorphic
  std::uint64_t nodes_explored = 0;

  bool isomorphic() const noexcept { return mapping.has_value(); }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

namespace detail {

class BacktrackSearch {
 public:
  BacktrackSearch(const Graph& g1, const Graph& g2, std::uint64_t budget)
      : g1_(g1), g2_(g2), n_(g1.order()), budget_(budget) {}

  OracleResult run() {
    OracleResult res;
    if (g1_.order() != g2_.order() || g1_.size() != g2_.size()) return res;
    auto c1 = colors(g1_);
    auto c2 = colors(g2_);
    // Joint color ids so both graphs use the same palette.
    std::map<std::vector<std::size_t>, std::size_t> palette;
    for (const auto& c : c1) palette.emplace(c, 0);
    for (const auto& c : c2) palette.emplace(c, 0);
    std::size_t id = 0;
    for (auto& [key, val] : palette) val = id++;
    col1_.resize(n_);
    col2_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      col1_[v] = palette[c1[v]];
      col2_[v] = palette[c2[v]];
    }
    auto h1 = col1_, h2 = col2_;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return res;

    adj1_ = dense(g1_);
    adj2_ = dense(g2_);
    order_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) order_[v] = static_cast<Vertex>(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g1_.degree(a) > g1_.degree(b); });
    map_.assign(n_, kUnmapped);
    used_.assign(n_, 0);
    bool found = extend(0);
    res.nodes_explored = nodes_;
    if (found) {
      Permutation p(std::vector<Vertex>(map_.begin(), map_.end()));
      if (!verify_mapping(g1_, g2_, p))
        throw std::logic_error("oracle produced a mapping that fails verification");
      res.mapping = std::move(p);
    }
    return res;
  }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  static std::vector<std::vector<std::size_t>> colors(const Graph& g) {
    std::vector<std::vector<std::size_t>> c(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
      c[v].push_back(g.degree(static_cast<Vertex>(v)));
      std::vector<std::size_t> nd;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nd.push_back(g.degree(u));
      std::sort(nd.begin(), nd.end());
      c[v].insert(c[v].end(), nd.begin(), nd.end());
    }
    return c;
  }

  std::vector<char> dense(const Graph& g) const {
    std::vector<char> a(n_ * n_, 0);
    for (const auto& [u, v] : g.edges()) a[u * n_ + v] = a[v * n_ + u] = 1;
    return a;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || col2_[w] != col1_[u]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex x = order_[d];
        ok = adj1_[u * n_ + x] == adj2_[w * n_ + map_[x]];
      }
      if (!ok) continue;
      if (++nodes_ > budget_) throw BudgetExhausted(nodes_);
      map_[u] = static_cast<Vertex>(w);
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      map_[u] = kUnmapped;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> col1_, col2_;
  std::vector<char> adj1_, adj2_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace detail

/// Complete search for an isomorphism g1 → g2. Throws BudgetExhausted when
/// more than `budget` search nodes would be needed; that is never a verdict.
inline OracleResult exact_isomorphic(const Graph& g1, const Graph& g2,
                                     std::uint64_t budget = kDefaultOracleBudget) {
  return detail::BacktrackSearch(g1, g2, budget).run();
}

/// All 2^(n(n-1)/2) labeled simple graphs on n ≤ 7 vertices. Graph `index`
/// contains pair number b (column order (0,1),(0,2),(1,2),(0,3),...) iff
/// bit b of index is set.
class LabeledGraphs {
 public:
  static constexpr std::size_t kMaxOrder = 7;

  explicit LabeledGraphs(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxOrder)
      throw std::invalid_argument("labeled graph enumeration supports 1 <= n <= 7");
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }

  Graph at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("labeled graph index out of range");
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b)
      if ((index >> b) & 1u) edges.push_back(pairs_[b]);
    return Graph(n_, std::move(edges));
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < count(); ++i) fn(at(i));
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

}  // namespace walkiso
