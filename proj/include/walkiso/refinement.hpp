#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walkiso/bigint.hpp"
#include "walkiso/graph.hpp"
#include "walkiso/matrix.hpp"
#include "walkiso/op_counter.hpp"

namespace walkiso {

/// Closed-walk counts per vertex: rows[v] = (N_v^2, ..., N_v^k), where
/// N_v^m is the number of closed walks of length m at v.
struct ConnectivityProfile {
  std::size_t k = 1;
  std::vector<std::vector<BigInt>> rows;

  std::size_t vertex_count() const noexcept { return rows.size(); }

  /// Profile of orders 2..k read from precomputed power diagonals.
  static ConnectivityProfile from_diagonals(const PowerDiagonals& diags, std::size_t k) {
    if (k < 2 || k > diags.k_max)
      throw std::out_of_range("profile order " + std::to_string(k) + " outside 2.." +
                              std::to_string(diags.k_max));
    ConnectivityProfile p;
    p.k = k;
    const std::size_t n = diags.at(1).size();
    p.rows.assign(n, {});
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t m = 2; m <= k; ++m) p.rows[v].push_back(diags.at(m)[v]);
    return p;
  }
};

/// Vertices listed by position (`order[pos]` is a vertex of the labeling the
/// refinement started from), grouped into consecutive blocks of equal profile.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  /// One block holding every vertex in its given order.
  static OrderedPartition unit(std::size_t n) {
    OrderedPartition p;
    p.order_.resize(n);
    std::iota(p.order_.begin(), p.order_.end(), Vertex{0});
    p.bounds_ = {0, n};
    return p;
  }

  OrderedPartition(std::vector<Vertex> order, std::vector<std::size_t> bounds)
      : order_(std::move(order)), bounds_(std::move(bounds)) {
    if (bounds_.empty() || bounds_.front() != 0 || bounds_.back() != order_.size() ||
        !std::is_sorted(bounds_.begin(), bounds_.end()) ||
        std::adjacent_find(bounds_.begin(), bounds_.end()) != bounds_.end())
      throw std::invalid_argument("block bounds must strictly increase from 0 to n");
    Permutation check(order_);
  }

  std::size_t vertex_count() const noexcept { return order_.size(); }
  std::size_t block_count() const noexcept { return bounds_.size() - 1; }
  const std::vector<Vertex>& order() const noexcept { return order_; }
  const std::vector<std::size_t>& bounds() const noexcept { return bounds_; }

  std::span<const Vertex> block(std::size_t b) const {
    return std::span<const Vertex>(order_).subspan(bounds_[b], bounds_[b + 1] - bounds_[b]);
  }

  std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> m(block_count());
    for (std::size_t b = 0; b < block_count(); ++b) m[b] = bounds_[b + 1] - bounds_[b];
    return m;
  }

  bool all_singletons() const noexcept { return block_count() == vertex_count(); }

  /// Relabeling that sends each vertex to its position.
  Permutation relabeling() const { return Permutation(order_).inverse(); }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> bounds_;
};

/// The k diagonal: N^k values listed in rearranged order.
struct KDiagonal {
  std::vector<BigInt> values;
  friend bool operator==(const KDiagonal&, const KDiagonal&) = default;
};

inline const std::vector<BigInt>& self_connectivity(const PowerDiagonals& diags, std::size_t k) {
  return diags.at(k);
}

namespace detail {

inline bool less_counted(const BigInt& a, const BigInt& b, OpCounter* ops) {
  if (ops) ++ops->comparisons;
  return a < b;
}

}  // namespace detail

/// Sorts vertices into non-decreasing lexicographic order of their profile
/// rows, which is exactly a k rearrangement. Equal rows keep their relative
/// order by `tie_rank` (vertex index when empty). Returns the relabeling
/// vertex→position and the blocks of equal rows.
inline std::pair<Permutation, OrderedPartition> k_rearrangement(
    const ConnectivityProfile& profile, std::span<const std::size_t> tie_rank = {},
    OpCounter* ops = nullptr) {
  const std::size_t n = profile.vertex_count();
  if (!tie_rank.empty() && tie_rank.size() != n)
    throw std::invalid_argument("tie_rank length must equal vertex count");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto rank = [&](Vertex v) { return tie_rank.empty() ? std::size_t{v} : tie_rank[v]; };
  auto row_less = [&](Vertex a, Vertex b) {
    const auto& ra = profile.rows[a];
    const auto& rb = profile.rows[b];
    for (std::size_t m = 0; m < ra.size(); ++m) {
      if (detail::less_counted(ra[m], rb[m], ops)) return true;
      if (detail::less_counted(rb[m], ra[m], ops)) return false;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (row_less(a, b)) return true;
    if (row_less(b, a)) return false;
    return rank(a) < rank(b);
  });
  std::vector<std::size_t> bounds{0};
  for (std::size_t pos = 1; pos < n; ++pos)
    if (profile.rows[order[pos - 1]] != profile.rows[order[pos]]) bounds.push_back(pos);
  bounds.push_back(n);
  OrderedPartition part(std::move(order), std::move(bounds));
  return {part.relabeling(), std::move(part)};
}

inline KDiagonal k_diagonal(const ConnectivityProfile& profile, const Permutation& p) {
  if (p.size() != profile.vertex_count())
    throw std::invalid_argument("permutation length must equal vertex count");
  KDiagonal d;
  d.values.resize(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) d.values[p[v]] = profile.rows[v].back();
  return d;
}

/// Splits every block by sorting `values` (indexed by position) within the
/// block only. Block order is kept; ties keep their previous positions.
inline OrderedPartition refine(const OrderedPartition& prev, std::span<const BigInt> values,
                               OpCounter* ops = nullptr) {
  const std::size_t n = prev.vertex_count();
  if (values.size() != n) throw std::invalid_argument("value vector length must equal vertex count");
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  std::vector<std::size_t> bounds{0};
  const auto& old_bounds = prev.bounds();
  for (std::size_t b = 0; b + 1 < old_bounds.size(); ++b) {
    auto first = positions.begin() + static_cast<std::ptrdiff_t>(old_bounds[b]);
    auto last = positions.begin() + static_cast<std::ptrdiff_t>(old_bounds[b + 1]);
    std::stable_sort(first, last, [&](std::size_t x, std::size_t y) {
      return detail::less_counted(values[x], values[y], ops);
    });
    for (auto it = first + 1; it < last; ++it) {
      if (ops) ++ops->comparisons;
      if (values[*(it - 1)] != values[*it])
        bounds.push_back(static_cast<std::size_t>(it - positions.begin()));
    }
    bounds.push_back(old_bounds[b + 1]);
  }
  std::vector<Vertex> order(n);
  for (std::size_t pos = 0; pos < n; ++pos) order[pos] = prev.order()[positions[pos]];
  return OrderedPartition(std::move(order), std::move(bounds));
}

/// Incremental k rearrangement of one graph: each `advance` multiplies the
/// running power by A once, re-sorts every block by the new self
/// connectivities and returns the resulting k diagonal. The first call
/// yields D_2.
class DiagonalRefiner {
 public:
  explicit DiagonalRefiner(const Graph& g)
      : walker_(adjacency_matrix(g)), partition_(OrderedPartition::unit(g.order())) {}

  std::size_t order() const noexcept { return walker_.power(); }
  const OrderedPartition& partition() const noexcept { return partition_; }

  KDiagonal advance(OpCounter* ops = nullptr) {
    walker_.step(ops);
    const auto& m = walker_.current();
    const std::size_t n = partition_.vertex_count();
    std::vector<BigInt> values(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      Vertex v = partition_.order()[pos];
      values[pos] = m(v, v);
    }
    partition_ = refine(partition_, values, ops);
    KDiagonal d;
    d.values.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      Vertex v = partition_.order()[pos];
      d.values[pos] = m(v, v);
    }
    return d;
  }

 private:
  PowerWalker walker_;
  OrderedPartition partition_;
};

/// D_2, ..., D_k_max of g.
inline std::vector<KDiagonal> kdiagonal_sequence(const Graph& g, std::size_t k_max) {
  DiagonalRefiner r(g);
  std::vector<KDiagonal> seq;
  for (std::size_t k = 2; k <= k_max; ++k) seq.push_back(r.advance());
  return seq;
}

}  // namespace walkiso
