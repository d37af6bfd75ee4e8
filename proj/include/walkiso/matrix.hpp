#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walkiso/bigint.hpp"
#include "walkiso/graph.hpp"
#include "walkiso/op_counter.hpp"

namespace walkiso {

class MatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw MatrixError("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (const auto& x : data_)
      if (x.sign() < 0) return false;
    return true;
  }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// Symmetric matrix with non-negative entries; checked on construction.
class ExactSymMatrix {
 public:
  ExactSymMatrix() = default;
  explicit ExactSymMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw MatrixError("matrix is not symmetric");
    if (!m_.is_nonnegative()) throw MatrixError("matrix has a negative entry");
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const noexcept { return m_; }

  /// True for a 0/1 matrix with zero diagonal, i.e. a simple graph's adjacency.
  bool is_adjacency() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        const auto& x = m_(i, j);
        if (x > 1 || (i == j && !x.is_zero())) return false;
      }
    return true;
  }

  friend bool operator==(const ExactSymMatrix&, const ExactSymMatrix&) = default;

 private:
  IntMatrix m_;
};

inline ExactSymMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) m(u, v) = m(v, u) = 1;
  return ExactSymMatrix(std::move(m));
}

/// Exact schoolbook product a·b.
inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, OpCounter* ops = nullptr) {
  if (a.dim() != b.dim())
    throw MatrixError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t l = 0; l < n; ++l) {
        const BigInt& x = a(i, l);
        const BigInt& y = b(l, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      if (ops) ops->note(acc);
      c(i, j) = std::move(acc);
    }
  if (ops && n) {
    ops->mults += static_cast<std::uint64_t>(n) * n * n;
    ops->adds += static_cast<std::uint64_t>(n) * n * (n - 1);
  }
  return c;
}

inline BigInt trace(const IntMatrix& a) {
  BigInt t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// Steps through A, A², A³, ... one multiplication by A at a time.
///
/// Every power of a symmetric A is symmetric and commutes with A, so only
/// the upper triangle of A^k·A is computed: n·n(n+1)/2 scalar products per
/// step.
class PowerWalker {
 public:
  explicit PowerWalker(const ExactSymMatrix& a) : base_(a.matrix()), current_(a.matrix()) {
    const std::size_t n = base_.dim();
    column_support_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (!base_(l, j).is_zero()) column_support_[j].push_back(l);
  }

  std::size_t power() const noexcept { return k_; }
  const IntMatrix& current() const noexcept { return current_; }

  void step(OpCounter* ops = nullptr) {
    const std::size_t n = base_.dim();
    IntMatrix next(n);
    BigInt acc;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        acc = 0;
        for (std::size_t l : column_support_[j]) {
          const BigInt& w = base_(l, j);
          if (w == 1)
            acc += current_(i, l);
          else
            acc += current_(i, l) * w;
        }
        if (ops) ops->note(acc);
        next(i, j) = acc;
        if (i != j) next(j, i) = acc;
      }
    if (ops && n) {
      const std::uint64_t entries = static_cast<std::uint64_t>(n) * (n + 1) / 2;
      ops->mults += entries * n;
      ops->adds += entries * (n - 1);
    }
    current_ = std::move(next);
    ++k_;
  }

 private:
  IntMatrix base_;
  IntMatrix current_;
  std::vector<std::vector<std::size_t>> column_support_;
  std::size_t k_ = 1;
};

/// Diagonals of A¹..A^k_max; `at(k)` is the diagonal of A^k.
struct PowerDiagonals {
  std::size_t k_max = 0;
  std::vector<std::vector<BigInt>> diag;

  const std::vector<BigInt>& at(std::size_t k) const {
    if (k < 1 || k > k_max)
      throw std::out_of_range("power " + std::to_string(k) + " outside 1.." +
                              std::to_string(k_max));
    return diag[k - 1];
  }
};

/// For adjacency input every entry of A^k is a count of walks of length k,
/// each walk picking at most n-1 neighbors per step after the first, so
/// entries never exceed n^(k-1). The bound is re-checked after every step.
inline PowerDiagonals power_sequence(const ExactSymMatrix& a, std::size_t k_max,
                                     OpCounter* ops = nullptr) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const std::size_t n = a.dim();
  const bool adjacency = a.is_adjacency();
  PowerDiagonals out;
  out.k_max = k_max;
  out.diag.reserve(k_max);
  PowerWalker walker(a);
  BigInt bound = 1;
  for (std::size_t k = 1;; ++k) {
    if (adjacency) {
      const auto& m = walker.current();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          if (m(i, j) > bound)
            throw std::logic_error("entry of A^" + std::to_string(k) + " exceeds n^(k-1)");
      bound *= n;
    }
    out.diag.push_back(walker.current().diagonal());
    if (k == k_max) break;
    walker.step(ops);
  }
  return out;
}

}  // namespace walkiso
