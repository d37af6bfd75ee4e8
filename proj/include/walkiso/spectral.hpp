#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkiso/bigint.hpp"
#include "walkiso/matrix.hpp"

namespace walkiso {

/// Monic characteristic polynomial, coefficients from λⁿ down to λ⁰.
struct CharPoly {
  std::vector<BigRational> coefficients;

  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  bool is_integral() const {
    for (const auto& c : coefficients)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::size_t n = degree();
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& c = coefficients[i];
      if (c == 0) continue;
      const std::size_t pow = n - i;
      BigRational mag = c < 0 ? BigRational(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      if (mag != 1 || pow == 0) os << mag;
      if (pow > 0) os << "x";
      if (pow > 1) os << "^" << pow;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Newton's identities: with e_0 = 1 and power sums g_1..g_n,
/// m·e_m = Σ_{j=1..m} (−1)^{j−1} e_{m−j} g_j, and
/// det(xI − A) = Σ_m (−1)^m e_m x^{n−m}.
inline CharPoly charpoly_from_traces(std::span<const BigInt> traces) {
  if (traces.empty()) throw std::invalid_argument("need at least one power trace");
  const std::size_t n = traces.size();
  std::vector<BigRational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      BigRational term = e[m - j] * BigRational(traces[j - 1]);
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[m] = acc / BigRational(static_cast<long long>(m));
  }
  CharPoly p;
  p.coefficients.resize(n + 1);
  for (std::size_t m = 0; m <= n; ++m) p.coefficients[m] = (m % 2 == 0) ? e[m] : BigRational(-e[m]);
  return p;
}

/// tr(A), tr(A²), ..., tr(Aⁿ).
inline std::vector<BigInt> power_traces(const ExactSymMatrix& a) {
  std::vector<BigInt> t;
  if (a.dim() == 0) return t;
  PowerWalker w(a);
  for (std::size_t k = 1;; ++k) {
    t.push_back(trace(w.current()));
    if (k == a.dim()) break;
    w.step();
  }
  return t;
}

/// Outcome of comparing diag(A^j) with diag(B^j) for j = 1..n.
struct ProbeResult {
  bool identical = true;
  std::size_t power = 0;  // first j whose diagonals differ
  std::size_t index = 0;  // first differing position at that j

  static ProbeResult first_difference(std::size_t j, std::size_t i) { return {false, j, i}; }
  friend bool operator==(const ProbeResult&, const ProbeResult&) = default;
};

inline ProbeResult theorem1_probe(const ExactSymMatrix& a, const ExactSymMatrix& b) {
  if (a.dim() != b.dim())
    throw MatrixError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  const std::size_t n = a.dim();
  if (n == 0) return {};
  PowerWalker wa(a), wb(b);
  for (std::size_t j = 1;; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      if (wa.current()(i, i) != wb.current()(i, i)) return ProbeResult::first_difference(j, i);
    if (j == n) break;
    wa.step();
    wb.step();
  }
  return {};
}

/// Floating-point probe for real symmetric matrices. Exploratory only:
/// entries agree when |x − y| ≤ rel_tol·max(|x|, |y|, 1).
inline ProbeResult theorem1_probe_real(const std::vector<std::vector<double>>& a,
                                       const std::vector<std::vector<double>>& b,
                                       double rel_tol = 1e-9) {
  const std::size_t n = a.size();
  if (b.size() != n) throw MatrixError("dimension mismatch");
  auto mul = [n](const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y) {
    std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
    return z;
  };
  auto pa = a, pb = b;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      double x = pa[i][i], y = pb[i][i];
      double scale = std::max({std::abs(x), std::abs(y), 1.0});
      if (std::abs(x - y) > rel_tol * scale) return ProbeResult::first_difference(j, i);
    }
    if (j < n) {
      pa = mul(pa, a);
      pb = mul(pb, b);
    }
  }
  return {};
}

}  // namespace walkiso
