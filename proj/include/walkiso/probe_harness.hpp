#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "walkiso/generators.hpp"
#include "walkiso/matrix.hpp"
#include "walkiso/spectral.hpp"

// Random distinct pairs of non-negative integer symmetric matrices, fed to
// theorem1_probe. Every trial is reproducible from (run seed, trial index).

namespace walkiso {

enum class ProbeFamily {
  Independent01,       // two random 0/1 adjacency matrices
  IndependentSmallInt, // entries 0..3, diagonal included
  EqualRowSums,        // weighted sums of random regular graphs, same weights
  Relabeled,           // B = P·A·Pᵀ for a random permutation P
};

inline constexpr std::array kProbeFamilies = {ProbeFamily::Independent01,
                                              ProbeFamily::IndependentSmallInt,
                                              ProbeFamily::EqualRowSums,
                                              ProbeFamily::Relabeled};

inline const char* to_string(ProbeFamily f) {
  switch (f) {
    case ProbeFamily::Independent01: return "independent_01";
    case ProbeFamily::IndependentSmallInt: return "independent_small_int";
    case ProbeFamily::EqualRowSums: return "equal_row_sums";
    case ProbeFamily::Relabeled: return "relabeled";
  }
  return "unknown";
}

inline IntMatrix random_symmetric(std::size_t n, unsigned max_entry, bool zero_diagonal, Rng& rng) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = zero_diagonal ? i + 1 : i; j < n; ++j)
      m(i, j) = m(j, i) = static_cast<long long>(rng.below(max_entry + 1));
  return m;
}

inline IntMatrix permute_matrix(const IntMatrix& a, const Permutation& p) {
  IntMatrix b(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) b(p[i], p[j]) = a(i, j);
  return b;
}

struct ProbeTrial {
  ProbeFamily family;
  std::uint64_t seed;
  ExactSymMatrix a;
  ExactSymMatrix b;
  ProbeResult result;
};

namespace detail {

// c0·I + Σ c_t·adj(random d_t-regular graph); row sums equal c0 + Σ c_t·d_t.
inline IntMatrix equal_row_sum_matrix(std::size_t n, const std::vector<std::pair<unsigned, std::size_t>>& terms,
                                      unsigned c0, Rng& rng) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c0;
  for (const auto& [c, d] : terms) {
    auto g = random_regular(n, d, rng.next());
    for (const auto& [u, v] : g.edges()) {
      m(u, v) += c;
      m(v, u) += c;
    }
  }
  return m;
}

}  // namespace detail

/// Builds and probes one trial. n is drawn from 2..max_n, or from 4..max_n
/// for equal row sums since regular graphs below 4 vertices are unique.
inline ProbeTrial run_probe_trial(ProbeFamily family, std::uint64_t seed, std::size_t max_n = 6) {
  Rng rng(seed);
  const std::size_t n_min = (family == ProbeFamily::EqualRowSums && max_n >= 4) ? 4 : 2;
  const std::size_t n = n_min + rng.below(max_n - n_min + 1);
  IntMatrix a, b;
  for (int attempt = 0;; ++attempt) {
    switch (family) {
      case ProbeFamily::Independent01:
        a = random_symmetric(n, 1, true, rng);
        b = random_symmetric(n, 1, true, rng);
        break;
      case ProbeFamily::IndependentSmallInt:
        a = random_symmetric(n, 3, false, rng);
        b = random_symmetric(n, 3, false, rng);
        break;
      case ProbeFamily::EqualRowSums: {
        std::vector<std::pair<unsigned, std::size_t>> terms;
        const std::size_t count = 1 + rng.below(2);
        for (std::size_t t = 0; t < count; ++t) {
          std::size_t d = rng.below(n);
          if ((n * d) % 2) --d;
          terms.emplace_back(1 + static_cast<unsigned>(rng.below(3)), d);
        }
        const auto c0 = static_cast<unsigned>(rng.below(2));
        a = detail::equal_row_sum_matrix(n, terms, c0, rng);
        b = detail::equal_row_sum_matrix(n, terms, c0, rng);
        break;
      }
      case ProbeFamily::Relabeled:
        a = random_symmetric(n, rng.bernoulli(0.5) ? 1 : 3, rng.bernoulli(0.5), rng);
        b = permute_matrix(a, random_permutation(n, rng));
        break;
    }
    if (a != b) break;
    if (attempt > 1000) throw std::runtime_error("could not draw two distinct matrices");
  }
  ExactSymMatrix sa(std::move(a)), sb(std::move(b));
  auto r = theorem1_probe(sa, sb);
  return {family, seed, std::move(sa), std::move(sb), r};
}

}  // namespace walkiso
