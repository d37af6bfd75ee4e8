#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walkiso/formats.hpp"
#include "walkiso/graph.hpp"

namespace walkiso {

/// Seeded source of randomness: std::mt19937_64 (fully specified by the C++
/// standard) with bounded integers by rejection and reals from the top 53
/// bits. Library distributions are avoided because their output is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 step; derives independent per-instance seeds from a run seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline Permutation random_permutation(std::size_t n, Rng& rng) {
  auto p = Permutation::identity(n).mapping();
  rng.shuffle(p);
  return Permutation(std::move(p));
}

/// G(n, p): pairs visited in column order (0,1), (0,2), (1,2), (0,3), ...
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

/// Uniform simple d-regular graph by the pairing model, restarting whenever
/// a loop or a repeated edge appears.
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t max_attempts = 1'000'000) {
  if (d >= n) throw std::invalid_argument("degree must be smaller than the vertex count");
  if ((n * d) % 2 != 0) throw std::invalid_argument("n*d must be even for a d-regular graph");
  Rng rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
    rng.shuffle(points);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      Vertex u = points[i], v = points[i + 1];
      if (u == v) simple = false;
      else edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw std::runtime_error("pairing model did not produce a simple graph within the attempt limit");
}

struct PermutedPair {
  Graph original;
  Graph permuted;
  Permutation sigma;
};

inline PermutedPair permuted_pair(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  auto sigma = random_permutation(g.order(), rng);
  auto h = apply_permutation(g, sigma);
  return {g, std::move(h), std::move(sigma)};
}

struct CorpusEntry {
  std::size_t line = 0;
  Graph graph;
};

/// Reads one graph6 graph per line. Blank lines are skipped. In skip mode a
/// malformed line becomes a warning; otherwise its ParseError propagates with
/// the line number attached.
class CorpusReader {
 public:
  CorpusReader(std::istream& in, bool skip_bad_lines) : in_(in), skip_(skip_bad_lines) {}

  bool next(CorpusEntry& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      auto t = detail::trim(line);
      if (t.empty()) continue;
      try {
        out = {line_no_, parse_graph6(t)};
        return true;
      } catch (const ParseError& e) {
        if (!skip_) throw ParseError(e.code(), e.what(), line_no_);
        warnings_.push_back("line " + std::to_string(line_no_) + ": " + e.what());
      } catch (const GraphError& e) {
        if (!skip_) throw ParseError(ParseErrorCode::MalformedHeader, e.what(), line_no_);
        warnings_.push_back("line " + std::to_string(line_no_) + ": " + e.what());
      }
    }
    return false;
  }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::istream& in_;
  bool skip_;
  std::size_t line_no_ = 0;
  std::vector<std::string> warnings_;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> warnings;
};

inline Corpus load_corpus(std::istream& in, bool skip_bad_lines = false) {
  Corpus c;
  CorpusReader r(in, skip_bad_lines);
  CorpusEntry e;
  while (r.next(e)) c.entries.push_back(std::move(e));
  c.warnings = r.warnings();
  return c;
}

inline Corpus load_corpus(const std::string& path, bool skip_bad_lines = false) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in, skip_bad_lines);
}

}  // namespace walkiso
