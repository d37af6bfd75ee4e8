#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkiso/graph.hpp"

namespace walkiso {

enum class ParseErrorCode {
  EmptyInput,
  MalformedHeader,
  InvalidByte,
  TruncatedData,
  TrailingGarbage,
  NonzeroPadding,
  InvalidToken,
  SelfLoop,
  IndexOutOfRange,
};

inline const char* to_string(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::EmptyInput: return "empty_input";
    case ParseErrorCode::MalformedHeader: return "malformed_header";
    case ParseErrorCode::InvalidByte: return "invalid_byte";
    case ParseErrorCode::TruncatedData: return "truncated_data";
    case ParseErrorCode::TrailingGarbage: return "trailing_garbage";
    case ParseErrorCode::NonzeroPadding: return "nonzero_padding";
    case ParseErrorCode::InvalidToken: return "invalid_token";
    case ParseErrorCode::SelfLoop: return "self_loop";
    case ParseErrorCode::IndexOutOfRange: return "index_out_of_range";
  }
  return "unknown";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what +
                           (line ? " (line " + std::to_string(line) + ")" : "")),
        code_(code),
        line_(line) {}

  ParseErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
};

namespace detail {

inline std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

constexpr unsigned char kG6Bias = 63;
constexpr unsigned char kG6Max = 126;
constexpr std::uint64_t kG6ShortMax = 62;
constexpr std::uint64_t kG6MediumMax = 258047;

}  // namespace detail

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian
// into 6-bit groups, each group offset by 63, zero-padded to a group boundary.

inline Graph parse_graph6(std::string_view text) {
  using detail::kG6Bias;
  using detail::kG6Max;
  text = detail::strip_line_end(text);
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw ParseError(ParseErrorCode::EmptyInput, "no graph6 data");

  std::size_t pos = 0;
  auto take = [&](ParseErrorCode bad) -> std::uint64_t {
    if (pos >= text.size()) throw ParseError(ParseErrorCode::TruncatedData, "size header cut short");
    auto b = static_cast<unsigned char>(text[pos++]);
    if (b < kG6Bias || b > kG6Max)
      throw ParseError(bad, "byte " + std::to_string(b) + " outside 63..126 in size header");
    return b - kG6Bias;
  };

  std::uint64_t n = 0;
  auto first = static_cast<unsigned char>(text[0]);
  if (first < kG6Bias || first > kG6Max)
    throw ParseError(ParseErrorCode::MalformedHeader,
                     "header byte " + std::to_string(first) + " outside 63..126");
  if (first != kG6Max) {
    n = first - kG6Bias;
    pos = 1;
  } else {
    pos = 1;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kG6Max) {
      ++pos;
      groups = 6;
    }
    for (int g = 0; g < groups; ++g) n = (n << 6) | take(ParseErrorCode::MalformedHeader);
  }
  if (n == 0) throw ParseError(ParseErrorCode::MalformedHeader, "graph with zero vertices");
  if (n > std::numeric_limits<Vertex>::max())
    throw ParseError(ParseErrorCode::MalformedHeader, "vertex count exceeds supported range");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have < bytes)
    throw ParseError(ParseErrorCode::TruncatedData, "expected " + std::to_string(bytes) +
                                                        " data bytes, found " + std::to_string(have));
  if (have > bytes)
    throw ParseError(ParseErrorCode::TrailingGarbage,
                     std::to_string(have - bytes) + " extra bytes after edge data");

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  Vertex row = 0, col = 1;
  for (std::uint64_t i = 0; i < bytes; ++i) {
    auto b = static_cast<unsigned char>(text[pos + i]);
    if (b < kG6Bias || b > kG6Max)
      throw ParseError(ParseErrorCode::InvalidByte,
                       "data byte " + std::to_string(b) + " outside 63..126");
    unsigned v = b - kG6Bias;
    for (int s = 5; s >= 0; --s, ++bit) {
      bool set = (v >> s) & 1u;
      if (bit >= bits) {
        if (set) throw ParseError(ParseErrorCode::NonzeroPadding, "padding bits must be zero");
        continue;
      }
      if (set) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
  using detail::kG6Bias;
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= detail::kG6ShortMax) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= detail::kG6MediumMax) {
    out.push_back(static_cast<char>(detail::kG6Max));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  } else {
    out.push_back(static_cast<char>(detail::kG6Max));
    out.push_back(static_cast<char>(detail::kG6Max));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  }
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const auto& [u, v] : g.edges()) {
    // u < v; column v starts at bit v(v-1)/2.
    std::uint64_t idx = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
    packed[idx / 6] |= static_cast<unsigned char>(1u << (5 - idx % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(b + kG6Bias));
  return out;
}

namespace detail {

inline std::uint64_t parse_index(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(ParseErrorCode::InvalidToken, "not a non-negative integer: '" +
                                                       std::string(tok) + "'", line);
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Edge-list text: a line holding n, then one "i j" pair per line.
/// Blank lines are ignored; repeated edges collapse regardless of orientation.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto toks = detail::split_ws(line);
    if (!n) {
      if (toks.size() != 1)
        throw ParseError(ParseErrorCode::InvalidToken, "first line must hold the vertex count",
                         line_no);
      n = detail::parse_index(toks[0], line_no);
      if (*n == 0) throw ParseError(ParseErrorCode::InvalidToken, "vertex count must be positive", line_no);
      if (*n > std::numeric_limits<Vertex>::max())
        throw ParseError(ParseErrorCode::IndexOutOfRange, "vertex count too large", line_no);
      continue;
    }
    if (toks.size() != 2)
      throw ParseError(ParseErrorCode::InvalidToken, "expected two vertex indices", line_no);
    auto i = detail::parse_index(toks[0], line_no);
    auto j = detail::parse_index(toks[1], line_no);
    if (i >= *n || j >= *n)
      throw ParseError(ParseErrorCode::IndexOutOfRange,
                       "vertex index must be < " + std::to_string(*n), line_no);
    if (i == j)
      throw ParseError(ParseErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(i), line_no);
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  if (!n) throw ParseError(ParseErrorCode::EmptyInput, "no vertex count line");
  return Graph(static_cast<std::size_t>(*n), std::move(edges), /*dedupe=*/true);
}

/// Canonical edge-list text: vertex count, then edges (i < j) in sorted order.
inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

enum class GraphFormat { Graph6, EdgeList };

/// Edge lists start with a line of decimal digits; digits are never valid
/// graph6 bytes, so the first line decides.
inline GraphFormat detect_format(std::string_view text) {
  auto t = detail::trim(text);
  auto first = detail::trim(t.substr(0, t.find('\n')));
  if (!first.empty() && first.find_first_not_of("0123456789") == std::string_view::npos)
    return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
  if (fmt == GraphFormat::EdgeList) return parse_edge_list(text);
  auto t = detail::trim(text);
  if (t.find('\n') != std::string_view::npos)
    throw ParseError(ParseErrorCode::TrailingGarbage, "graph6 input holds more than one line");
  return parse_graph6(t);
}

inline Graph parse_graph(std::string_view text) { return parse_graph(text, detect_format(text)); }

}  // namespace walkiso
