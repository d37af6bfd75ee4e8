#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "walkiso/bigint.hpp"

namespace walkiso {

/// Scalar operation tallies for one run. Multiplication and addition counts
/// follow the schoolbook algorithm even where the arithmetic skips a zero
/// term, so they measure the algorithm rather than the data.
struct OpCounter {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  std::uint64_t comparisons = 0;
  std::size_t max_bitlen = 0;

  void note(const BigInt& x) { max_bitlen = std::max(max_bitlen, bit_length(x)); }

  OpCounter& operator+=(const OpCounter& o) {
    mults += o.mults;
    adds += o.adds;
    comparisons += o.comparisons;
    max_bitlen = std::max(max_bitlen, o.max_bitlen);
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace walkiso
