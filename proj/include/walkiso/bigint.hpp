#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace walkiso {

/// Arbitrary-precision signed integer used for every matrix entry and walk count.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Number of bits needed to represent |x|; zero has bit length 0.
inline std::size_t bit_length(const BigInt& x) {
  if (x.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace walkiso
