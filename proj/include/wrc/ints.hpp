#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wrc {

// Exact arbitrary-precision integers and rationals. All arithmetic in the
// library is exact; there are no floating-point code paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int to_int(const Int& v) { return static_cast<int>(v); }

// Floor division (quotient rounded toward -inf), used for lattice sections.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace wrc
