#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wrc/laurent.hpp"

namespace wrc {

// Cantor pairing pi(x, y) = (x+y)(x+y+1)/2 + y and its inverse; a bijection
// N^2 <-> N.
Int pair_encode(const Int& x, const Int& y);
std::pair<Int, Int> pair_decode(const Int& z);

// Zigzag bijection Z <-> N: z >= 0 -> 2z, z < 0 -> -2z - 1.
Int zigzag(const Int& z);
Int unzigzag(const Int& n);

// Bijection between nonempty integer tuples and N: zigzag every entry, fold
// with pair_encode right to left, then pair with (length - 1).
Int tuple_encode(const std::vector<Int>& v);
std::vector<Int> tuple_decode(const Int& k);

// The polynomial code nu. A Laurent polynomial Q = P / a^beta with
// gcd(P, a^beta) = 1 is coded as pair(tuple(u_Q), tuple(v_Q)), where u_Q
// flattens the (coefficient, exponent vector) terms of P in descending
// deglex order and v_Q = beta. The zero polynomial contributes the single
// pseudo-term (0, 0...0). Decoding is total: it either inverts exactly or
// reports that the number is not a code, so membership in nu(ZA) is
// decidable.
Int nu_encode(const LaurentPoly& q);
std::optional<LaurentPoly> nu_decode(const Int& code, int vars);

}  // namespace wrc
