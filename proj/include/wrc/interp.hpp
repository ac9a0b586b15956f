#pragma once

#include <vector>

#include "wrc/definable.hpp"
#include "wrc/encoding.hpp"
#include "wrc/wreath.hpp"

namespace wrc {

// Coordinate tuple s_{p,nu}(g) = (g1..gm, nu(P1)..nu(Pn)): the image of g
// under the interpretation of G in Z.
struct IntTuple {
  std::vector<Int> gamma;
  std::vector<Int> codes;

  bool operator==(const IntTuple& o) const { return gamma == o.gamma && codes == o.codes; }
};

IntTuple delta_encode(const WreathElement& g);
// The coordinate map: inverts delta_encode. Membership of the tuple in the
// interpretation domain is decided by decoding every polynomial code.
WreathElement delta_decode(const IntTuple& t, const GroupContext& ctx);
// The arithmetic-side multiplication transported through the coordinate map.
IntTuple tuple_mul(const IntTuple& t1, const IntTuple& t2, const GroupContext& ctx);

// An integer represented as a power of a fixed base element, the carrier of
// the interpretation of Z inside G. Bases for the ring operations lie in
// A \ {1}; the power itself is materialized only on demand, since exponents
// can be polynomial codes far too large to expand.
struct IntAsPower {
  WreathElement base;
  Int exponent;
};

// a^k * a^l = a^{k+l}, computed on materialized group elements and read back
// by discrete log.
IntAsPower gamma_add(const IntAsPower& x, const IntAsPower& y);
// Does x.exponent divide y.exponent? Decided by the witness equation
// [b1, a^k] = [z, a^l], never by integer shortcuts.
bool gamma_divides(const IntAsPower& x, const IntAsPower& y);
// a^k (x) a^l = a^{kl}, the multiplication transported through the
// coordinate map a^k -> k.
IntAsPower gamma_mul(const IntAsPower& x, const IntAsPower& y);

// base^exponent as a group element.
WreathElement power_element(const IntAsPower& p);
// Discrete log along <base>: the unique k with e = base^k, recovered from the
// top exponent vectors and re-verified; throws BaseMismatch when e is not a
// power of base.
Int power_exponent(const WreathElement& base, const WreathElement& e);

// The coordinate map of the composite self-interpretation: given a basis
// (c, u) of G, the top exponents as powers of c1 and the nu-codes of the
// bottom polynomials as powers of c1, rebuild
// g = c1^g1 ... cm^gm u1^P1 ... un^Pn. Codes are decoded against the ring
// Z[c1+-..cm+-], whose variables act through the top exponent lattice.
WreathElement lambda_G(const BasisCandidate& basis, const std::vector<IntAsPower>& gamma_powers,
                       const std::vector<IntAsPower>& code_powers);

// Coordinates of g relative to an arbitrary basis: inverse of lambda_G's
// assembly. The polynomials are written in the basis ring (abstract
// c-variables).
struct BasisCoordinates {
  std::vector<Int> gamma;
  std::vector<LaurentPoly> polys;
};

BasisCoordinates coords_in_basis(const BasisCandidate& basis, const WreathElement& g);

}  // namespace wrc
