#pragma once

#include <vector>

#include "wrc/laurent.hpp"

namespace wrc {

using IntMatrix = std::vector<std::vector<Int>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Determinant by fraction-free (Bareiss) elimination.
Int int_det(IntMatrix mat);

// Adjugate matrix: adj(M) * M = det(M) * I.
IntMatrix int_adjugate(const IntMatrix& mat);

// Determinant over ZA by cofactor expansion (small matrices only).
LaurentPoly poly_det(const PolyMatrix& mat);

PolyMatrix poly_adjugate(const PolyMatrix& mat);

}  // namespace wrc
