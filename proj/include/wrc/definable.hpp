#pragma once

#include <optional>
#include <vector>

#include "wrc/wreath.hpp"

namespace wrc {

// Decision procedures for the predicates definable in G: cyclic membership,
// divisibility witnesses, exponentiation, the ZA-action, evaluation
// congruences, and basis recognition. Each procedure decides semantically and,
// where the underlying equivalence has two routes, cross-checks them.

bool in_N(const WreathElement& g);

enum class CentralizerClass { BaseGroup, TopGroup, Neither };

// Which of N, A contains the centralizer-determined class of g.
CentralizerClass centralizer_class(const WreathElement& g);

struct CycResult {
  bool member = false;
  // z in N with [b1, g] = [z, a]; present exactly when member.
  std::optional<WreathElement> witness;
};

// Is g in the cyclic subgroup <a>? Decided both directly on exponent vectors
// and through the witness equation, with the two verdicts required to agree.
CycResult cyc_member(const WreathElement& a, const WreathElement& g);

// z in N with [b1, a^k] = [z, a^l], which exists iff l divides k.
std::optional<WreathElement> div_witness(const WreathElement& a, const Int& k, const Int& l);

// (a u)^k for a in A\{1}, u in N, via the exact division
// (a^k - 1) / (a - 1); the witness part of the defining equation
// [u, a^k] = [w, a] is re-verified on every call.
WreathElement exp_mix(const WreathElement& a, const WreathElement& u, const Int& k);

struct ExpNResult {
  WreathElement power;    // u^k
  WreathElement witness;  // v in N with (a u)^k = a^k u^k [v, a]
};

ExpNResult exp_N(const WreathElement& a, const WreathElement& u, const Int& k);

// g^k for arbitrary g, by splitting the normal form into its top and base
// parts.
WreathElement exp_G(const WreathElement& g, const Int& k);

// g^q == h for g, h in N.
bool act_decide(const WreathElement& g, const WreathElement& h, const LaurentPoly& q);

// Evaluation point for the congruences modulo (N)^{I_alpha}.
struct AlphaPoint {
  std::vector<Int> alpha;
};

// g^s == h mod (N)^{I_alpha}. A zero coordinate collapses the extended ideal
// to the whole ring, making the congruence vacuous.
bool congruent_mod_Ialpha(const WreathElement& g, const WreathElement& h, const Int& s,
                          const AlphaPoint& alpha);

struct ActRefutation {
  bool confirmed = false;
  // Populated when not confirmed: an evaluation point (all coordinates
  // nonzero) and the value s = P(alpha) of the cleared numerator of q at it,
  // such that g^s != h^{a^delta} mod (N)^{I_alpha}, where q = P / a^delta.
  AlphaPoint alpha;
  Int value;
  WreathElement h_cleared;
};

// Either confirms g^q = h or produces a checkable failing congruence.
ActRefutation act_refute(const WreathElement& g, const WreathElement& h, const LaurentPoly& q,
                         int box_budget = 64);

// c1..cm is a top basis iff no ci lies in N, they pairwise commute, and the
// matrix of top exponent vectors is unimodular.
bool is_top_basis(const std::vector<WreathElement>& tops);

struct BasisCandidate {
  std::vector<WreathElement> tops;
  std::vector<WreathElement> bottoms;
};

// Full basis recognition: top basis, bottoms in N, and the matrix over ZA
// expressing the bottoms in b1..bn has unit determinant (+- a monomial).
bool is_basis(const BasisCandidate& q);

// The n x n matrix determinant used by is_basis, exposed for diagnostics.
LaurentPoly bottom_matrix_det(const BasisCandidate& q);

// a^k -> d^k, the graph of the isomorphism Z_a -> Z_d; the transferred value
// is re-verified through the ternary-commutator congruence mod G_4.
WreathElement iso_transfer(const WreathElement& a, const WreathElement& d, const Int& k);

// x = y mod G_4 for x, y in the commutant G_2.
bool congruent_mod_G4(const WreathElement& x, const WreathElement& y);

// d1^g1 ... dm^gm for d_i in A.
WreathElement prod_A(const std::vector<WreathElement>& ds, const std::vector<Int>& gammas);

}  // namespace wrc
