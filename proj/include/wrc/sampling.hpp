#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "wrc/condensed.hpp"
#include "wrc/definable.hpp"
#include "wrc/wreath.hpp"

namespace wrc {

// Deterministic generators for randomized property checks. Everything is
// driven by one mt19937_64 so a run is reproducible from its seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  long long integer(long long lo, long long hi);

  Monomial monomial(int vars, int max_abs_exp);
  LaurentPoly poly(int vars, int max_terms, int max_abs_exp, int max_abs_coeff);
  LaurentPoly nonzero_poly(int vars, int max_terms, int max_abs_exp, int max_abs_coeff);
  LaurentPoly ordinary_poly(int vars, int max_terms, int max_exp, int max_abs_coeff);

  WreathElement element(const GroupContext& ctx, int max_top, int max_terms, int max_abs_exp,
                        int max_abs_coeff);
  WreathElement base_element(const GroupContext& ctx, int max_terms, int max_abs_exp,
                             int max_abs_coeff);
  // nontrivial element of A
  WreathElement top_element(const GroupContext& ctx, int max_abs_exp);

  // Image of the distinguished basis under a random automorphism assembled
  // from top transvections and inversions, inner conjugations (translations
  // a_i -> a_i v_i), and unimodular bottom moves over ZA.
  BasisCandidate automorphic_basis(const GroupContext& ctx, int moves);
  // One corrupting move: squares a random entry, destroying unimodularity.
  BasisCandidate corrupted(BasisCandidate basis);

  GSElement gs_element(int max_t, int max_terms, int max_abs_exp, int max_abs_coeff);
  std::string gs_word(int max_len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wrc
