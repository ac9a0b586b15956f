#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrc/error.hpp"
#include "wrc/ints.hpp"

namespace wrc {

// A Laurent monomial a1^e1 ... am^em; exponents may be negative.
struct Monomial {
  std::vector<Int> e;

  Monomial() = default;
  explicit Monomial(std::vector<Int> exps) : e(std::move(exps)) {}
  static Monomial identity(int vars) { return Monomial(std::vector<Int>(vars)); }

  int vars() const { return static_cast<int>(e.size()); }
  Int total_degree() const;
  bool is_identity() const;
  bool is_ordinary() const;  // all exponents >= 0

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Strict deglex comparison with a1 > a2 > ... > am: compare total degree
// first, then exponent vectors lexicographically.
bool deglex_less(const Monomial& x, const Monomial& y);

struct DeglexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const {
    return deglex_less(y, x);
  }
};

// Exact multivariate Laurent polynomial over Z. Terms are kept in strictly
// descending deglex order; no zero coefficients are stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Int, DeglexGreater>;

  explicit LaurentPoly(int vars = 1) : vars_(vars) {
    if (vars < 1) throw DomainError("BadParameter", "variable count must be >= 1");
  }

  static LaurentPoly zero(int vars) { return LaurentPoly(vars); }
  static LaurentPoly constant(int vars, Int c);
  // a_i (1-based index), raised to `exp`.
  static LaurentPoly variable(int vars, int i, Int exp = 1);
  static LaurentPoly monomial(Monomial mono, Int coeff = 1);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_ordinary() const;
  // True iff the polynomial is +/- a single monomial (a unit of ZA).
  bool is_unit() const;

  Int coeff(const Monomial& mono) const;
  // Sum of all coefficients (the augmentation map ZA -> Z).
  Int coefficient_sum() const;

  void add_term(const Monomial& mono, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Int& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiplication by the monomial a^delta (shifts every exponent vector).
  LaurentPoly shifted(const std::vector<Int>& delta) const;

  bool operator==(const LaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  void check_same_ring(const LaurentPoly& o) const;

  int vars_;
  TermMap terms_;
};

// Total order on polynomials of the same ring, for use as container keys.
bool poly_less(const LaurentPoly& x, const LaurentPoly& y);

// Q written as P / a^beta with P ordinary and gcd(P, a^beta) = 1.
struct CanonicalFraction {
  LaurentPoly numerator;
  std::vector<Int> denominator_exponents;
};

// Leading term under deglex; requires a nonzero ordinary polynomial.
std::pair<Monomial, Int> deglex_leading_term(const LaurentPoly& p);

CanonicalFraction canonical_fraction(const LaurentPoly& q);

// Exact division of q by a^sigma - 1 in ZA. Returns the quotient W with
// (a^sigma - 1) * W == q, or nullopt when q is not divisible. Terms are
// partitioned into cosets of the sublattice Z*sigma; q is divisible iff every
// coset's coefficient sum vanishes, and the quotient coefficients along a
// coset are negated prefix sums.
std::optional<LaurentPoly> binomial_divide(const LaurentPoly& q, const Monomial& sigma);

// Exact evaluation at an integer point. Undefined (nullopt) when a variable
// with a negative exponent is evaluated at 0.
std::optional<Rat> evaluate(const LaurentPoly& p, const std::vector<Int>& alpha);

// The largest k with q in Delta^k * ZA, where Delta is the augmentation
// ideal. nullopt encodes +infinity (q == 0).
std::optional<Int> delta_degree(const LaurentPoly& q);

// Substitute a_i -> a_i + 1 exactly; input must be ordinary. The output's
// order of vanishing at 0 equals the input's order of vanishing at (1,...,1).
LaurentPoly expand_about_one(const LaurentPoly& ordinary);

// A point alpha with all coordinates nonzero at which the given pairwise
// distinct polynomials evaluate to pairwise distinct rationals. Searches
// boxes {-B..B}^m with B doubling up to `box_budget`.
std::vector<Int> discriminate(const std::vector<LaurentPoly>& polys, int box_budget = 64);

// Canonical text form: numerator terms in descending deglex joined by +/-,
// then an optional "/ a1^b1*..." denominator suffix. `names` overrides the
// default variable names a1..am (useful for one-variable rings).
std::string to_string(const LaurentPoly& q, const std::vector<std::string>& names = {});

// Parses the grammar produced by to_string; also accepts negative exponents
// inline, e.g. "3*a1^2*a2^-1 - 5". Roundtrips to_string exactly.
LaurentPoly parse_poly(std::string_view text, int vars);

}  // namespace wrc
