#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wrc/laurent.hpp"

namespace wrc {

// An immutable subset of Z with a decidable membership predicate. The
// `universal` constructor is the concatenation of all finite binary words in
// length-lex order written on the nonnegative integers and mirrored about 0;
// its shift orbit is dense in 2^Z, which is what the condensation
// demonstration exercises.
class SubsetOfZ {
 public:
  static SubsetOfZ finite(std::set<long long> elems);
  static SubsetOfZ periodic(long long period);  // the multiples of `period`
  static SubsetOfZ complement(SubsetOfZ s);
  static SubsetOfZ shifted(SubsetOfZ s, long long n);  // n o S = { s - n }
  static SubsetOfZ universal();

  bool contains(long long i) const;
  bool contains(const Int& i) const;

  // The spec mini-language: finite:{0,3}, periodic:2, universal,
  // shift:<n>:<spec>, complement:<spec>.
  std::string spec() const;
  static SubsetOfZ parse(std::string_view text);

 private:
  struct Impl;
  explicit SubsetOfZ(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Normal form t^tau a^P b^Q c^eps of an element of G_S, with P and Q
// one-variable Laurent polynomials in t (the exponent of t^i indexes the
// generator copies a_i = a^{t^i}, b_i = b^{t^i}) and eps the central bit.
struct GSElement {
  Int t_exp;
  LaurentPoly a_poly{1};
  LaurentPoly b_poly{1};
  int center_bit = 0;

  static GSElement identity() { return GSElement{}; }
  static GSElement gen_t(Int e = 1);
  static GSElement gen_a(Int coeff = 1);
  // b_index^{t^index}; the marked generator b_n of the shifted presentations
  static GSElement gen_b(Int index = 0, Int coeff = 1);
  static GSElement gen_c();

  bool is_identity() const;
  bool operator==(const GSElement& o) const {
    return t_exp == o.t_exp && a_poly == o.a_poly && b_poly == o.b_poly &&
           center_bit == o.center_bit;
  }
  bool operator!=(const GSElement& o) const { return !(*this == o); }
};

bool gs_less(const GSElement& x, const GSElement& y);

// The cocycle sum over commutations [a_i, b_j] = c_{j-i}: counts, mod 2, the
// pairs (i, j) with j - i in S weighted by the polynomial coefficients.
int gs_cocycle(const LaurentPoly& b_part, const LaurentPoly& a_part, const SubsetOfZ& s);

GSElement gs_mul(const GSElement& x, const GSElement& y, const SubsetOfZ& s);
GSElement gs_inv(const GSElement& x, const SubsetOfZ& s);
// y^-1 x y
GSElement gs_conj(const GSElement& x, const GSElement& y, const SubsetOfZ& s);
GSElement gs_comm(const GSElement& x, const GSElement& y, const SubsetOfZ& s);

// Letters: a A b B t T c ('1' and whitespace are ignored); capital = inverse.
// Folding the letters through gs_mul decides the word problem in G_S.
GSElement gs_eval_word(std::string_view word, const SubsetOfZ& s);

std::string to_string(const GSElement& g);

// { i in [-r, r] : [a, b0^{t^i}] = 1 in G_S }, computed by evaluating the
// commutators; equals the window complement of S.
std::vector<long long> center_fingerprint(const SubsetOfZ& s, int radius);

inline constexpr int kDefaultBallRadiusCap = 6;

// Partition of all words of length <= radius over the six marked-generator
// letters by equality in G_S: entry w holds the first word index with the
// same normal form. Two marked groups look alike at resolution r exactly
// when these vectors match.
struct BallFingerprint {
  int radius = 0;
  std::vector<int> partition;
  int classes = 0;

  bool operator==(const BallFingerprint& o) const {
    return radius == o.radius && partition == o.partition;
  }
};

struct GSMarking {
  GSElement a = GSElement::gen_a();
  GSElement b = GSElement::gen_b();
  GSElement t = GSElement::gen_t();
};

BallFingerprint ball_fingerprint(const SubsetOfZ& s, int radius,
                                 const GSMarking& marking = GSMarking{},
                                 int radius_cap = kDefaultBallRadiusCap);

// Finite-resolution check of G_S = G_{n o S}: the marked group
// (G_S, (a, b_n, t)) must fingerprint identically to (G_{n o S}, (a, b_0, t)).
bool iso_check(const SubsetOfZ& s, long long n, int radius,
               int radius_cap = kDefaultBallRadiusCap);

// Smallest |i| <= window in the symmetric difference of S and T (then the
// word [a, b0^{t^i}] separates the marked groups), or nullopt when the
// window agrees. A returned index is re-verified on the two groups.
std::optional<long long> injectivity_witness(const SubsetOfZ& s, const SubsetOfZ& t,
                                             long long window);

struct DemoRow {
  int radius = 0;
  bool found = false;
  long long shift = 0;
  long long agreement_window = 0;
  std::optional<long long> separation_index;
  bool fingerprints_equal = false;
};

struct DemoReport {
  std::string set_spec;
  std::vector<DemoRow> rows;
  bool all_found = true;
};

// For each r <= r_max, looks for a nonzero shift n whose translate agrees
// with S on [-2r, 2r] (equal radius-r fingerprints) while differing from S
// globally: at every tested resolution a distinct marked group lies in the
// same neighborhood. With a finite S the search is expected to fail once r
// covers the support.
DemoReport condensation_demo(const SubsetOfZ& s, int r_max, long long shift_budget = 1 << 23,
                             long long witness_budget = 1 << 20,
                             int radius_cap = kDefaultBallRadiusCap);

}  // namespace wrc
