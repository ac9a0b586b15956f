#include "wrc/definable.hpp"

#include <algorithm>

#include "wrc/lcs.hpp"
#include "wrc/matutil.hpp"

namespace wrc {

namespace {

void require_top_nontrivial(const WreathElement& a, const char* who) {
  if (!a.in_top() || a.is_identity())
    throw DomainError("BadParameter", std::string(who) + " needs a nontrivial element of A");
}

void require_base(const WreathElement& u, const char* who) {
  if (!u.in_base())
    throw DomainError("BadParameter", std::string(who) + " needs an element of N");
}

WreathElement top_power(const WreathElement& a, const Int& k) {
  std::vector<Int> top(a.top());
  for (Int& x : top) x *= k;
  return WreathElement(std::move(top), std::vector<LaurentPoly>(a.bottom().size(),
                                                                LaurentPoly(a.ctx().m)));
}

// a^{k * sigma} - 1 as a Laurent polynomial, sigma = a.top()
LaurentPoly power_minus_one(const WreathElement& a, const Int& k) {
  std::vector<Int> e(a.top());
  for (Int& x : e) x *= k;
  return LaurentPoly::monomial(Monomial(std::move(e))) -
         LaurentPoly::constant(a.ctx().m, 1);
}

void verify(bool ok, const char* what) {
  if (!ok) throw DomainError("VerificationFailed", what);
}

}  // namespace

bool in_N(const WreathElement& g) { return g.in_base(); }

CentralizerClass centralizer_class(const WreathElement& g) {
  if (g.is_identity())
    throw DomainError("IdentityElement", "the identity has no centralizer class");
  if (g.in_base()) return CentralizerClass::BaseGroup;
  if (g.in_top()) return CentralizerClass::TopGroup;
  return CentralizerClass::Neither;
}

CycResult cyc_member(const WreathElement& a, const WreathElement& g) {
  require_top_nontrivial(a, "cyc_member");
  if (!(a.ctx() == g.ctx()))
    throw DomainError("ContextMismatch", "elements live in different groups");

  // direct route: g in A and g.top an integer multiple of a.top
  bool direct = false;
  if (g.in_top()) {
    int pivot = 0;
    while (a.top()[pivot] == 0) ++pivot;
    if (g.top()[pivot] % a.top()[pivot] == 0) {
      Int k = g.top()[pivot] / a.top()[pivot];
      direct = true;
      for (size_t i = 0; i < a.top().size(); ++i)
        if (g.top()[i] != k * a.top()[i]) {
          direct = false;
          break;
        }
    }
  }

  // witness route: [g, a] = 1, g in A, and a^{g.top} - 1 divisible by
  // a^{a.top} - 1; then z = b1^{quotient} satisfies [b1, g] = [z, a]
  CycResult out;
  bool witnessed = false;
  if (g.in_top() && comm(g, a).is_identity()) {
    LaurentPoly numerator = LaurentPoly::monomial(Monomial(std::vector<Int>(g.top()))) -
                            LaurentPoly::constant(g.ctx().m, 1);
    if (auto w = binomial_divide(numerator, Monomial(std::vector<Int>(a.top())))) {
      witnessed = true;
      WreathElement b1 = WreathElement::bottom_generator(g.ctx(), 1);
      WreathElement z = module_act(b1, *w);
      verify(comm(b1, g) == comm(z, a), "cyclic membership witness equation");
      out.witness = std::move(z);
    }
  }

  verify(direct == witnessed, "cyclic membership routes disagree");
  out.member = direct;
  if (!out.member) out.witness.reset();
  return out;
}

std::optional<WreathElement> div_witness(const WreathElement& a, const Int& k, const Int& l) {
  require_top_nontrivial(a, "div_witness");
  if (l == 0) throw DomainError("BadParameter", "divisor exponent must be nonzero");

  std::vector<Int> le(a.top());
  for (Int& x : le) x *= l;
  auto w = binomial_divide(power_minus_one(a, k), Monomial(std::move(le)));
  if (!w) return std::nullopt;

  WreathElement b1 = WreathElement::bottom_generator(a.ctx(), 1);
  WreathElement z = module_act(b1, *w);
  verify(comm(b1, top_power(a, k)) == comm(z, top_power(a, l)),
         "divisibility witness equation");
  return z;
}

WreathElement exp_mix(const WreathElement& a, const WreathElement& u, const Int& k) {
  require_top_nontrivial(a, "exp_mix");
  require_base(u, "exp_mix");

  Monomial sigma{std::vector<Int>(a.top())};
  auto w_poly = binomial_divide(power_minus_one(a, k), sigma);
  verify(w_poly.has_value(), "(a^k - 1) / (a - 1) must be exact");
  WreathElement w = module_act(u, *w_poly);
  // w is the unique solution of [u, a^k] = [w, a]
  verify(module_act(u, power_minus_one(a, k)) ==
             module_act(w, LaurentPoly::monomial(sigma) - LaurentPoly::constant(a.ctx().m, 1)),
         "exp_mix witness equation");
  return mul(top_power(a, k), w);
}

ExpNResult exp_N(const WreathElement& a, const WreathElement& u, const Int& k) {
  require_top_nontrivial(a, "exp_N");
  require_base(u, "exp_N");

  Monomial sigma{std::vector<Int>(a.top())};
  auto w_poly = binomial_divide(power_minus_one(a, k), sigma);
  verify(w_poly.has_value(), "(a^k - 1) / (a - 1) must be exact");
  auto v_poly = binomial_divide(*w_poly - LaurentPoly::constant(a.ctx().m, k), sigma);
  verify(v_poly.has_value(), "((a^k - 1)/(a - 1) - k) / (a - 1) must be exact");

  ExpNResult out{module_act(u, LaurentPoly::constant(a.ctx().m, k)),
                 module_act(u, *v_poly)};
  verify(exp_mix(a, u, k) == mul(mul(top_power(a, k), out.power), comm(out.witness, a)),
         "(a u)^k = a^k u^k [v, a]");
  return out;
}

WreathElement exp_G(const WreathElement& g, const Int& k) {
  if (g.in_base()) return module_act(g, LaurentPoly::constant(g.ctx().m, k));
  WreathElement a = top_power(g, 1);  // the top part of g
  WreathElement u(std::vector<Int>(g.top().size(), 0),
                  std::vector<LaurentPoly>(g.bottom()));
  if (u.is_identity()) return top_power(g, k);
  return exp_mix(a, u, k);
}

bool act_decide(const WreathElement& g, const WreathElement& h, const LaurentPoly& q) {
  if (!g.in_base() || !h.in_base())
    throw DomainError("NotInBaseGroup", "the ZA-action is defined on N");
  return module_act(g, q) == h;
}

bool congruent_mod_Ialpha(const WreathElement& g, const WreathElement& h, const Int& s,
                          const AlphaPoint& alpha) {
  if (!g.in_base() || !h.in_base())
    throw DomainError("NotInBaseGroup", "the congruence is defined on N");
  if (static_cast<int>(alpha.alpha.size()) != g.ctx().m)
    throw DomainError("MismatchedVariableCount", "evaluation point arity");
  for (const Int& x : alpha.alpha)
    if (x == 0) return true;  // a_i - 0 is a unit, I_alpha extends to all of ZA

  WreathElement diff = mul(module_act(g, LaurentPoly::constant(g.ctx().m, s)), inv(h));
  for (const auto& p : diff.bottom()) {
    auto v = evaluate(canonical_fraction(p).numerator, alpha.alpha);
    if (*v != 0) return false;
  }
  return true;
}

ActRefutation act_refute(const WreathElement& g, const WreathElement& h, const LaurentPoly& q,
                         int box_budget) {
  if (!g.in_base() || !h.in_base())
    throw DomainError("NotInBaseGroup", "the ZA-action is defined on N");

  ActRefutation out;
  if (module_act(g, q) == h) {
    out.confirmed = true;
    return out;
  }

  // Clear the denominator: g^q = h iff g^P = h^{a^delta} with q = P / a^delta.
  CanonicalFraction cf = canonical_fraction(q);
  WreathElement h_cleared =
      module_act(h, LaurentPoly::monomial(Monomial(cf.denominator_exponents)));
  WreathElement diff = mul(module_act(g, cf.numerator), inv(h_cleared));

  std::vector<LaurentPoly> separate{LaurentPoly::zero(q.vars())};
  for (const auto& p : diff.bottom()) {
    if (p.is_zero()) continue;
    if (std::none_of(separate.begin(), separate.end(),
                     [&](const LaurentPoly& s) { return s == p; }))
      separate.push_back(p);
  }
  std::vector<Int> alpha = discriminate(separate, box_budget);

  auto s_val = evaluate(cf.numerator, alpha);
  out.confirmed = false;
  out.alpha = AlphaPoint{alpha};
  out.value = boost::multiprecision::numerator(*s_val);  // integral: ordinary P at integers
  out.h_cleared = h_cleared;
  verify(!congruent_mod_Ialpha(g, h_cleared, out.value, out.alpha),
         "refutation point must fail the congruence");
  return out;
}

bool is_top_basis(const std::vector<WreathElement>& tops) {
  if (tops.empty()) return false;
  const int m = tops[0].ctx().m;
  if (static_cast<int>(tops.size()) != m) return false;
  for (const auto& c : tops) {
    if (!(c.ctx() == tops[0].ctx())) throw DomainError("ContextMismatch", "mixed groups");
    if (c.in_base()) return false;  // c_i must lie outside N
  }
  for (size_t i = 0; i < tops.size(); ++i)
    for (size_t j = i + 1; j < tops.size(); ++j)
      if (!comm(tops[i], tops[j]).is_identity()) return false;
  std::vector<std::vector<Int>> mat(m);
  for (int i = 0; i < m; ++i) mat[i] = tops[i].top();
  Int d = int_det(std::move(mat));
  return d == 1 || d == -1;
}

LaurentPoly bottom_matrix_det(const BasisCandidate& q) {
  const GroupContext ctx = q.bottoms.at(0).ctx();
  PolyMatrix mat(ctx.n, std::vector<LaurentPoly>(ctx.n, LaurentPoly(ctx.m)));
  for (int j = 0; j < ctx.n; ++j)
    for (int i = 0; i < ctx.n; ++i) mat[i][j] = q.bottoms[j].bottom()[i];
  return poly_det(mat);
}

bool is_basis(const BasisCandidate& q) {
  if (q.tops.empty() || q.bottoms.empty()) return false;
  const GroupContext ctx = q.tops[0].ctx();
  if (static_cast<int>(q.tops.size()) != ctx.m ||
      static_cast<int>(q.bottoms.size()) != ctx.n)
    return false;
  if (!is_top_basis(q.tops)) return false;
  for (const auto& u : q.bottoms)
    if (!u.in_base()) return false;
  // The top basis acts on N by monomial multiplications that span all of ZA,
  // so freeness over Z[c+-] is exactly unimodularity over ZA.
  return bottom_matrix_det(q).is_unit();
}

WreathElement iso_transfer(const WreathElement& a, const WreathElement& d, const Int& k) {
  require_top_nontrivial(a, "iso_transfer");
  require_top_nontrivial(d, "iso_transfer");
  WreathElement out = top_power(d, k);

  WreathElement b1 = WreathElement::bottom_generator(a.ctx(), 1);
  WreathElement lhs = comm(comm(b1, a), out);             // [b1, a, d^k]
  WreathElement rhs = comm(comm(b1, top_power(a, k)), d);  // [b1, a^k, d]
  verify(congruent_mod_G4(lhs, rhs), "transferred exponents must agree mod G_4");
  return out;
}

bool congruent_mod_G4(const WreathElement& x, const WreathElement& y) {
  if (!in_lcs(x, 2) || !in_lcs(y, 2))
    throw DomainError("NotInCommutant", "congruence mod G_4 is defined on G_2");
  return in_lcs(mul(x, inv(y)), 4);
}

WreathElement prod_A(const std::vector<WreathElement>& ds, const std::vector<Int>& gammas) {
  if (ds.empty() || ds.size() != gammas.size())
    throw DomainError("BadParameter", "need matching tuples of elements and exponents");
  for (const auto& d : ds)
    if (!d.in_top()) throw DomainError("BadParameter", "factors must lie in A");
  std::vector<Int> top(ds[0].top().size());
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t c = 0; c < top.size(); ++c) top[c] += gammas[i] * ds[i].top()[c];
  return WreathElement(std::move(top),
                       std::vector<LaurentPoly>(ds[0].bottom().size(), LaurentPoly(ds[0].ctx().m)));
}

}  // namespace wrc
