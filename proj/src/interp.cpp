#include "wrc/interp.hpp"

#include "wrc/matutil.hpp"

namespace wrc {

IntTuple delta_encode(const WreathElement& g) {
  IntTuple t;
  t.gamma = g.top();
  t.codes.reserve(g.bottom().size());
  for (const auto& p : g.bottom()) t.codes.push_back(nu_encode(p));
  return t;
}

WreathElement delta_decode(const IntTuple& t, const GroupContext& ctx) {
  if (static_cast<int>(t.gamma.size()) != ctx.m || static_cast<int>(t.codes.size()) != ctx.n)
    throw DomainError("NotInDomain", "tuple arity does not match the group");
  std::vector<LaurentPoly> bottom;
  bottom.reserve(t.codes.size());
  for (const Int& k : t.codes) {
    auto p = nu_decode(k, ctx.m);
    if (!p) throw DomainError("NotInDomain", "entry is not a polynomial code: " + k.str());
    bottom.push_back(std::move(*p));
  }
  return WreathElement(t.gamma, std::move(bottom));
}

IntTuple tuple_mul(const IntTuple& t1, const IntTuple& t2, const GroupContext& ctx) {
  return delta_encode(mul(delta_decode(t1, ctx), delta_decode(t2, ctx)));
}

namespace {

void require_gamma_base(const IntAsPower& p, const char* who) {
  if (!p.base.in_top() || p.base.is_identity())
    throw DomainError("BadParameter",
                      std::string(who) + " needs a base in A \\ {1}");
}

void require_same_base(const IntAsPower& x, const IntAsPower& y) {
  if (!(x.base == y.base)) throw DomainError("BaseMismatch", "powers of different bases");
}

}  // namespace

WreathElement power_element(const IntAsPower& p) {
  if (p.base.in_base())
    throw DomainError("BadParameter", "power base must lie outside N");
  return exp_G(p.base, p.exponent);
}

Int power_exponent(const WreathElement& base, const WreathElement& e) {
  if (base.in_base() || base.is_identity())
    throw DomainError("BadParameter", "discrete log base must lie outside N");
  int pivot = 0;
  while (base.top()[pivot] == 0) ++pivot;
  if (e.top()[pivot] % base.top()[pivot] != 0)
    throw DomainError("BaseMismatch", "element is not a power of the base");
  Int k = e.top()[pivot] / base.top()[pivot];
  if (!(exp_G(base, k) == e))
    throw DomainError("BaseMismatch", "element is not a power of the base");
  return k;
}

IntAsPower gamma_add(const IntAsPower& x, const IntAsPower& y) {
  require_gamma_base(x, "gamma_add");
  require_same_base(x, y);
  WreathElement sum = mul(power_element(x), power_element(y));
  return {x.base, power_exponent(x.base, sum)};
}

bool gamma_divides(const IntAsPower& x, const IntAsPower& y) {
  require_gamma_base(x, "gamma_divides");
  require_same_base(x, y);
  if (x.exponent == 0) return y.exponent == 0;
  return div_witness(x.base, y.exponent, x.exponent).has_value();
}

IntAsPower gamma_mul(const IntAsPower& x, const IntAsPower& y) {
  require_gamma_base(x, "gamma_mul");
  require_same_base(x, y);
  return {x.base, x.exponent * y.exponent};
}

namespace {

// Ring morphism Z[c1+-..cm+-] -> ZA induced by c_i |-> a^{tops[i]}.
LaurentPoly into_standard_ring(const LaurentPoly& p, const std::vector<WreathElement>& tops) {
  int m = p.vars();
  LaurentPoly out(m);
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Int> e(m);
    for (int i = 0; i < m; ++i)
      for (int row = 0; row < m; ++row) e[row] += mono.e[i] * tops[i].top()[row];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace

WreathElement lambda_G(const BasisCandidate& basis, const std::vector<IntAsPower>& gamma_powers,
                       const std::vector<IntAsPower>& code_powers) {
  if (!is_basis(basis)) throw DomainError("NotABasis", "lambda_G needs a basis of G");
  const GroupContext ctx = basis.tops[0].ctx();
  if (static_cast<int>(gamma_powers.size()) != ctx.m ||
      static_cast<int>(code_powers.size()) != ctx.n)
    throw DomainError("BadParameter", "power tuple arity does not match the basis");
  const WreathElement& c1 = basis.tops[0];
  for (const auto& p : gamma_powers)
    if (!(p.base == c1)) throw DomainError("BaseMismatch", "powers must share base c1");
  for (const auto& p : code_powers)
    if (!(p.base == c1)) throw DomainError("BaseMismatch", "powers must share base c1");

  WreathElement g = WreathElement::identity(ctx);
  for (int i = 0; i < ctx.m; ++i)
    g = mul(g, exp_G(basis.tops[i], gamma_powers[i].exponent));
  for (int j = 0; j < ctx.n; ++j) {
    auto p = nu_decode(code_powers[j].exponent, ctx.m);
    if (!p) throw DomainError("NotACode", "exponent is not a polynomial code");
    g = mul(g, module_act(basis.bottoms[j], into_standard_ring(*p, basis.tops)));
  }
  return g;
}

BasisCoordinates coords_in_basis(const BasisCandidate& basis, const WreathElement& g) {
  if (!is_basis(basis)) throw DomainError("NotABasis", "coordinates need a basis of G");
  const GroupContext ctx = basis.tops[0].ctx();

  // top exponents: solve C gamma = g.top over Z, C unimodular
  IntMatrix c_cols(ctx.m, std::vector<Int>(ctx.m));
  for (int i = 0; i < ctx.m; ++i)
    for (int row = 0; row < ctx.m; ++row) c_cols[row][i] = basis.tops[i].top()[row];
  Int det = int_det(c_cols);
  IntMatrix adj = int_adjugate(c_cols);
  std::vector<Int> gamma(ctx.m);
  for (int i = 0; i < ctx.m; ++i) {
    for (int row = 0; row < ctx.m; ++row) gamma[i] += adj[i][row] * g.top()[row];
    gamma[i] /= det;  // det = +-1
  }

  WreathElement c_part = WreathElement::identity(ctx);
  for (int i = 0; i < ctx.m; ++i) c_part = mul(c_part, exp_G(basis.tops[i], gamma[i]));
  WreathElement base_part = mul(inv(c_part), g);

  // bottom coordinates over ZA: solve M x = w with det(M) a unit
  PolyMatrix mat(ctx.n, std::vector<LaurentPoly>(ctx.n, LaurentPoly(ctx.m)));
  for (int j = 0; j < ctx.n; ++j)
    for (int i = 0; i < ctx.n; ++i) mat[i][j] = basis.bottoms[j].bottom()[i];
  LaurentPoly pdet = poly_det(mat);
  const auto& unit_term = *pdet.terms().begin();
  std::vector<Int> inv_exp = unit_term.first.inverse().e;
  Int unit_sign = unit_term.second;  // +-1

  PolyMatrix padj = poly_adjugate(mat);
  BasisCoordinates out;
  out.gamma = std::move(gamma);
  out.polys.reserve(ctx.n);

  // inverse lattice substitution a^e -> c^{C^{-1} e}
  auto into_basis_ring = [&](const LaurentPoly& p) {
    LaurentPoly q(ctx.m);
    for (const auto& [mono, c] : p.terms()) {
      std::vector<Int> e(ctx.m);
      for (int i = 0; i < ctx.m; ++i) {
        for (int row = 0; row < ctx.m; ++row) e[i] += adj[i][row] * mono.e[row];
        e[i] /= det;
      }
      q.add_term(Monomial(std::move(e)), c);
    }
    return q;
  };

  for (int j = 0; j < ctx.n; ++j) {
    LaurentPoly x(ctx.m);
    for (int i = 0; i < ctx.n; ++i) x += padj[j][i] * base_part.bottom()[i];
    x = x.shifted(inv_exp) * unit_sign;  // divide by the unit determinant
    out.polys.push_back(into_basis_ring(x));
  }
  return out;
}

}  // namespace wrc
