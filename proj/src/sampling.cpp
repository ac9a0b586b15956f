#include "wrc/sampling.hpp"

namespace wrc {

long long Sampler::integer(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng_);
}

Monomial Sampler::monomial(int vars, int max_abs_exp) {
  std::vector<Int> e(vars);
  for (auto& x : e) x = integer(-max_abs_exp, max_abs_exp);
  return Monomial(std::move(e));
}

LaurentPoly Sampler::poly(int vars, int max_terms, int max_abs_exp, int max_abs_coeff) {
  LaurentPoly p(vars);
  int terms = static_cast<int>(integer(0, max_terms));
  for (int t = 0; t < terms; ++t)
    p.add_term(monomial(vars, max_abs_exp), Int(integer(-max_abs_coeff, max_abs_coeff)));
  return p;
}

LaurentPoly Sampler::nonzero_poly(int vars, int max_terms, int max_abs_exp, int max_abs_coeff) {
  while (true) {
    LaurentPoly p = poly(vars, max_terms, max_abs_exp, max_abs_coeff);
    if (!p.is_zero()) return p;
  }
}

LaurentPoly Sampler::ordinary_poly(int vars, int max_terms, int max_exp, int max_abs_coeff) {
  LaurentPoly p(vars);
  int terms = static_cast<int>(integer(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<Int> e(vars);
    for (auto& x : e) x = integer(0, max_exp);
    p.add_term(Monomial(std::move(e)), Int(integer(-max_abs_coeff, max_abs_coeff)));
  }
  return p;
}

WreathElement Sampler::element(const GroupContext& ctx, int max_top, int max_terms,
                               int max_abs_exp, int max_abs_coeff) {
  std::vector<Int> top(ctx.m);
  for (auto& x : top) x = integer(-max_top, max_top);
  std::vector<LaurentPoly> bottom;
  bottom.reserve(ctx.n);
  for (int j = 0; j < ctx.n; ++j)
    bottom.push_back(poly(ctx.m, max_terms, max_abs_exp, max_abs_coeff));
  return WreathElement(std::move(top), std::move(bottom));
}

WreathElement Sampler::base_element(const GroupContext& ctx, int max_terms, int max_abs_exp,
                                    int max_abs_coeff) {
  std::vector<LaurentPoly> bottom;
  bottom.reserve(ctx.n);
  for (int j = 0; j < ctx.n; ++j)
    bottom.push_back(poly(ctx.m, max_terms, max_abs_exp, max_abs_coeff));
  return WreathElement(std::vector<Int>(ctx.m), std::move(bottom));
}

WreathElement Sampler::top_element(const GroupContext& ctx, int max_abs_exp) {
  while (true) {
    std::vector<Int> top(ctx.m);
    for (auto& x : top) x = integer(-max_abs_exp, max_abs_exp);
    WreathElement g(std::move(top), std::vector<LaurentPoly>(ctx.n, LaurentPoly(ctx.m)));
    if (!g.is_identity()) return g;
  }
}

BasisCandidate Sampler::automorphic_basis(const GroupContext& ctx, int moves) {
  BasisCandidate q;
  for (int i = 1; i <= ctx.m; ++i) q.tops.push_back(WreathElement::top_generator(ctx, i));
  for (int j = 1; j <= ctx.n; ++j) q.bottoms.push_back(WreathElement::bottom_generator(ctx, j));

  for (int step = 0; step < moves; ++step) {
    switch (integer(0, 4)) {
      case 0: {  // top transvection c_i <- c_i c_j^{+-1}
        if (ctx.m < 2) break;
        int i = static_cast<int>(integer(0, ctx.m - 1));
        int j = static_cast<int>(integer(0, ctx.m - 2));
        if (j >= i) ++j;
        WreathElement factor =
            integer(0, 1) ? q.tops[j] : inv(q.tops[j]);
        q.tops[i] = mul(q.tops[i], factor);
        break;
      }
      case 1: {  // top inversion
        int i = static_cast<int>(integer(0, ctx.m - 1));
        q.tops[i] = inv(q.tops[i]);
        break;
      }
      case 2: {  // translation: conjugation by w in N (for m = 1 any v works)
        if (ctx.m == 1) {
          LaurentPoly v = poly(1, 2, 2, 2);
          q.tops[0] = mul(q.tops[0],
                          module_act(WreathElement::bottom_generator(ctx, 1), v));
        } else {
          WreathElement w = base_element(ctx, 2, 2, 2);
          for (auto& c : q.tops) c = conj(c, w);
        }
        break;
      }
      case 3: {  // bottom transvection u_j <- u_j u_k^Q
        if (ctx.n < 2) break;
        int j = static_cast<int>(integer(0, ctx.n - 1));
        int k = static_cast<int>(integer(0, ctx.n - 2));
        if (k >= j) ++k;
        LaurentPoly qq = poly(ctx.m, 2, 2, 2);
        q.bottoms[j] = mul(q.bottoms[j], module_act(q.bottoms[k], qq));
        break;
      }
      case 4: {  // bottom unit scaling u_j <- u_j^{+- a^delta}
        int j = static_cast<int>(integer(0, ctx.n - 1));
        LaurentPoly unit =
            LaurentPoly::monomial(monomial(ctx.m, 2), Int(integer(0, 1) ? 1 : -1));
        q.bottoms[j] = module_act(q.bottoms[j], unit);
        break;
      }
    }
  }
  return q;
}

BasisCandidate Sampler::corrupted(BasisCandidate basis) {
  int m = static_cast<int>(basis.tops.size());
  int n = static_cast<int>(basis.bottoms.size());
  int pick = static_cast<int>(integer(0, m + n - 1));
  if (pick < m)
    basis.tops[pick] = mul(basis.tops[pick], basis.tops[pick]);
  else
    basis.bottoms[pick - m] = mul(basis.bottoms[pick - m], basis.bottoms[pick - m]);
  return basis;
}

GSElement Sampler::gs_element(int max_t, int max_terms, int max_abs_exp, int max_abs_coeff) {
  GSElement g;
  g.t_exp = integer(-max_t, max_t);
  g.a_poly = poly(1, max_terms, max_abs_exp, max_abs_coeff);
  g.b_poly = poly(1, max_terms, max_abs_exp, max_abs_coeff);
  g.center_bit = static_cast<int>(integer(0, 1));
  return g;
}

std::string Sampler::gs_word(int max_len) {
  static const char kLetters[] = "aAbBtTc";
  int len = static_cast<int>(integer(0, max_len));
  std::string w;
  for (int i = 0; i < len; ++i) w += kLetters[integer(0, 6)];
  return w;
}

}  // namespace wrc
