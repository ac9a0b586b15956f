#include "wrc/lcs.hpp"

namespace wrc {

WreathElement basic_commutator(const GroupContext& ctx, int k, const std::vector<int>& js) {
  if (k < 1 || k > ctx.n) throw DomainError("BadParameter", "bottom index out of range");
  LaurentPoly q = LaurentPoly::constant(ctx.m, 1);
  for (int j : js) {
    if (j < 1 || j > ctx.m) throw DomainError("BadParameter", "top index out of range");
    q *= LaurentPoly::variable(ctx.m, j) - LaurentPoly::constant(ctx.m, 1);
  }
  return module_act(WreathElement::bottom_generator(ctx, k), q);
}

bool in_lcs(const WreathElement& g, int level) {
  if (level < 2) throw DomainError("BadParameter", "lower central series level must be >= 2");
  if (!g.in_base()) return false;
  for (const auto& p : g.bottom()) {
    auto d = delta_degree(p);
    if (d.has_value() && *d < level - 1) return false;
  }
  return true;
}

LcsCoordinates lcs_coords(const WreathElement& g, int level, int level_cap) {
  if (level > level_cap)
    throw DomainError("LevelTooLarge", "level exceeds the configured cap");
  if (!in_lcs(g, level)) throw DomainError("NotInLevel", "element is not in G_i");

  LcsCoordinates out;
  out.level = level;
  const int n = static_cast<int>(g.bottom().size());
  for (int k = 1; k <= n; ++k) {
    const LaurentPoly& p = g.bottom()[k - 1];
    if (p.is_zero()) continue;
    // Clearing denominators multiplies by a monomial, a unit congruent to 1
    // mod Delta, and so fixes the image in G_i / G_{i+1}.
    LaurentPoly expanded = expand_about_one(canonical_fraction(p).numerator);
    for (const auto& [mono, c] : expanded.terms()) {
      if (mono.total_degree() != level - 1) continue;
      CommutatorLabel label;
      label.k = k;
      for (int i = 0; i < mono.vars(); ++i)
        for (Int rep = 0; rep < mono.e[i]; ++rep) label.js.push_back(i + 1);
      out.coeffs.emplace(std::move(label), c);
    }
  }
  return out;
}

Int lcs_rank(const GroupContext& ctx, int level) {
  if (level < 2) throw DomainError("BadParameter", "lower central series level must be >= 2");
  // multisets of size i-1 over m symbols
  Int binom = 1;
  for (int t = 1; t <= level - 1; ++t) binom = binom * (ctx.m + t - 1) / t;
  return Int(ctx.n) * binom;
}

}  // namespace wrc
