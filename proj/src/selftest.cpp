#include "wrc/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "wrc/condensed.hpp"
#include "wrc/definable.hpp"
#include "wrc/encoding.hpp"
#include "wrc/interp.hpp"
#include "wrc/lcs.hpp"
#include "wrc/sampling.hpp"

namespace wrc {

namespace {

class Harness {
 public:
  Harness(std::ostream& out, SelftestReport& report) : out_(out), report_(report) {}

  void group(const std::string& name, const std::function<void(Harness&)>& body) {
    group_ = name;
    group_passed_ = 0;
    try {
      body(*this);
      out_ << "ok   " << name << " (" << group_passed_ << " checks)\n";
    } catch (const std::exception& e) {
      out_ << "FAIL " << name << ": " << e.what() << "\n";
      report_.failed++;
      report_.failures.push_back(name + ": " + e.what());
    }
  }

  void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
    report_.passed++;
    group_passed_++;
  }

 private:
  std::ostream& out_;
  SelftestReport& report_;
  std::string group_;
  int group_passed_ = 0;
};

void laurent_checks(Harness& h, Sampler& rnd) {
  for (int it = 0; it < 300; ++it) {
    int m = static_cast<int>(rnd.integer(1, 3));
    LaurentPoly p = rnd.poly(m, 3, 3, 5), q = rnd.poly(m, 3, 3, 5), r = rnd.poly(m, 3, 3, 5);
    h.require((p + q) * r == p * r + q * r, "distributivity");
    h.require(p * q == q * p, "commutativity");
    h.require((p * q) * r == p * (q * r), "associativity");
  }
  for (int k = 1; k <= 12; ++k)
    for (int l = 1; l <= 12; ++l) {
      LaurentPoly num = LaurentPoly::variable(1, 1, k) - LaurentPoly::constant(1, 1);
      auto w = binomial_divide(num, Monomial(std::vector<Int>{Int(l)}));
      h.require(w.has_value() == (k % l == 0), "a^k - 1 divisible by a^l - 1 iff l | k");
      if (w) {
        LaurentPoly div = LaurentPoly::variable(1, 1, l) - LaurentPoly::constant(1, 1);
        h.require(div * *w == num, "quotient multiplies back");
      }
    }
  for (int it = 0; it < 200; ++it) {
    int m = static_cast<int>(rnd.integer(1, 2));
    LaurentPoly q = rnd.poly(m, 4, 3, 4);
    Monomial sigma = rnd.monomial(m, 2);
    if (sigma.is_identity()) continue;
    if (auto w = binomial_divide(q, sigma)) {
      LaurentPoly div = LaurentPoly::monomial(sigma) - LaurentPoly::constant(m, 1);
      h.require(div * *w == q, "random quotient multiplies back");
    }
  }
  for (int it = 0; it < 200; ++it) {
    int m = static_cast<int>(rnd.integer(1, 2));
    LaurentPoly p = rnd.nonzero_poly(m, 3, 3, 4), q = rnd.nonzero_poly(m, 3, 3, 4);
    if ((p * q).is_zero()) continue;
    Int sum = *delta_degree(p) + *delta_degree(q);
    h.require(*delta_degree(p * q) == sum, "delta degree is additive");
  }
  for (int it = 0; it < 200; ++it) {
    int m = static_cast<int>(rnd.integer(1, 3));
    LaurentPoly p = rnd.poly(m, 3, 3, 5), q = rnd.poly(m, 3, 3, 5);
    std::vector<Int> alpha(m);
    for (auto& x : alpha) x = rnd.integer(1, 5) * (rnd.integer(0, 1) ? 1 : -1);
    h.require(*evaluate(p * q, alpha) == *evaluate(p, alpha) * *evaluate(q, alpha),
              "evaluation is multiplicative");
    h.require(*evaluate(p + q, alpha) == *evaluate(p, alpha) + *evaluate(q, alpha),
              "evaluation is additive");
  }
}

void encoding_checks(Harness& h, Sampler& rnd) {
  for (Int x = 0; x <= 40; ++x)
    for (Int y = 0; y <= 40; ++y) {
      auto [px, py] = pair_decode(pair_encode(x, y));
      h.require(px == x && py == y, "pair roundtrip");
    }
  for (int it = 0; it < 500; ++it) {
    std::vector<Int> v(rnd.integer(1, 6));
    for (auto& x : v) x = rnd.integer(-100, 100);
    h.require(tuple_decode(tuple_encode(v)) == v, "tuple roundtrip");
  }
  for (int it = 0; it < 300; ++it) {
    int m = static_cast<int>(rnd.integer(1, 3));
    LaurentPoly q = rnd.poly(m, 3, 4, 9);
    auto back = nu_decode(nu_encode(q), m);
    h.require(back && *back == q, "nu roundtrip");
  }
  int members = 0;
  for (Int k = 0; k <= 2000; ++k) {
    auto p = nu_decode(k, 2);
    if (p) {
      h.require(nu_encode(*p) == k, "decode then encode is the identity on codes");
      ++members;
    }
  }
  h.require(members > 0, "some small numbers are codes");
}

void wreath_checks(Harness& h, Sampler& rnd) {
  for (int it = 0; it < 300; ++it) {
    GroupContext ctx(static_cast<int>(rnd.integer(1, 3)), static_cast<int>(rnd.integer(1, 3)));
    WreathElement g = rnd.element(ctx, 3, 2, 2, 5), x = rnd.element(ctx, 3, 2, 2, 5),
                  y = rnd.element(ctx, 3, 2, 2, 5);
    h.require(mul(mul(g, x), y) == mul(g, mul(x, y)), "associativity");
    h.require(mul(g, inv(g)).is_identity(), "inverses");
    h.require(mul(WreathElement::identity(ctx), g) == g, "identity");
  }
  for (int it = 0; it < 1000; ++it) {
    GroupContext ctx(static_cast<int>(rnd.integer(1, 3)), static_cast<int>(rnd.integer(1, 3)));
    WreathElement g = rnd.element(ctx, 3, 2, 3, 9), x = rnd.element(ctx, 3, 2, 3, 9);
    h.require(to_fnrep(mul(g, x)) == fnrep_mul(to_fnrep(g), to_fnrep(x)),
              "normal forms and function representation multiply identically");
    h.require(from_fnrep(to_fnrep(g), ctx) == g, "fnrep roundtrip");
  }
  for (int it = 0; it < 300; ++it) {
    GroupContext ctx(2, 2);
    WreathElement u = rnd.base_element(ctx, 2, 2, 5);
    LaurentPoly p = rnd.poly(2, 3, 2, 5), q = rnd.poly(2, 3, 2, 5);
    h.require(module_act(module_act(u, p), q) == module_act(u, p * q), "module axiom");
  }
}

void lcs_checks(Harness& h, Sampler& rnd) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int i = 2; i <= 5; ++i) {
        GroupContext ctx(m, n);
        // enumerate sorted multi-indices of size i-1 over m symbols
        std::function<long long(int, int)> count = [&](int slots, int min_j) -> long long {
          if (slots == 0) return 1;
          long long acc = 0;
          for (int j = min_j; j <= m; ++j) acc += count(slots - 1, j);
          return acc;
        };
        h.require(lcs_rank(ctx, i) == Int(n) * count(i - 1, 1),
                  "rank matches commutator enumeration");
      }
  for (int it = 0; it < 100; ++it) {
    GroupContext ctx(2, 2);
    int level = static_cast<int>(rnd.integer(2, 4));
    std::map<CommutatorLabel, Int> plan;
    WreathElement g = WreathElement::identity(ctx);
    for (int c = 0; c < 3; ++c) {
      CommutatorLabel label;
      label.k = static_cast<int>(rnd.integer(1, 2));
      for (int s = 0; s < level - 1; ++s)
        label.js.push_back(static_cast<int>(rnd.integer(1, 2)));
      std::sort(label.js.begin(), label.js.end());
      Int mult = rnd.integer(-4, 4);
      plan[label] += mult;
      g = mul(g, exp_G(basic_commutator(ctx, label.k, label.js), mult));
    }
    std::erase_if(plan, [](const auto& kv) { return kv.second == 0; });
    LcsCoordinates coords = lcs_coords(g, level);
    h.require(coords.coeffs == plan, "planted multiplicities recovered");
  }
}

void definable_checks(Harness& h, Sampler& rnd) {
  GroupContext ctx(2, 2);
  for (int beta = 1; beta <= 3; ++beta) {
    WreathElement a = WreathElement::top_generator(ctx, 1, beta);
    for (int g1 = -4; g1 <= 4; ++g1)
      for (int g2 = -2; g2 <= 2; ++g2) {
        WreathElement g = mul(WreathElement::top_generator(ctx, 1, g1),
                              WreathElement::top_generator(ctx, 2, g2));
        CycResult r = cyc_member(a, g);
        h.require(r.member == (g2 == 0 && g1 % beta == 0), "cyclic membership verdict");
      }
  }
  for (int k = -10; k <= 10; ++k)
    for (int l = 1; l <= 6; ++l) {
      WreathElement a = WreathElement::top_generator(ctx, 1);
      auto w = div_witness(a, k, l);
      h.require(w.has_value() == (k % l == 0), "divisibility witness iff l | k");
    }
  for (int it = 0; it < 100; ++it) {
    WreathElement g = rnd.element(ctx, 2, 2, 2, 4);
    Int k = rnd.integer(-8, 8);
    h.require(exp_G(g, k) == pow_by_mul(g, k), "exp_G equals repeated multiplication");
  }
  for (int it = 0; it < 50; ++it) {
    WreathElement g = rnd.base_element(ctx, 2, 2, 4);
    LaurentPoly q = rnd.ordinary_poly(2, 3, 2, 4);
    WreathElement gq = module_act(g, q);
    h.require(act_refute(g, gq, q).confirmed, "action confirmed on true instances");
    WreathElement bad = mul(gq, WreathElement::bottom_generator(ctx, 1));
    ActRefutation ref = act_refute(g, bad, q);
    h.require(!ref.confirmed, "corrupted action refuted");
  }
  for (int it = 0; it < 30; ++it) {
    BasisCandidate basis = rnd.automorphic_basis(ctx, 8);
    h.require(is_basis(basis), "automorphic image is a basis");
    h.require(!is_basis(rnd.corrupted(basis)), "corrupted image is not a basis");
  }
}

void interp_checks(Harness& h, Sampler& rnd) {
  GroupContext ctx(2, 2);
  for (int it = 0; it < 300; ++it) {
    WreathElement g = rnd.element(ctx, 3, 2, 2, 5);
    h.require(delta_decode(delta_encode(g), ctx) == g, "delta roundtrip");
  }
  for (int it = 0; it < 100; ++it) {
    WreathElement g = rnd.element(ctx, 2, 2, 2, 4), x = rnd.element(ctx, 2, 2, 2, 4);
    h.require(tuple_mul(delta_encode(g), delta_encode(x), ctx) == delta_encode(mul(g, x)),
              "delta is a homomorphism");
  }
  WreathElement a1 = WreathElement::top_generator(ctx, 1);
  for (int k = -15; k <= 15; ++k)
    for (int l = -15; l <= 15; ++l) {
      IntAsPower x{a1, k}, y{a1, l};
      h.require(gamma_add(x, y).exponent == k + l, "transported addition");
      h.require(gamma_mul(x, y).exponent == Int(k) * l, "transported multiplication");
      if (l != 0 && std::abs(k) <= 8 && std::abs(l) <= 8)
        h.require(gamma_divides(y, x) == (k % l == 0), "transported divisibility");
    }
  // composite roundtrip through the standard basis
  BasisCandidate std_basis;
  for (int i = 1; i <= ctx.m; ++i) std_basis.tops.push_back(WreathElement::top_generator(ctx, i));
  for (int j = 1; j <= ctx.n; ++j)
    std_basis.bottoms.push_back(WreathElement::bottom_generator(ctx, j));
  for (int it = 0; it < 100; ++it) {
    WreathElement g = rnd.element(ctx, 3, 2, 2, 5);
    IntTuple t = delta_encode(g);
    std::vector<IntAsPower> gpow, cpow;
    for (const Int& gamma : t.gamma) gpow.push_back({a1, gamma});
    for (const Int& code : t.codes) cpow.push_back({a1, code});
    h.require(lambda_G(std_basis, gpow, cpow) == g, "bi-interpretability roundtrip");
  }
}

void condensed_checks(Harness& h, Sampler& rnd) {
  std::vector<SubsetOfZ> sets = {
      SubsetOfZ::finite({}), SubsetOfZ::finite({0, 3}), SubsetOfZ::periodic(2),
      SubsetOfZ::complement(SubsetOfZ::finite({1})), SubsetOfZ::universal()};
  for (const auto& s : sets) {
    for (int i = -4; i <= 4; ++i) {
      GSElement a = GSElement::gen_a(), b = GSElement::gen_b(), t = GSElement::gen_t();
      GSElement ti = GSElement::gen_t(Int(i));
      GSElement ai = gs_conj(a, ti, s), bi = gs_conj(b, ti, s);
      h.require(gs_comm(a, ai, s).is_identity(), "[a, a^{t^i}] = 1");
      h.require(gs_comm(b, bi, s).is_identity(), "[b, b^{t^i}] = 1");
      GSElement z = gs_comm(a, bi, s);
      h.require(gs_mul(z, z, s).is_identity(), "central letters square to 1");
      h.require(gs_comm(a, z, s).is_identity() && gs_comm(b, z, s).is_identity() &&
                    gs_comm(t, z, s).is_identity(),
                "[a, b^{t^i}] is central");
      h.require(z.is_identity() == !s.contains(static_cast<long long>(i)),
                "[a, b^{t^i}] trivial iff i outside S");
    }
  }
  SubsetOfZ s0 = SubsetOfZ::finite({0});
  for (int it = 0; it < 2000; ++it) {
    GSElement x = rnd.gs_element(3, 2, 3, 3), y = rnd.gs_element(3, 2, 3, 3),
              z = rnd.gs_element(3, 2, 3, 3);
    h.require(gs_mul(gs_mul(x, y, s0), z, s0) == gs_mul(x, gs_mul(y, z, s0), s0),
              "associativity (cocycle identity)");
    h.require(gs_mul(x, gs_inv(x, s0), s0).is_identity(), "inverses");
  }
  for (const auto& s : sets) {
    auto fp = center_fingerprint(s, 4);
    std::vector<long long> expect;
    for (long long i = -4; i <= 4; ++i)
      if (!s.contains(i)) expect.push_back(i);
    h.require(fp == expect, "center fingerprint is the window complement");
  }
  // quotient by the center multiplies as Z^2 wr Z
  GroupContext qctx(1, 2);
  auto drop = [&](const GSElement& g) {
    return WreathElement(std::vector<Int>{g.t_exp},
                         std::vector<LaurentPoly>{g.a_poly, g.b_poly});
  };
  for (int it = 0; it < 500; ++it) {
    GSElement x = rnd.gs_element(3, 2, 3, 3), y = rnd.gs_element(3, 2, 3, 3);
    h.require(drop(gs_mul(x, y, s0)) == mul(drop(x), drop(y)),
              "quotient by the center is the wreath product");
  }
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::ostream& out) {
  SelftestReport report;
  Harness h(out, report);
  Sampler rnd(seed);
  h.group("laurent", [&](Harness& hh) { laurent_checks(hh, rnd); });
  h.group("encoding", [&](Harness& hh) { encoding_checks(hh, rnd); });
  h.group("wreath", [&](Harness& hh) { wreath_checks(hh, rnd); });
  h.group("lcs", [&](Harness& hh) { lcs_checks(hh, rnd); });
  h.group("definable", [&](Harness& hh) { definable_checks(hh, rnd); });
  h.group("interp", [&](Harness& hh) { interp_checks(hh, rnd); });
  h.group("condensed", [&](Harness& hh) { condensed_checks(hh, rnd); });
  out << (report.ok() ? "selftest passed" : "selftest FAILED") << ": " << report.passed
      << " checks\n";
  return report;
}

}  // namespace wrc
