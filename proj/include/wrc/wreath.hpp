#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wrc/laurent.hpp"

namespace wrc {

// Ranks of the two free abelian factors of G = Z^n wr Z^m: A = Z^m on top
// (basis a1..am), B = Z^n at the bottom (basis b1..bn).
struct GroupContext {
  int m;
  int n;

  GroupContext(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw DomainError("BadParameter", "ranks must be >= 1");
  }
  bool operator==(const GroupContext& o) const { return m == o.m && n == o.n; }
};

// Normal form g = a1^g1 ... am^gm b1^P1 ... bn^Pn with gi in Z and Pj in ZA.
class WreathElement {
 public:
  explicit WreathElement(const GroupContext& ctx)
      : top_(ctx.m), bottom_(ctx.n, LaurentPoly(ctx.m)) {}
  WreathElement(std::vector<Int> top, std::vector<LaurentPoly> bottom);

  static WreathElement identity(const GroupContext& ctx) { return WreathElement(ctx); }
  static WreathElement top_generator(const GroupContext& ctx, int i, Int exp = 1);
  static WreathElement bottom_generator(const GroupContext& ctx, int j, Int exp = 1);

  GroupContext ctx() const {
    return GroupContext(static_cast<int>(top_.size()), static_cast<int>(bottom_.size()));
  }
  const std::vector<Int>& top() const { return top_; }
  const std::vector<LaurentPoly>& bottom() const { return bottom_; }

  bool is_identity() const;
  bool in_base() const;  // g in N, i.e. top == 0
  bool in_top() const;   // g in A, i.e. bottom == 0

  bool operator==(const WreathElement& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_;
  }
  bool operator!=(const WreathElement& o) const { return !(*this == o); }

 private:
  std::vector<Int> top_;
  std::vector<LaurentPoly> bottom_;
};

WreathElement mul(const WreathElement& g, const WreathElement& h);
WreathElement inv(const WreathElement& g);
// h^-1 g h
WreathElement conj(const WreathElement& g, const WreathElement& h);
// g^-1 h^-1 g h
WreathElement comm(const WreathElement& g, const WreathElement& h);

// The ZA-module action on N: every bottom coordinate is multiplied by q.
// Agrees with iterated conjugation when q is a monomial.
WreathElement module_act(const WreathElement& u, const LaurentPoly& q);

// Repeated-multiplication power; the independent oracle for the
// division-based exponentiation routines.
WreathElement pow_by_mul(const WreathElement& g, const Int& k);

// The base group as finitely supported functions Z^m -> Z^n, multiplied with
// the shift action directly. This representation is computed independently of
// the normal-form product and serves as its oracle.
struct FnRepElement {
  std::vector<Int> top;
  std::map<std::vector<Int>, std::vector<Int>> support;  // point -> nonzero vector

  bool operator==(const FnRepElement& o) const {
    return top == o.top && support == o.support;
  }
};

FnRepElement to_fnrep(const WreathElement& g);
WreathElement from_fnrep(const FnRepElement& f, const GroupContext& ctx);
// (g1, f1)(g2, f2) = (g1 + g2, shift(f1, g2) + f2), where shift(f, d) moves
// every support point by +d. This orientation is the one under which the
// representation is isomorphic to the normal forms.
FnRepElement fnrep_mul(const FnRepElement& f1, const FnRepElement& f2);

// Text form `a1^2 a2^-3 | P1 ; P2 ; ...`; "1" denotes the trivial top part.
std::string to_string(const WreathElement& g);
WreathElement parse_element(std::string_view text, const GroupContext& ctx);

}  // namespace wrc
