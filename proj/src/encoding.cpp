#include "wrc/encoding.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace wrc {

Int pair_encode(const Int& x, const Int& y) {
  if (x < 0 || y < 0) throw DomainError("BadParameter", "pairing needs naturals");
  Int s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Int, Int> pair_decode(const Int& z) {
  if (z < 0) throw DomainError("BadParameter", "pairing needs naturals");
  Int w = (boost::multiprecision::sqrt(8 * z + 1) - 1) / 2;
  Int t = w * (w + 1) / 2;
  Int y = z - t;
  return {w - y, y};
}

Int zigzag(const Int& z) { return z >= 0 ? Int(2 * z) : Int(-2 * z - 1); }

Int unzigzag(const Int& n) {
  if (n < 0) throw DomainError("BadParameter", "zigzag codes are naturals");
  return n % 2 == 0 ? Int(n / 2) : Int(-(n + 1) / 2);
}

Int tuple_encode(const std::vector<Int>& v) {
  if (v.empty()) throw DomainError("BadParameter", "cannot encode the empty tuple");
  Int acc = zigzag(v.back());
  for (size_t i = v.size() - 1; i-- > 0;) acc = pair_encode(zigzag(v[i]), acc);
  return pair_encode(Int(v.size()) - 1, acc);
}

std::vector<Int> tuple_decode(const Int& k) {
  auto [len_minus_1, fold] = pair_decode(k);
  if (len_minus_1 > (Int(1) << 22))
    throw DomainError("TupleTooLong", "decoded tuple length over cap");
  size_t len = len_minus_1.convert_to<size_t>() + 1;
  std::vector<Int> v(len);
  Int acc = fold;
  for (size_t i = 0; i + 1 < len; ++i) {
    auto [head, rest] = pair_decode(acc);
    v[i] = unzigzag(head);
    acc = rest;
  }
  v[len - 1] = unzigzag(acc);
  return v;
}

Int nu_encode(const LaurentPoly& q) {
  int m = q.vars();
  CanonicalFraction cf = canonical_fraction(q);
  std::vector<Int> u;
  if (cf.numerator.is_zero()) {
    u.assign(m + 1, Int(0));  // pseudo-term for the zero polynomial
  } else {
    u.reserve(cf.numerator.term_count() * (m + 1));
    for (const auto& [mono, c] : cf.numerator.terms()) {
      u.push_back(c);
      u.insert(u.end(), mono.e.begin(), mono.e.end());
    }
  }
  return pair_encode(tuple_encode(u), tuple_encode(cf.denominator_exponents));
}

std::optional<LaurentPoly> nu_decode(const Int& code, int vars) {
  if (code < 0 || vars < 1) return std::nullopt;
  std::vector<Int> u, v;
  try {
    auto [ku, kv] = pair_decode(code);
    u = tuple_decode(ku);
    v = tuple_decode(kv);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  size_t m = static_cast<size_t>(vars);
  if (v.size() != m) return std::nullopt;
  for (const Int& b : v)
    if (b < 0) return std::nullopt;
  if (u.empty() || u.size() % (m + 1) != 0) return std::nullopt;
  size_t d = u.size() / (m + 1);

  LaurentPoly numerator(vars);
  Monomial prev;
  for (size_t t = 0; t < d; ++t) {
    const Int& c = u[t * (m + 1)];
    Monomial mono(std::vector<Int>(u.begin() + t * (m + 1) + 1, u.begin() + (t + 1) * (m + 1)));
    if (!mono.is_ordinary()) return std::nullopt;
    if (c == 0) {
      // only the zero polynomial's pseudo-term (0, 0...0) may carry a zero
      // coefficient, and then beta must be zero too
      bool zero_form = d == 1 && mono.is_identity();
      for (const Int& b : v)
        if (b != 0) zero_form = false;
      if (!zero_form) return std::nullopt;
      return LaurentPoly::zero(vars);
    }
    if (t > 0 && !deglex_less(mono, prev)) return std::nullopt;  // must be strictly descending
    numerator.add_term(mono, c);
    prev = std::move(mono);
  }

  // minimality of the denominator: gcd(P, a^beta) = 1
  for (size_t i = 0; i < m; ++i) {
    if (v[i] == 0) continue;
    bool touches_zero = false;
    for (const auto& [mono, c] : numerator.terms())
      if (mono.e[i] == 0) {
        touches_zero = true;
        break;
      }
    if (!touches_zero) return std::nullopt;
  }

  std::vector<Int> neg(v);
  for (Int& b : neg) b = -b;
  return numerator.shifted(neg);
}

}  // namespace wrc
