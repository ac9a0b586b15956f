#include "wrc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wrc {

Int Monomial::total_degree() const {
  Int d = 0;
  for (const Int& x : e) d += x;
  return d;
}

bool Monomial::is_identity() const {
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
}

bool Monomial::is_ordinary() const {
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x >= 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e.size() != o.e.size())
    throw DomainError("MismatchedVariableCount", "monomial product across rings");
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (Int& x : r.e) x = -x;
  return r;
}

bool deglex_less(const Monomial& x, const Monomial& y) {
  Int dx = x.total_degree(), dy = y.total_degree();
  if (dx != dy) return dx < dy;
  return std::lexicographical_compare(x.e.begin(), x.e.end(), y.e.begin(), y.e.end());
}

LaurentPoly LaurentPoly::constant(int vars, Int c) {
  LaurentPoly p(vars);
  p.add_term(Monomial::identity(vars), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int vars, int i, Int exp) {
  if (i < 1 || i > vars) throw DomainError("BadParameter", "variable index out of range");
  std::vector<Int> e(vars);
  e[i - 1] = exp;
  return monomial(Monomial(std::move(e)));
}

LaurentPoly LaurentPoly::monomial(Monomial mono, Int coeff) {
  LaurentPoly p(mono.vars());
  p.add_term(mono, coeff);
  return p;
}

bool LaurentPoly::is_ordinary() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_ordinary(); });
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Int LaurentPoly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::coefficient_sum() const {
  Int s = 0;
  for (const auto& [mono, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const Monomial& mono, const Int& c) {
  if (mono.vars() != vars_)
    throw DomainError("MismatchedVariableCount", "term arity does not match ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (vars_ != o.vars_)
    throw DomainError("MismatchedVariableCount", "operands live in different rings");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_ring(o);
  LaurentPoly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same_ring(o);
  LaurentPoly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_ring(o);
  LaurentPoly r(vars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [mono, k] : terms_) r.terms_.emplace(mono, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const std::vector<Int>& delta) const {
  if (static_cast<int>(delta.size()) != vars_)
    throw DomainError("MismatchedVariableCount", "shift arity does not match ring");
  LaurentPoly r(vars_);
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    for (int i = 0; i < vars_; ++i) m.e[i] += delta[i];
    r.terms_.emplace(std::move(m), c);
  }
  return r;
}

bool poly_less(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.vars() != y.vars()) return x.vars() < y.vars();
  auto a = x.terms().begin(), ae = x.terms().end();
  auto b = y.terms().begin(), be = y.terms().end();
  for (; a != ae && b != be; ++a, ++b) {
    if (a->first != b->first) return deglex_less(b->first, a->first);
    if (a->second != b->second) return a->second < b->second;
  }
  return a == ae && b != be;
}

std::pair<Monomial, Int> deglex_leading_term(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "leading term of 0");
  if (!p.is_ordinary())
    throw DomainError("NegativeExponent", "leading term needs an ordinary polynomial");
  const auto& lead = *p.terms().begin();
  return {lead.first, lead.second};
}

CanonicalFraction canonical_fraction(const LaurentPoly& q) {
  std::vector<Int> beta(q.vars());
  for (const auto& [mono, c] : q.terms())
    for (int i = 0; i < q.vars(); ++i)
      if (-mono.e[i] > beta[i]) beta[i] = -mono.e[i];
  return {q.shifted(beta), beta};
}

std::optional<LaurentPoly> binomial_divide(const LaurentPoly& q, const Monomial& sigma) {
  if (sigma.vars() != q.vars())
    throw DomainError("MismatchedVariableCount", "divisor arity does not match ring");
  if (sigma.is_identity())
    throw DomainError("BadParameter", "division by a^0 - 1 = 0");

  Int sigsq = 0;
  for (const Int& s : sigma.e) sigsq += s * s;

  // coset residue -> (coset position t -> coefficient)
  std::map<std::vector<Int>, std::map<Int, Int>> cosets;
  for (const auto& [mono, c] : q.terms()) {
    Int dot = 0;
    for (int i = 0; i < q.vars(); ++i) dot += mono.e[i] * sigma.e[i];
    Int t = floor_div(dot, sigsq);
    std::vector<Int> r(q.vars());
    for (int i = 0; i < q.vars(); ++i) r[i] = mono.e[i] - t * sigma.e[i];
    cosets[std::move(r)][t] = c;
  }

  const Int kQuotientTermCap = 4000000;
  LaurentPoly w(q.vars());
  Int emitted = 0;
  for (const auto& [r, line] : cosets) {
    Int total = 0;
    for (const auto& [t, c] : line) total += c;
    if (total != 0) return std::nullopt;
    // w_t = -(prefix sum through t); constant between consecutive stored t's.
    Int running = 0;
    for (auto it = line.begin(); it != line.end(); ++it) {
      running += it->second;
      auto next = std::next(it);
      if (next == line.end()) break;  // running == 0 here
      if (running == 0) continue;
      emitted += next->first - it->first;
      if (emitted > kQuotientTermCap)
        throw DomainError("QuotientTooLarge", "binomial quotient exceeds term cap");
      for (Int t = it->first; t < next->first; ++t) {
        std::vector<Int> e = r;
        for (int i = 0; i < q.vars(); ++i) e[i] += t * sigma.e[i];
        w.add_term(Monomial(std::move(e)), -running);
      }
    }
  }
  return w;
}

namespace {

Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp == 0) return Rat(1);
  Int mag = exp < 0 ? Int(-exp) : exp;
  if (mag > 1000000) throw DomainError("ExponentTooLarge", "evaluation exponent over cap");
  Rat acc(1), b = base;
  unsigned long k = mag.convert_to<unsigned long>();
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (exp < 0) return Rat(1) / acc;
  return acc;
}

}  // namespace

std::optional<Rat> evaluate(const LaurentPoly& p, const std::vector<Int>& alpha) {
  if (static_cast<int>(alpha.size()) != p.vars())
    throw DomainError("MismatchedVariableCount", "evaluation point arity");
  Rat acc(0);
  for (const auto& [mono, c] : p.terms()) {
    Rat v(c);
    for (int i = 0; i < p.vars(); ++i) {
      if (mono.e[i] == 0) continue;
      if (alpha[i] == 0) {
        if (mono.e[i] < 0) return std::nullopt;
        v = 0;
        continue;
      }
      v *= rat_pow(Rat(alpha[i]), mono.e[i]);
    }
    acc += v;
  }
  return acc;
}

LaurentPoly expand_about_one(const LaurentPoly& ordinary) {
  if (!ordinary.is_ordinary())
    throw DomainError("NegativeExponent", "expansion requires an ordinary polynomial");
  int m = ordinary.vars();
  LaurentPoly acc(m);
  for (const auto& [mono, c] : ordinary.terms()) {
    LaurentPoly prod = LaurentPoly::constant(m, c);
    for (int i = 0; i < m; ++i) {
      if (mono.e[i] == 0) continue;
      // (a_i + 1)^e via the binomial theorem
      LaurentPoly binom(m);
      Int e = mono.e[i];
      Int binc = 1;
      for (Int k = 0; k <= e; ++k) {
        binom.add_term(Monomial([&] {
                         std::vector<Int> ee(m);
                         ee[i] = k;
                         return ee;
                       }()),
                       binc);
        binc = binc * (e - k) / (k + 1);
      }
      prod *= binom;
    }
    acc += prod;
  }
  return acc;
}

std::optional<Int> delta_degree(const LaurentPoly& q) {
  if (q.is_zero()) return std::nullopt;
  // Monomials are units congruent to 1 mod Delta, so clearing denominators
  // does not change the filtration level.
  LaurentPoly shifted = expand_about_one(canonical_fraction(q).numerator);
  Int best = 0;
  bool first = true;
  for (const auto& [mono, c] : shifted.terms()) {
    Int d = mono.total_degree();
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

std::vector<Int> discriminate(const std::vector<LaurentPoly>& polys, int box_budget) {
  if (polys.empty()) throw DomainError("BadParameter", "empty input list");
  int m = polys[0].vars();
  for (const auto& p : polys)
    if (p.vars() != m)
      throw DomainError("MismatchedVariableCount", "mixed rings in discrimination input");
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j)
      if (polys[i] == polys[j])
        throw DomainError("BadParameter", "discrimination input must be pairwise distinct");

  for (int box = 1; box <= box_budget; box *= 2) {
    std::vector<Int> alpha(m, Int(-box));
    while (true) {
      std::vector<Rat> vals;
      vals.reserve(polys.size());
      bool distinct = true;
      for (const auto& p : polys) {
        auto v = evaluate(p, alpha);
        vals.push_back(*v);  // always defined: no zero coordinates
      }
      for (size_t i = 0; i < vals.size() && distinct; ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
          if (vals[i] == vals[j]) {
            distinct = false;
            break;
          }
      if (distinct) return alpha;
      int i = 0;
      for (; i < m; ++i) {
        alpha[i] += 1;
        if (alpha[i] == 0) alpha[i] = 1;  // skip zero coordinates
        if (alpha[i] <= box) break;
        alpha[i] = -box;
      }
      if (i == m) break;
    }
  }
  throw DomainError("SearchBudgetExceeded", "no discriminating point within budget");
}

namespace {

std::string var_name(int i, const std::vector<std::string>& names) {
  if (i < static_cast<int>(names.size())) return names[i];
  return "a" + std::to_string(i + 1);
}

void print_monomial_factors(std::ostringstream& out, const Monomial& mono,
                            const std::vector<std::string>& names, bool* any) {
  for (int i = 0; i < mono.vars(); ++i) {
    if (mono.e[i] == 0) continue;
    if (*any) out << "*";
    out << var_name(i, names);
    if (mono.e[i] != 1) out << "^" << mono.e[i];
    *any = true;
  }
}

}  // namespace

std::string to_string(const LaurentPoly& q, const std::vector<std::string>& names) {
  CanonicalFraction cf = canonical_fraction(q);
  if (cf.numerator.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : cf.numerator.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any = false;
    if (mag != 1 || mono.is_identity()) {
      out << mag;
      any = true;
    }
    print_monomial_factors(out, mono, names, &any);
  }
  Monomial beta(cf.denominator_exponents);
  if (!beta.is_identity()) {
    out << " / ";
    bool any = false;
    print_monomial_factors(out, beta, names, &any);
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int vars) : s_(s), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = parse_sum();
    skip_ws();
    if (accept('/')) {
      Monomial beta = parse_monomial_product();
      if (!beta.is_ordinary()) throw ParseError("denominator exponents must be positive");
      p = p.shifted(beta.inverse().e);
    }
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
    return p;
  }

 private:
  LaurentPoly parse_sum() {
    LaurentPoly acc(vars_);
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    acc += parse_term(neg);
    while (true) {
      skip_ws();
      if (accept('+'))
        acc += parse_term(false);
      else if (accept('-'))
        acc += parse_term(true);
      else
        break;
    }
    return acc;
  }

  LaurentPoly parse_term(bool negated) {
    skip_ws();
    Int coeff = 1;
    bool have_num = false, have_var = false;
    std::vector<Int> exps(vars_);
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = parse_natural();
      have_num = true;
    }
    while (true) {
      skip_ws();
      size_t save = pos_;
      if ((have_num || have_var) && !accept('*')) {
        // allow juxtaposition only before a variable
        if (!(pos_ < s_.size() && s_[pos_] == 'a')) break;
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'a') {
        auto [idx, e] = parse_factor();
        exps[idx] += e;
        have_var = true;
      } else {
        pos_ = save;
        break;
      }
    }
    if (!have_num && !have_var) throw ParseError("expected a term at offset " + std::to_string(pos_));
    if (negated) coeff = -coeff;
    LaurentPoly t(vars_);
    t.add_term(Monomial(std::move(exps)), coeff);
    return t;
  }

  Monomial parse_monomial_product() {
    std::vector<Int> exps(vars_);
    bool any = false;
    while (true) {
      skip_ws();
      if (any && !accept('*')) break;
      skip_ws();
      if (!(pos_ < s_.size() && s_[pos_] == 'a')) {
        if (any) throw ParseError("expected a variable after '*'");
        break;
      }
      auto [idx, e] = parse_factor();
      exps[idx] += e;
      any = true;
    }
    if (!any) throw ParseError("expected a monomial denominator");
    return Monomial(std::move(exps));
  }

  std::pair<int, Int> parse_factor() {
    expect('a');
    if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
      throw ParseError("expected a variable index");
    Int idx = parse_natural();
    if (idx < 1 || idx > vars_) throw ParseError("variable index out of range: a" + idx.str());
    Int e = 1;
    if (accept('^')) {
      bool neg = accept('-');
      if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        throw ParseError("expected an exponent");
      e = parse_natural();
      if (neg) e = -e;
    }
    return {idx.convert_to<int>() - 1, e};
  }

  Int parse_natural() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'");
  }

  std::string_view s_;
  int vars_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, int vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace wrc
