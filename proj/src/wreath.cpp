#include "wrc/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace wrc {

WreathElement::WreathElement(std::vector<Int> top, std::vector<LaurentPoly> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.empty() || bottom_.empty())
    throw DomainError("BadParameter", "ranks must be >= 1");
  for (const auto& p : bottom_)
    if (p.vars() != static_cast<int>(top_.size()))
      throw DomainError("MismatchedVariableCount", "bottom coordinate ring mismatch");
}

WreathElement WreathElement::top_generator(const GroupContext& ctx, int i, Int exp) {
  if (i < 1 || i > ctx.m) throw DomainError("BadParameter", "top generator index");
  WreathElement g(ctx);
  g.top_[i - 1] = std::move(exp);
  return g;
}

WreathElement WreathElement::bottom_generator(const GroupContext& ctx, int j, Int exp) {
  if (j < 1 || j > ctx.n) throw DomainError("BadParameter", "bottom generator index");
  WreathElement g(ctx);
  g.bottom_[j - 1] = LaurentPoly::constant(ctx.m, std::move(exp));
  return g;
}

bool WreathElement::is_identity() const { return in_base() && in_top(); }

bool WreathElement::in_base() const {
  return std::all_of(top_.begin(), top_.end(), [](const Int& x) { return x == 0; });
}

bool WreathElement::in_top() const {
  return std::all_of(bottom_.begin(), bottom_.end(),
                     [](const LaurentPoly& p) { return p.is_zero(); });
}

namespace {

void check_same_group(const WreathElement& g, const WreathElement& h) {
  if (!(g.ctx() == h.ctx()))
    throw DomainError("ContextMismatch", "elements live in different groups");
}

}  // namespace

WreathElement mul(const WreathElement& g, const WreathElement& h) {
  check_same_group(g, h);
  std::vector<Int> top(g.top());
  for (size_t i = 0; i < top.size(); ++i) top[i] += h.top()[i];
  std::vector<LaurentPoly> bottom;
  bottom.reserve(g.bottom().size());
  for (size_t j = 0; j < g.bottom().size(); ++j)
    bottom.push_back(g.bottom()[j].shifted(h.top()) + h.bottom()[j]);
  return WreathElement(std::move(top), std::move(bottom));
}

WreathElement inv(const WreathElement& g) {
  std::vector<Int> top(g.top());
  for (Int& x : top) x = -x;
  std::vector<LaurentPoly> bottom;
  bottom.reserve(g.bottom().size());
  for (const auto& p : g.bottom()) bottom.push_back((-p).shifted(top));
  return WreathElement(std::move(top), std::move(bottom));
}

WreathElement conj(const WreathElement& g, const WreathElement& h) {
  return mul(mul(inv(h), g), h);
}

WreathElement comm(const WreathElement& g, const WreathElement& h) {
  return mul(inv(g), conj(g, h));
}

WreathElement module_act(const WreathElement& u, const LaurentPoly& q) {
  if (!u.in_base()) throw DomainError("NotInBaseGroup", "module action needs top = 0");
  std::vector<LaurentPoly> bottom;
  bottom.reserve(u.bottom().size());
  for (const auto& p : u.bottom()) bottom.push_back(p * q);
  return WreathElement(std::vector<Int>(u.top()), std::move(bottom));
}

WreathElement pow_by_mul(const WreathElement& g, const Int& k) {
  WreathElement base = k < 0 ? inv(g) : g;
  Int reps = k < 0 ? Int(-k) : k;
  WreathElement acc = WreathElement::identity(g.ctx());
  for (Int i = 0; i < reps; ++i) acc = mul(acc, base);
  return acc;
}

FnRepElement to_fnrep(const WreathElement& g) {
  FnRepElement f;
  f.top = g.top();
  int n = static_cast<int>(g.bottom().size());
  for (int j = 0; j < n; ++j)
    for (const auto& [mono, c] : g.bottom()[j].terms()) {
      auto [it, inserted] = f.support.emplace(mono.e, std::vector<Int>(n));
      it->second[j] = c;
    }
  return f;
}

WreathElement from_fnrep(const FnRepElement& f, const GroupContext& ctx) {
  WreathElement g(ctx);
  std::vector<LaurentPoly> bottom(ctx.n, LaurentPoly(ctx.m));
  for (const auto& [point, vec] : f.support)
    for (int j = 0; j < ctx.n; ++j)
      if (vec[j] != 0) bottom[j].add_term(Monomial(point), vec[j]);
  return WreathElement(f.top, std::move(bottom));
}

FnRepElement fnrep_mul(const FnRepElement& f1, const FnRepElement& f2) {
  if (f1.top.size() != f2.top.size())
    throw DomainError("ContextMismatch", "elements live in different groups");
  FnRepElement r;
  r.top = f1.top;
  for (size_t i = 0; i < r.top.size(); ++i) r.top[i] += f2.top[i];
  for (const auto& [point, vec] : f1.support) {
    std::vector<Int> moved = point;
    for (size_t i = 0; i < moved.size(); ++i) moved[i] += f2.top[i];
    r.support.emplace(std::move(moved), vec);
  }
  for (const auto& [point, vec] : f2.support) {
    auto [it, inserted] = r.support.emplace(point, vec);
    if (!inserted) {
      bool all_zero = true;
      for (size_t j = 0; j < vec.size(); ++j) {
        it->second[j] += vec[j];
        if (it->second[j] != 0) all_zero = false;
      }
      if (all_zero) r.support.erase(it);
    }
  }
  return r;
}

std::string to_string(const WreathElement& g) {
  std::ostringstream out;
  bool any = false;
  for (size_t i = 0; i < g.top().size(); ++i) {
    if (g.top()[i] == 0) continue;
    if (any) out << " ";
    out << "a" << (i + 1);
    if (g.top()[i] != 1) out << "^" << g.top()[i];
    any = true;
  }
  if (!any) out << "1";
  out << " |";
  for (size_t j = 0; j < g.bottom().size(); ++j)
    out << (j == 0 ? " " : " ; ") << to_string(g.bottom()[j]);
  return out.str();
}

WreathElement parse_element(std::string_view text, const GroupContext& ctx) {
  size_t bar = text.find('|');
  std::string top_part(text.substr(0, bar == std::string_view::npos ? text.size() : bar));
  std::string bottom_part(bar == std::string_view::npos ? "" : text.substr(bar + 1));

  std::vector<Int> top(ctx.m);
  {
    // factors separated by whitespace or '*'; "1" (or nothing) is trivial
    std::string tok;
    std::vector<std::string> toks;
    for (char c : top_part) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        if (!tok.empty()) toks.push_back(std::exchange(tok, ""));
      } else {
        tok += c;
      }
    }
    if (!tok.empty()) toks.push_back(tok);
    for (const auto& t : toks) {
      if (t == "1") continue;
      LaurentPoly p = parse_poly(t, ctx.m);
      if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw ParseError("top part must be a product of generator powers: " + t);
      const Monomial& mono = p.terms().begin()->first;
      for (int i = 0; i < ctx.m; ++i) top[i] += mono.e[i];
    }
  }

  std::vector<LaurentPoly> bottom(ctx.n, LaurentPoly(ctx.m));
  {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : bottom_part) {
      if (c == ';') {
        parts.push_back(std::exchange(cur, ""));
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    auto blank = [](const std::string& s) {
      return std::all_of(s.begin(), s.end(),
                         [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    };
    if (parts.size() == 1 && blank(parts[0])) {
      // omitted bottom: the element lies in A
    } else {
      if (static_cast<int>(parts.size()) != ctx.n)
        throw ParseError("expected " + std::to_string(ctx.n) + " bottom coordinates");
      for (int j = 0; j < ctx.n; ++j) bottom[j] = parse_poly(parts[j], ctx.m);
    }
  }
  return WreathElement(std::move(top), std::move(bottom));
}

}  // namespace wrc
