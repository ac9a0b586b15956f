#include "wrc/condensed.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace wrc {

namespace {

// Lazily extended prefix of the universal sequence: all binary words in
// length-lex order, concatenated.
class UniversalBits {
 public:
  bool bit(long long k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (k < 0) throw DomainError("BadParameter", "universal sequence index");
    if (k > (1LL << 26))
      throw DomainError("SearchBudgetExceeded", "universal sequence query over cap");
    while (static_cast<long long>(bits_.size()) <= k) append_next_word();
    return bits_[static_cast<size_t>(k)] != 0;
  }

 private:
  void append_next_word() {
    for (int pos = len_ - 1; pos >= 0; --pos)
      bits_.push_back(static_cast<char>((word_ >> pos) & 1));
    if (++word_ == (1LL << len_)) {
      word_ = 0;
      ++len_;
    }
  }

  std::mutex mu_;
  std::vector<char> bits_;
  int len_ = 1;
  long long word_ = 0;
};

UniversalBits& universal_bits() {
  static UniversalBits instance;
  return instance;
}

long long euclid_mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

struct SubsetOfZ::Impl {
  enum class Kind { Finite, Periodic, Complement, Shift, Universal };
  Kind kind;
  std::set<long long> elems;
  long long param = 0;
  std::shared_ptr<const Impl> child;
};

SubsetOfZ SubsetOfZ::finite(std::set<long long> elems) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Finite;
  impl->elems = std::move(elems);
  return SubsetOfZ(std::move(impl));
}

SubsetOfZ SubsetOfZ::periodic(long long period) {
  if (period < 1) throw DomainError("BadParameter", "period must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Periodic;
  impl->param = period;
  return SubsetOfZ(std::move(impl));
}

SubsetOfZ SubsetOfZ::complement(SubsetOfZ s) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Complement;
  impl->child = std::move(s.impl_);
  return SubsetOfZ(std::move(impl));
}

SubsetOfZ SubsetOfZ::shifted(SubsetOfZ s, long long n) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Shift;
  impl->param = n;
  impl->child = std::move(s.impl_);
  return SubsetOfZ(std::move(impl));
}

SubsetOfZ SubsetOfZ::universal() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Universal;
  return SubsetOfZ(std::move(impl));
}

bool SubsetOfZ::contains(long long i) const {
  const Impl* node = impl_.get();
  bool flip = false;
  while (true) {
    switch (node->kind) {
      case Impl::Kind::Finite:
        return flip != (node->elems.count(i) > 0);
      case Impl::Kind::Periodic:
        return flip != (euclid_mod(i, node->param) == 0);
      case Impl::Kind::Complement:
        flip = !flip;
        node = node->child.get();
        break;
      case Impl::Kind::Shift:
        i += node->param;  // i in n o S  iff  i + n in S
        node = node->child.get();
        break;
      case Impl::Kind::Universal:
        return flip != universal_bits().bit(i < 0 ? -i : i);
    }
  }
}

bool SubsetOfZ::contains(const Int& i) const {
  if (i > (1LL << 60) || i < -(1LL << 60))
    throw DomainError("SearchBudgetExceeded", "set membership index out of range");
  return contains(i.convert_to<long long>());
}

std::string SubsetOfZ::spec() const {
  switch (impl_->kind) {
    case Impl::Kind::Finite: {
      std::ostringstream out;
      out << "finite:{";
      bool first = true;
      for (long long e : impl_->elems) {
        if (!first) out << ",";
        out << e;
        first = false;
      }
      out << "}";
      return out.str();
    }
    case Impl::Kind::Periodic:
      return "periodic:" + std::to_string(impl_->param);
    case Impl::Kind::Complement:
      return "complement:" + SubsetOfZ(impl_->child).spec();
    case Impl::Kind::Shift:
      return "shift:" + std::to_string(impl_->param) + ":" + SubsetOfZ(impl_->child).spec();
    case Impl::Kind::Universal:
      return "universal";
  }
  return "";
}

SubsetOfZ SubsetOfZ::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> SubsetOfZ {
    throw ParseError("set spec '" + std::string(text) + "': " + why);
  };
  if (text == "universal") return universal();
  if (text.rfind("finite:", 0) == 0) {
    std::string_view body = text.substr(7);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      return fail("expected finite:{...}");
    body = body.substr(1, body.size() - 2);
    std::set<long long> elems;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      elems.insert(std::stoll(cur));
      cur.clear();
    };
    for (char c : body) {
      if (c == ',')
        flush();
      else if (!std::isspace(static_cast<unsigned char>(c)))
        cur += c;
    }
    flush();
    return finite(std::move(elems));
  }
  if (text.rfind("periodic:", 0) == 0)
    return periodic(std::stoll(std::string(text.substr(9))));
  if (text.rfind("complement:", 0) == 0) return complement(parse(text.substr(11)));
  if (text.rfind("shift:", 0) == 0) {
    std::string_view rest = text.substr(6);
    size_t colon = rest.find(':');
    if (colon == std::string_view::npos) return fail("expected shift:<n>:<spec>");
    long long n = std::stoll(std::string(rest.substr(0, colon)));
    return shifted(parse(rest.substr(colon + 1)), n);
  }
  return fail("unknown constructor");
}

GSElement GSElement::gen_t(Int e) {
  GSElement g;
  g.t_exp = std::move(e);
  return g;
}

GSElement GSElement::gen_a(Int coeff) {
  GSElement g;
  g.a_poly = LaurentPoly::constant(1, std::move(coeff));
  return g;
}

GSElement GSElement::gen_b(Int index, Int coeff) {
  GSElement g;
  g.b_poly = LaurentPoly::monomial(Monomial(std::vector<Int>{std::move(index)}),
                                   std::move(coeff));
  return g;
}

GSElement GSElement::gen_c() {
  GSElement g;
  g.center_bit = 1;
  return g;
}

bool GSElement::is_identity() const {
  return t_exp == 0 && a_poly.is_zero() && b_poly.is_zero() && center_bit == 0;
}

bool gs_less(const GSElement& x, const GSElement& y) {
  if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp;
  if (x.a_poly != y.a_poly) return poly_less(x.a_poly, y.a_poly);
  if (x.b_poly != y.b_poly) return poly_less(x.b_poly, y.b_poly);
  return x.center_bit < y.center_bit;
}

int gs_cocycle(const LaurentPoly& b_part, const LaurentPoly& a_part, const SubsetOfZ& s) {
  Int acc = 0;
  for (const auto& [jm, q] : b_part.terms())
    for (const auto& [im, p] : a_part.terms())
      if (s.contains(Int(jm.e[0] - im.e[0]))) acc += p * q;
  return static_cast<int>(((acc % 2) + 2) % 2);
}

GSElement gs_mul(const GSElement& x, const GSElement& y, const SubsetOfZ& s) {
  std::vector<Int> shift{y.t_exp};
  GSElement r;
  r.t_exp = x.t_exp + y.t_exp;
  LaurentPoly xa = x.a_poly.shifted(shift);
  LaurentPoly xb = x.b_poly.shifted(shift);
  r.a_poly = xa + y.a_poly;
  r.b_poly = xb + y.b_poly;
  // moving x's b-letters leftward past y's a-letters picks up the cocycle
  r.center_bit = (x.center_bit + y.center_bit + gs_cocycle(xb, y.a_poly, s)) % 2;
  return r;
}

GSElement gs_inv(const GSElement& x, const SubsetOfZ& s) {
  std::vector<Int> shift{-x.t_exp};
  GSElement r;
  r.t_exp = -x.t_exp;
  r.a_poly = (-x.a_poly).shifted(shift);
  r.b_poly = (-x.b_poly).shifted(shift);
  r.center_bit = (x.center_bit + gs_cocycle(x.b_poly, x.a_poly, s)) % 2;
  return r;
}

GSElement gs_conj(const GSElement& x, const GSElement& y, const SubsetOfZ& s) {
  return gs_mul(gs_mul(gs_inv(y, s), x, s), y, s);
}

GSElement gs_comm(const GSElement& x, const GSElement& y, const SubsetOfZ& s) {
  return gs_mul(gs_mul(gs_inv(x, s), gs_inv(y, s), s), gs_mul(x, y, s), s);
}

GSElement gs_eval_word(std::string_view word, const SubsetOfZ& s) {
  GSElement acc = GSElement::identity();
  for (char c : word) {
    GSElement g;
    switch (c) {
      case 'a': g = GSElement::gen_a(); break;
      case 'A': g = GSElement::gen_a(-1); break;
      case 'b': g = GSElement::gen_b(); break;
      case 'B': g = GSElement::gen_b(0, -1); break;
      case 't': g = GSElement::gen_t(); break;
      case 'T': g = GSElement::gen_t(-1); break;
      case 'c': g = GSElement::gen_c(); break;
      case '1': continue;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        throw ParseError(std::string("unknown word letter '") + c + "'");
    }
    acc = gs_mul(acc, g, s);
  }
  return acc;
}

std::string to_string(const GSElement& g) {
  std::ostringstream out;
  out << "t^" << g.t_exp << " | a: " << to_string(g.a_poly, {"t"})
      << " | b: " << to_string(g.b_poly, {"t"}) << " | c^" << g.center_bit;
  return out.str();
}

std::vector<long long> center_fingerprint(const SubsetOfZ& s, int radius) {
  if (radius < 0) throw DomainError("BadParameter", "radius must be >= 0");
  std::vector<long long> trivial;
  GSElement a = GSElement::gen_a();
  for (long long i = -radius; i <= radius; ++i)
    if (gs_comm(a, GSElement::gen_b(Int(i)), s).is_identity()) trivial.push_back(i);
  return trivial;
}

BallFingerprint ball_fingerprint(const SubsetOfZ& s, int radius, const GSMarking& marking,
                                 int radius_cap) {
  if (radius < 0) throw DomainError("BadParameter", "radius must be >= 0");
  if (radius > radius_cap)
    throw DomainError("RadiusTooLarge", "ball radius exceeds the configured cap");

  std::vector<GSElement> letters = {marking.a, gs_inv(marking.a, s), marking.b,
                                    gs_inv(marking.b, s), marking.t, gs_inv(marking.t, s)};
  // normal forms of all words in length-lex order (letters ordered as above)
  std::vector<GSElement> forms{GSElement::identity()};
  std::vector<GSElement> level{GSElement::identity()};
  for (int len = 1; len <= radius; ++len) {
    std::vector<GSElement> next;
    next.reserve(level.size() * letters.size());
    for (const auto& e : level)
      for (const auto& l : letters) next.push_back(gs_mul(e, l, s));
    forms.insert(forms.end(), next.begin(), next.end());
    level = std::move(next);
  }

  BallFingerprint fp;
  fp.radius = radius;
  fp.partition.resize(forms.size());
  std::map<GSElement, int, decltype(&gs_less)> first_seen(&gs_less);
  for (size_t i = 0; i < forms.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(forms[i], static_cast<int>(i));
    fp.partition[i] = it->second;
    if (inserted) ++fp.classes;
  }
  return fp;
}

bool iso_check(const SubsetOfZ& s, long long n, int radius, int radius_cap) {
  GSMarking shifted_marking;
  shifted_marking.b = GSElement::gen_b(Int(n));
  BallFingerprint lhs = ball_fingerprint(s, radius, shifted_marking, radius_cap);
  BallFingerprint rhs = ball_fingerprint(SubsetOfZ::shifted(s, n), radius, GSMarking{},
                                         radius_cap);
  return lhs == rhs;
}

std::optional<long long> injectivity_witness(const SubsetOfZ& s, const SubsetOfZ& t,
                                             long long window) {
  auto check = [&](long long i) -> bool { return s.contains(i) != t.contains(i); };
  auto verified = [&](long long i) -> long long {
    GSElement a = GSElement::gen_a();
    GSElement bi = GSElement::gen_b(Int(i));
    bool trivial_s = gs_comm(a, bi, s).is_identity();
    bool trivial_t = gs_comm(a, bi, t).is_identity();
    if (trivial_s == trivial_t)
      throw DomainError("VerificationFailed", "separation index does not separate");
    return i;
  };
  if (check(0)) return verified(0);
  for (long long i = 1; i <= window; ++i) {
    if (check(i)) return verified(i);
    if (check(-i)) return verified(-i);
  }
  return std::nullopt;
}

DemoReport condensation_demo(const SubsetOfZ& s, int r_max, long long shift_budget,
                             long long witness_budget, int radius_cap) {
  DemoReport report;
  report.set_spec = s.spec();
  for (int r = 1; r <= r_max; ++r) {
    DemoRow row;
    row.radius = r;
    const long long window = 2LL * r;
    auto agrees = [&](long long n) {
      for (long long i = -window; i <= window; ++i)
        if (s.contains(i) != s.contains(i + n)) return false;
      return true;
    };
    for (long long k = 1; k <= shift_budget && !row.found; ++k) {
      if (agrees(k)) {
        row.found = true;
        row.shift = k;
      } else if (agrees(-k)) {
        row.found = true;
        row.shift = -k;
      }
    }
    if (row.found) {
      row.agreement_window = window;
      SubsetOfZ moved = SubsetOfZ::shifted(s, row.shift);
      row.fingerprints_equal =
          ball_fingerprint(s, r, GSMarking{}, radius_cap) ==
          ball_fingerprint(moved, r, GSMarking{}, radius_cap);
      for (long long w = window + 1; w <= witness_budget && !row.separation_index; w *= 2)
        row.separation_index = injectivity_witness(s, moved, w);
    } else {
      report.all_found = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wrc
