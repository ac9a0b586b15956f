// wrcalc: exact arithmetic in Z^n wr Z^m, polynomial integer codes, the
// definable-predicate decision procedures, and the G_S marked-group tools,
// exposed as one batch-friendly command.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrc/condensed.hpp"
#include "wrc/definable.hpp"
#include "wrc/encoding.hpp"
#include "wrc/interp.hpp"
#include "wrc/lcs.hpp"
#include "wrc/sampling.hpp"
#include "wrc/selftest.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  int m = 1;
  int n = 1;
  std::uint64_t seed = 0;
  int radius = 2;
  int radius_cap = wrc::kDefaultBallRadiusCap;
  long long budget = 1 << 23;
  int box_budget = 64;
  std::string format = "text";
  std::string set_spec = "universal";

  wrc::GroupContext ctx() const { return wrc::GroupContext(m, n); }
  bool is_json() const { return format == "json"; }
};

json int_to_json(const wrc::Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json element_to_json(const wrc::WreathElement& g) {
  json top = json::array(), bottom = json::array();
  for (const auto& x : g.top()) top.push_back(int_to_json(x));
  for (const auto& p : g.bottom()) bottom.push_back(wrc::to_string(p));
  return json{{"top", top}, {"bottom", bottom}};
}

wrc::Int json_to_int(const json& j) {
  if (j.is_string()) return wrc::Int(j.get<std::string>());
  return wrc::Int(j.get<std::int64_t>());
}

wrc::WreathElement parse_element_arg(const std::string& text, const wrc::GroupContext& ctx) {
  std::string trimmed = text;
  size_t first = trimmed.find_first_not_of(" \t");
  if (first != std::string::npos && trimmed[first] == '{') {
    json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded() || !j.contains("top") || !j.contains("bottom"))
      throw wrc::ParseError("malformed element record: " + text);
    std::vector<wrc::Int> top;
    for (const auto& x : j["top"]) top.push_back(json_to_int(x));
    std::vector<wrc::LaurentPoly> bottom;
    for (const auto& p : j["bottom"])
      bottom.push_back(wrc::parse_poly(p.get<std::string>(), ctx.m));
    if (static_cast<int>(top.size()) != ctx.m || static_cast<int>(bottom.size()) != ctx.n)
      throw wrc::ParseError("element record arity does not match -m/-n");
    return wrc::WreathElement(std::move(top), std::move(bottom));
  }
  return wrc::parse_element(text, ctx);
}

std::vector<wrc::Int> parse_int_list(const std::string& text) {
  std::vector<wrc::Int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.emplace_back(cur);
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '|')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

wrc::IntTuple parse_tuple_arg(const std::string& text, const wrc::GroupContext& ctx) {
  std::vector<wrc::Int> nums;
  size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("gamma") || !j.contains("codes"))
      throw wrc::ParseError("malformed tuple record: " + text);
    for (const auto& x : j["gamma"]) nums.push_back(json_to_int(x));
    for (const auto& x : j["codes"]) nums.push_back(json_to_int(x));
  } else {
    nums = parse_int_list(text);
  }
  if (static_cast<int>(nums.size()) != ctx.m + ctx.n)
    throw wrc::ParseError("expected " + std::to_string(ctx.m + ctx.n) + " integers");
  wrc::IntTuple t;
  t.gamma.assign(nums.begin(), nums.begin() + ctx.m);
  t.codes.assign(nums.begin() + ctx.m, nums.end());
  return t;
}

json tuple_to_json(const wrc::IntTuple& t) {
  json gamma = json::array(), codes = json::array();
  for (const auto& x : t.gamma) gamma.push_back(int_to_json(x));
  for (const auto& x : t.codes) codes.push_back(int_to_json(x));
  return json{{"gamma", gamma}, {"codes", codes}};
}

std::string tuple_to_text(const wrc::IntTuple& t) {
  std::ostringstream out;
  for (const auto& x : t.gamma) out << x << " ";
  out << "|";
  for (const auto& x : t.codes) out << " " << x;
  return out.str();
}

void emit(const RunConfig& cfg, const json& record, const std::string& text) {
  if (cfg.is_json()) {
    json with_seed = record;
    with_seed["seed"] = cfg.seed;
    std::cout << with_seed.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::uint64_t fnv1a(const std::vector<int>& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : data) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= static_cast<std::uint64_t>((v >> (8 * byte)) & 0xff);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wreath-product, coding, and marked-group calculator"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("-m", cfg.m, "rank of the top group A")->check(CLI::PositiveNumber);
  app.add_option("-n", cfg.n, "rank of the bottom group B")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized reports");
  app.add_option("--radius", cfg.radius, "ball radius for gs commands");
  app.add_option("--radius-cap", cfg.radius_cap, "hard cap on ball radii");
  app.add_option("--budget", cfg.budget, "search budget (shift candidates)");
  app.add_option("--box-budget", cfg.box_budget, "evaluation box cap for refutation search");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- group arithmetic ----
  std::string arg_g, arg_h, arg_poly, arg_code, arg_tuple1, arg_tuple2, arg_word;
  std::string arg_base = "a1 |", arg_a, arg_d;
  long long arg_k = 0, arg_l = 1;
  int arg_level = 2;
  long long arg_shift = 0;
  int arg_count = 100;
  std::vector<std::string> arg_elements;

  CLI::App* c_mul = app.add_subcommand("mul", "multiply two elements");
  c_mul->add_option("g", arg_g)->required();
  c_mul->add_option("h", arg_h)->required();

  CLI::App* c_inv = app.add_subcommand("inv", "invert an element");
  c_inv->add_option("g", arg_g)->required();

  CLI::App* c_pow = app.add_subcommand("pow", "g^k through the definable exponentiation");
  c_pow->add_option("g", arg_g)->required();
  c_pow->add_option("k", arg_k)->required();

  CLI::App* c_encode = app.add_subcommand("encode", "polynomial -> integer code");
  c_encode->add_option("poly", arg_poly)->required();

  CLI::App* c_decode = app.add_subcommand("decode", "integer code -> polynomial");
  c_decode->add_option("code", arg_code)->required();

  CLI::App* c_g2z = app.add_subcommand("g2z", "element -> coordinate tuple");
  c_g2z->add_option("g", arg_g)->required();

  CLI::App* c_z2g = app.add_subcommand("z2g", "coordinate tuple -> element");
  c_z2g->add_option("tuple", arg_tuple1)->required();

  CLI::App* c_tmul = app.add_subcommand("tuple-mul", "multiplication on coordinate tuples");
  c_tmul->add_option("t1", arg_tuple1)->required();
  c_tmul->add_option("t2", arg_tuple2)->required();

  CLI::App* c_cyc = app.add_subcommand("cyc", "membership in the cyclic subgroup <a>");
  c_cyc->add_option("a", arg_a)->required();
  c_cyc->add_option("g", arg_g)->required();

  CLI::App* c_div = app.add_subcommand("divides", "witness for [b1, a^k] = [z, a^l]");
  c_div->add_option("--k", arg_k)->required();
  c_div->add_option("--l", arg_l)->required();
  c_div->add_option("--base", arg_base, "base element of A (default a1)");

  bool arg_refute = false;
  CLI::App* c_act = app.add_subcommand("act", "decide g^Q = h with Q given by its code");
  c_act->add_option("g", arg_g)->required();
  c_act->add_option("h", arg_h)->required();
  c_act->add_option("code", arg_code)->required();
  c_act->add_flag("--refute", arg_refute, "emit a failing evaluation point when g^Q != h");

  CLI::App* c_basis = app.add_subcommand("basis-check", "recognize bases of G");
  c_basis->add_option("elements", arg_elements, "c1..cm u1..un")->expected(-1);

  CLI::App* c_iso = app.add_subcommand("iso-transfer", "a^k -> d^k between cyclic copies of Z");
  c_iso->add_option("a", arg_a)->required();
  c_iso->add_option("d", arg_d)->required();
  c_iso->add_option("k", arg_k)->required();

  CLI::App* c_lmem = app.add_subcommand("lcs-member", "membership in G_i");
  c_lmem->add_option("g", arg_g)->required();
  c_lmem->add_option("i", arg_level)->required();

  CLI::App* c_lcoord = app.add_subcommand("lcs-coords", "coordinates in G_i / G_{i+1}");
  c_lcoord->add_option("g", arg_g)->required();
  c_lcoord->add_option("i", arg_level)->required();

  CLI::App* c_lrank = app.add_subcommand("lcs-rank", "rank of G_i / G_{i+1}");
  c_lrank->add_option("i", arg_level)->required();

  CLI::App* c_gseval = app.add_subcommand("gs-eval", "evaluate a word in G_S");
  c_gseval->add_option("--set", cfg.set_spec, "subset of Z");
  c_gseval->add_option("word", arg_word)->required();

  CLI::App* c_gsfp = app.add_subcommand("gs-fingerprint", "radius-r ball fingerprint of G_S");
  c_gsfp->add_option("--set", cfg.set_spec, "subset of Z");
  c_gsfp->add_option("--mark-b", arg_shift, "mark b_n instead of b_0");

  CLI::App* c_gsdemo = app.add_subcommand("gs-demo", "condensation at finite resolution");
  c_gsdemo->add_option("--set", cfg.set_spec, "subset of Z");

  CLI::App* c_round = app.add_subcommand("roundtrip", "bi-interpretability roundtrips");
  c_round->add_option("--count", arg_count, "number of random elements");

  CLI::App* c_self = app.add_subcommand("selftest", "run the property suite");

  CLI11_PARSE(app, argc, argv);

  try {
    const wrc::GroupContext ctx = cfg.ctx();

    if (c_mul->parsed()) {
      wrc::WreathElement r =
          mul(parse_element_arg(arg_g, ctx), parse_element_arg(arg_h, ctx));
      emit(cfg, element_to_json(r), to_string(r));
    } else if (c_inv->parsed()) {
      wrc::WreathElement r = inv(parse_element_arg(arg_g, ctx));
      emit(cfg, element_to_json(r), to_string(r));
    } else if (c_pow->parsed()) {
      wrc::WreathElement r = exp_G(parse_element_arg(arg_g, ctx), wrc::Int(arg_k));
      emit(cfg, element_to_json(r), to_string(r));
    } else if (c_encode->parsed()) {
      wrc::Int code = nu_encode(wrc::parse_poly(arg_poly, cfg.m));
      emit(cfg, json{{"code", int_to_json(code)}}, code.str());
    } else if (c_decode->parsed()) {
      auto p = wrc::nu_decode(wrc::Int(arg_code), cfg.m);
      if (!p) throw wrc::DomainError("NotACode", arg_code + " is not a polynomial code");
      emit(cfg, json{{"poly", to_string(*p)}}, to_string(*p));
    } else if (c_g2z->parsed()) {
      wrc::IntTuple t = delta_encode(parse_element_arg(arg_g, ctx));
      emit(cfg, tuple_to_json(t), tuple_to_text(t));
    } else if (c_z2g->parsed()) {
      wrc::WreathElement g = delta_decode(parse_tuple_arg(arg_tuple1, ctx), ctx);
      emit(cfg, element_to_json(g), to_string(g));
    } else if (c_tmul->parsed()) {
      wrc::IntTuple t =
          tuple_mul(parse_tuple_arg(arg_tuple1, ctx), parse_tuple_arg(arg_tuple2, ctx), ctx);
      emit(cfg, tuple_to_json(t), tuple_to_text(t));
    } else if (c_cyc->parsed()) {
      wrc::CycResult r =
          cyc_member(parse_element_arg(arg_a, ctx), parse_element_arg(arg_g, ctx));
      json rec{{"member", r.member}};
      std::string text = r.member ? "true" : "false";
      if (r.witness) {
        rec["witness"] = element_to_json(*r.witness);
        text += "  witness z = " + to_string(*r.witness);
      }
      emit(cfg, rec, text);
    } else if (c_div->parsed()) {
      auto z = div_witness(parse_element_arg(arg_base, ctx), wrc::Int(arg_k), wrc::Int(arg_l));
      json rec{{"divides", z.has_value()}};
      std::string text = z ? "true" : "false";
      if (z) {
        rec["witness"] = element_to_json(*z);
        text += "  witness z = " + to_string(*z);
      }
      emit(cfg, rec, text);
    } else if (c_act->parsed()) {
      wrc::WreathElement g = parse_element_arg(arg_g, ctx), h = parse_element_arg(arg_h, ctx);
      auto q = wrc::nu_decode(wrc::Int(arg_code), cfg.m);
      if (!q) throw wrc::DomainError("NotACode", arg_code + " is not a polynomial code");
      if (!arg_refute) {
        bool verdict = act_decide(g, h, *q);
        emit(cfg, json{{"acts", verdict}}, verdict ? "true" : "false");
      } else {
        wrc::ActRefutation r = act_refute(g, h, *q, cfg.box_budget);
        if (r.confirmed) {
          emit(cfg, json{{"confirmed", true}}, "confirmed");
        } else {
          json alphas = json::array();
          std::ostringstream text;
          text << "refuted at alpha = (";
          for (size_t i = 0; i < r.alpha.alpha.size(); ++i) {
            alphas.push_back(int_to_json(r.alpha.alpha[i]));
            text << (i ? "," : "") << r.alpha.alpha[i];
          }
          text << "), value " << r.value;
          emit(cfg,
               json{{"confirmed", false},
                    {"alpha", alphas},
                    {"value", int_to_json(r.value)},
                    {"h_cleared", element_to_json(r.h_cleared)}},
               text.str());
        }
      }
    } else if (c_basis->parsed()) {
      if (static_cast<int>(arg_elements.size()) != cfg.m + cfg.n)
        throw wrc::ParseError("basis-check expects m + n elements");
      wrc::BasisCandidate cand;
      for (int i = 0; i < cfg.m; ++i)
        cand.tops.push_back(parse_element_arg(arg_elements[i], ctx));
      for (int j = 0; j < cfg.n; ++j)
        cand.bottoms.push_back(parse_element_arg(arg_elements[cfg.m + j], ctx));
      bool verdict = is_basis(cand);
      json rec{{"basis", verdict}};
      std::string text = verdict ? "true" : "false";
      if (is_top_basis(cand.tops)) {
        wrc::LaurentPoly det = bottom_matrix_det(cand);
        rec["bottom_det"] = to_string(det);
        text += "  bottom det = " + to_string(det);
      }
      emit(cfg, rec, text);
    } else if (c_iso->parsed()) {
      wrc::WreathElement r = iso_transfer(parse_element_arg(arg_a, ctx),
                                          parse_element_arg(arg_d, ctx), wrc::Int(arg_k));
      emit(cfg, element_to_json(r), to_string(r));
    } else if (c_lmem->parsed()) {
      bool verdict = in_lcs(parse_element_arg(arg_g, ctx), arg_level);
      emit(cfg, json{{"member", verdict}}, verdict ? "true" : "false");
    } else if (c_lcoord->parsed()) {
      wrc::LcsCoordinates coords = lcs_coords(parse_element_arg(arg_g, ctx), arg_level);
      json entries = json::array();
      std::ostringstream text;
      for (const auto& [label, c] : coords.coeffs) {
        json js = json::array();
        std::ostringstream lbl;
        lbl << "(" << label.k << ";";
        for (size_t i = 0; i < label.js.size(); ++i) {
          js.push_back(label.js[i]);
          lbl << (i ? "," : " ") << label.js[i];
        }
        lbl << ")";
        entries.push_back(json{{"k", label.k}, {"j", js}, {"coeff", int_to_json(c)}});
        text << lbl.str() << ": " << c << "\n";
      }
      emit(cfg, json{{"level", coords.level}, {"coords", entries}},
           text.str().empty() ? "0" : text.str());
    } else if (c_lrank->parsed()) {
      wrc::Int r = lcs_rank(ctx, arg_level);
      emit(cfg, json{{"rank", int_to_json(r)}}, r.str());
    } else if (c_gseval->parsed()) {
      wrc::SubsetOfZ s = wrc::SubsetOfZ::parse(cfg.set_spec);
      wrc::GSElement g = gs_eval_word(arg_word, s);
      emit(cfg,
           json{{"set", s.spec()},
                {"t", int_to_json(g.t_exp)},
                {"a", to_string(g.a_poly, {"t"})},
                {"b", to_string(g.b_poly, {"t"})},
                {"c", g.center_bit},
                {"trivial", g.is_identity()}},
           to_string(g));
    } else if (c_gsfp->parsed()) {
      wrc::SubsetOfZ s = wrc::SubsetOfZ::parse(cfg.set_spec);
      wrc::GSMarking marking;
      if (arg_shift != 0) marking.b = wrc::GSElement::gen_b(wrc::Int(arg_shift));
      wrc::BallFingerprint fp = ball_fingerprint(s, cfg.radius, marking, cfg.radius_cap);
      std::uint64_t digest = fnv1a(fp.partition);
      std::ostringstream text;
      text << "radius " << fp.radius << ": " << fp.partition.size() << " words, "
           << fp.classes << " classes, digest " << std::hex << digest;
      json rec{{"set", s.spec()},
               {"radius", fp.radius},
               {"words", fp.partition.size()},
               {"classes", fp.classes},
               {"digest", digest},
               {"partition", fp.partition}};
      emit(cfg, rec, text.str());
    } else if (c_gsdemo->parsed()) {
      wrc::SubsetOfZ s = wrc::SubsetOfZ::parse(cfg.set_spec);
      wrc::DemoReport report =
          condensation_demo(s, cfg.radius, cfg.budget, cfg.budget, cfg.radius_cap);
      json rows = json::array();
      std::ostringstream text;
      text << "set " << report.set_spec << "\n";
      for (const auto& row : report.rows) {
        json r{{"radius", row.radius}, {"found", row.found}};
        if (row.found) {
          r["shift"] = row.shift;
          r["agreement_window"] = row.agreement_window;
          r["fingerprints_equal"] = row.fingerprints_equal;
          if (row.separation_index) r["separation_index"] = *row.separation_index;
          text << "r=" << row.radius << ": shift n=" << row.shift << ", window ["
               << -row.agreement_window << "," << row.agreement_window << "], fingerprints "
               << (row.fingerprints_equal ? "equal" : "DIFFER") << ", separated at i="
               << (row.separation_index ? std::to_string(*row.separation_index) : "?") << "\n";
        } else {
          text << "r=" << row.radius << ": no shift within budget (isolated at this radius)\n";
        }
        rows.push_back(std::move(r));
      }
      emit(cfg, json{{"set", report.set_spec}, {"rows", rows}, {"all_found", report.all_found}},
           text.str());
    } else if (c_round->parsed()) {
      wrc::Sampler rnd(cfg.seed);
      wrc::BasisCandidate std_basis;
      for (int i = 1; i <= ctx.m; ++i)
        std_basis.tops.push_back(wrc::WreathElement::top_generator(ctx, i));
      for (int j = 1; j <= ctx.n; ++j)
        std_basis.bottoms.push_back(wrc::WreathElement::bottom_generator(ctx, j));
      wrc::WreathElement a1 = wrc::WreathElement::top_generator(ctx, 1);
      int ok = 0;
      for (int it = 0; it < arg_count; ++it) {
        wrc::WreathElement g = rnd.element(ctx, 3, 2, 2, 5);
        wrc::IntTuple t = delta_encode(g);
        std::vector<wrc::IntAsPower> gpow, cpow;
        for (const auto& x : t.gamma) gpow.push_back({a1, x});
        for (const auto& x : t.codes) cpow.push_back({a1, x});
        if (lambda_G(std_basis, gpow, cpow) == g) ++ok;
      }
      int zok = 0;
      for (int k = -100; k <= 100; ++k) {
        wrc::IntAsPower p{a1, k};
        if (power_exponent(a1, power_element(p)) == k) ++zok;
      }
      bool pass = ok == arg_count && zok == 201;
      emit(cfg,
           json{{"group_roundtrips", ok},
                {"group_total", arg_count},
                {"z_roundtrips", zok},
                {"z_total", 201},
                {"pass", pass}},
           "group roundtrips: " + std::to_string(ok) + "/" + std::to_string(arg_count) +
               ", Z roundtrips: " + std::to_string(zok) + "/201" + (pass ? "" : "  FAILED"));
      return pass ? 0 : 2;
    } else if (c_self->parsed()) {
      wrc::SelftestReport report = wrc::run_selftest(cfg.seed, std::cout);
      return report.ok() ? 0 : 2;
    }
    return 0;
  } catch (const wrc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wrc::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
