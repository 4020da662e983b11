#include "wildsets/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wildsets/certificate_json.hpp"
#include "wildsets/constructions.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/selftest.hpp"
#include "wildsets/text.hpp"

namespace wildsets {
namespace {

using nlohmann::ordered_json;

struct Session {
  unsigned q = 0;
  std::string curve;
  unsigned degree_cap = 0;
  std::uint64_t seed = 1;
  bool json = false;

  CurvePtr make() const {
    if (q == 0) throw ParseError("--q is required");
    FieldPtr F;
    try {
      F = FiniteField::make(q);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid --q: ") + e.what());
    }
    return make_curve(F, curve);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string symbol(int s) { return s > 0 ? "1" : "-1"; }

ordered_json places_json(const std::vector<Place>& S) {
  ordered_json a = ordered_json::array();
  for (const auto& p : S) a.push_back(format_place(p));
  return a;
}

int cmd_hilbert(const Session& s, const std::string& a, const std::string& b, const std::string& place,
                std::ostream& out) {
  const auto X = s.make();
  const auto p = parse_place(*X, place);
  const int h = hilbert_symbol(*X, parse_element(*X, a), parse_element(*X, b), p);
  if (s.json)
    out << ordered_json{{"a", a}, {"b", b}, {"place", format_place(p)}, {"symbol", h}}.dump(2) << "\n";
  else
    out << symbol(h) << "\n";
  return kExitOk;
}

int cmd_reciprocity(const Session& s, const std::string& a, const std::string& b, std::ostream& out) {
  const auto X = s.make();
  const auto R = reciprocity_product(*X, parse_element(*X, a), parse_element(*X, b));
  if (s.json) {
    ordered_json f = ordered_json::array();
    for (const auto& [p, v] : R.factors) f.push_back({{"place", format_place(p)}, {"symbol", v}});
    out << ordered_json{{"factors", f}, {"product", R.product}}.dump(2) << "\n";
  } else {
    for (const auto& [p, v] : R.factors) out << format_place(p) << " " << symbol(v) << "\n";
    out << "product " << symbol(R.product) << "\n";
  }
  return R.product == 1 ? kExitOk : kExitVerifyFailed;
}

int cmd_ranks(const Session& s, const std::string& places, std::ostream& out) {
  const auto X = s.make();
  const auto S = parse_place_list(*X, places);
  check_place_set(*X, S);
  const auto sing = sing_space(X, S).rank();
  const auto delta = delta_space(X, S).rank();
  const auto G = g_rank(*X, S).rank;
  const auto pic = check_pic_rank_formula(*X, S);
  const auto lemma = check_lin_dep_lemma(X, S);
  if (s.json) {
    out << ordered_json{{"S", places_json(S)},
                        {"rk_sing", sing},
                        {"rk_delta", delta},
                        {"rk_G", G},
                        {"rk_pic", pic.direct},
                        {"rk_pic_formula", pic.formula},
                        {"S_independent_mod_2", lemma.independent},
                        {"rk_sing_complete", lemma.sing_rank_complete},
                        {"formula_agrees", pic.agree},
                        {"independence_criterion_agrees", lemma.agree}}
               .dump(2)
        << "\n";
  } else {
    out << "rk Sing " << sing << "\n"
        << "rk Delta " << delta << "\n"
        << "rk G " << G << "\n"
        << "rk PicY " << pic.direct << "\n"
        << "rank formula " << pic.formula << (pic.agree ? " (agrees)" : " (DISAGREES)") << "\n"
        << "S independent in Pic X/2 " << (lemma.independent ? "yes" : "no") << ", Sing(X\\S) = Sing(X) "
        << (lemma.sing_equal ? "yes" : "no") << (lemma.agree ? " (consistent)" : " (INCONSISTENT)") << "\n";
  }
  return pic.agree && lemma.agree ? kExitOk : kExitVerifyFailed;
}

int cmd_smile(const Session& s, const std::string& p1, const std::string& p2, std::ostream& out) {
  const auto X = s.make();
  const bool r = smile(*X, parse_place(*X, p1), parse_place(*X, p2));
  if (s.json)
    out << ordered_json{{"p1", p1}, {"p2", p2}, {"smile", r}}.dump(2) << "\n";
  else
    out << (r ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_construct(const Session& s, const std::string& rank, const std::string& places, const std::string& P,
                  const std::string& Q, const std::string& avoid, const std::string& path, std::ostream& out) {
  const auto X = s.make();
  const auto av = avoid.empty() ? std::vector<Place>{} : parse_place_list(*X, avoid);
  Notes notes;
  Certificate c;
  if (rank == "0") {
    c = construct_rank0(X, parse_place_list(*X, places), av);
  } else if (rank == "1") {
    c = construct_rank1(X, parse_place_list(*X, places), av, &notes);
  } else if (rank == "general") {
    if (P.empty() || Q.empty()) throw ParseError("--rank general needs --P and --Q");
    c = construct_general(X, parse_place_list(*X, P), parse_place_list(*X, Q), av, &notes);
  } else {
    throw ParseError("--rank must be 0, 1 or general");
  }
  const std::string text = write_certificate(c);
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
  const auto R = verify(c);
  if (s.json) {
    ordered_json n = ordered_json::array();
    for (const auto& x : notes) n.push_back(x);
    out << ordered_json{{"out", path}, {"S", places_json(c.S)}, {"wild", places_json(R.wild)}, {"notes", n}}.dump(2)
        << "\n";
  } else {
    out << "wrote " << path << "\n"
        << "S = {" << format_place_list(c.S) << "}\n"
        << "wild = {" << format_place_list(R.wild) << "}\n";
    for (const auto& x : notes) out << "note: " << x << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Session& s, const std::string& path, bool wild_only, std::ostream& out) {
  const auto c = read_certificate(read_file(path));
  const auto R = verify(c);
  if (wild_only) {
    if (!R.ok()) {
      out << "certificate does not verify: " << R.failure()->name << "\n";
      return kExitVerifyFailed;
    }
    if (s.json)
      out << ordered_json{{"wild", places_json(R.wild)}}.dump(2) << "\n";
    else
      out << "{" << format_place_list(R.wild) << "}\n";
    return kExitOk;
  }
  if (s.json)
    out << report_to_json(R).dump(2) << "\n";
  else
    out << R.to_text();
  return R.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_selftest(const Session& s, unsigned samples, std::ostream& out) {
  const auto results = run_selftest(s.seed, samples);
  bool ok = true;
  ordered_json j = ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.ok;
    if (s.json)
      j.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    else
      out << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  if (s.json) out << j.dump(2) << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wild sets of self-equivalences of global function fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Session s;
  app.add_option("--q", s.q, "Order of the constant field (odd prime power)");
  app.add_option("--curve", s.curve, "Cubic f(t) of y^2 = f(t), or coefficients low to high; P^1 if absent");
  app.add_option("--degree-cap", s.degree_cap, "Maximum degree of places visited by searches");
  app.add_option("--seed", s.seed, "Random seed for selftest");
  app.add_flag("--json", s.json, "JSON output");

  std::string a, b, place, places, p1, p2, rank, P, Q, avoid, outpath, cert;
  unsigned samples = 100;

  auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a place");
  hil->add_option("--a", a)->required();
  hil->add_option("--b", b)->required();
  hil->add_option("--place", place)->required();
  auto* rec = app.add_subcommand("reciprocity", "Product of all Hilbert symbols of (a, b)");
  rec->add_option("--a", a)->required();
  rec->add_option("--b", b)->required();
  auto* rk = app.add_subcommand("ranks", "Ranks of Sing, Delta, G and Pic for X minus a finite set");
  rk->add_option("--places", places)->required();
  auto* sm = app.add_subcommand("smile", "Smile relation between two 2-divisible places");
  sm->add_option("--p1", p1)->required();
  sm->add_option("--p2", p2)->required();
  auto* con = app.add_subcommand("construct", "Build a small equivalence with a prescribed wild set");
  con->add_option("--rank", rank)->required()->check(CLI::IsMember({"0", "1", "general"}));
  con->add_option("--places", places);
  con->add_option("--P", P, "Places independent in Pic X/2 (general)");
  con->add_option("--Q", Q, "2-divisible places (general)");
  con->add_option("--avoid", avoid, "Places auxiliary points must avoid");
  con->add_option("--out", outpath, "Certificate path; stdout if absent");
  auto* ver = app.add_subcommand("verify", "Verify a certificate");
  ver->add_option("--cert", cert)->required();
  auto* wild = app.add_subcommand("wild", "Wild set of a verified certificate");
  wild->add_option("--cert", cert)->required();
  auto* self = app.add_subcommand("selftest", "Run the embedded invariant suites");
  self->add_option("--samples", samples);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  if (s.degree_cap > 0) setenv("WILDSETS_DEGREE_CAP", std::to_string(s.degree_cap).c_str(), 1);
  try {
    if (*hil) return cmd_hilbert(s, a, b, place, out);
    if (*rec) return cmd_reciprocity(s, a, b, out);
    if (*rk) return cmd_ranks(s, places, out);
    if (*sm) return cmd_smile(s, p1, p2, out);
    if (*con) {
      if (rank != "general" && places.empty()) throw ParseError("--places is required");
      return cmd_construct(s, rank, places, P, Q, avoid, outpath, out);
    }
    if (*ver) return cmd_verify(s, cert, false, out);
    if (*wild) return cmd_verify(s, cert, true, out);
    if (*self) return cmd_selftest(s, samples, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << "\n";
    return kExitSearchExhausted;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const PreconditionError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitParse;
}

}  // namespace wildsets
