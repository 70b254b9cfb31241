// Command line front end. Exit codes: 2 parse error, 3 precondition violation,
// 4 disagreement between two computations of the same quantity.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sga/errors.hpp"
#include "sga/invariants.hpp"
#include "sga/io.hpp"
#include "sga/strings.hpp"

using namespace sga;

namespace {

struct Options {
  std::string quiver;
  std::string fringe = "auto";
  std::string x, y, X, Y, s, t;
  std::string at;
  int max_len = 8;
  int field = 5;
  unsigned seed = 1;
  bool dot = false, tsv = false, all_labels = false;
  bool allow_nonadmissible = false;
  bool formula = false, oracle = false, both = false;
};

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

void require_field(int p) {
  if (!is_odd_prime(p)) throw PreconditionError("--field must be an odd prime");
}

Quiver load(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  ValidationReport r = validate(q);
  if (!r.is_polarized) throw PreconditionError("quiver is not polarized: " + r.diagnostics.front());
  if (!o.allow_nonadmissible && !r.is_skewed_gentle)
    throw PreconditionError("quiver is not skewed-gentle (use --allow-nonadmissible where supported)");
  return q;
}

Fringing fringing(const Options& o, const Quiver& q) {
  if (o.fringe == "auto") return auto_fringe(q);
  return make_fringing(q, load_quiver(o.fringe));
}

AdmWord word(const Quiver& q, const std::string& text, const char* what) {
  if (text.empty()) throw ParseError(std::string("missing --") + what);
  AdmWord x = parse_adm(q, text);
  std::string why;
  if (!is_admissible(q, x.word, x.is_band(), &why))
    throw PreconditionError(adm_str(q, x) + " is not admissible: " + why);
  return x;
}

AxModule module(const AdmWord& x, const std::string& text, int p) {
  if (text.empty()) {
    if (x.type == WType::UU) return module_vo(p);
    throw ParseError("missing module for a word of type " + std::string(wtype_name(x.type)));
  }
  AxModule m = parse_module(text, p);
  if (!module_fits(x.type, m))
    throw PreconditionError("module " + m.name + " is not over " + alg_name(algebra_of(x.type)));
  return m;
}

Slot parse_slot(const Quiver& q, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--at expects <vertex>,<+|->");
  int v = q.vertex(text.substr(0, comma));
  std::string sign = text.substr(comma + 1);
  if (v < 0) throw ParseError("--at: unknown vertex '" + text.substr(0, comma) + "'");
  if (sign != "+" && sign != "-") throw ParseError("--at: sign must be + or -");
  return {v, sign == "+" ? 1 : -1};
}

int cmd_check(const Options& o) {
  Quiver q = load_quiver(o.quiver);
  ValidationReport r = validate(q);
  std::cout << "polarized " << r.is_polarized << "\nadmissible " << r.is_admissible << "\nskewed_gentle "
            << r.is_skewed_gentle << "\ngentle " << r.is_gentle << '\n';
  auto len = longest_admissible_path(q);
  std::cout << "longest_path " << (len ? std::to_string(*len) : "unbounded") << '\n';
  for (const auto& d : r.diagnostics) std::cout << "note " << d << '\n';
  if (r.is_polarized && !r.is_admissible) std::cout << "usable for hquiver/adm with --allow-nonadmissible\n";
  return 0;
}

int cmd_strings(const Options& o) {
  Quiver q = load(o);
  Alphabet al{&q, false};
  StringList list = o.at.empty() ? enumerate_strings(al, o.max_len) : enumerate_strings_at(al, parse_slot(q, o.at), o.max_len);
  for (const auto& w : list.strings) {
    std::cout << word_str(q, w);
    auto labels = string_labels(al, w);
    if (!labels.empty()) {
      if (o.all_labels)
        for (const auto& l : labels) std::cout << "  " << l;
      else
        std::cout << "  " << labels.front();
    }
    std::cout << '\n';
  }
  if (list.truncated) std::cout << "# truncated at length " << o.max_len << '\n';
  return 0;
}

int cmd_bands(const Options& o) {
  Quiver q = load(o);
  BandList list = enumerate_bands(Alphabet{&q, false}, o.max_len);
  for (const auto& w : list.bands)
    std::cout << word_str(q, w) << (is_symmetric_band(w) ? "  symmetric" : "") << '\n';
  if (list.truncated) std::cout << "# truncated at length " << o.max_len << '\n';
  return 0;
}

int cmd_adm(const Options& o) {
  Quiver q = load(o);
  AdmSet a = enumerate_adm(q, o.max_len), b = enumerate_adm_direct(q, o.max_len);
  if (a.adm_s != b.adm_s || a.adm_b != b.adm_b)
    throw TheoremViolation("admissible words: images of strings and bands differ from the direct filter");
  for (const auto& x : a.all()) std::cout << adm_str(q, x) << '\t' << wtype_name(x.type) << '\n';
  if (a.truncated) std::cout << "# truncated at length " << o.max_len << '\n';
  return 0;
}

int cmd_tau(const Options& o) {
  Quiver q = load(o);
  AdmWord x = word(q, o.x, "x");
  if (is_projective_adm(q, x)) {
    std::cout << "projective: tau is zero\n";
    return 0;
  }
  AdmWord t = tau_adm(q, x);
  std::cout << adm_str(q, t) << '\t' << wtype_name(t.type) << '\n';
  if (!o.X.empty() || x.type == WType::UU) {
    require_field(o.field);
    TauModule tm = tau_module(q, x, module(x, o.X, o.field));
    std::cout << "module " << tm.module.name << '\n';
  }
  return 0;
}

int cmd_hquiver(const Options& o) {
  Quiver q = load(o);
  AdmWord x = word(q, o.x, "x"), y = word(q, o.y, "y");
  HomGraph g = build_HQ(q, x, y);
  if (o.dot) {
    std::cout << to_dot(g);
    return 0;
  }
  for (int j = g.hy.first; j <= g.hy.last; ++j) {
    for (int i = g.hx.first; i <= g.hx.last; ++i) {
      int v = g.find(j, i);
      std::string c = v < 0 ? "-" : color_str(g.vertices[static_cast<size_t>(v)].colors);
      std::cout << (i > g.hx.first ? "\t" : "") << (c.empty() ? "." : c);
    }
    std::cout << '\n';
  }
  ComponentReport r = classify_components(g);
  for (const auto& l : r.lines) {
    if (!l.hline && !l.long_line && !l.dual_real) continue;
    std::cout << "line";
    for (int v : l.line.vertices) {
      const auto& hv = g.vertices[static_cast<size_t>(v)];
      std::cout << " (" << hv.j << "," << hv.i << ")";
    }
    std::cout << "  " << shape_name(l.line.shape) << l.line.n << (l.real ? " real" : "") << (l.hline ? " h-line" : "")
              << (l.long_line ? " long" : "") << (l.kiss ? " kiss" : "") << (l.dual_real ? " dual-real" : "")
              << (l.dual_kiss ? " dual-kiss" : "") << '\n';
  }
  return 0;
}

int cmd_hom(const Options& o) {
  require_field(o.field);
  Quiver q = load(o);
  AdmWord x = word(q, o.x, "x"), y = word(q, o.y, "y");
  AxModule X = module(x, o.X, o.field), Y = module(y, o.Y, o.field);
  const bool f = o.formula || o.both || !o.oracle, r = o.oracle || o.both;
  int a = -1, b = -1;
  if (f) {
    HomFormula h = hom_dim_formula(q, x, X, y, Y);
    a = h.total;
    std::cout << "formula " << a << '\n';
  }
  if (r) {
    b = hom_dim_oracle(build_module(q, x, X), build_module(q, y, Y));
    std::cout << "oracle " << b << '\n';
  }
  if (f && r && a != b) throw TheoremViolation("Hom formula " + std::to_string(a) + " against oracle " + std::to_string(b));
  return 0;
}

int cmd_einv(const Options& o) {
  require_field(o.field);
  Quiver q = load(o);
  Fringing fr = fringing(o, q);
  AdmWord x = word(q, o.x, "x"), y = word(q, o.y, "y");
  if (!o.s.empty() || !o.t.empty()) {
    TaggedAdm a{x, parse_tag(o.s.empty() ? "++" : o.s)}, b{y, parse_tag(o.t.empty() ? "++" : o.t)};
    int e = e_comb(fr, a, b);
    int g = E_generic_oracle(q, a, b, o.field);
    std::cout << "e_comb " << e << "\noracle_min " << g << '\n';
    if (e != g) throw TheoremViolation("e_comb " + std::to_string(e) + " against oracle minimum " + std::to_string(g));
    return 0;
  }
  AxModule X = module(x, o.X, o.field), Y = module(y, o.Y, o.field);
  int e = E_formula(fr, x, X, y, Y), g = E_oracle(q, x, X, y, Y);
  std::cout << "formula " << e << "\noracle " << g << '\n';
  if (e != g) throw TheoremViolation("E formula " + std::to_string(e) + " against oracle " + std::to_string(g));
  return 0;
}

int cmd_gvec(const Options& o) {
  require_field(o.field);
  Quiver q = load(o);
  Fringing fr = fringing(o, q);
  AdmWord x = word(q, o.x, "x");
  std::vector<int> comb, oracle;
  if (!o.s.empty()) {
    TaggedAdm z{x, parse_tag(o.s)};
    comb = g_comb(fr, z);
    oracle = g_oracle(q, x, simple_family(x, z.s, o.field).front());
  } else {
    AxModule X = module(x, o.X, o.field);
    comb = g_formula(fr, x, X);
    oracle = g_oracle(q, x, X);
  }
  std::cout << "formula " << join(comb) << "\noracle " << join(oracle) << '\n';
  if (comb != oracle) throw TheoremViolation("g formula " + join(comb) + " against oracle " + join(oracle));
  return 0;
}

int cmd_fringe(const Options& o) {
  Quiver q = load(o);
  if (o.fringe != "auto") {
    std::string why;
    bool ok = check_fringing(q, load_quiver(o.fringe), &why);
    std::cout << (ok ? "valid fringing\n" : "invalid fringing: " + why + "\n");
    return ok ? 0 : 3;
  }
  std::cout << print_quiver(auto_fringe(q).extended);
  return 0;
}

int cmd_components(const Options& o) {
  require_field(o.field);
  Quiver q = load(o);
  Fringing fr = fringing(o, q);
  ComponentTable t = enumerate_components(fr, o.max_len, o.field);
  if (o.tsv) {
    std::cout << components_tsv(q, t);
    return 0;
  }
  for (size_t k = 0; k < t.classes.size(); ++k) {
    const auto& c = t.classes[k];
    std::cout << k << "  " << tagged_str(q, c.z) << "  dim " << join(c.dim) << "  g " << join(c.g) << '\n';
  }
  if (t.truncated) std::cout << "# truncated at length " << o.max_len << '\n';
  return 0;
}

// Quick versions of the acceptance sweeps on EX1 and a seeded random quiver.
int cmd_selftest(const Options& o) {
  require_field(o.field);
  int failures = 0;
  auto report = [&](const std::string& name, long checked, long bad) {
    std::cout << (bad ? "FAIL " : "ok   ") << name << "  " << checked << " checked, " << bad << " mismatches\n";
    if (bad) ++failures;
  };
  std::vector<std::pair<std::string, Quiver>> quivers = {{"EX1", load_quiver("EX1")},
                                                          {"random", random_skewed_gentle(4, o.seed)}};
  for (const auto& [name, q] : quivers) {
    Fringing fr = auto_fringe(q);
    AdmSet a = enumerate_adm(q, o.max_len), b = enumerate_adm_direct(q, o.max_len);
    report(name + " admissible routes", static_cast<long>(a.all().size()), a.adm_s != b.adm_s || a.adm_b != b.adm_b);
    auto words = a.all();
    long hom = 0, hom_bad = 0, e = 0, e_bad = 0, g = 0, g_bad = 0;
    for (const auto& x : words) {
      for (const auto& X : indecomposables_Ax(x.type, 1, o.field)) {
        ++g;
        if (g_formula(fr, x, X) != g_oracle(q, x, X)) ++g_bad;
      }
      for (const auto& y : words)
        for (const auto& X : indecomposables_Ax(x.type, 1, o.field))
          for (const auto& Y : indecomposables_Ax(y.type, 1, o.field)) {
            ++hom;
            if (hom_dim_formula(q, x, X, y, Y).total != hom_dim_oracle(build_module(q, x, X), build_module(q, y, Y)))
              ++hom_bad;
            ++e;
            if (E_formula(fr, x, X, y, Y) != E_oracle(q, x, X, y, Y)) ++e_bad;
          }
    }
    report(name + " Hom formula", hom, hom_bad);
    report(name + " E formula", e, e_bad);
    report(name + " g formula", g, g_bad);
    long tg = 0, tg_bad = 0;
    for (const auto& x : words)
      for (const Tag& s : tags_for(x.type)) {
        ++tg;
        if (is_tau_generic(fr, {x, s}) != simplified_check(fr, {x, s})) ++tg_bad;
      }
    report(name + " tau-generic routes", tg, tg_bad);
  }
  return failures ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics and matrix oracle for skewed-gentle algebras"};
  app.require_subcommand(1);
  Options o;

  auto quiver_arg = [&](CLI::App* c) { c->add_option("quiver", o.quiver, "builtin (EX1, EX1F, EX46) or DSL file")->required(); };
  auto field = [&](CLI::App* c) { c->add_option("--field", o.field, "odd prime p for GF(p)"); };
  auto len = [&](CLI::App* c) { c->add_option("--max-len", o.max_len, "length bound")->check(CLI::PositiveNumber); };
  auto fringe = [&](CLI::App* c) { c->add_option("--fringe", o.fringe, "auto, or a builtin/DSL file with the fringed quiver"); };
  auto words = [&](CLI::App* c, bool two) {
    c->add_option("--x", o.x, "admissible word");
    c->add_option("--X", o.X, "module over A_x");
    if (two) {
      c->add_option("--y", o.y, "admissible word");
      c->add_option("--Y", o.Y, "module over A_y");
    }
  };
  auto nonadm = [&](CLI::App* c) { c->add_flag("--allow-nonadmissible", o.allow_nonadmissible, "accept quivers with unbounded paths"); };

  auto* check = app.add_subcommand("check", "validate a quiver");
  quiver_arg(check);

  auto* strings = app.add_subcommand("strings", "strings, descending per start slot");
  quiver_arg(strings);
  len(strings);
  strings->add_option("--at", o.at, "start slot <vertex>,<+|->");
  strings->add_flag("--all-labels", o.all_labels, "print every projective/injective/simple label");

  auto* bands = app.add_subcommand("bands", "primitive bands up to rotation and inversion");
  quiver_arg(bands);
  len(bands);

  auto* adm = app.add_subcommand("adm", "admissible words");
  quiver_arg(adm);
  len(adm);
  nonadm(adm);

  auto* tau = app.add_subcommand("tau", "translate of an admissible word and module");
  quiver_arg(tau);
  words(tau, false);
  field(tau);

  auto* hq = app.add_subcommand("hquiver", "decorated product quiver H_Q(x,y)");
  quiver_arg(hq);
  words(hq, true);
  hq->add_flag("--dot", o.dot, "emit DOT");
  nonadm(hq);

  auto* hom = app.add_subcommand("hom", "dim Hom(M(x,X), M(y,Y))");
  quiver_arg(hom);
  words(hom, true);
  field(hom);
  hom->add_flag("--formula", o.formula, "sum over real h-lines");
  hom->add_flag("--oracle", o.oracle, "linear algebra on the representations");
  hom->add_flag("--both", o.both, "both, exit 4 on mismatch");

  auto* einv = app.add_subcommand("einv", "E-invariant: formula against oracle; with --s/--t the tagged version");
  quiver_arg(einv);
  words(einv, true);
  field(einv);
  fringe(einv);
  einv->add_option("--s", o.s, "tag of x");
  einv->add_option("--t", o.t, "tag of y");

  auto* gvec = app.add_subcommand("gvec", "g-vector: formula against oracle; with --s the tagged version");
  quiver_arg(gvec);
  words(gvec, false);
  field(gvec);
  fringe(gvec);
  gvec->add_option("--s", o.s, "tag of x");

  auto* fr = app.add_subcommand("fringe", "print the automatic fringing, or check --fringe");
  quiver_arg(fr);
  fringe(fr);

  auto* comps = app.add_subcommand("components", "tau-generic tagged words up to equivalence");
  quiver_arg(comps);
  len(comps);
  field(comps);
  fringe(comps);
  comps->add_flag("--tsv", o.tsv, "TSV with the pairwise e-matrix");

  auto* self = app.add_subcommand("selftest", "quick property sweeps");
  len(self);
  field(self);
  self->add_option("--seed", o.seed, "seed of the random quiver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(o);
    if (*strings) return cmd_strings(o);
    if (*bands) return cmd_bands(o);
    if (*adm) return cmd_adm(o);
    if (*tau) return cmd_tau(o);
    if (*hq) return cmd_hquiver(o);
    if (*hom) return cmd_hom(o);
    if (*einv) return cmd_einv(o);
    if (*gvec) return cmd_gvec(o);
    if (*fr) return cmd_fringe(o);
    if (*comps) return cmd_components(o);
    if (*self) return cmd_selftest(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 3;
  } catch (const TheoremViolation& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
