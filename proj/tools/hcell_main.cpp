// hcell: exact verification of bicategory structure over quiver algebras.
//
// Subcommands take a JSON spec file (format documented in
// fixtures/spec.schema.json) and print a deterministic report.
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hcell/cells.hpp"
#include "hcell/cohomology.hpp"
#include "hcell/report.hpp"
#include "hcell/spec_io.hpp"

using namespace hcell;

namespace {

struct Options {
  std::string specfile;
  std::string groupfile;
  std::string output = "text";
  bool tilde = false;
  bool timing = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  int samples = 20;
};

int emit(Report& rep, const Options& opt, std::chrono::steady_clock::time_point t0) {
  rep.with_timing = opt.timing;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (opt.output == "json" ? rep.render_json() : rep.render_text());
  return rep.all_pass() ? 0 : 1;
}

LoadedSpec require_hopf(const std::string& path) {
  LoadedSpec ls = load_spec(path);
  if (!ls.has_hopf)
    throw Error("SemanticError", "spec '" + ls.spec.name + "' carries no hopf block");
  return ls;
}

std::shared_ptr<const GroupData> group_of(const Options& opt) {
  const std::string& path = opt.groupfile.empty() ? opt.specfile : opt.groupfile;
  if (path.empty()) throw Error("SchemaError", "a spec or --group file is required");
  return parse_spec(path).group;
}

int cmd_check_hopf(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SpecFile sf = parse_spec(opt.specfile);
  if (!sf.has_hopf) throw Error("SemanticError", "spec carries no hopf block");
  Report rep{"check-hopf", sf.name, sf.field.str()};
  try {
    LoadedSpec ls = build_spec(sf);
    rep.add_data("dimension", std::to_string(ls.alg->dim()));
    rep.absorb(ls.hopf.report);
    BasisMaps bm = check_basis_maps(ls.hopf.hd);
    rep.absorb(bm.report);
  } catch (const Error& e) {
    if (e.code == "NotHopfIdeal" || e.code == "BadWeightData") {
      rep.add_check("Hopf structure well-defined", false, e.what());
      return emit(rep, opt, t0);
    }
    throw;
  }
  return emit(rep, opt, t0);
}

int cmd_verify_gamma(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = require_hopf(opt.specfile);
  Report rep{"verify-gamma", ls.spec.name, ls.spec.field.str()};
  rep.absorb(verify_gamma_monoidal(ls.hopf.hd));
  rep.absorb(verify_gamma_adjunction(ls.hopf.hd));
  return emit(rep, opt, t0);
}

int cmd_cells(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = load_spec(opt.specfile);
  if (!ls.spec.has_algebra) throw Error("SemanticError", "cells requires an algebra spec");
  Report rep{"cells", ls.spec.name, ls.spec.field.str()};
  const GroupData& G = *ls.spec.group;
  CellConfig cfg = opt.tilde ? CellConfig::Tilde : CellConfig::Plain;
  CellStructure cs = cell_structure(cfg, *ls.alg, G);
  rep.add_data("configuration", opt.tilde ? "tilde" : "plain");
  rep.add_data("classes", std::to_string(cs.classes.size()));
  rep.add_data("two_sided_cells", std::to_string(cs.n_two_sided));
  rep.add_data("left_cells", std::to_string(cs.n_left));
  rep.add_data("right_cells", std::to_string(cs.n_right));
  rep.add_data("h_cells", std::to_string(cs.n_h));
  rep.add_data("h0_size", std::to_string(G.n()));
  for (size_t i = 0; i < cs.classes.size(); ++i)
    rep.add_data("class " + cs.classes[i].str(G),
                 "L" + std::to_string(cs.left_cell[i]) + " R" + std::to_string(cs.right_cell[i]) +
                     " J" + std::to_string(cs.two_sided_cell[i]) + " H" +
                     std::to_string(cs.h_cell[i]));
  rep.add_check("identity forms its own two-sided cell strictly below the rest",
                cs.n_two_sided == 2 && cs.j_less[cs.two_sided_cell[0]][cs.two_sided_cell[1]]);
  if (!opt.tilde)
    rep.add_check("plain configuration has exactly two H-cells", cs.n_h == 2);
  else
    rep.add_check("tilde configuration has 2+2 left/right cells and 4 H-cells",
                  cs.n_left == 3 && cs.n_right == 3 && cs.n_h == 5);
  if (opt.oracle) {
    TildeContext tc = build_tilde(ls.alg, ls.act);
    rep.absorb(check_symbolic_oracle(cfg, tc, false));
  }
  return emit(rep, opt, t0);
}

int cmd_adjoints(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = load_spec(opt.specfile);
  if (!ls.spec.has_algebra) throw Error("SemanticError", "adjoints requires an algebra spec");
  Report rep{"adjoints", ls.spec.name, ls.spec.field.str()};
  const GroupData& G = *ls.spec.group;
  std::vector<int> nu = nakayama_permutation(*ls.alg);
  for (int v = 0; v < ls.alg->quiver.n_vertices(); ++v)
    rep.add_data("nu(" + ls.alg->quiver.vertices[v] + ")", ls.alg->quiver.vertices[nu[v]]);
  {
    int nu1 = ls.alg->group_of_vertex(nu[ls.alg->vertex_of_group(G.identity)]);
    bool shift = true;
    for (int g = 0; g < G.n(); ++g)
      shift = shift && ls.alg->group_of_vertex(nu[ls.alg->vertex_of_group(g)]) == G.mul(nu1, g);
    rep.add_check("nu(g) = nu(1)·g", shift);
  }
  for (int g = 0; g < G.n(); ++g) {
    SymClass x;
    x.kind = SymClass::Proj;
    x.g = g;
    SymClass a = right_adjoint(x, *ls.alg, G);
    rep.add_data("adjoint of " + x.str(G), a.str(G));
  }
  TildeContext tc = build_tilde(ls.alg, ls.act);
  rep.absorb(check_adjunctions(tc, *ls.alg, opt.samples, opt.seed));
  return emit(rep, opt, t0);
}

int cmd_classify(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto grp = group_of(opt);
  Report rep{"classify", opt.groupfile.empty() ? opt.specfile : opt.groupfile, ""};
  Classification cl = classify(*grp);
  rep.add_data("group_order", std::to_string(grp->n()));
  rep.add_data("subgroups", std::to_string(cl.entries.size() - 1));
  for (auto& e : cl.entries) {
    if (e.apex == "J_1") {
      rep.add_data("J_1", "the trivial class (1)");
      continue;
    }
    std::string elems;
    for (int x : e.subgroup) elems += (elems.empty() ? "" : ",") + grp->elements[x];
    rep.add_data("J_0 subgroup {" + elems + "}",
                 "H^2 = " + e.h2.str() + ", classes: " + e.class_count.get_str());
  }
  rep.add_data("total_classes_subgroups", cl.total.get_str());
  rep.add_data("total_classes_conjugacy", cl.total_up_to_conjugacy.get_str());
  rep.add_check("classification enumerated", true);
  return emit(rep, opt, t0);
}

int cmd_schur(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto grp = group_of(opt);
  Report rep{"schur", opt.groupfile.empty() ? opt.specfile : opt.groupfile, ""};
  SubgroupList subs = subgroups(*grp);
  bool oracle_ok = true;
  for (auto& h : subs.all) {
    GroupData k = grp->subgroup(h);
    AbelianInvariants bar = bar_h3_integral(k);
    std::string elems;
    for (int x : h) elems += (elems.empty() ? "" : ",") + grp->elements[x];
    rep.add_data("H^2({" + elems + "}, k*)", bar.str());
    if (k.is_abelian() && !(bar == abelian_multiplier_formula(k))) oracle_ok = false;
    H2CrossCheck cc = h2_mod_m_cross_check(k, mpz_class(k.n()), bar);
    if (!cc.ok()) oracle_ok = false;
  }
  rep.add_check("bar computation agrees with the oracles", oracle_ok);
  return emit(rep, opt, t0);
}

int cmd_h0_simple(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = require_hopf(opt.specfile);
  Report rep{"h0-simple", ls.spec.name, ls.spec.field.str()};
  rep.absorb(check_h0_simplicity(ls.hopf.hd, ls.act));
  return emit(rep, opt, t0);
}

int cmd_vec_g(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = load_spec(opt.specfile);
  if (!ls.spec.has_algebra) throw Error("SemanticError", "vec-g requires an algebra spec");
  Report rep{"vec-g", ls.spec.name, ls.spec.field.str()};
  TildeContext tc = build_tilde(ls.alg, ls.act);
  const GroupData& G = *ls.spec.group;
  for (int g = 0; g < G.n(); ++g)
    for (int h = 0; h < G.n(); ++h)
      rep.add_data("S00(" + G.elements[g] + ") ⊗ S00(" + G.elements[h] + ")",
                   "S00(" + G.elements[G.mul(g, h)] + ")");
  rep.absorb(check_vec_g(tc));
  return emit(rep, opt, t0);
}

int cmd_embed_check(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedSpec ls = require_hopf(opt.specfile);
  Report rep{"embed-check", ls.spec.name, ls.spec.field.str()};
  rep.absorb(check_1_full_embedding(ls.hopf.hd, ls.act));
  const GroupData& G = *ls.spec.group;
  Bimodule a = Bimodule::regular(ls.alg);
  Bimodule p = Bimodule::proj(ls.alg, ls.alg->vertex_of_group(G.identity),
                              ls.alg->vertex_of_group(G.identity));
  rep.absorb(theta_monoidal(a, a, ls.act).report, "J_{A,A}");
  rep.absorb(theta_monoidal(p, p, ls.act).report, "J_{P,P}");
  rep.absorb(theta_monoidal(a, p, ls.act).report, "J_{A,P}");
  return emit(rep, opt, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bicategory verification over quiver algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_spec) {
    if (needs_spec) cmd->add_option("spec", opt.specfile, "JSON spec file")->required();
    cmd->add_option("--output", opt.output, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timing", opt.timing, "append wall-clock timing (breaks byte-determinism)");
  };

  auto* chopf = app.add_subcommand("check-hopf", "Hopf axiom suite");
  add_common(chopf, true);
  auto* cgamma = app.add_subcommand("verify-gamma", "embedding isomorphisms and adjunction");
  add_common(cgamma, true);
  auto* ccells = app.add_subcommand("cells", "cell structure of the symbolic 1-morphism calculus");
  add_common(ccells, true);
  ccells->add_flag("--tilde", opt.tilde, "use the two-object configuration");
  ccells->add_flag("--oracle", opt.oracle, "cross-check against the decomposition oracle");
  auto* cadj = app.add_subcommand("adjoints", "Nakayama data and adjunction identities");
  add_common(cadj, true);
  cadj->add_option("--samples", opt.samples, "sampled hom-dimension pairs");
  cadj->add_option("--seed", opt.seed, "sampling seed");
  auto* ccls = app.add_subcommand("classify", "classification counts (group data only)");
  add_common(ccls, false);
  ccls->add_option("spec", opt.specfile, "JSON spec file");
  ccls->add_option("--group", opt.groupfile, "group-only JSON file");
  auto* cschur = app.add_subcommand("schur", "Schur multipliers of all subgroups");
  add_common(cschur, false);
  cschur->add_option("spec", opt.specfile, "JSON spec file");
  cschur->add_option("--group", opt.groupfile, "group-only JSON file");
  auto* ch0 = app.add_subcommand("h0-simple", "split-identity sandwich checks");
  add_common(ch0, true);
  auto* cvg = app.add_subcommand("vec-g", "fusion of the vertex-algebra part");
  add_common(cvg, true);
  auto* cemb = app.add_subcommand("embed-check", "1-fullness of the module embedding");
  add_common(cemb, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chopf->parsed()) return cmd_check_hopf(opt);
    if (cgamma->parsed()) return cmd_verify_gamma(opt);
    if (ccells->parsed()) return cmd_cells(opt);
    if (cadj->parsed()) return cmd_adjoints(opt);
    if (ccls->parsed()) return cmd_classify(opt);
    if (cschur->parsed()) return cmd_schur(opt);
    if (ch0->parsed()) return cmd_h0_simple(opt);
    if (cvg->parsed()) return cmd_vec_g(opt);
    if (cemb->parsed()) return cmd_embed_check(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
