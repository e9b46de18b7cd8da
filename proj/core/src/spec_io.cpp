#include "hcell/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hcell {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error("SchemaError", where + ": " + what);
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) schema_error(where, "missing key '" + key + "'");
  return j.at(key);
}

std::shared_ptr<const GroupData> parse_group(const json& j, const std::string& where) {
  GroupData g;
  const json& elems = need(j, "elements", where);
  if (!elems.is_array() || elems.empty()) schema_error(where + ".elements", "nonempty array required");
  for (auto& e : elems) g.elements.push_back(e.get<std::string>());
  const json& table = need(j, "table", where);
  for (auto& row : table) {
    std::vector<int> r;
    for (auto& x : row) r.push_back(x.get<int>());
    g.table.push_back(std::move(r));
  }
  g.identity = j.value("identity", 0);
  try {
    g.validate();
  } catch (const Error& e) {
    throw Error("SemanticError", where + ": " + e.what());
  }
  return std::make_shared<GroupData>(std::move(g));
}

}  // namespace

SpecFile parse_spec_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error("SchemaError", origin + ": " + e.what());
  }
  SpecFile sf;
  sf.name = j.value("name", origin);

  {
    const json& f = need(j, "field", "spec");
    long long ch = need(f, "char", "spec.field").get<long long>();
    sf.field = ch == 0 ? Field::rationals() : Field::fp(static_cast<std::uint64_t>(ch));
  }
  sf.group = parse_group(need(j, "group", "spec"), "spec.group");

  const bool has_quiver = j.contains("quiver");
  sf.has_hopf = j.contains("hopf");
  if (!has_quiver && !sf.has_hopf) return sf;  // group-only spec
  sf.has_algebra = true;
  sf.pres.field = sf.field;
  sf.pres.group = sf.group;
  sf.pres.nilpotency_bound = j.value("nilpotency_bound", 2);

  // quiver: explicit, or generated from the hopf weights
  std::vector<int> weights;
  if (sf.has_hopf) {
    const json& h = j.at("hopf");
    for (auto& w : need(h, "weights", "spec.hopf"))
      weights.push_back(sf.group->index_of(w.get<std::string>()));
    sf.pres.quiver = covering_quiver(*sf.group, weights);
  }
  if (has_quiver) {
    const json& q = j.at("quiver");
    Quiver explicit_q;
    for (auto& v : need(q, "vertices", "spec.quiver"))
      explicit_q.vertices.push_back(v.get<std::string>());
    for (auto& a : need(q, "arrows", "spec.quiver")) {
      Quiver::Arrow ar;
      ar.name = need(a, "name", "spec.quiver.arrows").get<std::string>();
      ar.source = explicit_q.vertex_index(need(a, "source", "spec.quiver.arrows").get<std::string>());
      ar.target = explicit_q.vertex_index(need(a, "target", "spec.quiver.arrows").get<std::string>());
      explicit_q.arrows.push_back(ar);
    }
    explicit_q.validate();
    if (sf.has_hopf) {
      // consistency with the generated covering quiver
      if (explicit_q.vertices != sf.pres.quiver.vertices ||
          explicit_q.arrows.size() != sf.pres.quiver.arrows.size())
        throw Error("SemanticError", "spec.quiver: does not match the covering quiver of the hopf block");
      for (size_t i = 0; i < explicit_q.arrows.size(); ++i)
        if (explicit_q.arrows[i].source != sf.pres.quiver.arrows[i].source ||
            explicit_q.arrows[i].target != sf.pres.quiver.arrows[i].target)
          throw Error("SemanticError", "spec.quiver: arrow endpoints do not match the covering quiver");
      sf.pres.quiver = explicit_q;  // keep user names
    } else {
      sf.pres.quiver = explicit_q;
    }
  }

  // relations
  if (j.contains("relations")) {
    for (auto& rel : j.at("relations")) {
      Relation r;
      for (auto& term : rel) {
        PathTerm t;
        t.coeff = Scalar::parse(term.value("coeff", "1"), sf.field);
        for (auto& a : need(term, "path", "spec.relations"))
          t.arrows.push_back(sf.pres.quiver.arrow_index(a.get<std::string>()));
        r.push_back(std::move(t));
      }
      sf.pres.relations.push_back(std::move(r));
    }
  }

  auto parse_arrow_mats = [&](const json& block, const std::string& where) {
    std::vector<Matrix> mats(sf.group->n(),
                             Matrix::identity(sf.pres.quiver.n_arrows(), sf.field));
    for (auto it = block.begin(); it != block.end(); ++it) {
      int g = sf.group->index_of(it.key());
      Matrix m(sf.pres.quiver.n_arrows(), sf.pres.quiver.n_arrows(), sf.field);
      for (auto& entry : it.value()) {
        int src = sf.pres.quiver.arrow_index(need(entry, "arrow", where).get<std::string>());
        for (auto& img : need(entry, "image", where)) {
          int dst = sf.pres.quiver.arrow_index(need(img, "arrow", where).get<std::string>());
          m.at(dst, src) += Scalar::parse(img.value("coeff", "1"), sf.field);
        }
      }
      mats[g] = std::move(m);
    }
    return mats;
  };

  if (sf.has_hopf) {
    const json& h = j.at("hopf");
    auto wd = std::make_shared<WeightData>();
    wd->grp = sf.group;
    wd->weights = weights;
    wd->left = parse_arrow_mats(need(h, "left", "spec.hopf"), "spec.hopf.left");
    wd->right = parse_arrow_mats(need(h, "right", "spec.hopf"), "spec.hopf.right");
    sf.weights = wd;
  }

  if (j.contains("action")) {
    sf.has_action = true;
    const json& a = j.at("action");
    sf.vertex_perm.assign(sf.group->n(), std::vector<int>(sf.pres.quiver.n_vertices()));
    for (int v = 0; v < sf.pres.quiver.n_vertices(); ++v)
      sf.vertex_perm[sf.group->identity][v] = v;
    const json& vp = need(a, "vertex_perm", "spec.action");
    for (auto it = vp.begin(); it != vp.end(); ++it) {
      int g = sf.group->index_of(it.key());
      for (auto e = it.value().begin(); e != it.value().end(); ++e)
        sf.vertex_perm[g][sf.pres.quiver.vertex_index(e.key())] =
            sf.pres.quiver.vertex_index(e.value().get<std::string>());
    }
    sf.arrow_mats = parse_arrow_mats(need(a, "arrow_coeffs", "spec.action"), "spec.action");
  }
  return sf;
}

SpecFile parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("SchemaError", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (ss.str().empty()) throw Error("SchemaError", path + ": empty file");
  return parse_spec_text(ss.str(), path);
}

LoadedSpec build_spec(const SpecFile& sf) {
  LoadedSpec ls;
  ls.spec = sf;
  if (!sf.has_algebra) return ls;
  ls.alg = build_algebra(sf.pres);
  // the action: explicit block, or the multiplicative extension of the
  // left kG-module structure h(e_g) = e_{gh^-1}, h·arrow per the hopf block
  if (sf.has_action) {
    ls.act = action_from_generators(ls.alg, sf.group, sf.vertex_perm, sf.arrow_mats);
  } else if (sf.has_hopf) {
    std::vector<std::vector<int>> vperm(sf.group->n(),
                                        std::vector<int>(ls.alg->quiver.n_vertices()));
    for (int h = 0; h < sf.group->n(); ++h)
      for (int v = 0; v < ls.alg->quiver.n_vertices(); ++v) {
        int g = ls.alg->group_of_vertex(v);
        vperm[h][v] = ls.alg->vertex_of_group(sf.group->mul(g, sf.group->inv(h)));
      }
    ls.act = action_from_generators(ls.alg, sf.group, vperm, sf.weights->left);
  } else {
    // trivial-quiver specs without hopf data still admit the idempotent action
    throw Error("SemanticError",
                "spec '" + sf.name + "': an action or a hopf block is required for this command");
  }
  {
    ValidationReport rep = check_action(*ls.alg, *sf.group, ls.act, false);
    if (!rep.all_ok())
      throw Error("SemanticError", "spec '" + sf.name + "': invalid action (" +
                                       rep.failures()[0].check + ")");
  }
  if (sf.has_hopf) {
    ls.has_hopf = true;
    ls.hopf = hopf_structure(ls.alg, sf.weights, sf.pres.relations);
  }
  return ls;
}

LoadedSpec load_spec(const std::string& path) { return build_spec(parse_spec(path)); }

}  // namespace hcell
