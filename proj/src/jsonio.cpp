#include "dgar/jsonio.hpp"

#include <set>
#include <utility>

#include "dgar/cohomology.hpp"
#include "dgar/endalg.hpp"
#include "dgar/errors.hpp"

namespace dgar {

namespace {

int parse_degree_key(const std::string& s) {
  try {
    size_t pos = 0;
    int n = std::stoi(s, &pos);
    if (pos != s.size()) throw ValidationError("");
    return n;
  } catch (const std::exception&) {
    throw ValidationError("basis degree key \"" + s + "\" is not an integer");
  }
}

const Json& field_at(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(where) + " is missing the \"" + key + "\" field");
  return *it;
}

std::string string_at(const Json& j, const char* key, const char* where) {
  const Json& v = field_at(j, key, where);
  if (!v.is_string())
    throw ValidationError(std::string(where) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

long integer_at(const Json& j, const char* key, const char* where) {
  const Json& v = field_at(j, key, where);
  if (!v.is_number_integer())
    throw ValidationError(std::string(where) + " field \"" + key + "\" must be an integer");
  return v.get<long>();
}

void expect_schema(const Json& j, const char* tag, const char* where) {
  if (!j.is_object()) throw ValidationError(std::string(where) + " must be a JSON object");
  if (string_at(j, "schema", where) != tag)
    throw ValidationError(std::string(where) + " has schema \"" +
                          j["schema"].get<std::string>() + "\", expected \"" + tag + "\"");
}

/* global basis-name lookup: name -> (degree, index) */
struct NameTable {
  std::map<std::string, std::pair<int, int>> where;

  std::pair<int, int> at(const std::string& name, const char* what) const {
    auto it = where.find(name);
    if (it == where.end())
      throw ValidationError(std::string(what) + " references unknown basis element \"" + name +
                            "\"");
    return it->second;
  }
};

Json dims_json(const std::map<int, int>& dims) {
  Json out = Json::object();
  for (const auto& [n, d] : dims) out[std::to_string(n)] = d;
  return out;
}

Json certificate_body(const CompactnessCertificate& c) {
  Json out{{"verdict", c.verdict},
           {"generators", c.generators},
           {"generator_degrees", dims_json(c.generator_degrees)}};
  out["stop_reason"] = c.stop_reason.empty() ? Json() : Json(c.stop_reason);
  return out;
}

Json condition(const char* id, bool ok) { return Json{{"id", id}, {"ok", ok}}; }

Json stats_json(const DGModule& m) {
  std::map<int, int> h = cohomology(m).h.dims();
  Json out{{"h_dims", dims_json(h)}};
  if (!h.empty()) {
    out["inf"] = h.begin()->first;
    out["sup"] = h.rbegin()->first;
    out["amp"] = h.rbegin()->first - h.begin()->first;
  }
  return out;
}

}  // namespace

Json config_json(const RunConfig& c) {
  return Json{{"budget",
               Json{{"max_generators", c.budget.max_generators},
                    {"degree_lo", c.budget.degree_lo},
                    {"degree_hi", c.budget.degree_hi}}},
              {"seed", c.seed},
              {"format", c.format}};
}

Json report_envelope(const std::string& command, const RunConfig& c, Json result) {
  return Json{{"schema", "dgar-report/1"},
              {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
              {"command", command},
              {"config", config_json(c)},
              {"result", std::move(result)}};
}

std::shared_ptr<const DGAlgebra> parse_algebra(const Json& j) {
  expect_schema(j, "dgar-algebra/1", "algebra description");

  DGAlgebra a;
  a.name = j.value("name", "unnamed");

  const Json& fj = field_at(j, "field", "algebra description");
  long p = integer_at(fj, "characteristic", "field description");
  a.field = p == 0 ? Field::rationals() : Field::prime(p);

  const Json& basis = field_at(j, "basis", "algebra description");
  if (!basis.is_object()) throw ValidationError("\"basis\" must map degrees to name arrays");
  NameTable names;
  for (const auto& [key, arr] : basis.items()) {
    int n = parse_degree_key(key);
    if (!arr.is_array() || arr.empty())
      throw ValidationError("basis degree " + key + " must be a nonempty array of names");
    std::vector<std::string> row;
    for (const Json& e : arr) {
      if (!e.is_string()) throw ValidationError("basis names must be strings");
      std::string name = e.get<std::string>();
      if (!names.where.emplace(name, std::make_pair(n, int(row.size()))).second)
        throw ValidationError("basis element \"" + name + "\" is declared twice");
      row.push_back(name);
    }
    a.space.set_dim(n, int(row.size()));
    a.labels[n] = std::move(row);
  }

  if (a.space.dim(0) == 1) {
    for (const auto& [n, d] : a.space.dims()) {
      if (n == 0) continue;
      a.mul[{0, n}] = Matrix::identity(a.field, d);
      a.mul[{n, 0}] = Matrix::identity(a.field, d);
    }
    a.mul[{0, 0}] = Matrix::identity(a.field, 1);
  }
  for (const auto& [p1, d1] : a.space.dims()) {
    for (const auto& [p2, d2] : a.space.dims()) {
      if (p1 == 0 || p2 == 0 || a.space.dim(p1 + p2) == 0) continue;
      a.mul[{p1, p2}] = Matrix::zero(a.field, a.space.dim(p1 + p2), d1 * d2);
    }
  }

  if (j.contains("diff")) {
    const Json& diff = j["diff"];
    if (!diff.is_array()) throw ValidationError("\"diff\" must be an array");
    std::set<std::pair<std::string, std::string>> seen;
    for (const Json& e : diff) {
      std::string from = string_at(e, "from", "differential entry");
      std::string to = string_at(e, "to", "differential entry");
      if (!seen.insert({from, to}).second)
        throw ValidationError("duplicate differential entry " + from + " -> " + to);
      auto [nf, idxf] = names.at(from, "differential entry");
      auto [nt, idxt] = names.at(to, "differential entry");
      if (nt != nf + 1)
        throw ValidationError("differential entry " + from + " -> " + to +
                              " does not raise the degree by one");
      Elem c = a.field.from_string(string_at(e, "scalar", "differential entry"));
      auto it = a.diff.find(nf);
      if (it == a.diff.end())
        it = a.diff.emplace(nf, Matrix::zero(a.field, a.space.dim(nf + 1), a.space.dim(nf)))
                 .first;
      it->second.set(idxt, idxf, c);
    }
  }

  if (j.contains("mul")) {
    const Json& mul = j["mul"];
    if (!mul.is_array()) throw ValidationError("\"mul\" must be an array");
    std::set<std::pair<std::string, std::string>> seen;
    for (const Json& e : mul) {
      std::string an = string_at(e, "a", "product entry");
      std::string bn = string_at(e, "b", "product entry");
      if (!seen.insert({an, bn}).second)
        throw ValidationError("duplicate product entry " + an + " * " + bn);
      auto [pa, ia] = names.at(an, "product entry");
      auto [pb, ib] = names.at(bn, "product entry");
      if (pa == 0 || pb == 0)
        throw ValidationError("products with the degree-0 unit are implicit; drop " + an +
                              " * " + bn);
      const Json& result = field_at(e, "result", "product entry");
      if (!result.is_array()) throw ValidationError("product result must be an array");
      if (result.empty()) continue;
      auto it = a.mul.find({pa, pb});
      if (it == a.mul.end())
        throw ValidationError("product " + an + " * " + bn + " lands in degree " +
                              std::to_string(pa + pb) + ", which has no basis");
      for (const Json& term : result) {
        std::string rn = string_at(term, "basis", "product term");
        auto [pr, ir] = names.at(rn, "product term");
        if (pr != pa + pb)
          throw ValidationError("product " + an + " * " + bn + " must land in degree " +
                                std::to_string(pa + pb) + "; \"" + rn + "\" sits in degree " +
                                std::to_string(pr));
        Elem c = a.field.from_string(string_at(term, "scalar", "product term"));
        int col = ia * a.space.dim(pb) + ib;
        it->second.set(ir, col, a.field.add(it->second.at(ir, col), c));
      }
    }
  }

  return std::make_shared<const DGAlgebra>(std::move(a));
}

Json algebra_json(const DGAlgebra& a) {
  Json basis = Json::object();
  for (const auto& [n, d] : a.space.dims()) {
    (void)d;
    basis[std::to_string(n)] = a.labels_at(n);
  }

  Json diff = Json::array();
  for (const auto& [n, mat] : a.diff) {
    for (int c = 0; c < mat.cols(); ++c) {
      for (int r = 0; r < mat.rows(); ++r) {
        if (a.field.is_zero(mat.at(r, c))) continue;
        diff.push_back(Json{{"from", a.labels_at(n)[size_t(c)]},
                            {"to", a.labels_at(n + 1)[size_t(r)]},
                            {"scalar", a.field.to_string(mat.at(r, c))}});
      }
    }
  }

  Json mul = Json::array();
  for (const auto& [pq, mat] : a.mul) {
    auto [p, q] = pq;
    if (p == 0 || q == 0) continue;
    for (int ia = 0; ia < a.space.dim(p); ++ia) {
      for (int ib = 0; ib < a.space.dim(q); ++ib) {
        int col = ia * a.space.dim(q) + ib;
        Json result = Json::array();
        for (int r = 0; r < mat.rows(); ++r) {
          if (a.field.is_zero(mat.at(r, col))) continue;
          result.push_back(Json{{"basis", a.labels_at(p + q)[size_t(r)]},
                               {"scalar", a.field.to_string(mat.at(r, col))}});
        }
        if (result.empty()) continue;
        mul.push_back(Json{{"a", a.labels_at(p)[size_t(ia)]},
                           {"b", a.labels_at(q)[size_t(ib)]},
                           {"result", std::move(result)}});
      }
    }
  }

  return Json{{"schema", "dgar-algebra/1"},
              {"name", a.name},
              {"field", Json{{"characteristic", a.field.characteristic()}}},
              {"basis", std::move(basis)},
              {"diff", std::move(diff)},
              {"mul", std::move(mul)}};
}

SemifreeModule parse_semifree(const Json& j, std::shared_ptr<const DGAlgebra> a) {
  expect_schema(j, "dgar-module/1", "module description");

  NameTable names;
  for (const auto& [n, row] : a->labels) {
    for (size_t i = 0; i < row.size(); ++i) names.where[row[i]] = {n, int(i)};
  }

  SemifreeModule m;
  m.alg = a;
  const Json& gens = field_at(j, "generators", "module description");
  if (!gens.is_array()) throw ValidationError("\"generators\" must be an array");
  std::map<std::string, int> index;
  for (const Json& g : gens) {
    SemifreeGenerator gen;
    gen.name = string_at(g, "name", "generator");
    gen.degree = int(integer_at(g, "degree", "generator"));
    if (!index.emplace(gen.name, int(m.gens.size())).second)
      throw ValidationError("generator \"" + gen.name + "\" is declared twice");
    if (g.contains("d")) {
      const Json& terms = g["d"];
      if (!terms.is_array()) throw ValidationError("generator \"d\" must be an array");
      for (const Json& t : terms) {
        std::string ref = string_at(t, "gen", "differential term");
        auto it = index.find(ref);
        if (it == index.end() || it->second >= int(m.gens.size()))
          throw ValidationError("generator \"" + gen.name +
                                "\" differentiates through \"" + ref +
                                "\", which is not an earlier generator");
        int l = it->second;
        int need = gen.degree + 1 - m.gens[size_t(l)].degree;
        if (a->dim(need) == 0)
          throw ValidationError("coefficient of \"" + ref + "\" in d(" + gen.name +
                                ") would sit in degree " + std::to_string(need) +
                                ", which has no basis");
        Vec coeff = vec_zero(a->dim(need));
        const Json& terms2 = field_at(t, "coeffs", "differential term");
        if (!terms2.is_array()) throw ValidationError("\"coeffs\" must be an array");
        for (const Json& c : terms2) {
          std::string bn = string_at(c, "basis", "coefficient term");
          auto [bd, bi] = names.at(bn, "coefficient term");
          if (bd != need)
            throw ValidationError("coefficient of \"" + ref + "\" in d(" + gen.name +
                                  ") must sit in degree " + std::to_string(need) + "; \"" + bn +
                                  "\" sits in degree " + std::to_string(bd));
          Elem v = a->field.from_string(string_at(c, "scalar", "coefficient term"));
          coeff[size_t(bi)] = a->field.add(coeff[size_t(bi)], v);
        }
        if (!vec_is_zero(coeff)) gen.dcoef[l] = std::move(coeff);
      }
    }
    m.gens.push_back(std::move(gen));
  }
  return m;
}

Json semifree_json(const SemifreeModule& m) {
  Json gens = Json::array();
  for (const SemifreeGenerator& g : m.gens) {
    Json terms = Json::array();
    for (const auto& [l, coeff] : g.dcoef) {
      if (vec_is_zero(coeff)) continue;
      int need = g.degree + 1 - m.gens[size_t(l)].degree;
      Json cs = Json::array();
      for (size_t i = 0; i < coeff.size(); ++i) {
        if (m.alg->field.is_zero(coeff[i])) continue;
        cs.push_back(Json{{"basis", m.alg->labels_at(need)[i]},
                          {"scalar", m.alg->field.to_string(coeff[i])}});
      }
      terms.push_back(Json{{"gen", m.gens[size_t(l)].name}, {"coeffs", std::move(cs)}});
    }
    gens.push_back(Json{{"name", g.name}, {"degree", g.degree}, {"d", std::move(terms)}});
  }
  return Json{{"schema", "dgar-module/1"},
              {"algebra", m.alg->name},
              {"generators", std::move(gens)}};
}

Json validation_json(const ValidationReport& r) {
  return Json{{"valid", r.valid},
              {"failures", r.failures},
              {"h_dims", dims_json(r.h_dims)},
              {"top_degree", r.top_h},
              {"conditions", Json::array({condition("algebra:axioms", r.valid)})}};
}

Json gorenstein_json(const GorensteinReport& r) {
  auto side1 = [](const Condition1Side& s) {
    return Json{{"dims", dims_json(s.dims.dims())},
                {"window_lo", s.window_lo},
                {"complete", s.resolution_complete},
                {"concentrated", s.concentrated}};
  };
  auto side2 = [](const Condition2Side& s) {
    return Json{{"source_dims", dims_json(s.source_dims.dims())},
                {"target_dims", dims_json(s.target_dims.dims())},
                {"dims_match", s.dims_match},
                {"iso_found", s.iso_found}};
  };
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(); };

  Json out{{"verdict", r.verdict},
           {"agreement", r.agreement},
           {"cond1", Json{{"degree", r.cond1.degree},
                          {"verdict", r.cond1.verdict},
                          {"left", side1(r.cond1.left)},
                          {"right", side1(r.cond1.right)}}},
           {"cond2", Json{{"degree", r.cond2.degree},
                          {"verdict", r.cond2.verdict},
                          {"left", side2(r.cond2.left)},
                          {"right", side2(r.cond2.right)}}},
           {"cond4", Json{{"left", opt(r.cond4_left)}, {"right", opt(r.cond4_right)}}},
           {"cond5", Json{{"verdict", opt(r.cond5.verdict)},
                          {"left", certificate_body(r.cond5.left)},
                          {"right", certificate_body(r.cond5.right)}}}};
  out["conditions"] =
      Json::array({Json{{"id", "gorenstein:cond1"}, {"verdict", r.cond1.verdict}},
                   Json{{"id", "gorenstein:cond2"}, {"verdict", r.cond2.verdict}},
                   Json{{"id", "gorenstein:cond5"}, {"verdict", opt(r.cond5.verdict)}},
                   condition("gorenstein:agreement", r.agreement)});
  return out;
}

Json tau_json(const DGModule& before, const DGModule& after, int top_degree) {
  std::map<int, int> hb = cohomology(before).h.dims();
  std::map<int, int> ha = cohomology(after).h.dims();
  std::map<int, int> expect;
  for (const auto& [n, d] : hb) expect[n - (top_degree - 1)] = d;
  bool shift_ok = expect == ha;
  return Json{{"before", Json{{"name", before.name}, {"h_dims", dims_json(hb)}}},
              {"after", Json{{"name", after.name}, {"h_dims", dims_json(ha)}}},
              {"shift", -(top_degree - 1)},
              {"conditions",
               Json::array({condition("translate:cohomology-shift", shift_ok)})}};
}

Json triangle_json(const ARTriangle& t, const ResolutionBudget& budget) {
  int phi_end = phi(t.end, budget);
  int phi_tau = phi(t.tau_term, budget);
  int phi_mid = phi(t.middle, budget);

  bool pi_nonzero = false;
  for (const auto& [n, mat] : t.pi.comp) {
    (void)n;
    if (!mat.is_zero()) pi_nonzero = true;
  }

  std::vector<std::pair<DGModule, ArrowLabel>> labels = arrow_labels(t, budget);
  Json larr = Json::array();
  bool end_in_middle = false;
  for (const auto& [mod, label] : labels) {
    larr.push_back(Json{{"alpha", label.alpha},
                        {"beta", label.beta},
                        {"summand_generators", phi(mod, budget)}});
    if (is_isomorphic(mod, t.end, budget) == IsoVerdict::Yes) end_in_middle = true;
  }

  Json out{{"end", stats_json(t.end)},
           {"middle", stats_json(t.middle)},
           {"translate", stats_json(t.tau_term)},
           {"phi", Json{{"end", phi_end}, {"middle", phi_mid}, {"translate", phi_tau}}},
           {"labels", std::move(larr)}};
  out["conditions"] = Json::array(
      {condition("triangle:translate-generator-count", phi_tau == phi_end),
       condition("triangle:middle-generator-sum", phi_mid == phi_tau + phi_end),
       condition("triangle:connecting-nonzero", pi_nonzero),
       condition("triangle:no-end-summand", !end_in_middle)});
  return out;
}

Json certificate_json(const ComponentCertificate& cert) {
  Json distinct = Json::array();
  for (const DistinctPair& p : cert.distinct)
    distinct.push_back(Json{{"a", p.a}, {"b", p.b}, {"reason", p.reason}});
  Json undecided = Json::array();
  for (const auto& [x, y] : cert.undecided) undecided.push_back(Json::array({x, y}));
  return Json{{"lower_bound", cert.lower_bound},
              {"distinct", std::move(distinct)},
              {"undecided", std::move(undecided)}};
}

Json tree_json(const std::vector<TreeNode>& nodes, const ComponentCertificate& cert) {
  Json arr = Json::array();
  int extensions = 0;
  bool columns_ok = true;
  for (const TreeNode& n : nodes) {
    arr.push_back(Json{{"word", n.word},
                       {"inf", n.inf},
                       {"sup", n.sup},
                       {"amp", n.amp},
                       {"phi", n.phi_count}});
    if (!n.word.empty()) ++extensions;
    if (n.phi_count != int(n.word.size()) + 1) columns_ok = false;
  }
  return Json{{"nodes", std::move(arr)},
              {"extension_nodes", extensions},
              {"certificate", certificate_json(cert)},
              {"conditions",
               Json::array({condition("tree:column-generator-count", columns_ok)})}};
}

Json translation_quiver_json(const TranslationQuiver& q) {
  Json verts = Json::array();
  for (const QuiverVertex& v : q.vertices) {
    Json jv{{"id", v.id},
            {"inf", v.inf},
            {"amp", v.amp},
            {"phi", v.phi_count},
            {"interior", v.interior}};
    if (v.object) jv["object"] = Json{{"j", v.object->j}, {"m", v.object->m}};
    verts.push_back(std::move(jv));
  }
  Json arrows = Json::array();
  for (const QuiverArrow& a : q.arrows)
    arrows.push_back(Json{{"src", a.src},
                          {"dst", a.dst},
                          {"alpha", a.label.alpha},
                          {"beta", a.label.beta}});
  Json tau = Json::object();
  for (const auto& [s, t] : q.tau) tau[s] = t;
  return Json{{"vertices", std::move(verts)},
              {"arrows", std::move(arrows)},
              {"tau", std::move(tau)}};
}

TranslationQuiver parse_quiver(const Json& j) {
  if (!j.is_object()) throw ValidationError("quiver description must be a JSON object");
  TranslationQuiver q;
  const Json& verts = field_at(j, "vertices", "quiver description");
  if (!verts.is_array()) throw ValidationError("\"vertices\" must be an array");
  for (const Json& jv : verts) {
    QuiverVertex v;
    v.id = string_at(jv, "id", "vertex");
    v.inf = int(integer_at(jv, "inf", "vertex"));
    v.amp = int(integer_at(jv, "amp", "vertex"));
    v.phi_count = int(integer_at(jv, "phi", "vertex"));
    const Json& interior = field_at(jv, "interior", "vertex");
    if (!interior.is_boolean()) throw ValidationError("vertex \"interior\" must be a boolean");
    v.interior = interior.get<bool>();
    if (jv.contains("object")) {
      const Json& o = jv["object"];
      v.object = SphereObject{int(integer_at(o, "j", "vertex object")),
                              int(integer_at(o, "m", "vertex object"))};
    }
    q.vertices.push_back(std::move(v));
  }
  const Json& arrows = field_at(j, "arrows", "quiver description");
  if (!arrows.is_array()) throw ValidationError("\"arrows\" must be an array");
  for (const Json& ja : arrows) {
    QuiverArrow a;
    a.src = string_at(ja, "src", "arrow");
    a.dst = string_at(ja, "dst", "arrow");
    a.label.alpha = int(integer_at(ja, "alpha", "arrow"));
    a.label.beta = int(integer_at(ja, "beta", "arrow"));
    q.arrows.push_back(std::move(a));
  }
  const Json& tau = field_at(j, "tau", "quiver description");
  if (!tau.is_object()) throw ValidationError("\"tau\" must be an object");
  for (const auto& [s, t] : tau.items()) {
    if (!t.is_string()) throw ValidationError("translate targets must be strings");
    q.tau[s] = t.get<std::string>();
  }
  return q;
}

Json quiver_json(const SphereQuiverResult& sq) {
  bool stable = check_stable(sq.quiver).ok;
  bool grids = true;
  for (const QuiverVertex& v : sq.quiver.vertices) {
    if (!v.interior) continue;
    if (!check_za_infinity_window(sq.quiver, neighborhood_window(sq.quiver, v.id)).ok)
      grids = false;
  }
  bool additive =
      check_additive(sq.quiver, [](const QuiverVertex& v) { return long(v.phi_count); }).ok;

  Json comp = Json::object();
  for (const auto& [id, c] : sq.component_of) comp[id] = c;
  return Json{{"schema", "dgar-quiver/1"},
              {"d", sq.d},
              {"components", sq.components},
              {"component_of", std::move(comp)},
              {"quiver", translation_quiver_json(sq.quiver)},
              {"conditions",
               Json::array({condition("quiver:stable", stable),
                            condition("quiver:grid-windows", grids),
                            condition("quiver:additive-generator-count", additive)})}};
}

}  // namespace dgar
