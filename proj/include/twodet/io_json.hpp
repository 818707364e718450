#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "twodet/blowup.hpp"
#include "twodet/complexes.hpp"
#include "twodet/degenerations.hpp"
#include "twodet/groebner.hpp"
#include "twodet/invariants.hpp"
#include "twodet/kronecker.hpp"
#include "twodet/pencil.hpp"

namespace twodet {

using json = nlohmann::ordered_json;

inline json variable_json(const Variable& v) {
  json j{{"name", v.name}, {"role", role_name(v.role)}};
  if (v.role == VarRole::T) {
    j["alpha"] = v.i;
    j["beta"] = v.j;
  } else if (v.role == VarRole::Y1 || v.role == VarRole::Y2 || v.role == VarRole::X) {
    j["index"] = v.i;
  }
  return j;
}

// matrix file format: {variables: [{name, role}...], rows: [[entry...], [entry...]]}
inline json matrix_to_json(const LinearMatrix2& m) {
  json vars = json::array();
  for (auto& v : m.ring->vars()) vars.push_back(variable_json(v));
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (auto& e : m.rows[i]) row.push_back(e.str());
    rows.push_back(row);
  }
  return json{{"schema", 1}, {"field", m.field.str()}, {"variables", vars}, {"rows", rows}};
}

inline LinearMatrix2 matrix_from_json(const json& j, Field default_field) {
  require(j.contains("variables") && j.contains("rows"), Errc::input,
          "matrix json needs variables and rows");
  Field f = j.contains("field") ? Field::parse(j["field"].get<std::string>()) : default_field;
  std::vector<Variable> vars;
  for (auto& vj : j["variables"]) {
    if (vj.is_string()) {
      vars.push_back(named_var(vj.get<std::string>()));
    } else {
      Variable v = named_var(vj["name"].get<std::string>());
      if (vj.contains("role")) v.role = role_from_name(vj["role"].get<std::string>());
      if (vj.contains("index")) v.i = vj["index"].get<int>();
      if (vj.contains("alpha")) v.i = vj["alpha"].get<int>();
      if (vj.contains("beta")) v.j = vj["beta"].get<int>();
      vars.push_back(std::move(v));
    }
  }
  RingPtr ring = make_ring(std::move(vars));
  auto& rows = j["rows"];
  require(rows.size() == 2, Errc::input, "matrix needs exactly 2 rows");
  require(rows[0].size() == rows[1].size(), Errc::input, "matrix rows differ in length");
  LinearMatrix2 m;
  m.ring = ring;
  m.field = f;
  for (int i = 0; i < 2; ++i)
    for (auto& cell : rows[i])
      m.rows[i].push_back(Polynomial::parse(ring, f, cell.get<std::string>()));
  return m;
}

// block list format: [{kind, size, eigenvalue?}]
inline json blocks_to_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (auto& b : blocks) {
    json j{{"kind", b.kind == Block::Kind::scroll
                        ? "scroll"
                        : b.kind == Block::Kind::jordan ? "jordan" : "nilpotent"},
           {"size", b.size}};
    if (b.kind == Block::Kind::jordan) j["eigenvalue"] = b.eigenvalue.str();
    out.push_back(std::move(j));
  }
  return out;
}

inline std::vector<Block> blocks_from_json(const json& j, Field f) {
  std::vector<Block> out;
  require(j.is_array() && !j.empty(), Errc::input, "block list must be a nonempty array");
  for (auto& bj : j) {
    std::string kind = bj.at("kind").get<std::string>();
    int size = bj.at("size").get<int>();
    if (kind == "scroll") {
      out.push_back(Block::scroll(size));
    } else if (kind == "jordan") {
      std::string eig = bj.contains("eigenvalue")
                            ? (bj["eigenvalue"].is_string()
                                   ? bj["eigenvalue"].get<std::string>()
                                   : std::to_string(bj["eigenvalue"].get<long>()))
                            : "0";
      out.push_back(Block::jordan(size, Scalar::parse(f, eig)));
    } else if (kind == "nilpotent") {
      out.push_back(Block::nilpotent(size));
    } else {
      fail(Errc::input, "unknown block kind: " + kind);
    }
  }
  return out;
}

inline json kwtype_to_json(const KWType& t) {
  return json{{"lambda", t.lambda}, {"mu", t.mu}, {"nilpotent", t.nilpotent},
              {"label", t.str()}};
}

inline json spair_log_json(const std::vector<SPairRecord>& log, const RingPtr& ring) {
  json out = json::array();
  for (auto& rec : log) {
    Polynomial lcm_poly = Polynomial::term(ring, rec.lcm, Scalar::one(Field::rationals()));
    json j{{"pair", {rec.i, rec.j}},
           {"lcm", lcm_poly.str()},
           {"outcome", outcome_name(rec.outcome)}};
    if (!rec.reducers.empty()) j["reducers"] = rec.reducers;
    out.push_back(std::move(j));
  }
  return out;
}

inline json certificate_json(const TheoremCertificate& cert, const BlowupPresentation& p,
                             bool include_log) {
  json basis = json::array();
  {
    std::optional<RelFamily> fiber_only[2] = {RelFamily::PLU, RelFamily::LAP};
    if (cert.fiber) {
      for (auto f : fiber_only)
        for (auto& poly : all_relations(p, f).polys) basis.push_back(poly.str());
    } else {
      for (auto& poly : all_relations(p).polys) basis.push_back(poly.str());
    }
  }
  json j{{"schema", 1},
         {"d", cert.d},
         {"e", cert.e},
         {"side", cert.fiber ? "fiber" : "rees"},
         {"field", p.field().str()},
         {"order", p.order().descriptor()},
         {"family_size", cert.family_size},
         {"basis", basis},
         {"family_counts",
          {{"UEN", cert.fiber ? 0 : all_relations(p, RelFamily::UEN).ids.size()},
           {"LEN", cert.fiber ? 0 : all_relations(p, RelFamily::LEN).ids.size()},
           {"PLU", all_relations(p, RelFamily::PLU).ids.size()},
           {"LAP", all_relations(p, RelFamily::LAP).ids.size()}}},
         {"spairs",
          {{"total", cert.gb.total_pairs},
           {"skipped_coprime", cert.gb.skipped_coprime},
           {"reduced_to_zero", cert.gb.reduced_to_zero}}},
         {"family_is_groebner", cert.family_is_gb},
         {"oracle_ran", cert.oracle_ran},
         {"verified", cert.ok()}};
  if (cert.oracle_ran) {
    j["oracle_lm_ideal_match"] = cert.lm_ideal_match;
    j["oracle_ideal_match"] = cert.ideal_match;
  }
  if (!cert.family_is_gb && cert.gb.failing.first >= 0) {
    j["failing_spair"] = {cert.gb.failing.first, cert.gb.failing.second};
    j["witness"] = cert.gb.witness.str();
  }
  if (include_log) j["spair_log"] = spair_log_json(cert.gb.log, p.ring());
  return j;
}

inline json complex_to_json(const SimplicialComplex& K) {
  json facets = json::array();
  for (auto& f : K.facets) {
    json names = json::array();
    for (int v : f) names.push_back(K.vertex_names[v]);
    facets.push_back(std::move(names));
  }
  return json{{"schema", 1},
              {"vertices", K.vertex_names},
              {"facet_count", K.facets.size()},
              {"pure", K.pure()},
              {"facets", facets}};
}

inline json poset_to_json(const Poset& P) {
  json nodes = json::array();
  for (auto& s : P.nodes) nodes.push_back(s.label());
  json edges = json::array();
  for (auto& [a, b] : P.hasse) edges.push_back({a, b});
  return json{{"schema", 1},
              {"c", P.c},
              {"d", P.d},
              {"node_count", P.nodes.size()},
              {"nodes", nodes},
              {"hasse_edges", edges},
              {"minimal", P.minimal_node >= 0 ? P.nodes[P.minimal_node].label() : ""},
              {"closure_matches_criterion", P.closure_matches_criterion}};
}

inline json invariants_to_json(const InvariantReport& r) {
  json j{{"schema", 1},
         {"c", r.c},
         {"d", r.d},
         {"e", r.e},
         {"fiber",
          {{"formula_mult", r.formula_fiber_mult},
           {"formula_dim", r.formula_fiber_dim},
           {"census_mult", r.census_fiber_mult},
           {"census_dim", r.census_fiber_dim},
           {"sr_mult", r.sr_fiber_mult},
           {"sr_dim", r.sr_fiber_dim},
           {"pure", r.fiber_pure},
           {"agree", r.fiber_agree}}},
         {"ok", r.ok()}};
  if (r.rees_available)
    j["rees"] = {{"formula_mult", r.formula_rees_mult}, {"census_mult", r.census_rees_mult},
                 {"census_dim", r.census_rees_dim},     {"sr_mult", r.sr_rees_mult},
                 {"sr_dim", r.sr_rees_dim},             {"pure", r.rees_pure},
                 {"agree", r.rees_agree}};
  if (r.oracle_ran) {
    j["oracle"] = {{"fiber_mult", r.oracle_fiber_mult},
                   {"fiber_dim", r.oracle_fiber_dim},
                   {"agree", r.oracle_agree}};
    if (r.oracle_rees_ran) {
      j["oracle"]["rees_mult"] = r.oracle_rees_mult;
      j["oracle"]["rees_dim"] = r.oracle_rees_dim;
    }
  }
  if (!r.convention_note.empty()) j["convention_note"] = r.convention_note;
  return j;
}

inline json error_json(const Error& err) {
  const char* code = "internal";
  switch (err.code()) {
    case Errc::input: code = "input"; break;
    case Errc::cap_exceeded: code = "cap-exceeded"; break;
    case Errc::certificate: code = "certificate"; break;
    case Errc::non_split: code = "non-split-eigenvalues"; break;
    case Errc::not_maximal_codim: code = "not-maximal-codim"; break;
    case Errc::cone: code = "cone-detected"; break;
    case Errc::internal: code = "internal"; break;
  }
  return json{{"schema", 1}, {"error", {{"code", code}, {"message", err.what()}}}};
}

}  // namespace twodet
