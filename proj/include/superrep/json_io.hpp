#pragma once

#include <json.hpp>

#include "superrep/rep.hpp"
#include "superrep/species_of.hpp"

namespace superrep {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// GradedAlgebra: {"basis": [...], "degrees": [...], "field": "Q",
//                 "table": [[["1","0"],...],...]} with exact scalar strings.
// The identity is re-derived on load (and verified two-sided).
// ---------------------------------------------------------------------------

inline ordered_json algebra_to_json(const GradedAlgebra& a) {
  ordered_json j;
  j["basis"] = a.basis;
  j["degrees"] = a.degree;
  j["field"] = a.field.str();
  ordered_json table = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int jj = 0; jj < a.dim(); ++jj) {
      std::vector<std::string> entry(a.dim(), "0");
      for (const auto& [k, c] : a.table[i][jj]) entry[k] = c.str();
      row.push_back(entry);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

inline GradedAlgebra algebra_from_json(const json& j) {
  GradedAlgebra a;
  a.field = Field::parse(j.at("field").get<std::string>());
  require_odd_characteristic(a.field);
  a.basis = j.at("basis").get<std::vector<std::string>>();
  a.degree = j.at("degrees").get<std::vector<int>>();
  const int n = static_cast<int>(a.basis.size());
  if (static_cast<int>(a.degree.size()) != n) throw validation_error("degrees length does not match basis");
  const auto& table = j.at("table");
  if (static_cast<int>(table.size()) != n) throw validation_error("table has wrong number of rows");
  a.table.assign(n, std::vector<std::vector<std::pair<int, Scalar>>>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw validation_error("table row has wrong length");
    for (int jj = 0; jj < n; ++jj) {
      const auto& entry = table[i][jj];
      if (static_cast<int>(entry.size()) != n) throw validation_error("table entry has wrong length");
      for (int k = 0; k < n; ++k) {
        Scalar c = Scalar::parse(a.field, entry[k].get<std::string>());
        if (!c.is_zero()) a.table[i][jj].push_back({k, c});
      }
    }
  }
  // Solve for a two-sided identity: sum_i x_i b_i b_j = b_j for all j, and
  // the same on the right.
  Matrix sys(a.field, 2 * n * n, n);
  Vec rhs = zero_vec(a.field, 2 * n * n);
  for (int jj = 0; jj < n; ++jj)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (const auto& [kk, c] : a.table[i][jj])
          if (kk == k) sys.at(jj * n + k, i) += c;
        for (const auto& [kk, c] : a.table[jj][i])
          if (kk == k) sys.at(n * n + jj * n + k, i) += c;
      }
      rhs[jj * n + k] = jj == k ? Scalar::one(a.field) : Scalar::zero(a.field);
      rhs[n * n + jj * n + k] = jj == k ? Scalar::one(a.field) : Scalar::zero(a.field);
    }
  auto one = sys.solve(rhs);
  if (!one) throw validation_error("algebra table has no two-sided identity");
  a.one = *one;
  return a;
}

// ---------------------------------------------------------------------------
// Superspecies: {"vertices":[{"id":1,"type":"K"},...],
//                "bimodules":[{"source":1,"target":2,"case":"KK","d0":1,"d1":0},...]}
// Unlisted pairs mean the zero bimodule. Ids are 1-based.
// ---------------------------------------------------------------------------

inline ordered_json species_to_json(const Superspecies& s) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (int i = 0; i < s.n(); ++i)
    verts.push_back(ordered_json{{"id", i + 1}, {"type", s.is_D(i) ? "D" : "K"}});
  j["vertices"] = verts;
  ordered_json bims = ordered_json::array();
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    ordered_json b;
    b["source"] = pair.first + 1;
    b["target"] = pair.second + 1;
    switch (spec.kind) {
      case BimoduleSpec::Case::KK:
        b["case"] = "KK";
        b["d0"] = spec.d0;
        b["d1"] = spec.d1;
        break;
      case BimoduleSpec::Case::KtoD:
        b["case"] = "KtoD";
        b["rank"] = spec.rank;
        break;
      case BimoduleSpec::Case::DtoK:
        b["case"] = "DtoK";
        b["rank"] = spec.rank;
        break;
      default:
        b["case"] = "DD";
        b["plus"] = spec.plus;
        b["minus"] = spec.minus;
    }
    bims.push_back(b);
  }
  j["bimodules"] = bims;
  return j;
}

inline Superspecies species_from_json(const json& j) {
  Superspecies s;
  std::map<int, int> id_to_index;
  for (const auto& v : j.at("vertices")) {
    int id = v.at("id").get<int>();
    std::string type = v.at("type").get<std::string>();
    if (type != "K" && type != "D") throw validation_error("vertex type must be K or D");
    if (id_to_index.count(id)) throw validation_error("duplicate vertex id");
    id_to_index[id] = s.n();
    s.vertices.push_back(type == "D" ? VertexType::D : VertexType::K);
  }
  if (j.contains("bimodules"))
    for (const auto& b : j.at("bimodules")) {
      auto src = id_to_index.find(b.at("source").get<int>());
      auto tgt = id_to_index.find(b.at("target").get<int>());
      if (src == id_to_index.end() || tgt == id_to_index.end())
        throw validation_error("bimodule endpoint refers to an unknown vertex id");
      std::string cs = b.at("case").get<std::string>();
      BimoduleSpec spec;
      if (cs == "KK")
        spec = BimoduleSpec::KK(b.at("d0").get<int>(), b.at("d1").get<int>());
      else if (cs == "KtoD")
        spec = BimoduleSpec::KtoD(b.at("rank").get<int>());
      else if (cs == "DtoK")
        spec = BimoduleSpec::DtoK(b.at("rank").get<int>());
      else if (cs == "DD")
        spec = BimoduleSpec::DD(b.at("plus").get<int>(), b.at("minus").get<int>());
      else
        throw validation_error("unknown bimodule case '" + cs + "'");
      if (s.bimodules.count({src->second, tgt->second}))
        throw validation_error("duplicate bimodule for one ordered pair");
      s.bimodules[{src->second, tgt->second}] = spec;
    }
  auto report = s.validate();
  if (!report.empty()) throw validation_error("invalid superspecies: " + report.front());
  return s;
}

// ---------------------------------------------------------------------------
// Quiver: {"vertices":["v1",...], "arrows":[{"id":"a1","source":"v1","target":"v2"}]}
// Superquiver adds "color" on vertices and "style" on arrows.
// ---------------------------------------------------------------------------

inline ordered_json quiver_to_json(const Quiver& q) {
  ordered_json j;
  std::vector<std::string> verts;
  for (int v = 0; v < q.n; ++v) verts.push_back(q.vertex_name(v));
  j["vertices"] = verts;
  ordered_json arrows = ordered_json::array();
  for (const auto& a : q.arrows)
    arrows.push_back(ordered_json{{"id", a.id}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  j["arrows"] = arrows;
  return j;
}

inline Quiver quiver_from_json(const json& j) {
  Quiver q;
  std::map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    std::string name = v.get<std::string>();
    if (index.count(name)) throw validation_error("duplicate quiver vertex id");
    index[name] = q.n++;
    q.vertex_names.push_back(name);
  }
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      auto s = index.find(a.at("source").get<std::string>());
      auto t = index.find(a.at("target").get<std::string>());
      if (s == index.end() || t == index.end()) throw validation_error("arrow endpoint refers to unknown vertex");
      std::string id = a.contains("id") ? a.at("id").get<std::string>() : "a" + std::to_string(q.arrows.size() + 1);
      q.arrows.push_back({id, s->second, t->second});
    }
  return q;
}

inline ordered_json superquiver_to_json(const Superquiver& q) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (int v = 0; v < q.n; ++v)
    verts.push_back(ordered_json{{"id", q.vertex_name(v)}, {"color", q.black[v] ? "black" : "white"}});
  j["vertices"] = verts;
  ordered_json arrows = ordered_json::array();
  for (const auto& a : q.arrows)
    arrows.push_back(ordered_json{{"id", a.id},
                                  {"source", q.vertex_name(a.source)},
                                  {"target", q.vertex_name(a.target)},
                                  {"style", a.dotted ? "dotted" : "solid"}});
  j["arrows"] = arrows;
  return j;
}

inline Superquiver superquiver_from_json(const json& j) {
  Superquiver q;
  std::map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    std::string name = v.at("id").is_string() ? v.at("id").get<std::string>()
                                              : std::to_string(v.at("id").get<int>());
    std::string color = v.at("color").get<std::string>();
    if (color != "white" && color != "black") throw validation_error("vertex color must be white or black");
    if (index.count(name)) throw validation_error("duplicate superquiver vertex id");
    index[name] = q.n++;
    q.vertex_names.push_back(name);
    q.black.push_back(color == "black");
  }
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows")) {
      std::string sname = a.at("source").is_string() ? a.at("source").get<std::string>()
                                                     : std::to_string(a.at("source").get<int>());
      std::string tname = a.at("target").is_string() ? a.at("target").get<std::string>()
                                                     : std::to_string(a.at("target").get<int>());
      auto s = index.find(sname);
      auto t = index.find(tname);
      if (s == index.end() || t == index.end()) throw validation_error("arrow endpoint refers to unknown vertex");
      std::string style = a.contains("style") ? a.at("style").get<std::string>() : "solid";
      if (style != "solid" && style != "dotted") throw validation_error("arrow style must be solid or dotted");
      std::string id = a.contains("id") ? a.at("id").get<std::string>() : "a" + std::to_string(q.arrows.size() + 1);
      q.arrows.push_back({id, s->second, t->second, style == "dotted"});
    }
  return q;
}

inline ordered_json indec_report_to_json(const IndecCountReport& r) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.per_dim)
    rows.push_back(ordered_json{{"dims", row.dims}, {"classes", row.classes}, {"indecomposables", row.indecomposable}});
  j["per_dim_vector"] = rows;
  j["total_indecomposables"] = r.total_indecomposable;
  return j;
}

inline ordered_json equivalence_report_to_json(const EquivalenceReport& r) {
  ordered_json j;
  j["representations_checked"] = r.reps_checked;
  j["indecomposables"] = r.indecomposables;
  j["functor_preserves_indecomposability"] = r.functor_preserves_indecomposability;
  j["functor_preserves_iso_classes"] = r.functor_preserves_iso_classes;
  j["counts_agree"] = r.counts_agree;
  j["hom_dims_agree"] = r.hom_dims_agree;
  j["ok"] = r.ok();
  return j;
}

}  // namespace superrep
