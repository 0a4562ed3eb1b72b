#pragma once

#include <array>
#include <optional>

#include "superrep/superspecies.hpp"

namespace superrep {

// The family table of the superquiver classification. Interior same-color
// arrows of a family are free in orientation and style; the junctions are
// pinned: a single solid arrow white->black, or a solid+dotted pair
// black->white.
struct FamilyMatch {
  enum class Family {
    An1, A1n, A22, B1n, Cn1, F22,                       // finite
    A1n1, Ap1n1, A32, A23, B1n1, Bp1n1, C1n1, Cp1n1,    // tame
    F32, F23, Dn1, Dpn1, D1n, Dp1n,                     // tame
    OneColorDynkin, OneColorAffine
  };
  Family family;
  int n = 0;                    // parameter, when applicable
  DiagramClass one_color = {};  // underlying shape for one-color matches

  bool is_finite_family() const {
    switch (family) {
      case Family::An1:
      case Family::A1n:
      case Family::A22:
      case Family::B1n:
      case Family::Cn1:
      case Family::F22:
      case Family::OneColorDynkin: return true;
      default: return false;
    }
  }
  std::string str() const {
    auto p1 = [&](const char* fmt) { return std::string(fmt) + "(" + std::to_string(n) + ",1)"; };
    auto p2 = [&](const char* fmt) { return std::string(fmt) + "(1," + std::to_string(n) + ")"; };
    auto p3 = [&](const char* fmt) { return std::string(fmt) + "(1," + std::to_string(n) + ",1)"; };
    switch (family) {
      case Family::An1: return p1("A");
      case Family::A1n: return p2("A");
      case Family::A22: return "A(2,2)";
      case Family::B1n: return p2("B");
      case Family::Cn1: return p1("C");
      case Family::F22: return "F(2,2)";
      case Family::A1n1: return p3("A");
      case Family::Ap1n1: return p3("A'");
      case Family::A32: return "A(3,2)";
      case Family::A23: return "A(2,3)";
      case Family::B1n1: return p3("B");
      case Family::Bp1n1: return p3("B'");
      case Family::C1n1: return p3("C");
      case Family::Cp1n1: return p3("C'");
      case Family::F32: return "F(3,2)";
      case Family::F23: return "F(2,3)";
      case Family::Dn1: return p1("D");
      case Family::Dpn1: return p1("D'");
      case Family::D1n: return p2("D");
      case Family::Dp1n: return p2("D'");
      case Family::OneColorDynkin: return "OneColorDynkin(" + one_color.str() + ")";
      default: return "OneColorAffine(" + one_color.str() + ")";
    }
  }
};

namespace detail {

// Normalize for family matching: same-color connections become symmetric
// solid arrow bundles (their orientation and style do not matter for the
// classification); cross-color junction arrows are kept exactly.
inline Superquiver family_normal_form(const Superquiver& q) {
  Superquiver out;
  out.n = q.n;
  out.black = q.black;
  std::map<std::pair<int, int>, int> same;
  int k = 0;
  for (const auto& [pair, cnt] : q.pair_counts()) {
    auto [i, j] = pair;
    if (q.black[i] == q.black[j]) {
      auto key = std::minmax(i, j);
      same[{key.first, key.second}] += cnt.first + cnt.second;
    } else {
      for (int t = 0; t < cnt.first; ++t) out.arrows.push_back({"s" + std::to_string(++k), i, j, false});
      for (int t = 0; t < cnt.second; ++t) out.arrows.push_back({"d" + std::to_string(++k), i, j, true});
    }
  }
  for (const auto& [pair, m] : same)
    for (int t = 0; t < m; ++t) {
      out.arrows.push_back({"u" + std::to_string(++k), pair.first, pair.second, false});
      out.arrows.push_back({"u" + std::to_string(++k), pair.second, pair.first, false});
    }
  return out;
}

// Template builder toolkit.
struct TemplateBuilder {
  Superquiver q;
  int white() {
    q.black.push_back(false);
    return q.n++;
  }
  int black() {
    q.black.push_back(true);
    return q.n++;
  }
  void edge(int u, int v) { q.arrows.push_back({"e", u, v, false}); }  // same-color, free
  void ktod(int w, int b) { q.arrows.push_back({"j", w, b, false}); }
  void dtok(int b, int w) {
    q.arrows.push_back({"p", b, w, false});
    q.arrows.push_back({"p", b, w, true});
  }
  std::vector<int> white_path(int n) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) vs.push_back(white());
    for (int i = 0; i + 1 < n; ++i) edge(vs[i], vs[i + 1]);
    return vs;
  }
  std::vector<int> black_path(int n) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) vs.push_back(black());
    for (int i = 0; i + 1 < n; ++i) edge(vs[i], vs[i + 1]);
    return vs;
  }
  // D-shaped tree: two leaves on a fork plus a tail; returns the tail end.
  std::vector<int> d_tree(int n, bool blacks) {
    std::vector<int> path = blacks ? black_path(n - 2) : white_path(n - 2);
    int l1 = blacks ? black() : white();
    int l2 = blacks ? black() : white();
    edge(l1, path.front());
    edge(l2, path.front());
    return path;  // fork is path.front(), tail end is path.back()
  }
};

inline std::optional<Superquiver> family_template(FamilyMatch::Family f, int n) {
  using F = FamilyMatch::Family;
  TemplateBuilder t;
  switch (f) {
    case F::An1: {
      if (n < 1) return std::nullopt;
      auto w = t.white_path(n);
      t.ktod(w.back(), t.black());
      break;
    }
    case F::A1n: {
      if (n < 1) return std::nullopt;
      auto b = t.black_path(n);
      t.ktod(t.white(), b.front());
      break;
    }
    case F::A22: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(2);
      auto b = t.black_path(2);
      t.ktod(w.back(), b.front());
      break;
    }
    case F::B1n: {
      if (n < 1) return std::nullopt;
      auto b = t.black_path(n);
      t.dtok(b.front(), t.white());
      break;
    }
    case F::Cn1: {
      if (n < 1) return std::nullopt;
      auto w = t.white_path(n);
      t.dtok(t.black(), w.back());
      break;
    }
    case F::F22: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(2);
      auto b = t.black_path(2);
      t.dtok(b.front(), w.back());
      break;
    }
    case F::A1n1: {
      if (n < 1) return std::nullopt;
      auto w = t.white_path(n);
      t.ktod(w.front(), t.black());
      t.ktod(w.back(), t.black());
      break;
    }
    case F::Ap1n1: {
      if (n < 1) return std::nullopt;
      auto b = t.black_path(n);
      t.ktod(t.white(), b.front());
      t.ktod(t.white(), b.back());
      break;
    }
    case F::A32: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(3);
      auto b = t.black_path(2);
      t.ktod(w.back(), b.front());
      break;
    }
    case F::A23: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(2);
      auto b = t.black_path(3);
      t.ktod(w.back(), b.front());
      break;
    }
    case F::B1n1: {
      if (n < 1) return std::nullopt;
      auto b = t.black_path(n);
      t.dtok(b.front(), t.white());
      t.ktod(t.white(), b.back());
      break;
    }
    case F::Bp1n1: {
      if (n < 1) return std::nullopt;
      auto b = t.black_path(n);
      t.dtok(b.front(), t.white());
      t.dtok(b.back(), t.white());
      break;
    }
    case F::C1n1: {
      if (n < 1) return std::nullopt;
      auto w = t.white_path(n);
      t.ktod(w.front(), t.black());
      t.dtok(t.black(), w.back());
      break;
    }
    case F::Cp1n1: {
      if (n < 1) return std::nullopt;
      auto w = t.white_path(n);
      t.dtok(t.black(), w.front());
      t.dtok(t.black(), w.back());
      break;
    }
    case F::F32: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(3);
      auto b = t.black_path(2);
      t.dtok(b.front(), w.back());
      break;
    }
    case F::F23: {
      if (n != 0) return std::nullopt;
      auto w = t.white_path(2);
      auto b = t.black_path(3);
      t.dtok(b.front(), w.back());
      break;
    }
    case F::Dn1: {
      if (n < 3) return std::nullopt;
      auto tail = t.d_tree(n, false);
      t.ktod(tail.back(), t.black());
      break;
    }
    case F::Dpn1: {
      if (n < 3) return std::nullopt;
      auto tail = t.d_tree(n, false);
      t.dtok(t.black(), tail.back());
      break;
    }
    case F::D1n: {
      if (n < 3) return std::nullopt;
      auto tail = t.d_tree(n, true);
      t.ktod(t.white(), tail.back());
      break;
    }
    case F::Dp1n: {
      if (n < 3) return std::nullopt;
      auto tail = t.d_tree(n, true);
      t.dtok(tail.back(), t.white());
      break;
    }
    default: return std::nullopt;
  }
  return t.q;
}

}  // namespace detail

namespace detail {

// Cheap isomorphism invariant of a superquiver under family normalization:
// color counts plus the sorted multiset of per-pair labels, with same-color
// pairs symmetrized. Profile inequality rules out isomorphism.
inline std::vector<long> family_profile(const Superquiver& q) {
  int whites = 0, blacks = 0;
  for (int v = 0; v < q.n; ++v) (q.black[v] ? blacks : whites)++;
  std::vector<long> prof = {whites, blacks};
  std::map<std::pair<int, int>, long> same;
  std::vector<long> labels;
  for (const auto& [pair, cnt] : q.pair_counts()) {
    auto [i, j] = pair;
    if (q.black[i] == q.black[j]) {
      int a = std::min(i, j), b = std::max(i, j);
      long color = q.black[i] ? 1 : 0;
      same[{a, b}] += cnt.first + cnt.second + color * 1000000;
    } else {
      labels.push_back((q.black[i] ? 1 : 2) * 10000000L + cnt.first * 1000 + cnt.second);
    }
  }
  for (const auto& [pair, code] : same) labels.push_back(30000000L + code);
  std::sort(labels.begin(), labels.end());
  prof.insert(prof.end(), labels.begin(), labels.end());
  return prof;
}

}  // namespace detail

// Match a connected realizable superquiver against the family table.
// One-color inputs classify through their underlying diagram; two-color
// inputs by exact template isomorphism (junctions significant, same-color
// orientation and style free). Finite families are tried first.
inline std::optional<FamilyMatch> match_family(const Superquiver& q) {
  using F = FamilyMatch::Family;
  if (q.n == 0) return std::nullopt;
  if (superquiver_components(q).size() != 1) throw validation_error("match_family requires a connected superquiver");
  if (!is_realizable(q)) return std::nullopt;
  if (q.is_one_color()) {
    auto cls = classify_diagram(underlying_diagram(q));
    if (cls.size() != 1) throw internal_error("connected superquiver with several diagram components");
    if (cls[0].is_dynkin()) return FamilyMatch{F::OneColorDynkin, 0, cls[0]};
    if (cls[0].is_extended() && q.is_acyclic()) return FamilyMatch{F::OneColorAffine, 0, cls[0]};
    return std::nullopt;
  }
  int whites = 0, blacks = 0;
  for (int v = 0; v < q.n; ++v) (q.black[v] ? blacks : whites)++;
  struct Trial {
    F fam;
    int n;
  };
  const std::array<Trial, 20> trials = {{
      {F::A22, 0},  {F::F22, 0},  {F::An1, whites}, {F::A1n, blacks}, {F::B1n, blacks}, {F::Cn1, whites},
      {F::A32, 0},  {F::A23, 0},  {F::F32, 0},      {F::F23, 0},      {F::A1n1, whites}, {F::Ap1n1, blacks},
      {F::B1n1, blacks}, {F::Bp1n1, blacks}, {F::C1n1, whites}, {F::Cp1n1, whites},
      {F::Dn1, whites}, {F::Dpn1, whites}, {F::D1n, blacks}, {F::Dp1n, blacks},
  }};
  // Normalized templates and their profiles are cached; almost every
  // non-matching candidate is rejected on the profile before the
  // isomorphism search runs.
  struct Entry {
    std::optional<Superquiver> norm;
    std::vector<long> profile;
  };
  static thread_local std::map<std::pair<int, int>, Entry> cache;
  std::optional<Superquiver> input_norm;
  std::optional<std::vector<long>> input_profile;
  for (const auto& trial : trials) {
    auto key = std::make_pair(static_cast<int>(trial.fam), trial.n);
    auto it = cache.find(key);
    if (it == cache.end()) {
      Entry entry;
      if (auto tmpl = detail::family_template(trial.fam, trial.n)) {
        entry.norm = detail::family_normal_form(*tmpl);
        entry.profile = detail::family_profile(*entry.norm);
      }
      it = cache.emplace(key, std::move(entry)).first;
    }
    if (!it->second.norm || it->second.norm->n != q.n) continue;
    if (!input_norm) {
      input_norm = detail::family_normal_form(q);
      input_profile = detail::family_profile(*input_norm);
    }
    if (*input_profile != it->second.profile) continue;
    if (superquiver_isomorphic(*input_norm, *it->second.norm)) return FamilyMatch{trial.fam, trial.n, {}};
  }
  return std::nullopt;
}

namespace detail {

inline RepType combine_types(bool any_wild, bool any_tame) {
  if (any_wild) return RepType::Wild;
  if (any_tame) return RepType::Tame;
  return RepType::Finite;
}

}  // namespace detail

// The underlying diagram of Q_S, assembled straight from the bimodule
// cases (no intermediate quiver object). Coincides with
// underlying_diagram(quiver_of(s)); the equality is property-tested.
inline Diagram quiver_diagram_of(const Superspecies& s) {
  s.require_valid();
  Diagram d;
  std::vector<int> at(s.n() * 2, -1);
  for (int i = 0; i < s.n(); ++i) {
    at[2 * i] = d.n++;
    if (!s.is_D(i)) at[2 * i + 1] = d.n++;
  }
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    auto [i, j] = pair;
    int i0 = at[2 * i], i1 = at[2 * i + 1], j0 = at[2 * j], j1 = at[2 * j + 1];
    switch (spec.kind) {
      case BimoduleSpec::Case::KK:
        if (spec.d0 > 0) {
          d.add_edge(i0, j0, spec.d0);
          d.add_edge(i1, j1, spec.d0);
        }
        if (spec.d1 > 0) {
          d.add_edge(i0, j1, spec.d1);
          d.add_edge(i1, j0, spec.d1);
        }
        break;
      case BimoduleSpec::Case::KtoD:
        d.add_edge(i0, j0, spec.rank);
        d.add_edge(i1, j0, spec.rank);
        break;
      case BimoduleSpec::Case::DtoK:
        d.add_edge(i0, j0, spec.rank);
        d.add_edge(i0, j1, spec.rank);
        break;
      default: d.add_edge(i0, j0, spec.plus + spec.minus);
    }
  }
  return d;
}

// Classification route I: through the quiver Q_S. Finite iff every
// component of the underlying diagram is Dynkin, tame iff all are Dynkin or
// extended Dynkin with at least one extended, wild otherwise.
inline RepType classify_via_quiver(const Superspecies& s) {
  if (!is_acyclic(s)) throw validation_error("classification requires an acyclic superspecies");
  bool any_wild = false, any_tame = false;
  for (const auto& c : classify_diagram(quiver_diagram_of(s))) {
    if (c.is_extended())
      any_tame = true;
    else if (!c.is_dynkin())
      any_wild = true;
  }
  return detail::combine_types(any_wild, any_tame);
}

// Classification route II: through the superquiver family table.
inline RepType classify_via_table(const Superspecies& s) {
  if (!is_acyclic(s)) throw validation_error("classification requires an acyclic superspecies");
  Superquiver q = superquiver_of(s);
  auto comps = superquiver_components(q);
  bool any_wild = false, any_tame = false;
  for (const auto& comp : comps) {
    auto m = match_family(comps.size() == 1 ? q : induced_subsuperquiver(q, comp));
    if (!m)
      any_wild = true;
    else if (!m->is_finite_family())
      any_tame = true;
  }
  return detail::combine_types(any_wild, any_tame);
}

// Family matches of all components (for reporting).
inline std::vector<std::optional<FamilyMatch>> component_families(const Superspecies& s) {
  Superquiver q = superquiver_of(s);
  auto comps = superquiver_components(q);
  std::vector<std::optional<FamilyMatch>> out;
  for (const auto& comp : comps)
    out.push_back(match_family(comps.size() == 1 ? q : induced_subsuperquiver(q, comp)));
  return out;
}

// Number of indecomposables predicted by the root count of Q_S (super
// Kac / Gabriel); only for gr-representation-finite species.
inline long long predicted_indec_count(const Superspecies& s) {
  if (classify_via_quiver(s) != RepType::Finite)
    throw validation_error("predicted_indec_count requires a gr-representation-finite species");
  return static_cast<long long>(positive_roots(underlying_diagram(quiver_of(s))).size());
}

}  // namespace superrep
