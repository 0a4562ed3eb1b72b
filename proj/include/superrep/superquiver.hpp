#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "superrep/quiver.hpp"

namespace superrep {

// Directed multigraph with white/black vertices and solid/dotted arrows.
// White = K, black = D; solid = degree 0, dotted = degree 1.
struct Superquiver {
  struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
    bool dotted = false;
  };
  int n = 0;
  std::vector<bool> black;
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;

  std::string vertex_name(int v) const {
    if (v < static_cast<int>(vertex_names.size()) && !vertex_names[v].empty()) return vertex_names[v];
    return std::to_string(v + 1);
  }
  void check() const {
    if (static_cast<int>(black.size()) != n) throw validation_error("superquiver color list size mismatch");
    for (const auto& a : arrows)
      if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
        throw validation_error("superquiver arrow endpoint out of range");
  }
  bool is_one_color() const {
    for (int v = 1; v < n; ++v)
      if (black[v] != black[0]) return false;
    return true;
  }
  bool is_acyclic() const { return underlying(*this).is_acyclic(); }

  // Arrow counts per ordered pair, split solid/dotted.
  std::map<std::pair<int, int>, std::pair<int, int>> pair_counts() const {
    std::map<std::pair<int, int>, std::pair<int, int>> c;
    for (const auto& a : arrows) {
      auto& e = c[{a.source, a.target}];
      if (a.dotted)
        ++e.second;
      else
        ++e.first;
    }
    return c;
  }

 private:
  static Quiver underlying(const Superquiver& q);
};

// Forget colors and styles, keep orientation.
inline Quiver underlying_quiver(const Superquiver& q) {
  Quiver out;
  out.n = q.n;
  out.vertex_names = q.vertex_names;
  for (const auto& a : q.arrows) out.arrows.push_back({a.id, a.source, a.target});
  return out;
}

inline Quiver Superquiver::underlying(const Superquiver& q) { return underlying_quiver(q); }

inline Diagram underlying_diagram(const Superquiver& q) {
  Diagram d;
  d.n = q.n;
  for (const auto& a : q.arrows) d.add_edge(a.source, a.target);
  return d;
}

// A superquiver arises from a superspecies iff (R1) every dotted arrow ends
// at a white vertex and (R2) for each ordered black-to-white pair the solid
// and dotted arrows come in equal numbers (the paired degree-(0,1) basis of
// a gr-free right D-module seen over K).
inline bool is_realizable(const Superquiver& q) {
  for (const auto& a : q.arrows)
    if (a.dotted && q.black[a.target]) return false;
  for (const auto& [pair, cnt] : q.pair_counts())
    if (q.black[pair.first] && !q.black[pair.second] && cnt.first != cnt.second) return false;
  return true;
}

inline std::vector<std::vector<int>> superquiver_components(const Superquiver& q) {
  return diagram_components(underlying_diagram(q));
}

inline Superquiver induced_subsuperquiver(const Superquiver& q, const std::vector<int>& verts) {
  std::map<int, int> idx;
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  Superquiver s;
  s.n = static_cast<int>(verts.size());
  for (int v : verts) {
    s.black.push_back(q.black[v]);
    s.vertex_names.push_back(q.vertex_name(v));
  }
  for (const auto& a : q.arrows) {
    auto u = idx.find(a.source), w = idx.find(a.target);
    if (u != idx.end() && w != idx.end()) s.arrows.push_back({a.id, u->second, w->second, a.dotted});
  }
  return s;
}

// Color/style/orientation preserving isomorphism of small superquivers.
// Backtracking on vertices with degree/color pruning; template matching
// only ever sees a dozen vertices.
inline bool superquiver_isomorphic(const Superquiver& a, const Superquiver& b) {
  if (a.n != b.n || a.arrows.size() != b.arrows.size()) return false;
  int blacks_a = 0, blacks_b = 0;
  for (int v = 0; v < a.n; ++v) blacks_a += a.black[v];
  for (int v = 0; v < b.n; ++v) blacks_b += b.black[v];
  if (blacks_a != blacks_b) return false;
  auto counts_a = a.pair_counts();
  auto counts_b = b.pair_counts();
  if (counts_a.size() != counts_b.size()) return false;

  // Per-vertex invariant: (color, sorted multiset of incident (dir, style-counts)).
  auto signature = [](const Superquiver& q, const std::map<std::pair<int, int>, std::pair<int, int>>& counts) {
    std::vector<std::vector<long>> sig(q.n);
    for (const auto& [pair, cnt] : counts) {
      long code = cnt.first * 100 + cnt.second;
      sig[pair.first].push_back(code * 10 + 1 + (q.black[pair.second] ? 4 : 0));
      sig[pair.second].push_back(code * 10 + 2 + (q.black[pair.first] ? 4 : 0));
    }
    for (int v = 0; v < q.n; ++v) {
      std::sort(sig[v].begin(), sig[v].end());
      sig[v].push_back(q.black[v] ? 1 : 0);
    }
    return sig;
  };
  auto sig_a = signature(a, counts_a);
  auto sig_b = signature(b, counts_b);

  std::vector<int> map_ab(a.n, -1), used(b.n, 0);
  auto ok_pair = [&](int va, int vb) {
    if (a.black[va] != b.black[vb]) return false;
    return sig_a[va] == sig_b[vb];
  };
  auto compatible = [&](int va, int vb) {
    for (const auto& [pair, cnt] : counts_a) {
      int s = pair.first, t = pair.second;
      int ms = s == va ? vb : map_ab[s];
      int mt = t == va ? vb : map_ab[t];
      if (ms < 0 || mt < 0) continue;
      auto it = counts_b.find({ms, mt});
      if (it == counts_b.end() || it->second != cnt) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int va) -> bool {
    if (va == a.n) return true;
    for (int vb = 0; vb < b.n; ++vb) {
      if (used[vb] || !ok_pair(va, vb)) continue;
      map_ab[va] = vb;
      if (compatible(va, vb)) {
        used[vb] = 1;
        if (self(self, va + 1)) return true;
        used[vb] = 0;
      }
      map_ab[va] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

inline std::string dot_export(const Superquiver& q) {
  if (q.n == 0 && q.arrows.empty()) return "digraph { }\n";
  std::string out = "digraph {\n";
  for (int v = 0; v < q.n; ++v) {
    out += "  \"" + q.vertex_name(v) + "\"";
    if (q.black[v]) out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  for (const auto& a : q.arrows) {
    out += "  \"" + q.vertex_name(a.source) + "\" -> \"" + q.vertex_name(a.target) + "\" [label=\"" + a.id + "\"";
    if (a.dotted) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace superrep
