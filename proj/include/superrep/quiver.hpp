#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "superrep/field.hpp"

namespace superrep {

// Three-valued graded representation type. The Drozd dichotomy separates
// tame from wild; finite is the refinement of not-wild.
enum class RepType { Finite, Tame, Wild };

inline std::string to_string(RepType t) {
  switch (t) {
    case RepType::Finite: return "finite";
    case RepType::Tame: return "tame";
    default: return "wild";
  }
}

// Directed multigraph. Vertices are indices 0..n-1; display names are kept
// separately so hot paths never touch strings.
struct Quiver {
  struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
  };
  int n = 0;
  std::vector<std::string> vertex_names;  // optional; synthesized when empty
  std::vector<Arrow> arrows;

  std::string vertex_name(int v) const {
    if (v < static_cast<int>(vertex_names.size()) && !vertex_names[v].empty()) return vertex_names[v];
    return "v" + std::to_string(v + 1);
  }
  void check() const {
    for (const auto& a : arrows)
      if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
        throw validation_error("quiver arrow endpoint out of range");
  }
  bool is_acyclic() const {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const auto& a : arrows) {
      if (a.source == a.target) return false;
      out[a.source].push_back(a.target);
      ++indeg[a.target];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int w : out[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
  }
};

// Undirected multigraph underlying a quiver or superquiver.
struct Diagram {
  int n = 0;
  std::map<std::pair<int, int>, int> edges;  // (i<=j) -> multiplicity; (i,i) is a loop

  void add_edge(int i, int j, int mult = 1) {
    if (i > j) std::swap(i, j);
    edges[{i, j}] += mult;
  }
  int total_edges() const {
    int s = 0;
    for (const auto& [e, m] : edges) s += m;
    return s;
  }
  bool has_loop() const {
    for (const auto& [e, m] : edges)
      if (e.first == e.second) return true;
    return false;
  }
};

inline Diagram underlying_diagram(const Quiver& q) {
  Diagram d;
  d.n = q.n;
  for (const auto& a : q.arrows) d.add_edge(a.source, a.target);
  return d;
}

// One connected component's shape.
struct DiagramClass {
  enum class Family { A, D, E, Atilde, Dtilde, Etilde, Other };
  Family family = Family::Other;
  int rank = 0;

  bool is_dynkin() const { return family == Family::A || family == Family::D || family == Family::E; }
  bool is_extended() const {
    return family == Family::Atilde || family == Family::Dtilde || family == Family::Etilde;
  }
  bool operator==(const DiagramClass& o) const { return family == o.family && rank == o.rank; }
  std::string str() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(rank);
      case Family::D: return "D" + std::to_string(rank);
      case Family::E: return "E" + std::to_string(rank);
      case Family::Atilde: return "A~" + std::to_string(rank);
      case Family::Dtilde: return "D~" + std::to_string(rank);
      case Family::Etilde: return "E~" + std::to_string(rank);
      default: return "other";
    }
  }
  static DiagramClass parse(const std::string& s) {
    if (s == "other") return {};
    DiagramClass c;
    size_t pos = 1;
    bool tilde = s.size() > 1 && s[1] == '~';
    if (tilde) pos = 2;
    switch (s[0]) {
      case 'A': c.family = tilde ? Family::Atilde : Family::A; break;
      case 'D': c.family = tilde ? Family::Dtilde : Family::D; break;
      case 'E': c.family = tilde ? Family::Etilde : Family::E; break;
      default: throw validation_error("cannot parse diagram class '" + s + "'");
    }
    c.rank = std::stoi(s.substr(pos));
    return c;
  }
};

inline std::vector<std::vector<int>> diagram_components(const Diagram& d) {
  std::vector<int> comp(d.n, -1);
  std::vector<std::vector<int>> adj(d.n);
  for (const auto& [e, m] : d.edges)
    if (e.first != e.second) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < d.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, verts;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

inline Diagram induced_subdiagram(const Diagram& d, const std::vector<int>& verts) {
  std::map<int, int> idx;
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  Diagram s;
  s.n = static_cast<int>(verts.size());
  for (const auto& [e, m] : d.edges) {
    auto a = idx.find(e.first), b = idx.find(e.second);
    if (a != idx.end() && b != idx.end()) s.add_edge(a->second, b->second, m);
  }
  return s;
}

namespace detail {

// Classify one connected loop-free component by its tree/cycle shape.
inline DiagramClass classify_connected(const Diagram& d) {
  using F = DiagramClass::Family;
  if (d.has_loop()) return {};
  int edges = d.total_edges();
  bool multi = false;
  std::vector<int> deg(d.n, 0);
  for (const auto& [e, m] : d.edges) {
    if (m > 1) multi = true;
    deg[e.first] += m;
    deg[e.second] += m;
  }
  if (multi) {
    if (d.n == 2 && edges == 2) return {F::Atilde, 1};
    return {};
  }
  if (edges == d.n) {
    // Connected with #edges == #vertices and simple: the unique cycle must
    // be everything, i.e. all degrees 2.
    for (int v = 0; v < d.n; ++v)
      if (deg[v] != 2) return {};
    return {F::Atilde, d.n - 1};
  }
  if (edges != d.n - 1) return {};
  // Tree. Look at branch vertices.
  std::vector<int> branch;
  for (int v = 0; v < d.n; ++v)
    if (deg[v] >= 3) branch.push_back(v);
  if (branch.empty()) return {F::A, d.n};
  std::vector<std::vector<int>> adj(d.n);
  for (const auto& [e, m] : d.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  auto leg_length = [&](int from, int b) {
    // Walk away from branch vertex b starting toward `from`; stop at a leaf
    // or at another branch vertex (which makes the leg invalid, length -1).
    int prev = b, cur = from, len = 1;
    while (true) {
      if (deg[cur] >= 3) return -1;
      if (deg[cur] == 1) return len;
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
  };
  if (branch.size() == 1) {
    int b = branch[0];
    if (deg[b] == 4) {
      for (int w : adj[b])
        if (leg_length(w, b) != 1) return {};
      return {F::Dtilde, 4};
    }
    if (deg[b] != 3) return {};
    std::vector<int> legs;
    for (int w : adj[b]) {
      int l = leg_length(w, b);
      if (l < 0) return {};
      legs.push_back(l);
    }
    std::sort(legs.begin(), legs.end());
    int a = legs[0], bb = legs[1], c = legs[2];
    if (a == 1 && bb == 1) return {F::D, c + 3};
    if (a == 1 && bb == 2 && c == 2) return {F::E, 6};
    if (a == 1 && bb == 2 && c == 3) return {F::E, 7};
    if (a == 1 && bb == 2 && c == 4) return {F::E, 8};
    if (a == 2 && bb == 2 && c == 2) return {F::Etilde, 6};
    if (a == 1 && bb == 3 && c == 3) return {F::Etilde, 7};
    if (a == 1 && bb == 2 && c == 5) return {F::Etilde, 8};
    return {};
  }
  if (branch.size() == 2) {
    // D~n: two trivalent vertices, each carrying two length-1 legs, joined
    // by a path.
    for (int b : branch) {
      if (deg[b] != 3) return {};
      int leaves = 0;
      for (int w : adj[b])
        if (deg[w] == 1) ++leaves;
      if (leaves != 2) return {};
    }
    return {F::Dtilde, d.n - 1};
  }
  return {};
}

}  // namespace detail

// Per-component classification, ordered by smallest vertex of the component.
inline std::vector<DiagramClass> classify_diagram(const Diagram& d) {
  auto comps = diagram_components(d);
  if (comps.size() == 1) return {detail::classify_connected(d)};
  std::vector<DiagramClass> out;
  for (const auto& verts : comps) out.push_back(detail::classify_connected(induced_subdiagram(d, verts)));
  return out;
}

enum class TitsDefiniteness { PositiveDefinite, SemidefiniteCorank1, Indefinite };

inline std::string to_string(TitsDefiniteness t) {
  switch (t) {
    case TitsDefiniteness::PositiveDefinite: return "positive-definite";
    case TitsDefiniteness::SemidefiniteCorank1: return "positive-semidefinite-corank-1";
    default: return "indefinite";
  }
}

// Tits form q(x) = sum x_i^2 - sum_{edges ij} x_i x_j evaluated exactly.
inline long long tits_form_value(const Diagram& d, const std::vector<int>& x) {
  long long q = 0;
  for (int i = 0; i < d.n; ++i) q += 1LL * x[i] * x[i];
  for (const auto& [e, m] : d.edges) q -= 1LL * m * x[e.first] * x[e.second];
  return q;
}

// Exact definiteness of the Tits form of a connected loop-free diagram,
// via leading principal minors of the symmetrized Gram matrix C = 2I - M
// (fraction-free Bareiss elimination, integer arithmetic throughout).
//
// For a connected diagram C is a symmetric generalized Cartan matrix, so
// exactly one of the three outcomes holds; a zero or negative minor before
// the last step already certifies indefiniteness because every proper
// principal submatrix of a semidefinite-corank-1 connected form is positive
// definite. Loops make the form indefinite by convention.
inline TitsDefiniteness tits_definiteness(const Diagram& d) {
  if (diagram_components(d).size() != 1) throw validation_error("tits_definiteness requires a connected diagram");
  if (d.has_loop()) return TitsDefiniteness::Indefinite;
  const int n = d.n;
  // Bareiss intermediates are k x k minors; keep their Hadamard bound
  // within __int128.
  int max_entry = 2;
  for (const auto& [e, m] : d.edges) max_entry = std::max(max_entry, m);
  if (n * (std::log2(static_cast<double>(n)) / 2 + std::log2(static_cast<double>(max_entry))) > 120.0)
    throw budget_error("tits_definiteness: diagram too large for exact integer minors");
  std::vector<__int128> a(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 2;
  for (const auto& [e, m] : d.edges) {
    a[static_cast<size_t>(e.first) * n + e.second] -= m;
    a[static_cast<size_t>(e.second) * n + e.first] -= m;
  }
  __int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    __int128 piv = a[static_cast<size_t>(k) * n + k];  // k-th leading minor after Bareiss
    if (piv <= 0) {
      if (k == n - 1 && piv == 0) return TitsDefiniteness::SemidefiniteCorank1;
      return TitsDefiniteness::Indefinite;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 v = a[static_cast<size_t>(i) * n + j] * piv -
                     a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j];
        a[static_cast<size_t>(i) * n + j] = v / prev;
      }
    prev = piv;
  }
  return TitsDefiniteness::PositiveDefinite;
}

using DimVector = std::vector<int>;

// All positive roots of a Dynkin diagram: nonzero nonnegative integer
// vectors with q(x) = 1, found by exhaustive search over the box 0..7 per
// coordinate. No ADE root has a coordinate above 6, which the search
// re-asserts by checking that nothing on the 7-boundary solves q = 1.
inline std::vector<DimVector> positive_roots(const Diagram& d) {
  for (const auto& c : classify_diagram(d))
    if (!c.is_dynkin()) throw validation_error("positive_roots requires a Dynkin diagram on every component");
  auto comps = diagram_components(d);
  std::vector<DimVector> roots;
  for (const auto& verts : comps) {
    // Roots have connected support, so they live in a single component.
    Diagram sub = induced_subdiagram(d, verts);
    const int m = sub.n;
    if (m > 9) throw budget_error("positive_roots: component too large for box enumeration");
    std::vector<std::vector<std::pair<int, int>>> adj(m);  // (neighbor, mult)
    for (const auto& [e, mu] : sub.edges) {
      adj[e.first].push_back({e.second, mu});
      adj[e.second].push_back({e.first, mu});
    }
    // Assign vertices in a connected (BFS) order so partial q values are of
    // honest subdiagrams.
    std::vector<int> order, pos(m, -1);
    order.push_back(0);
    pos[0] = 0;
    for (size_t h = 0; h < order.size(); ++h)
      for (auto [w, mu] : adj[order[h]])
        if (pos[w] < 0) {
          pos[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
    std::vector<int> x(m, 0);
    std::vector<DimVector> local;
    auto rec = [&](auto&& self, int k) -> void {
      if (k == m) {
        if (tits_form_value(sub, x) == 1) {
          bool nonzero = false, boundary = false;
          for (int v = 0; v < m; ++v) {
            if (x[v] > 0) nonzero = true;
            if (x[v] >= 7) boundary = true;
          }
          if (boundary) throw internal_error("positive_roots: root on enlarged box boundary");
          if (nonzero) local.push_back(x);
        }
        return;
      }
      for (int t = 0; t <= 7; ++t) {
        x[order[k]] = t;
        self(self, k + 1);
      }
      x[order[k]] = 0;
    };
    rec(rec, 0);
    // Embed back into the full vertex set.
    for (const auto& r : local) {
      DimVector full(d.n, 0);
      for (int v = 0; v < m; ++v) full[verts[v]] = r[v];
      roots.push_back(std::move(full));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::string dot_export(const Quiver& q) {
  if (q.n == 0 && q.arrows.empty()) return "digraph { }\n";
  std::string out = "digraph {\n";
  for (int v = 0; v < q.n; ++v) out += "  \"" + q.vertex_name(v) + "\";\n";
  for (const auto& a : q.arrows)
    out += "  \"" + q.vertex_name(a.source) + "\" -> \"" + q.vertex_name(a.target) + "\" [label=\"" + a.id + "\"];\n";
  out += "}\n";
  return out;
}

// Named ADE / affine ADE diagram builders (vertex order: along the path,
// branch tips last).
inline Diagram make_diagram(const DiagramClass& c) {
  using F = DiagramClass::Family;
  Diagram d;
  auto path = [&](int k) {
    for (int i = 0; i + 1 < k; ++i) d.add_edge(i, i + 1);
  };
  switch (c.family) {
    case F::A:
      if (c.rank < 1) throw validation_error("A_n needs n >= 1");
      d.n = c.rank;
      path(c.rank);
      return d;
    case F::D:
      if (c.rank < 4) throw validation_error("D_n needs n >= 4");
      d.n = c.rank;
      path(c.rank - 1);
      d.add_edge(1, c.rank - 1);
      return d;
    case F::E: {
      if (c.rank < 6 || c.rank > 8) throw validation_error("E_n needs 6 <= n <= 8");
      d.n = c.rank;
      path(c.rank - 1);
      d.add_edge(2, c.rank - 1);
      return d;
    }
    case F::Atilde:
      if (c.rank < 1) throw validation_error("A~n needs n >= 1");
      d.n = c.rank + 1;
      if (c.rank == 1) {
        d.add_edge(0, 1, 2);
      } else {
        path(c.rank + 1);
        d.add_edge(0, c.rank);
      }
      return d;
    case F::Dtilde:
      if (c.rank < 4) throw validation_error("D~n needs n >= 4");
      d.n = c.rank + 1;
      if (c.rank == 4) {
        for (int i = 1; i <= 4; ++i) d.add_edge(0, i);
      } else {
        path(c.rank - 1);
        d.add_edge(1, c.rank - 1);
        d.add_edge(c.rank - 3, c.rank);
      }
      return d;
    case F::Etilde: {
      if (c.rank < 6 || c.rank > 8) throw validation_error("E~n needs 6 <= n <= 8");
      d.n = c.rank + 1;
      if (c.rank == 6) {
        path(5);
        d.add_edge(2, 5);
        d.add_edge(5, 6);
      } else if (c.rank == 7) {
        path(7);
        d.add_edge(3, 7);
      } else {
        path(8);
        d.add_edge(2, 8);
      }
      return d;
    }
    default: throw validation_error("cannot build an 'other' diagram");
  }
}

}  // namespace superrep
