#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superrep/graded_algebra.hpp"

namespace superrep {

struct GradedDims {
  int d0 = 0, d1 = 0;
  bool operator==(const GradedDims& o) const { return d0 == o.d0 && d1 == o.d1; }
  int total() const { return d0 + d1; }
};

// One graded bimodule between gr-division superalgebras, stored by its
// isomorphism-class parameters. The endpoint labels determine the case:
//   KK(d0,d1): super vector space with d0 even / d1 odd basis vectors.
//   KtoD(r):   left gr-free D-module of rank r (target is D); basis deg 0.
//   DtoK(r):   right gr-free D-module of rank r (source is D); over K the
//              basis pairs up as {m_t, eps m_t} with degrees (0,1).
//   DD(a,b):   module over D (x) D = D + D, block multiplicities (a, b);
//              basis deg 0; eps m = +m eps on block a, eps m = -m eps on b.
struct BimoduleSpec {
  enum class Case { KK, KtoD, DtoK, DD };
  Case kind = Case::KK;
  int d0 = 0, d1 = 0;  // KK
  int rank = 0;        // KtoD / DtoK
  int plus = 0, minus = 0;  // DD

  static BimoduleSpec KK(int d0, int d1) { return {Case::KK, d0, d1, 0, 0, 0}; }
  static BimoduleSpec KtoD(int r) { return {Case::KtoD, 0, 0, r, 0, 0}; }
  static BimoduleSpec DtoK(int r) { return {Case::DtoK, 0, 0, r, 0, 0}; }
  static BimoduleSpec DD(int a, int b) { return {Case::DD, 0, 0, 0, a, b}; }

  bool is_zero() const {
    switch (kind) {
      case Case::KK: return d0 == 0 && d1 == 0;
      case Case::KtoD:
      case Case::DtoK: return rank == 0;
      default: return plus == 0 && minus == 0;
    }
  }
  bool operator==(const BimoduleSpec& o) const {
    return kind == o.kind && d0 == o.d0 && d1 == o.d1 && rank == o.rank && plus == o.plus && minus == o.minus;
  }

  // Dimensions of the bimodule as a super vector space over K.
  GradedDims kdim() const {
    switch (kind) {
      case Case::KK: return {d0, d1};
      case Case::KtoD: return {rank, rank};
      case Case::DtoK: return {rank, rank};
      default: return {plus + minus, plus + minus};
    }
  }

  // Fixed basis on the target side (a D_j-basis when the target is D, a
  // K-basis otherwise), degree-0 elements first. These index the arrows of
  // both diagram constructions and the letters of tensor algebra words.
  int letter_count() const {
    switch (kind) {
      case Case::KK: return d0 + d1;
      case Case::KtoD: return rank;
      case Case::DtoK: return 2 * rank;
      default: return plus + minus;
    }
  }
  int letter_degree(int l) const {
    switch (kind) {
      case Case::KK: return l < d0 ? 0 : 1;
      case Case::DtoK: return l < rank ? 0 : 1;
      default: return 0;
    }
  }
};

enum class VertexType { K, D };

// Superspecies: {K, D}-labelled vertices 1..n plus one BimoduleSpec per
// ordered pair (source, target); absent pairs mean the zero bimodule.
struct Superspecies {
  std::vector<VertexType> vertices;
  std::map<std::pair<int, int>, BimoduleSpec> bimodules;  // 0-based (source, target)

  int n() const { return static_cast<int>(vertices.size()); }
  bool is_D(int i) const { return vertices[i] == VertexType::D; }
  const BimoduleSpec* bimodule(int i, int j) const {
    auto it = bimodules.find({i, j});
    return it == bimodules.end() || it->second.is_zero() ? nullptr : &it->second;
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    for (const auto& [pair, spec] : bimodules) {
      auto [i, j] = pair;
      if (i < 0 || i >= n() || j < 0 || j >= n()) {
        bad.push_back("bimodule endpoint out of range");
        continue;
      }
      std::string where = "(" + std::to_string(i + 1) + "->" + std::to_string(j + 1) + ")";
      BimoduleSpec::Case expect;
      if (!is_D(i) && !is_D(j))
        expect = BimoduleSpec::Case::KK;
      else if (!is_D(i))
        expect = BimoduleSpec::Case::KtoD;
      else if (!is_D(j))
        expect = BimoduleSpec::Case::DtoK;
      else
        expect = BimoduleSpec::Case::DD;
      if (spec.kind != expect) bad.push_back("bimodule case does not match vertex labels at " + where);
      if (spec.d0 < 0 || spec.d1 < 0 || spec.rank < 0 || spec.plus < 0 || spec.minus < 0)
        bad.push_back("negative multiplicity at " + where);
    }
    return bad;
  }

  void require_valid() const {
    auto bad = validate();
    if (!bad.empty()) throw validation_error("invalid superspecies: " + bad.front());
  }
};

// Acyclic <=> the digraph with an edge per nonzero bimodule (loops count)
// has no directed cycle <=> T(S) is finite-dimensional.
inline bool is_acyclic(const Superspecies& s) {
  const int n = s.n();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    if (pair.first == pair.second) return false;
    out[pair.first].push_back(pair.second);
    ++indeg[pair.second];
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

// K-dimension of T(S) computed combinatorially, or nullopt for "infinite".
// Each path contributes the product of its letter counts, doubled when the
// final vertex carries D (trailing eps).
inline std::optional<long long> tensor_algebra_dim(const Superspecies& s) {
  if (!is_acyclic(s)) return std::nullopt;
  const int n = s.n();
  // x(i) = sum over paths leaving i of prod(letters) * endfactor(final).
  std::vector<long long> x(n, -1);
  auto endf = [&](int v) { return s.is_D(v) ? 2LL : 1LL; };
  auto rec = [&](auto&& self, int v) -> long long {
    if (x[v] >= 0) return x[v];
    long long total = 0;
    for (const auto& [pair, spec] : s.bimodules) {
      if (pair.first != v || spec.is_zero()) continue;
      total += static_cast<long long>(spec.letter_count()) * (endf(pair.second) + self(self, pair.second));
    }
    return x[v] = total;
  };
  long long dim = 0;
  for (int v = 0; v < n; ++v) dim += endf(v) + rec(rec, v);
  return dim;
}

namespace detail {

// Basis word of T(S): a path of letters plus an optional trailing eps at
// the final vertex (only when that vertex is D). Vertex elements are empty
// words. Letters are target-side basis indices of the step's bimodule.
struct TStep {
  int from = 0, to = 0, letter = 0;
  auto operator<=>(const TStep&) const = default;
};
struct TWord {
  int start = 0, end = 0, twist = 0;
  std::vector<TStep> steps;

  bool operator<(const TWord& o) const {
    if (steps.size() != o.steps.size()) return steps.size() < o.steps.size();
    if (start != o.start) return start < o.start;
    if (steps != o.steps) return steps < o.steps;
    return twist < o.twist;
  }
  bool operator==(const TWord& o) const {
    return start == o.start && end == o.end && twist == o.twist && steps == o.steps;
  }
};

}  // namespace detail

// The graded tensor algebra T(S) as a structure-constant algebra. Words
// multiply by concatenation; a trailing eps moves right through the second
// factor using the case rules: through a DtoK letter it re-pairs the basis
// (and is absorbed), through a DD letter it picks up the block sign and
// keeps moving, and at the end it toggles the trailing twist.
inline GradedAlgebra tensor_algebra(const Superspecies& s, const Field& f) {
  require_odd_characteristic(f);
  s.require_valid();
  if (!is_acyclic(s)) throw validation_error("tensor_algebra requires an acyclic superspecies");
  using detail::TStep;
  using detail::TWord;
  const int n = s.n();

  std::vector<TWord> words;
  for (int v = 0; v < n; ++v) {
    words.push_back({v, v, 0, {}});
    if (s.is_D(v)) words.push_back({v, v, 1, {}});
  }
  // Paths by increasing length, extended in pair order; deterministic.
  std::vector<TWord> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back({v, v, 0, {}});
  while (!frontier.empty()) {
    std::vector<TWord> next;
    for (const auto& w : frontier)
      for (const auto& [pair, spec] : s.bimodules) {
        if (pair.first != w.end || spec.is_zero()) continue;
        for (int l = 0; l < spec.letter_count(); ++l) {
          TWord ext = w;
          ext.end = pair.second;
          ext.steps.push_back({pair.first, pair.second, l});
          next.push_back(ext);
          words.push_back(ext);
          if (s.is_D(pair.second)) {
            TWord tw = ext;
            tw.twist = 1;
            words.push_back(tw);
          }
        }
      }
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end());

  auto word_degree = [&](const TWord& w) {
    int d = w.twist;
    for (const TStep& st : w.steps) d += s.bimodule(st.from, st.to)->letter_degree(st.letter);
    return par(d);
  };
  auto word_name = [&](const TWord& w) {
    if (w.steps.empty()) return std::string(w.twist ? "eps" : "e") + std::to_string(w.start + 1);
    std::string name;
    for (const TStep& st : w.steps)
      name += "m(" + std::to_string(st.from + 1) + ">" + std::to_string(st.to + 1) + ";" +
              std::to_string(st.letter) + ")";
    if (w.twist) name += "*eps";
    return name;
  };

  std::map<TWord, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  // Push one eps into the word from the left; returns the sign.
  auto push_eps = [&](TWord& out) -> int {
    int sign = 1;
    size_t k = 0;
    while (k < out.steps.size()) {
      const BimoduleSpec* spec = s.bimodule(out.steps[k].from, out.steps[k].to);
      if (spec->kind == BimoduleSpec::Case::DtoK) {
        int l = out.steps[k].letter;
        out.steps[k].letter = l < spec->rank ? l + spec->rank : l - spec->rank;
        return sign;  // eps absorbed
      }
      if (spec->kind == BimoduleSpec::Case::DD) {
        if (out.steps[k].letter >= spec->plus) sign = -sign;
        ++k;  // eps keeps moving right
        continue;
      }
      throw internal_error("push_eps reached a K-sourced letter");
    }
    out.twist ^= 1;
    return sign;
  };

  const int dim = static_cast<int>(words.size());
  GradedAlgebra a;
  a.field = f;
  a.table.assign(dim, std::vector<std::vector<std::pair<int, Scalar>>>(dim));
  for (const auto& w : words) {
    a.basis.push_back(word_name(w));
    a.degree.push_back(word_degree(w));
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const TWord& w1 = words[i];
      const TWord& w2 = words[j];
      if (w1.end != w2.start) continue;
      TWord prod = w2;
      int sign = 1;
      if (w1.twist) sign = push_eps(prod);
      prod.steps.insert(prod.steps.begin(), w1.steps.begin(), w1.steps.end());
      prod.start = w1.start;
      auto it = index.find(prod);
      if (it == index.end()) throw internal_error("tensor_algebra: product fell outside the basis");
      a.table[i][j].push_back({it->second, Scalar::of_long(f, sign)});
    }
  a.one = zero_vec(f, dim);
  for (int i = 0; i < dim; ++i)
    if (words[i].steps.empty() && words[i].twist == 0) a.one[i] = Scalar::one(f);
  return a;
}

// Indices of the per-vertex identity elements in the tensor_algebra basis
// (the canonical complete set of degree-0 orthogonal idempotents).
inline std::vector<Vec> tensor_algebra_vertex_idempotents(const Superspecies& s, const GradedAlgebra& t) {
  std::vector<Vec> idems;
  for (int v = 0; v < s.n(); ++v) {
    std::string name = "e" + std::to_string(v + 1);
    int found = -1;
    for (int i = 0; i < t.dim(); ++i)
      if (t.basis[i] == name) {
        found = i;
        break;
      }
    if (found < 0) throw internal_error("tensor algebra vertex idempotent not found");
    idems.push_back(t.unit_vec(found));
  }
  return idems;
}

// Quiver Q_S: white vertices doubled by parity, black vertices single; one
// arrow per target-side basis letter and per existing source copy, with the
// K->D special case landing on (j,0).
inline Quiver quiver_of(const Superspecies& s) {
  s.require_valid();
  Quiver q;
  std::map<std::pair<int, int>, int> vid;  // (vertex, parity) -> index
  for (int i = 0; i < s.n(); ++i) {
    vid[{i, 0}] = q.n;
    q.vertex_names.push_back(std::to_string(i + 1) + "_0");
    ++q.n;
    if (!s.is_D(i)) {
      vid[{i, 1}] = q.n;
      q.vertex_names.push_back(std::to_string(i + 1) + "_1");
      ++q.n;
    }
  }
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    auto [i, j] = pair;
    for (int l = 0; l < spec.letter_count(); ++l)
      for (int z = 0; z < 2; ++z) {
        if (z == 1 && s.is_D(i)) continue;
        int zt = s.is_D(j) ? 0 : par(z + spec.letter_degree(l));
        std::string id = "a(" + std::to_string(i + 1) + ">" + std::to_string(j + 1) + ";" + std::to_string(l) +
                         ";" + std::to_string(z) + ")";
        q.arrows.push_back({id, vid.at({i, z}), vid.at({j, zt})});
      }
  }
  return q;
}

// Superquiver Q(S): white iff K, one arrow per letter, dotted iff degree 1.
inline Superquiver superquiver_of(const Superspecies& s) {
  s.require_valid();
  Superquiver q;
  q.n = s.n();
  for (int i = 0; i < s.n(); ++i) {
    q.black.push_back(s.is_D(i));
    q.vertex_names.push_back(std::to_string(i + 1));
  }
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    auto [i, j] = pair;
    for (int l = 0; l < spec.letter_count(); ++l) {
      std::string id = "a(" + std::to_string(i + 1) + ">" + std::to_string(j + 1) + ";" + std::to_string(l) + ")";
      q.arrows.push_back({id, i, j, spec.letter_degree(l) == 1});
    }
  }
  return q;
}

// Constructive inverse of superquiver_of on realizable superquivers. DD
// pairs put all multiplicity into the plus block: the superquiver does not
// see the sign split, and the classification does not either.
inline Superspecies species_from(const Superquiver& q) {
  q.check();
  if (!is_realizable(q)) throw validation_error("species_from requires a realizable superquiver");
  Superspecies s;
  for (int v = 0; v < q.n; ++v) s.vertices.push_back(q.black[v] ? VertexType::D : VertexType::K);
  for (const auto& [pair, cnt] : q.pair_counts()) {
    auto [i, j] = pair;
    auto [solid, dotted] = cnt;
    BimoduleSpec spec;
    if (!q.black[i] && !q.black[j])
      spec = BimoduleSpec::KK(solid, dotted);
    else if (!q.black[i])
      spec = BimoduleSpec::KtoD(solid);
    else if (!q.black[j])
      spec = BimoduleSpec::DtoK(solid);
    else
      spec = BimoduleSpec::DD(solid, 0);
    if (!spec.is_zero()) s.bimodules[{i, j}] = spec;
  }
  return s;
}

}  // namespace superrep
