#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "superrep/classify.hpp"
#include "superrep/superspecies.hpp"

namespace superrep {

// Enumeration budget for the brute-force oracle.
struct OracleBudget {
  int per_vertex_dim = 2;
  int max_total_dim = 4;
  long long max_tuples = 10'000'000;   // matrix tuples enumerated per dimension vector sweep
  long long max_space_enum = 1 << 20;  // elements of a Hom/End space enumerated exhaustively
};

// Representation of a quiver: one space per vertex, one matrix per arrow
// (source-dim columns, target-dim rows), aligned with quiver.arrows.
struct QuiverRep {
  Field field;
  DimVector dims;
  std::vector<Matrix> maps;

  void check(const Quiver& q) const {
    if (static_cast<int>(dims.size()) != q.n) throw validation_error("QuiverRep: dims size mismatch");
    if (maps.size() != q.arrows.size()) throw validation_error("QuiverRep: maps size mismatch");
    for (size_t a = 0; a < maps.size(); ++a)
      if (maps[a].rows() != dims[q.arrows[a].target] || maps[a].cols() != dims[q.arrows[a].source])
        throw validation_error("QuiverRep: matrix shape mismatch at arrow " + q.arrows[a].id);
  }
  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  static QuiverRep zero(const Field& f, const Quiver& q, const DimVector& dims) {
    QuiverRep r;
    r.field = f;
    r.dims = dims;
    for (const auto& a : q.arrows) r.maps.emplace_back(f, dims[a.target], dims[a.source]);
    return r;
  }
};

// Representation of a superspecies in the fixed degree-sorted bases.
// At a K vertex the space is a super vector space (d0, d1); at a D vertex a
// gr-free D-module of some rank (the rank is stored in d0, d1 = 0). The
// structure maps are the coefficient tensors c^l_{lV lW} indexed by the
// bimodule letter l, a source basis element and a target basis element;
// when the target is K the coefficient vanishes unless deg(l) + deg(lV) =
// deg(lW).
struct SpeciesRep {
  Field field;
  std::vector<GradedDims> dims;
  std::map<std::pair<int, int>, std::vector<Matrix>> coeff;  // per pair, per letter: (targetdim x sourcedim)

  int vertex_total(int i) const { return dims[i].d0 + dims[i].d1; }
  int basis_degree(const Superspecies& s, int i, int b) const { return s.is_D(i) ? 0 : (b < dims[i].d0 ? 0 : 1); }
  int total_dim() const {
    int t = 0;
    for (const auto& d : dims) t += d.total();
    return t;
  }

  void check(const Superspecies& s) const {
    if (static_cast<int>(dims.size()) != s.n()) throw validation_error("SpeciesRep: dims size mismatch");
    for (int i = 0; i < s.n(); ++i)
      if (s.is_D(i) && dims[i].d1 != 0) throw validation_error("SpeciesRep: D vertex carries an odd part");
    for (const auto& [pair, mats] : coeff) {
      const BimoduleSpec* spec = s.bimodule(pair.first, pair.second);
      if (!spec) throw validation_error("SpeciesRep: structure map on a zero bimodule");
      if (static_cast<int>(mats.size()) != spec->letter_count())
        throw validation_error("SpeciesRep: letter count mismatch");
      for (int l = 0; l < spec->letter_count(); ++l) {
        const Matrix& m = mats[l];
        if (m.rows() != vertex_total(pair.second) || m.cols() != vertex_total(pair.first))
          throw validation_error("SpeciesRep: coefficient tensor shape mismatch");
        if (!s.is_D(pair.second)) {
          for (int lw = 0; lw < m.rows(); ++lw)
            for (int lv = 0; lv < m.cols(); ++lv)
              if (!m.at(lw, lv).is_zero() &&
                  par(spec->letter_degree(l) + basis_degree(s, pair.first, lv)) !=
                      basis_degree(s, pair.second, lw))
                throw validation_error("SpeciesRep: nonzero coefficient where the eps factor vanishes");
        }
      }
    }
  }

  static SpeciesRep zero(const Field& f, const Superspecies& s, const std::vector<GradedDims>& dims) {
    SpeciesRep r;
    r.field = f;
    r.dims = dims;
    for (const auto& [pair, spec] : s.bimodules) {
      if (spec.is_zero()) continue;
      std::vector<Matrix> mats;
      for (int l = 0; l < spec.letter_count(); ++l)
        mats.emplace_back(f, r.vertex_total(pair.second), r.vertex_total(pair.first));
      r.coeff[pair] = std::move(mats);
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// The functor H : rep S -> rep Q_S and its quasi-inverse.
// ---------------------------------------------------------------------------

// Index bookkeeping shared by both directions: quiver vertices are (i,z),
// quiver arrows are (pair, letter, z) triples in bimodule order.
struct QuiverOfIndex {
  Quiver quiver;
  std::map<std::pair<int, int>, int> vertex;                     // (i, z) -> quiver vertex
  std::vector<std::tuple<std::pair<int, int>, int, int>> arrow;  // per arrow: (pair, letter, z)

  explicit QuiverOfIndex(const Superspecies& s) {
    quiver = quiver_of(s);
    int v = 0;
    for (int i = 0; i < s.n(); ++i) {
      vertex[{i, 0}] = v++;
      if (!s.is_D(i)) vertex[{i, 1}] = v++;
    }
    for (const auto& [pair, spec] : s.bimodules) {
      if (spec.is_zero()) continue;
      for (int l = 0; l < spec.letter_count(); ++l)
        for (int z = 0; z < 2; ++z) {
          if (z == 1 && s.is_D(pair.first)) continue;
          arrow.push_back({pair, l, z});
        }
    }
    if (arrow.size() != quiver.arrows.size()) throw internal_error("QuiverOfIndex: arrow count mismatch");
  }
  int target_parity(const Superspecies& s, const std::pair<int, int>& pair, int l, int z) const {
    const BimoduleSpec* spec = s.bimodule(pair.first, pair.second);
    return s.is_D(pair.second) ? 0 : par(z + spec->letter_degree(l));
  }
};

// H on objects: vertex (i,z) gets the degree-z part of V_i; the arrow
// (pair, l, z) gets the corresponding block of the coefficient tensor.
inline QuiverRep functor_H(const SpeciesRep& r, const Superspecies& s) {
  r.check(s);
  QuiverOfIndex ix(s);
  QuiverRep out;
  out.field = r.field;
  out.dims.assign(ix.quiver.n, 0);
  for (const auto& [key, v] : ix.vertex) out.dims[v] = key.second == 0 ? r.dims[key.first].d0 : r.dims[key.first].d1;
  for (const auto& [pair, l, z] : ix.arrow) {
    int zt = ix.target_parity(s, pair, l, z);
    int i = pair.first, j = pair.second;
    int src_off = z == 0 ? 0 : r.dims[i].d0, src_dim = z == 0 ? r.dims[i].d0 : r.dims[i].d1;
    int tgt_off = zt == 0 ? 0 : r.dims[j].d0, tgt_dim = zt == 0 ? r.dims[j].d0 : r.dims[j].d1;
    Matrix block(r.field, tgt_dim, src_dim);
    auto it = r.coeff.find(pair);
    if (it != r.coeff.end())
      for (int lw = 0; lw < tgt_dim; ++lw)
        for (int lv = 0; lv < src_dim; ++lv) block.at(lw, lv) = it->second[l].at(tgt_off + lw, src_off + lv);
    out.maps.push_back(std::move(block));
  }
  out.check(ix.quiver);
  return out;
}

// The quasi-inverse on objects: V_i := V_(i,0) + V_(i,1), coefficients
// reassembled from the arrow blocks. functor_H(functor_H_inverse(r)) == r.
inline SpeciesRep functor_H_inverse(const QuiverRep& qr, const Superspecies& s) {
  QuiverOfIndex ix(s);
  qr.check(ix.quiver);
  std::vector<GradedDims> dims(s.n());
  for (const auto& [key, v] : ix.vertex) {
    if (key.second == 0)
      dims[key.first].d0 = qr.dims[v];
    else
      dims[key.first].d1 = qr.dims[v];
  }
  SpeciesRep out = SpeciesRep::zero(qr.field, s, dims);
  for (size_t a = 0; a < ix.arrow.size(); ++a) {
    auto [pair, l, z] = ix.arrow[a];
    int zt = ix.target_parity(s, pair, l, z);
    int i = pair.first, j = pair.second;
    int src_off = z == 0 ? 0 : dims[i].d0;
    int tgt_off = zt == 0 ? 0 : dims[j].d0;
    const Matrix& m = qr.maps[a];
    for (int lw = 0; lw < m.rows(); ++lw)
      for (int lv = 0; lv < m.cols(); ++lv) out.coeff[pair][l].at(tgt_off + lw, src_off + lv) = m.at(lw, lv);
  }
  out.check(s);
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces, endomorphisms, indecomposability.
// ---------------------------------------------------------------------------

// Basis of Hom(V, W) for quiver representations: solutions X of
// X_target M_a = N_a X_source for every arrow. Returned as one block matrix
// per vertex per basis element.
inline std::vector<std::vector<Matrix>> quiver_hom_basis(const Quiver& q, const QuiverRep& v, const QuiverRep& w) {
  v.check(q);
  w.check(q);
  std::vector<int> offset(q.n + 1, 0);
  for (int i = 0; i < q.n; ++i) offset[i + 1] = offset[i] + w.dims[i] * v.dims[i];
  const int unknowns = offset[q.n];
  int rows = 0;
  for (const auto& a : q.arrows) rows += w.dims[a.target] * v.dims[a.source];
  Matrix sys(v.field, std::max(rows, 1), unknowns);
  int r = 0;
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    // (X_t M_a - N_a X_s)[p, c] = 0
    for (int p = 0; p < w.dims[a.target]; ++p)
      for (int c = 0; c < v.dims[a.source]; ++c) {
        for (int k = 0; k < v.dims[a.target]; ++k)
          sys.at(r, offset[a.target] + p * v.dims[a.target] + k) += v.maps[ai].at(k, c);
        for (int k = 0; k < w.dims[a.source]; ++k)
          sys.at(r, offset[a.source] + k * v.dims[a.source] + c) -= w.maps[ai].at(p, k);
        ++r;
      }
  }
  std::vector<std::vector<Matrix>> basis;
  for (const auto& sol : sys.kernel_basis()) {
    std::vector<Matrix> blocks;
    for (int i = 0; i < q.n; ++i) {
      Matrix b(v.field, w.dims[i], v.dims[i]);
      for (int p = 0; p < w.dims[i]; ++p)
        for (int c = 0; c < v.dims[i]; ++c) b.at(p, c) = sol[offset[i] + p * v.dims[i] + c];
      blocks.push_back(std::move(b));
    }
    basis.push_back(std::move(blocks));
  }
  return basis;
}

// Basis of Hom(V, W) for species representations, assembled directly from
// the graded-morphism conditions of the four bimodule cases: per vertex one
// block for each parity (a D vertex has a single block), and per bimodule
// letter and source parity the commuting condition between the coefficient
// blocks. Independent of functor_H by construction; agreeing with the
// quiver-side Hom is what verify_equivalence checks.
inline std::vector<std::vector<Matrix>> species_hom_basis(const Superspecies& s, const SpeciesRep& v,
                                                          const SpeciesRep& w) {
  v.check(s);
  w.check(s);
  const int n = s.n();
  // Unknowns: per vertex, per parity z (z = 0 only at D vertices), a block
  // of size wdim_z x vdim_z.
  auto vdim = [&](const SpeciesRep& r, int i, int z) { return z == 0 ? r.dims[i].d0 : r.dims[i].d1; };
  std::vector<std::array<int, 2>> offset(n, {0, 0});
  int unknowns = 0;
  for (int i = 0; i < n; ++i)
    for (int z = 0; z < (s.is_D(i) ? 1 : 2); ++z) {
      offset[i][z] = unknowns;
      unknowns += vdim(w, i, z) * vdim(v, i, z);
    }
  std::vector<Vec> eqs;
  auto var = [&](int i, int z, int p, int c) { return offset[i][z] + p * vdim(v, i, z) + c; };
  for (const auto& [pair, spec] : s.bimodules) {
    if (spec.is_zero()) continue;
    auto [i, j] = pair;
    const auto& cv = v.coeff.at(pair);
    const auto& cw = w.coeff.at(pair);
    for (int l = 0; l < spec.letter_count(); ++l)
      for (int z = 0; z < (s.is_D(i) ? 1 : 2); ++z) {
        int zt = s.is_D(j) ? 0 : par(z + spec.letter_degree(l));
        int so = z == 0 ? 0 : v.dims[i].d0, to = zt == 0 ? 0 : v.dims[j].d0;
        int swo = z == 0 ? 0 : w.dims[i].d0, two = zt == 0 ? 0 : w.dims[j].d0;
        // For all p in W_j^zt, c in V_i^z:
        //   sum_k A_j[p,k] cv[l][to+k, so+c] - sum_k cw[l][two+p, swo+k] A_i[k,c] = 0
        for (int p = 0; p < vdim(w, j, zt); ++p)
          for (int c = 0; c < vdim(v, i, z); ++c) {
            Vec eq = zero_vec(v.field, unknowns);
            for (int k = 0; k < vdim(v, j, zt); ++k) eq[var(j, zt, p, k)] += cv[l].at(to + k, so + c);
            for (int k = 0; k < vdim(w, i, z); ++k) eq[var(i, z, k, c)] -= cw[l].at(two + p, swo + k);
            eqs.push_back(std::move(eq));
          }
      }
  }
  Matrix sys(v.field, std::max<int>(static_cast<int>(eqs.size()), 1), unknowns);
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = eqs[r][c];
  std::vector<std::vector<Matrix>> basis;
  for (const auto& sol : sys.kernel_basis()) {
    std::vector<Matrix> blocks;
    for (int i = 0; i < n; ++i)
      for (int z = 0; z < (s.is_D(i) ? 1 : 2); ++z) {
        Matrix b(v.field, vdim(w, i, z), vdim(v, i, z));
        for (int p = 0; p < b.rows(); ++p)
          for (int c = 0; c < b.cols(); ++c) b.at(p, c) = sol[var(i, z, p, c)];
        blocks.push_back(std::move(b));
      }
    basis.push_back(std::move(blocks));
  }
  return basis;
}

namespace detail {

// All F_p-linear combinations of a basis of block tuples, visited with a
// callback; aborts when the callback returns true.
inline bool enumerate_combinations(const Field& f, size_t count, long long budget,
                                   const std::function<bool(const std::vector<long>&)>& visit) {
  if (f.is_rational()) throw budget_error("exhaustive space enumeration needs a finite field");
  double size = 1;
  for (size_t i = 0; i < count; ++i) size *= static_cast<double>(f.p);
  if (size > static_cast<double>(budget)) throw budget_error("Hom/End space too large to enumerate");
  std::vector<long> c(count, 0);
  while (true) {
    if (visit(c)) return true;
    size_t k = 0;
    while (k < count && ++c[k] == f.p) c[k++] = 0;
    if (k == count) return false;
  }
}

inline std::vector<Matrix> combine_blocks(const Field& f, const std::vector<std::vector<Matrix>>& basis,
                                          const std::vector<long>& coeffs) {
  std::vector<Matrix> out;
  if (basis.empty()) return out;
  for (size_t b = 0; b < basis[0].size(); ++b) out.emplace_back(f, basis[0][b].rows(), basis[0][b].cols());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Scalar c = Scalar::of_long(f, coeffs[i]);
    for (size_t b = 0; b < basis[i].size(); ++b)
      for (int r = 0; r < basis[i][b].rows(); ++r)
        for (int cc = 0; cc < basis[i][b].cols(); ++cc) out[b].at(r, cc) += c * basis[i][b].at(r, cc);
  }
  return out;
}

inline bool blocks_all_zero(const std::vector<Matrix>& m) {
  for (const auto& b : m)
    if (!b.is_zero()) return false;
  return true;
}

inline bool blocks_are_identity(const std::vector<Matrix>& m) {
  for (const auto& b : m)
    if (!(b == Matrix::identity(b.field(), b.rows()))) return false;
  return true;
}

inline bool blocks_idempotent(const std::vector<Matrix>& m) {
  for (const auto& b : m)
    if (!(b * b == b)) return false;
  return true;
}

inline bool blocks_invertible(const std::vector<Matrix>& m) {
  for (const auto& b : m)
    if (b.rows() != b.cols() || !b.is_invertible()) return false;
  return true;
}

// End contains no idempotent besides 0 and id <=> indecomposable (graded
// Krull-Schmidt). Exhaustive over the End space within budget.
inline bool end_space_indecomposable(const Field& f, const std::vector<std::vector<Matrix>>& end_basis,
                                     int total_dim, long long budget) {
  if (total_dim == 0) return false;  // zero module is not indecomposable
  bool found = enumerate_combinations(f, end_basis.size(), budget, [&](const std::vector<long>& c) {
    std::vector<Matrix> phi = combine_blocks(f, end_basis, c);
    if (blocks_all_zero(phi) || blocks_are_identity(phi)) return false;
    return blocks_idempotent(phi);
  });
  return !found;
}

inline bool hom_space_has_iso(const Field& f, const std::vector<std::vector<Matrix>>& hom, long long budget) {
  if (hom.empty()) return false;
  return enumerate_combinations(f, hom.size(), budget, [&](const std::vector<long>& c) {
    return blocks_invertible(combine_blocks(f, hom, c));
  });
}

}  // namespace detail

inline bool is_indecomposable(const Quiver& q, const QuiverRep& r, const OracleBudget& budget = {}) {
  auto end_basis = quiver_hom_basis(q, r, r);
  return detail::end_space_indecomposable(r.field, end_basis, r.total_dim(), budget.max_space_enum);
}

inline bool is_indecomposable(const Superspecies& s, const SpeciesRep& r, const OracleBudget& budget = {}) {
  auto end_basis = species_hom_basis(s, r, r);
  return detail::end_space_indecomposable(r.field, end_basis, r.total_dim(), budget.max_space_enum);
}

inline bool are_isomorphic(const Quiver& q, const QuiverRep& a, const QuiverRep& b,
                           const OracleBudget& budget = {}) {
  if (a.dims != b.dims) return false;
  if (a.total_dim() == 0) return true;
  return detail::hom_space_has_iso(a.field, quiver_hom_basis(q, a, b), budget.max_space_enum);
}

inline bool are_isomorphic(const Superspecies& s, const SpeciesRep& a, const SpeciesRep& b,
                           const OracleBudget& budget = {}) {
  if (!(a.dims == b.dims)) return false;
  if (a.total_dim() == 0) return true;
  return detail::hom_space_has_iso(a.field, species_hom_basis(s, a, b), budget.max_space_enum);
}

// ---------------------------------------------------------------------------
// Brute-force enumeration and counting.
// ---------------------------------------------------------------------------

namespace detail {

// Enumerate all dimension vectors with the given per-coordinate cap and
// total in [1, max_total].
inline std::vector<DimVector> dimension_vectors(int n, int per, int max_total) {
  std::vector<DimVector> out;
  DimVector d(n, 0);
  auto rec = [&](auto&& self, int k, int total) -> void {
    if (k == n) {
      if (total > 0) out.push_back(d);
      return;
    }
    for (int t = 0; t <= per && total + t <= max_total; ++t) {
      d[k] = t;
      self(self, k + 1, total + t);
    }
    d[k] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

// All representations of a quiver with a fixed dimension vector over F_p.
inline void enumerate_quiver_reps(const Quiver& q, const Field& f, const DimVector& dims, long long max_tuples,
                                  const std::function<void(const QuiverRep&)>& visit) {
  if (f.is_rational()) throw budget_error("representation enumeration needs a finite field");
  int entries = 0;
  for (const auto& a : q.arrows) entries += dims[a.target] * dims[a.source];
  double size = 1;
  for (int i = 0; i < entries; ++i) size *= static_cast<double>(f.p);
  if (size > static_cast<double>(max_tuples)) throw budget_error("matrix tuple enumeration over budget");
  QuiverRep r = QuiverRep::zero(f, q, dims);
  std::vector<std::pair<int, std::pair<int, int>>> slots;  // (arrow, (row, col))
  for (size_t a = 0; a < q.arrows.size(); ++a)
    for (int i = 0; i < r.maps[a].rows(); ++i)
      for (int j = 0; j < r.maps[a].cols(); ++j) slots.push_back({static_cast<int>(a), {i, j}});
  std::vector<long> vals(slots.size(), 0);
  while (true) {
    visit(r);
    size_t k = 0;
    while (k < slots.size()) {
      auto [a, rc] = slots[k];
      if (++vals[k] == f.p) {
        vals[k] = 0;
        r.maps[a].at(rc.first, rc.second) = Scalar::zero(f);
        ++k;
      } else {
        r.maps[a].at(rc.first, rc.second) = Scalar::of_long(f, vals[k]);
        break;
      }
    }
    if (k == slots.size()) return;
  }
}

}  // namespace detail

// Count per dimension vector: total isomorphism classes and how many of
// them are indecomposable.
struct IndecCountReport {
  struct PerDim {
    DimVector dims;
    long long classes = 0;
    long long indecomposable = 0;
  };
  std::vector<PerDim> per_dim;
  long long total_indecomposable = 0;
};

// Brute-force count of indecomposable isomorphism classes of quiver
// representations over F_p, within budget. Deterministic.
inline IndecCountReport count_indecomposables(const Quiver& q, const Field& f, const OracleBudget& budget = {}) {
  q.check();
  IndecCountReport report;
  for (const auto& dims : detail::dimension_vectors(q.n, budget.per_vertex_dim, budget.max_total_dim)) {
    std::vector<QuiverRep> reps_of_classes;
    std::vector<char> indec;
    detail::enumerate_quiver_reps(q, f, dims, budget.max_tuples, [&](const QuiverRep& r) {
      for (const auto& known : reps_of_classes)
        if (are_isomorphic(q, r, known, budget)) return;
      reps_of_classes.push_back(r);
      indec.push_back(is_indecomposable(q, r, budget) ? 1 : 0);
    });
    IndecCountReport::PerDim row;
    row.dims = dims;
    row.classes = static_cast<long long>(reps_of_classes.size());
    for (char c : indec) row.indecomposable += c;
    if (row.classes > 0) report.per_dim.push_back(row);
    report.total_indecomposable += row.indecomposable;
  }
  return report;
}

// The same count through species representations, enumerated natively on
// the coefficient tensors (free entries are exactly those with nonzero eps
// factor). The dimension vector recorded is the one of Q_S so the two
// reports are directly comparable.
inline IndecCountReport count_indecomposables(const Superspecies& s, const Field& f,
                                              const OracleBudget& budget = {}) {
  QuiverOfIndex ix(s);
  IndecCountReport report;
  for (const auto& dims : detail::dimension_vectors(ix.quiver.n, budget.per_vertex_dim, budget.max_total_dim)) {
    std::vector<GradedDims> sdims(s.n());
    for (const auto& [key, v] : ix.vertex) {
      if (key.second == 0)
        sdims[key.first].d0 = dims[v];
      else
        sdims[key.first].d1 = dims[v];
    }
    // Free coefficient slots (the rest are structural zeros).
    SpeciesRep base = SpeciesRep::zero(f, s, sdims);
    struct Slot {
      std::pair<int, int> pair;
      int l, row, col;
    };
    std::vector<Slot> slots;
    for (auto& [pair, mats] : base.coeff) {
      const BimoduleSpec* spec = s.bimodule(pair.first, pair.second);
      for (int l = 0; l < spec->letter_count(); ++l)
        for (int row = 0; row < mats[l].rows(); ++row)
          for (int col = 0; col < mats[l].cols(); ++col) {
            if (!s.is_D(pair.second) &&
                par(spec->letter_degree(l) + base.basis_degree(s, pair.first, col)) !=
                    base.basis_degree(s, pair.second, row))
              continue;
            slots.push_back({pair, l, row, col});
          }
    }
    double size = 1;
    for (size_t i = 0; i < slots.size(); ++i) size *= static_cast<double>(f.p);
    if (size > static_cast<double>(budget.max_tuples)) throw budget_error("species tuple enumeration over budget");
    std::vector<SpeciesRep> class_reps;
    std::vector<char> indec;
    std::vector<long> vals(slots.size(), 0);
    while (true) {
      for (const auto& known : class_reps)
        if (are_isomorphic(s, base, known, budget)) goto advance;
      class_reps.push_back(base);
      indec.push_back(is_indecomposable(s, base, budget) ? 1 : 0);
    advance: {
      size_t k = 0;
      while (k < slots.size()) {
        const Slot& sl = slots[k];
        if (++vals[k] == f.p) {
          vals[k] = 0;
          base.coeff[sl.pair][sl.l].at(sl.row, sl.col) = Scalar::zero(f);
          ++k;
        } else {
          base.coeff[sl.pair][sl.l].at(sl.row, sl.col) = Scalar::of_long(f, vals[k]);
          break;
        }
      }
      if (k == slots.size()) break;
    }
    }
    IndecCountReport::PerDim row;
    row.dims = dims;
    row.classes = static_cast<long long>(class_reps.size());
    for (char c : indec) row.indecomposable += c;
    if (row.classes > 0) report.per_dim.push_back(row);
    report.total_indecomposable += row.indecomposable;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Krull-Schmidt decomposition at desk scale.
// ---------------------------------------------------------------------------

namespace detail {

// Restrict a representation to the column space of an idempotent
// endomorphism (one basis per vertex, maps rebased).
inline QuiverRep restrict_to_image(const Quiver& q, const QuiverRep& r, const std::vector<Matrix>& idem) {
  QuiverRep out;
  out.field = r.field;
  std::vector<Matrix> bases;
  for (int v = 0; v < q.n; ++v) {
    RowSpace cols(r.field, r.dims[v]);
    for (int j = 0; j < idem[v].cols(); ++j) {
      Vec col(r.dims[v], Scalar::zero(r.field));
      for (int i = 0; i < idem[v].rows(); ++i) col[i] = idem[v].at(i, j);
      cols.add(col);
    }
    out.dims.push_back(cols.dim());
    bases.push_back(Matrix::from_columns(r.field, r.dims[v], cols.basis()));
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    Matrix img = r.maps[a] * bases[ar.source];
    // Solve bases[target] * X = img column by column.
    Matrix x(r.field, out.dims[ar.target], out.dims[ar.source]);
    for (int c = 0; c < img.cols(); ++c) {
      Vec rhs(img.rows(), Scalar::zero(r.field));
      for (int i = 0; i < img.rows(); ++i) rhs[i] = img.at(i, c);
      auto sol = bases[ar.target].solve(rhs);
      if (!sol) throw internal_error("restrict_to_image: image leaves the subrepresentation");
      for (int i = 0; i < out.dims[ar.target]; ++i) x.at(i, c) = (*sol)[i];
    }
    out.maps.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

// Full decomposition into indecomposable summands; `salt` perturbs the
// idempotent search order so different decomposition paths can be compared.
inline std::vector<QuiverRep> decompose(const Quiver& q, const QuiverRep& r, const OracleBudget& budget = {},
                                        long salt = 0) {
  if (r.total_dim() == 0) return {};
  auto end_basis = quiver_hom_basis(q, r, r);
  std::vector<Matrix> split;
  bool found = detail::enumerate_combinations(r.field, end_basis.size(), budget.max_space_enum,
                                              [&](const std::vector<long>& c) {
                                                std::vector<long> shifted = c;
                                                if (salt != 0)
                                                  for (auto& x : shifted) x = (x + salt) % r.field.p;
                                                std::vector<Matrix> phi =
                                                    detail::combine_blocks(r.field, end_basis, shifted);
                                                if (detail::blocks_all_zero(phi) || detail::blocks_are_identity(phi))
                                                  return false;
                                                if (!detail::blocks_idempotent(phi)) return false;
                                                split = phi;
                                                return true;
                                              });
  if (!found) return {r};
  std::vector<Matrix> co;
  for (int v = 0; v < q.n; ++v) co.push_back(Matrix::identity(r.field, r.dims[v]) - split[v]);
  std::vector<QuiverRep> out;
  for (auto part : {detail::restrict_to_image(q, r, split), detail::restrict_to_image(q, r, co)}) {
    auto sub = decompose(q, part, budget, salt);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence verification (Theorem "rep S = rep Q_S" at desk scale).
// ---------------------------------------------------------------------------

struct EquivalenceReport {
  long long reps_checked = 0;
  long long indecomposables = 0;
  bool functor_preserves_indecomposability = true;
  bool functor_preserves_iso_classes = true;
  bool counts_agree = true;
  bool hom_dims_agree = true;
  bool ok() const {
    return functor_preserves_indecomposability && functor_preserves_iso_classes && counts_agree && hom_dims_agree;
  }
};

// Enumerate species representations within budget, push them through H and
// compare everything that is cheap to compare: indecomposability on both
// sides, iso classes on both sides, Hom dimensions, per-dimension counts.
inline EquivalenceReport verify_equivalence(const Superspecies& s, const Field& f,
                                            const OracleBudget& budget = {}) {
  if (!is_acyclic(s)) throw validation_error("verify_equivalence requires an acyclic superspecies");
  QuiverOfIndex ix(s);
  EquivalenceReport rep;
  IndecCountReport species_counts = count_indecomposables(s, f, budget);
  IndecCountReport quiver_counts = count_indecomposables(ix.quiver, f, budget);
  // Per-dimension-vector counts must agree exactly.
  auto key = [](const DimVector& d) { return d; };
  std::map<DimVector, std::pair<long long, long long>> merged;
  for (const auto& row : species_counts.per_dim) merged[key(row.dims)].first = row.indecomposable;
  for (const auto& row : quiver_counts.per_dim) merged[key(row.dims)].second = row.indecomposable;
  for (const auto& [d, counts] : merged)
    if (counts.first != counts.second) rep.counts_agree = false;
  rep.indecomposables = species_counts.total_indecomposable;
  if (species_counts.total_indecomposable != quiver_counts.total_indecomposable) rep.counts_agree = false;

  // Pointwise functor checks on a re-enumeration.
  for (const auto& dims : detail::dimension_vectors(ix.quiver.n, budget.per_vertex_dim, budget.max_total_dim)) {
    std::vector<SpeciesRep> species_classes;
    std::vector<QuiverRep> images;
    std::vector<GradedDims> sdims(s.n());
    for (const auto& [k2, v] : ix.vertex) {
      if (k2.second == 0)
        sdims[k2.first].d0 = dims[v];
      else
        sdims[k2.first].d1 = dims[v];
    }
    SpeciesRep base = SpeciesRep::zero(f, s, sdims);
    struct Slot {
      std::pair<int, int> pair;
      int l, row, col;
    };
    std::vector<Slot> slots;
    for (auto& [pair, mats] : base.coeff) {
      const BimoduleSpec* spec = s.bimodule(pair.first, pair.second);
      for (int l = 0; l < spec->letter_count(); ++l)
        for (int row = 0; row < mats[l].rows(); ++row)
          for (int col = 0; col < mats[l].cols(); ++col) {
            if (!s.is_D(pair.second) &&
                par(spec->letter_degree(l) + base.basis_degree(s, pair.first, col)) !=
                    base.basis_degree(s, pair.second, row))
              continue;
            slots.push_back({pair, l, row, col});
          }
    }
    double size = 1;
    for (size_t i = 0; i < slots.size(); ++i) size *= static_cast<double>(f.p);
    if (size > static_cast<double>(budget.max_tuples)) throw budget_error("verify_equivalence over budget");
    std::vector<long> vals(slots.size(), 0);
    while (true) {
      ++rep.reps_checked;
      QuiverRep image = functor_H(base, s);
      // H is the identity on dimension data by construction.
      if (image.dims != dims) rep.hom_dims_agree = false;
      bool ind_s = is_indecomposable(s, base, budget);
      bool ind_q = is_indecomposable(ix.quiver, image, budget);
      if (ind_s != ind_q) rep.functor_preserves_indecomposability = false;
      // Hom dimension agreement against the previously kept class reps,
      // and iso-class preservation both ways.
      for (size_t c = 0; c < species_classes.size(); ++c) {
        size_t hs = species_hom_basis(s, base, species_classes[c]).size();
        size_t hq = quiver_hom_basis(ix.quiver, image, images[c]).size();
        if (hs != hq) rep.hom_dims_agree = false;
        bool iso_s = are_isomorphic(s, base, species_classes[c], budget);
        bool iso_q = are_isomorphic(ix.quiver, image, images[c], budget);
        if (iso_s != iso_q) rep.functor_preserves_iso_classes = false;
      }
      bool is_new = true;
      for (const auto& known : species_classes)
        if (are_isomorphic(s, base, known, budget)) {
          is_new = false;
          break;
        }
      if (is_new) {
        species_classes.push_back(base);
        images.push_back(image);
      }
      // Round trip H . H_inverse = identity on the representation data.
      QuiverRep round = functor_H(functor_H_inverse(image, s), s);
      bool same = round.dims == image.dims;
      for (size_t m = 0; same && m < image.maps.size(); ++m) same = round.maps[m] == image.maps[m];
      if (!same) rep.hom_dims_agree = false;
      size_t k = 0;
      while (k < slots.size()) {
        const Slot& sl = slots[k];
        if (++vals[k] == f.p) {
          vals[k] = 0;
          base.coeff[sl.pair][sl.l].at(sl.row, sl.col) = Scalar::zero(f);
          ++k;
        } else {
          base.coeff[sl.pair][sl.l].at(sl.row, sl.col) = Scalar::of_long(f, vals[k]);
          break;
        }
      }
      if (k == slots.size()) break;
    }
  }
  return rep;
}

}  // namespace superrep
