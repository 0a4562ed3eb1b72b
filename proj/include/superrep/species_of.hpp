#pragma once

#include "superrep/superspecies.hpp"

namespace superrep {

namespace detail {

// Echelonized subspace spanned by {e x f : x in gens}, reduced mod `mod`.
// All inputs are homogeneous, so the canonical representatives stay
// homogeneous as long as `mod` has a homogeneous basis.
inline RowSpace sandwich_span(const GradedAlgebra& a, const Vec& e, const Vec& f,
                              const std::vector<Vec>& gens, const RowSpace& mod) {
  RowSpace out(a.field, a.dim());
  for (const auto& x : gens) out.add(mod.reduce(a.multiply(e, a.multiply(x, f))));
  return out;
}

inline std::vector<Vec> degree_part(const GradedAlgebra& a, const RowSpace& space, int z) {
  std::vector<Vec> part;
  for (const auto& v : space.basis()) {
    int d;
    if (!a.is_homogeneous(v, &d))
      throw internal_error("species extraction: corner basis vector is not homogeneous");
    if (is_zero_vec(v)) continue;
    if (d == z) part.push_back(v);
  }
  return part;
}

}  // namespace detail

// Graded species of an algebra with respect to a caller-supplied complete
// set of degree-0 orthogonal idempotents e_1..e_n. Labels come from the
// corner algebras e_i (A/J) e_i, bimodules from e_i (J/J^2) e_j; pairs
// (source i, target j) follow the left-to-right composition convention used
// by path_superalgebra and tensor_algebra.
inline Superspecies graded_species_of(const GradedAlgebra& a, const std::vector<Vec>& idems) {
  const int n = static_cast<int>(idems.size());
  if (n == 0) throw validation_error("graded_species_of needs at least one idempotent");
  // Idempotent sanity: degree 0, orthogonal, complete.
  Vec total = zero_vec(a.field, a.dim());
  for (int i = 0; i < n; ++i) {
    int dz;
    if (!a.is_homogeneous(idems[i], &dz) || dz != 0 || is_zero_vec(idems[i]))
      throw validation_error("idempotent " + std::to_string(i + 1) + " is not homogeneous of degree 0");
    if (a.multiply(idems[i], idems[i]) != idems[i])
      throw validation_error("vector " + std::to_string(i + 1) + " is not idempotent");
    for (int j = 0; j < n; ++j)
      if (i != j && !is_zero_vec(a.multiply(idems[i], idems[j])))
        throw validation_error("idempotents " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               " are not orthogonal");
    total = add(total, idems[i]);
  }
  if (total != a.one) throw validation_error("idempotents do not sum to the identity");

  GradedIdeal rad = graded_radical(a);
  RowSpace jspace(a.field, a.dim());
  for (const auto& v : rad.basis) jspace.add(v);
  RowSpace j2space(a.field, a.dim());
  for (const auto& x : rad.basis)
    for (const auto& y : rad.basis) j2space.add(a.multiply(x, y));

  std::vector<Vec> all_basis;
  for (int k = 0; k < a.dim(); ++k) all_basis.push_back(a.unit_vec(k));

  Superspecies s;
  std::vector<Vec> units;  // normalized degree-1 unit per D vertex (A-coordinates mod J)
  for (int i = 0; i < n; ++i) {
    RowSpace corner = detail::sandwich_span(a, idems[i], idems[i], all_basis, jspace);
    if (corner.dim() == 1) {
      s.vertices.push_back(VertexType::K);
      units.push_back({});
      continue;
    }
    if (corner.dim() != 2)
      throw validation_error("corner e_" + std::to_string(i + 1) + "(A/J)e_" + std::to_string(i + 1) +
                             " has dimension " + std::to_string(corner.dim()) + ", not 1 or 2");
    auto even = detail::degree_part(a, corner, 0);
    auto odd = detail::degree_part(a, corner, 1);
    if (even.size() != 1 || odd.size() != 1)
      throw validation_error("corner at vertex " + std::to_string(i + 1) +
                             " is not gr-division (graded dims are not (1,1))");
    Vec u = odd[0];
    // u^2 = gamma e_i mod J; rescale so that u^2 = e_i.
    Vec u2 = jspace.reduce(a.multiply(u, u));
    Vec ei = jspace.reduce(idems[i]);
    Scalar gamma = Scalar::zero(a.field);
    bool found = false;
    for (int k = 0; k < a.dim() && !found; ++k)
      if (!ei[k].is_zero()) {
        gamma = u2[k] / ei[k];
        found = true;
      }
    if (!found || u2 != scale(gamma, ei) || gamma.is_zero())
      throw validation_error("corner at vertex " + std::to_string(i + 1) +
                             " is not gr-division (u^2 is not a nonzero multiple of e)");
    Scalar root;
    if (!gamma.sqrt(root))
      throw validation_error("cannot normalize eps at vertex " + std::to_string(i + 1) + ": u^2 = " +
                             gamma.str() + " e and " + gamma.str() + " has no square root in " +
                             a.field.str());
    u = scale(root.inverse(), u);
    s.vertices.push_back(VertexType::D);
    units.push_back(u);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RowSpace bij = detail::sandwich_span(a, idems[i], idems[j], rad.basis, j2space);
      if (bij.dim() == 0) continue;
      auto even = detail::degree_part(a, bij, 0);
      auto odd = detail::degree_part(a, bij, 1);
      std::string where = "(" + std::to_string(i + 1) + "->" + std::to_string(j + 1) + ")";
      BimoduleSpec spec;
      bool iD = s.is_D(i), jD = s.is_D(j);
      if (!iD && !jD) {
        spec = BimoduleSpec::KK(static_cast<int>(even.size()), static_cast<int>(odd.size()));
      } else if (!iD || !jD) {
        // Mixed case: the eps action of the D endpoint must swap the two
        // degree parts bijectively (gr-freeness over D).
        if (even.size() != odd.size())
          throw validation_error("bimodule " + where + " is not gr-free over D (unequal degree parts)");
        RowSpace odd_span(a.field, a.dim());
        for (const auto& v : odd) odd_span.add(v);
        RowSpace image(a.field, a.dim());
        for (const auto& m : even) {
          Vec w = jD ? j2space.reduce(a.multiply(m, units[j])) : j2space.reduce(a.multiply(units[i], m));
          if (!odd_span.contains(w))
            throw validation_error("bimodule " + where + ": eps action leaves the bimodule corner");
          image.add(w);
        }
        if (image.dim() != static_cast<int>(odd.size()))
          throw validation_error("bimodule " + where + " fails the gr-free test over D");
        spec = jD ? BimoduleSpec::KtoD(static_cast<int>(even.size()))
                  : BimoduleSpec::DtoK(static_cast<int>(even.size()));
      } else {
        if (even.size() != odd.size())
          throw validation_error("bimodule " + where + " is not gr-free over D(x)D");
        // phi(m) = u_i m u_j acts as +1 on the plus block, -1 on the minus
        // block of the degree-0 part.
        const int m = static_cast<int>(even.size());
        Matrix basis_cols(a.field, a.dim(), m);
        for (int c = 0; c < m; ++c)
          for (int r = 0; r < a.dim(); ++r) basis_cols.at(r, c) = even[c][r];
        Matrix phi(a.field, m, m);
        for (int c = 0; c < m; ++c) {
          Vec img = j2space.reduce(a.multiply(units[i], a.multiply(even[c], units[j])));
          auto coords = basis_cols.solve(img);
          if (!coords)
            throw validation_error("bimodule " + where + ": u_i m u_j leaves the degree-0 part");
          for (int r = 0; r < m; ++r) phi.at(r, c) = (*coords)[r];
        }
        if (!(phi * phi == Matrix::identity(a.field, m)))
          throw validation_error("bimodule " + where + ": the eps-conjugation is not an involution");
        Matrix plus = phi - Matrix::identity(a.field, m);
        Matrix minus = phi + Matrix::identity(a.field, m);
        int aplus = static_cast<int>(plus.kernel_basis().size());
        int aminus = static_cast<int>(minus.kernel_basis().size());
        if (aplus + aminus != m)
          throw validation_error("bimodule " + where + ": eps-conjugation is not diagonalizable into blocks");
        spec = BimoduleSpec::DD(aplus, aminus);
      }
      if (!spec.is_zero()) s.bimodules[{i, j}] = spec;
    }
  return s;
}

}  // namespace superrep
