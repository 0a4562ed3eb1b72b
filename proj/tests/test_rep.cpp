#include <catch2/catch_amalgamated.hpp>

#include "superrep/rep.hpp"

using namespace superrep;

namespace {

Superspecies make(const std::string& labels,
                  const std::vector<std::pair<std::pair<int, int>, BimoduleSpec>>& bims) {
  Superspecies s;
  for (char c : labels) s.vertices.push_back(c == 'D' ? VertexType::D : VertexType::K);
  for (const auto& [p, b] : bims) s.bimodules[p] = b;
  return s;
}

Quiver path_quiver(int n) {
  Quiver q;
  q.n = n;
  for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return q;
}


}  // namespace

TEST_CASE("functor H dimension bookkeeping") {
  Field f = Field::Fp(3);
  // K vertex with graded dims (2,1) and a D vertex of rank 3.
  Superspecies s = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  SpeciesRep r = SpeciesRep::zero(f, s, {{2, 1}, {3, 0}});
  QuiverRep h = functor_H(r, s);
  // Quiver vertex order: (1,0), (1,1), (2,0).
  CHECK(h.dims == DimVector{2, 1, 3});

  SpeciesRep z = SpeciesRep::zero(f, s, {{0, 0}, {0, 0}});
  CHECK(functor_H(z, s).total_dim() == 0);
}

TEST_CASE("functor H inverse is a section: H(H^{-1}(r)) = r exactly") {
  Field f = Field::Fp(3);
  Superspecies s = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  QuiverOfIndex ix(s);
  // A3 representation with dims (1,1,1) and some nonzero maps.
  QuiverRep r = QuiverRep::zero(f, ix.quiver, {1, 1, 1});
  for (auto& m : r.maps)
    if (m.rows() && m.cols()) m.at(0, 0) = Scalar::of_long(f, 2);
  SpeciesRep v = functor_H_inverse(r, s);
  CHECK(v.dims[0] == GradedDims{1, 1});
  CHECK(v.dims[1] == GradedDims{1, 0});
  QuiverRep round = functor_H(v, s);
  CHECK(round.dims == r.dims);
  for (size_t a = 0; a < r.maps.size(); ++a) CHECK(round.maps[a] == r.maps[a]);
}

TEST_CASE("indecomposability of quiver representations") {
  Field f = Field::Fp(2);
  Quiver a2 = path_quiver(2);
  // Simple at one vertex.
  QuiverRep simple = QuiverRep::zero(f, a2, {1, 0});
  CHECK(is_indecomposable(a2, simple));
  // Sum of two simples.
  QuiverRep sum = QuiverRep::zero(f, a2, {1, 1});
  CHECK_FALSE(is_indecomposable(a2, sum));
  // (1,1) with a nonzero map: End = scalars.
  QuiverRep conn = QuiverRep::zero(f, a2, {1, 1});
  conn.maps[0].at(0, 0) = Scalar::one(f);
  CHECK(is_indecomposable(a2, conn));
  CHECK(quiver_hom_basis(a2, conn, conn).size() == 1);

  // Zero module is not indecomposable.
  CHECK_FALSE(is_indecomposable(a2, QuiverRep::zero(f, a2, {0, 0})));
}

TEST_CASE("count of indecomposables matches root counts (quiver side)") {
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 2;
  auto a2 = count_indecomposables(path_quiver(2), f, b);
  CHECK(a2.total_indecomposable == 3);

  OracleBudget b3;
  b3.max_total_dim = 3;
  // A3 from the KtoD species: (1,0)->(2,0)<-(1,1).
  Superspecies s = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  QuiverOfIndex ix(s);
  auto a3 = count_indecomposables(ix.quiver, f, b3);
  CHECK(a3.total_indecomposable == 6);
  // And per dimension vector each root appears exactly once.
  auto roots = positive_roots(underlying_diagram(ix.quiver));
  for (const auto& row : a3.per_dim) {
    bool is_root = std::find(roots.begin(), roots.end(), row.dims) != roots.end();
    CHECK(row.indecomposable == (is_root ? 1 : 0));
  }
}

TEST_CASE("count of indecomposables on the species side") {
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 3;
  Superspecies s = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  auto direct = count_indecomposables(s, f, b);
  CHECK(direct.total_indecomposable == 6);
}

TEST_CASE("field independence of ADE counts: F2 vs F3") {
  OracleBudget b;
  b.max_total_dim = 2;
  auto c2 = count_indecomposables(path_quiver(2), Field::Fp(2), b);
  auto c3 = count_indecomposables(path_quiver(2), Field::Fp(3), b);
  CHECK(c2.total_indecomposable == c3.total_indecomposable);

  OracleBudget b3;
  b3.max_total_dim = 3;
  auto a32 = count_indecomposables(path_quiver(3), Field::Fp(2), b3);
  auto a33 = count_indecomposables(path_quiver(3), Field::Fp(3), b3);
  CHECK(a32.total_indecomposable == 6);
  CHECK(a33.total_indecomposable == 6);
}

TEST_CASE("Krull-Schmidt: decomposition multiset is independent of the split order") {
  Field f = Field::Fp(2);
  Quiver a3 = path_quiver(3);
  OracleBudget b;
  // Build a decomposable rep: simple(v0) + interval [v1,v2].
  QuiverRep r = QuiverRep::zero(f, a3, {1, 1, 1});
  r.maps[1].at(0, 0) = Scalar::one(f);
  for (long salt : {0L, 1L}) {
    auto parts = decompose(a3, r, b, salt);
    REQUIRE(parts.size() == 2);
    std::multiset<int> sizes;
    for (const auto& p : parts) {
      CHECK(is_indecomposable(a3, p, b));
      sizes.insert(p.total_dim());
    }
    CHECK(sizes == std::multiset<int>({1, 2}));
  }
}

TEST_CASE("Krull-Schmidt sweep: summand multisets agree across split orders") {
  // Every A3 representation with dims (1,1,1): decompose with two different
  // idempotent orders, compare the summand dimension-vector multisets, and
  // check the parts sum back to the whole.
  Field f = Field::Fp(2);
  Quiver a3 = path_quiver(3);
  OracleBudget b;
  superrep::detail::enumerate_quiver_reps(a3, f, {1, 1, 1}, b.max_tuples, [&](const QuiverRep& r) {
    std::multiset<DimVector> first;
    for (long salt : {0L, 1L}) {
      auto parts = decompose(a3, r, b, salt);
      std::multiset<DimVector> dims;
      int total = 0;
      for (const auto& p : parts) {
        CHECK(is_indecomposable(a3, p, b));
        dims.insert(p.dims);
        total += p.total_dim();
      }
      CHECK(total == r.total_dim());
      if (salt == 0)
        first = dims;
      else
        CHECK(first == dims);
    }
  });
}

TEST_CASE("verify_equivalence on the smallest species") {
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 2;
  // Single K vertex: two simples on both sides.
  Superspecies k = make("K", {});
  auto repk = verify_equivalence(k, f, b);
  CHECK(repk.ok());
  // Indecomposables of dim <= 2 on two isolated vertices: the two simples
  // (higher-dimensional ones decompose).
  CHECK(repk.indecomposables == 2);
}

TEST_CASE("verify_equivalence for KK(0,1): the double cover A2 + A2") {
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 4;
  Superspecies s = make("KK", {{{0, 1}, BimoduleSpec::KK(0, 1)}});
  auto rep = verify_equivalence(s, f, b);
  CHECK(rep.ok());
  CHECK(rep.indecomposables == 6);
}

TEST_CASE("verify_equivalence for DtoK(1): counts match A3") {
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 3;
  Superspecies s = make("DK", {{{0, 1}, BimoduleSpec::DtoK(1)}});
  auto rep = verify_equivalence(s, f, b);
  CHECK(rep.ok());
  CHECK(rep.indecomposables == 6);
}

TEST_CASE("super Kac on a D4 shape: A(1,2) has 12 indecomposables") {
  // Q_S of the species K -> D - D is the D4 tree; all 12 positive roots
  // stay within per-vertex dimension 2 and total 5.
  Field f = Field::Fp(2);
  OracleBudget b;
  b.max_total_dim = 5;
  Superspecies s = make("KDD", {{{0, 1}, BimoduleSpec::KtoD(1)}, {{1, 2}, BimoduleSpec::DD(1, 0)}});
  Quiver q = quiver_of(s);
  auto roots = positive_roots(underlying_diagram(q));
  REQUIRE(roots.size() == 12);
  auto counts = count_indecomposables(q, f, b);
  CHECK(counts.total_indecomposable == 12);
  std::set<DimVector> root_set(roots.begin(), roots.end());
  for (const auto& row : counts.per_dim)
    CHECK(row.indecomposable == (root_set.count(row.dims) ? 1 : 0));
}
