#include <catch2/catch_amalgamated.hpp>

#include "superrep/superspecies.hpp"

using namespace superrep;

namespace {

const Field Q = Field::Q();

Superspecies make(const std::string& labels,
                  const std::vector<std::pair<std::pair<int, int>, BimoduleSpec>>& bims) {
  Superspecies s;
  for (char c : labels) s.vertices.push_back(c == 'D' ? VertexType::D : VertexType::K);
  for (const auto& [p, b] : bims) s.bimodules[p] = b;
  return s;
}

}  // namespace

TEST_CASE("species validation") {
  CHECK(make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}}).validate().empty());
  CHECK_FALSE(make("KK", {{{0, 1}, BimoduleSpec::DtoK(1)}}).validate().empty());
  CHECK(make("DD", {{{0, 1}, BimoduleSpec::DD(1, 1)}}).validate().empty());

  // Consumers refuse label/case mismatches instead of misreading them.
  Superspecies bad = make("KD", {{{0, 1}, BimoduleSpec::KK(1, 0)}});
  CHECK_THROWS_AS(quiver_of(bad), validation_error);
  CHECK_THROWS_AS(superquiver_of(bad), validation_error);
  CHECK_THROWS_AS(tensor_algebra(bad, Q), validation_error);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}})));
  CHECK_FALSE(is_acyclic(make("K", {{{0, 0}, BimoduleSpec::KK(1, 0)}})));
  CHECK_FALSE(is_acyclic(make("KKK", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                      {{1, 2}, BimoduleSpec::KK(1, 0)},
                                      {{2, 0}, BimoduleSpec::KK(1, 0)}})));
}

TEST_CASE("K-dimensions of the four cases") {
  CHECK(BimoduleSpec::KK(2, 1).kdim() == GradedDims{2, 1});
  CHECK(BimoduleSpec::KtoD(1).kdim() == GradedDims{1, 1});
  CHECK(BimoduleSpec::DD(1, 0).kdim() == GradedDims{1, 1});
  CHECK(BimoduleSpec::DtoK(2).kdim() == GradedDims{2, 2});
}

TEST_CASE("tensor algebra dimensions") {
  CHECK(tensor_algebra_dim(make("KK", {{{0, 1}, BimoduleSpec::KK(1, 0)}})) == 3);
  CHECK(tensor_algebra_dim(make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}})) == 5);
  CHECK(tensor_algebra_dim(make("DD", {{{0, 1}, BimoduleSpec::DD(1, 0)}})) == 6);
  CHECK(tensor_algebra_dim(make("D", {})) == 2);
  CHECK_FALSE(tensor_algebra_dim(make("K", {{{0, 0}, BimoduleSpec::KK(1, 0)}})).has_value());
}

TEST_CASE("tensor algebra tables are valid and match the combinatorial dimension") {
  std::vector<Superspecies> cases = {
      make("KK", {{{0, 1}, BimoduleSpec::KK(1, 0)}}),
      make("KK", {{{0, 1}, BimoduleSpec::KK(1, 1)}}),
      make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}}),
      make("DK", {{{0, 1}, BimoduleSpec::DtoK(1)}}),
      make("DD", {{{0, 1}, BimoduleSpec::DD(1, 1)}}),
      make("KDK", {{{0, 1}, BimoduleSpec::KtoD(1)}, {{1, 2}, BimoduleSpec::DtoK(1)}}),
      make("DKD", {{{0, 1}, BimoduleSpec::DtoK(1)}, {{1, 2}, BimoduleSpec::KtoD(2)}}),
      make("DDD", {{{0, 1}, BimoduleSpec::DD(1, 1)}, {{1, 2}, BimoduleSpec::DD(1, 0)}}),
      make("KKK", {{{0, 1}, BimoduleSpec::KK(1, 1)}, {{1, 2}, BimoduleSpec::KK(0, 1)}}),
  };
  for (const auto& s : cases) {
    GradedAlgebra t = tensor_algebra(s, Q);
    INFO("species with " << s.n() << " vertices, dim " << t.dim());
    CHECK(t.validate().empty());
    CHECK(*tensor_algebra_dim(s) == t.dim());
    // The graded radical is spanned by the words of length >= 1: right
    // dimension, and no component on the vertex elements (which sort
    // first in the basis).
    GradedIdeal j = graded_radical(t);
    int vertex_block = 0;
    for (int v = 0; v < s.n(); ++v) vertex_block += s.is_D(v) ? 2 : 1;
    CHECK(j.dim() == t.dim() - vertex_block);
    for (const auto& b : j.basis)
      for (int k = 0; k < vertex_block; ++k) CHECK(b[k].is_zero());
  }
  CHECK_THROWS_AS(tensor_algebra(make("K", {{{0, 0}, BimoduleSpec::KK(1, 0)}}), Q), validation_error);
}

TEST_CASE("tensor algebra eps relations in the DD case") {
  // For the plus block eps_1 m = m eps_2, for the minus block a sign flips.
  Superspecies s = make("DD", {{{0, 1}, BimoduleSpec::DD(1, 1)}});
  GradedAlgebra t = tensor_algebra(s, Q);
  auto idx = [&](const std::string& name) {
    for (int i = 0; i < t.dim(); ++i)
      if (t.basis[i] == name) return i;
    FAIL("missing basis element " << name);
    return -1;
  };
  int eps1 = idx("eps1"), eps2 = idx("eps2");
  int m_plus = idx("m(1>2;0)"), m_minus = idx("m(1>2;1)");
  Vec lhs = t.multiply(t.unit_vec(eps1), t.unit_vec(m_plus));
  Vec rhs = t.multiply(t.unit_vec(m_plus), t.unit_vec(eps2));
  CHECK(lhs == rhs);
  Vec lhs2 = t.multiply(t.unit_vec(eps1), t.unit_vec(m_minus));
  Vec rhs2 = t.multiply(t.unit_vec(m_minus), t.unit_vec(eps2));
  CHECK(lhs2 == scale(Scalar::of_long(Q, -1), rhs2));
}

TEST_CASE("quiver of a superspecies") {
  // A(2,1): two whites and a black in a path; Q_S is A_5.
  Superspecies a21 = make("KKD", {{{0, 1}, BimoduleSpec::KK(1, 0)}, {{1, 2}, BimoduleSpec::KtoD(1)}});
  Quiver q = quiver_of(a21);
  CHECK(q.n == 5);
  auto cls = classify_diagram(underlying_diagram(q));
  REQUIRE(cls.size() == 1);
  CHECK(cls[0] == DiagramClass{DiagramClass::Family::A, 5});

  // B(1,1): DtoK(1) gives (b,0)->(w,0) and (b,0)->(w,1), shape A_3.
  Superspecies b11 = make("DK", {{{0, 1}, BimoduleSpec::DtoK(1)}});
  Quiver qb = quiver_of(b11);
  CHECK(qb.n == 3);
  auto clsb = classify_diagram(underlying_diagram(qb));
  REQUIRE(clsb.size() == 1);
  CHECK(clsb[0] == DiagramClass{DiagramClass::Family::A, 3});

  // A single K vertex doubles into two isolated vertices.
  Quiver qk = quiver_of(make("K", {}));
  CHECK(qk.n == 2);
  CHECK(qk.arrows.empty());

  // Vertex count bookkeeping: 2 * whites + blacks.
  Superspecies mix = make("KDD", {{{0, 1}, BimoduleSpec::KtoD(1)}, {{1, 2}, BimoduleSpec::DD(1, 0)}});
  CHECK(quiver_of(mix).n == 2 * 1 + 2);
}

TEST_CASE("all-white species: the parity involution is a quiver automorphism") {
  Superspecies s = make("KKK", {{{0, 1}, BimoduleSpec::KK(1, 1)}, {{1, 2}, BimoduleSpec::KK(0, 1)}});
  Quiver q = quiver_of(s);
  // Vertices alternate (i,0),(i,1); the involution swaps adjacent indices.
  auto flip = [&](int v) { return v ^ 1; };
  std::multiset<std::pair<int, int>> arrows, flipped;
  for (const auto& a : q.arrows) {
    arrows.insert({a.source, a.target});
    flipped.insert({flip(a.source), flip(a.target)});
  }
  CHECK(arrows == flipped);
}

TEST_CASE("superquiver of a superspecies") {
  Superspecies kk11 = make("KK", {{{0, 1}, BimoduleSpec::KK(1, 1)}});
  Superquiver q = superquiver_of(kk11);
  CHECK(q.n == 2);
  REQUIRE(q.arrows.size() == 2);
  CHECK_FALSE(q.arrows[0].dotted);
  CHECK(q.arrows[1].dotted);

  Superquiver qd = superquiver_of(make("DK", {{{0, 1}, BimoduleSpec::DtoK(1)}}));
  REQUIRE(qd.arrows.size() == 2);
  CHECK(qd.black[0]);
  CHECK_FALSE(qd.black[1]);
  CHECK(is_realizable(qd));

  Superquiver q2 = superquiver_of(make("KD", {{{0, 1}, BimoduleSpec::KtoD(2)}}));
  REQUIRE(q2.arrows.size() == 2);
  CHECK_FALSE(q2.arrows[0].dotted);
  CHECK_FALSE(q2.arrows[1].dotted);
}

TEST_CASE("species_from inverts superquiver_of up to isomorphism") {
  std::vector<Superspecies> cases = {
      make("KK", {{{0, 1}, BimoduleSpec::KK(2, 1)}}),
      make("KD", {{{0, 1}, BimoduleSpec::KtoD(2)}}),
      make("DK", {{{0, 1}, BimoduleSpec::DtoK(1)}}),
      make("DD", {{{0, 1}, BimoduleSpec::DD(2, 0)}}),
      make("KDK", {{{0, 1}, BimoduleSpec::KtoD(1)}, {{2, 1}, BimoduleSpec::KtoD(1)}}),
  };
  for (const auto& s : cases) {
    Superquiver q = superquiver_of(s);
    CHECK(is_realizable(q));
    Superspecies s2 = species_from(q);
    CHECK(superquiver_isomorphic(superquiver_of(s2), q));
  }
  // The DD sign split is deliberately lossy: DD(1,1) comes back as DD(2,0).
  Superspecies dd = make("DD", {{{0, 1}, BimoduleSpec::DD(1, 1)}});
  Superspecies back = species_from(superquiver_of(dd));
  CHECK(back.bimodules.at({0, 1}) == BimoduleSpec::DD(2, 0));
  CHECK(superquiver_isomorphic(superquiver_of(back), superquiver_of(dd)));
}

TEST_CASE("quiver_of is acyclic iff the species is acyclic") {
  Superspecies good = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  CHECK(quiver_of(good).is_acyclic());
  Superspecies cyc = make("KK", {{{0, 1}, BimoduleSpec::KK(1, 0)}, {{1, 0}, BimoduleSpec::KK(0, 1)}});
  CHECK_FALSE(is_acyclic(cyc));
  CHECK_FALSE(quiver_of(cyc).is_acyclic());
  Superspecies loop = make("D", {{{0, 0}, BimoduleSpec::DD(1, 0)}});
  CHECK_FALSE(is_acyclic(loop));
  CHECK_FALSE(quiver_of(loop).is_acyclic());
}

TEST_CASE("tensor algebra with several bimodules out of one vertex") {
  // Two different targets from vertex 1 share step letters; words must keep
  // them apart (regression for an ambiguous word encoding).
  Superspecies s = make("DKD", {{{0, 1}, BimoduleSpec::DtoK(1)},
                                {{0, 2}, BimoduleSpec::DD(0, 2)},
                                {{1, 2}, BimoduleSpec::KtoD(1)}});
  GradedAlgebra t = tensor_algebra(s, Q);
  CHECK(t.dim() == 17);
  CHECK(t.validate().empty());
  CHECK(*tensor_algebra_dim(s) == 17);
  GradedIdeal j = graded_radical(t);
  CHECK(j.dim() == 12);

  // Diamond: two parallel length-2 routes.
  Superspecies diamond = make("KKKK", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                       {{0, 2}, BimoduleSpec::KK(0, 1)},
                                       {{1, 3}, BimoduleSpec::KK(1, 0)},
                                       {{2, 3}, BimoduleSpec::KK(1, 1)}});
  GradedAlgebra td = tensor_algebra(diamond, Q);
  CHECK(td.validate().empty());
  CHECK(*tensor_algebra_dim(diamond) == td.dim());
}
