#include <catch2/catch_amalgamated.hpp>

#include "superrep/classify.hpp"

using namespace superrep;

namespace {

Superspecies make(const std::string& labels,
                  const std::vector<std::pair<std::pair<int, int>, BimoduleSpec>>& bims) {
  Superspecies s;
  for (char c : labels) s.vertices.push_back(c == 'D' ? VertexType::D : VertexType::K);
  for (const auto& [p, b] : bims) s.bimodules[p] = b;
  return s;
}

Superquiver sq(const std::string& colors, const std::vector<std::tuple<int, int, bool>>& arrows) {
  Superquiver q;
  q.n = static_cast<int>(colors.size());
  for (char c : colors) q.black.push_back(c == 'b');
  int k = 0;
  for (auto [s, t, d] : arrows) q.arrows.push_back({"a" + std::to_string(++k), s, t, d});
  return q;
}

}  // namespace

TEST_CASE("family matching on the spec examples") {
  // A(2,1): two whites then a black.
  auto m = match_family(sq("wwb", {{0, 1, false}, {1, 2, false}}));
  REQUIRE(m.has_value());
  CHECK(m->family == FamilyMatch::Family::An1);
  CHECK(m->n == 2);
  CHECK(m->str() == "A(2,1)");

  // A(1,2,1): blacks at both ends of a white path, solid arrows inward.
  auto m2 = match_family(sq("bwwb", {{1, 0, false}, {1, 2, false}, {2, 3, false}}));
  REQUIRE(m2.has_value());
  CHECK(m2->family == FamilyMatch::Family::A1n1);
  CHECK(m2->str() == "A(1,2,1)");

  // Two parallel solid white-white arrows: one-color affine A~1.
  auto m3 = match_family(sq("ww", {{0, 1, false}, {0, 1, false}}));
  REQUIRE(m3.has_value());
  CHECK(m3->family == FamilyMatch::Family::OneColorAffine);
  CHECK(m3->one_color == DiagramClass{DiagramClass::Family::Atilde, 1});
}

TEST_CASE("family matching distinguishes junction shapes") {
  // One-vertex and pair degenerations.
  CHECK(match_family(sq("w", {}))->family == FamilyMatch::Family::OneColorDynkin);
  CHECK(match_family(sq("b", {}))->family == FamilyMatch::Family::OneColorDynkin);
  auto pair_bw = match_family(sq("bw", {{0, 1, false}, {0, 1, true}}));
  REQUIRE(pair_bw.has_value());
  CHECK(pair_bw->is_finite_family());

  // Single solid black->white is not realizable: no family.
  CHECK_FALSE(match_family(sq("bw", {{0, 1, false}})).has_value());

  // A double solid white->black is a minimal wild shape: no family.
  CHECK_FALSE(match_family(sq("wb", {{0, 1, false}, {0, 1, false}})).has_value());

  // B(1,2): pair into white, then a black tail.
  auto b12 = match_family(sq("bwb", {{0, 1, false}, {0, 1, true}, {2, 0, false}}));
  REQUIRE(b12.has_value());
  CHECK(b12->family == FamilyMatch::Family::B1n);
  CHECK(b12->n == 2);

  // F(2,3).
  auto f23 = match_family(
      sq("wwbbb", {{0, 1, false}, {2, 1, false}, {2, 1, true}, {2, 3, false}, {3, 4, false}}));
  REQUIRE(f23.has_value());
  CHECK(f23->family == FamilyMatch::Family::F23);

  // D(1,3): white into a black star.
  auto d13 = match_family(sq("wbbb", {{0, 1, false}, {1, 2, false}, {1, 3, false}}));
  REQUIRE(d13.has_value());
  CHECK(d13->family == FamilyMatch::Family::D1n);
  CHECK(d13->n == 3);
}

TEST_CASE("no superquiver matches both a finite and a tame family") {
  // Template disjointness across the finite/tame boundary, asserted by
  // generating every template up to 8 vertices and matching it against all
  // the others.
  using F = FamilyMatch::Family;
  std::vector<std::pair<F, bool>> fams = {
      {F::An1, true},  {F::A1n, true},  {F::A22, true},  {F::B1n, true},   {F::Cn1, true},   {F::F22, true},
      {F::A1n1, false}, {F::Ap1n1, false}, {F::A32, false}, {F::A23, false}, {F::B1n1, false}, {F::Bp1n1, false},
      {F::C1n1, false}, {F::Cp1n1, false}, {F::F32, false}, {F::F23, false}, {F::Dn1, false},  {F::Dpn1, false},
      {F::D1n, false},  {F::Dp1n, false}};
  for (const auto& [fam, finite] : fams)
    for (int n = 0; n <= 6; ++n) {
      auto tmpl = superrep::detail::family_template(fam, n);
      if (!tmpl || tmpl->n > 8) continue;
      auto m = match_family(*tmpl);
      REQUIRE(m.has_value());
      CHECK(m->is_finite_family() == finite);
    }
}

TEST_CASE("classification via quiver on the spec examples") {
  // A(2,2) species: whites joined to blacks through KtoD; its quiver is E6.
  Superspecies a22 = make("KKDD", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                   {{1, 2}, BimoduleSpec::KtoD(1)},
                                   {{2, 3}, BimoduleSpec::DD(1, 0)}});
  auto cls = classify_diagram(underlying_diagram(quiver_of(a22)));
  REQUIRE(cls.size() == 1);
  CHECK(cls[0] == DiagramClass{DiagramClass::Family::E, 6});
  CHECK(classify_via_quiver(a22) == RepType::Finite);
  CHECK(classify_via_table(a22) == RepType::Finite);

  // F(2,3) species: tame.
  Superspecies f23 = make("KKDDD", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                    {{2, 1}, BimoduleSpec::DtoK(1)},
                                    {{2, 3}, BimoduleSpec::DD(1, 0)},
                                    {{3, 4}, BimoduleSpec::DD(1, 0)}});
  CHECK(classify_via_quiver(f23) == RepType::Tame);
  CHECK(classify_via_table(f23) == RepType::Tame);
  auto clsf = classify_diagram(underlying_diagram(quiver_of(f23)));
  REQUIRE(clsf.size() == 1);
  CHECK(clsf[0] == DiagramClass{DiagramClass::Family::Etilde, 6});

  // KK(3,0) on two whites: wild through the K_3 subshape.
  Superspecies k3 = make("KK", {{{0, 1}, BimoduleSpec::KK(3, 0)}});
  CHECK(classify_via_quiver(k3) == RepType::Wild);
  CHECK(classify_via_table(k3) == RepType::Wild);

  // Cyclic species are rejected.
  CHECK_THROWS_AS(classify_via_quiver(make("K", {{{0, 0}, BimoduleSpec::KK(1, 0)}})), validation_error);
  CHECK_THROWS_AS(classify_via_table(make("K", {{{0, 0}, BimoduleSpec::KK(1, 0)}})), validation_error);
}

TEST_CASE("classification via table on tame families and wild extensions") {
  // D(1,3) species: tame.
  Superspecies d13 = make("KDDD", {{{0, 1}, BimoduleSpec::KtoD(1)},
                                   {{1, 2}, BimoduleSpec::DD(1, 0)},
                                   {{1, 3}, BimoduleSpec::DD(1, 0)}});
  CHECK(classify_via_table(d13) == RepType::Tame);
  CHECK(classify_via_quiver(d13) == RepType::Tame);

  // Extending A(2,2) by a black at the black end yields exactly A(2,3),
  // which is tame; hanging the extra black off the white end properly
  // contains A(1,2,1) and is wild.
  Superspecies a23 = make("KKDDD", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                    {{1, 2}, BimoduleSpec::KtoD(1)},
                                    {{2, 3}, BimoduleSpec::DD(1, 0)},
                                    {{3, 4}, BimoduleSpec::DD(1, 0)}});
  CHECK(classify_via_table(a23) == RepType::Tame);
  CHECK(classify_via_quiver(a23) == RepType::Tame);
  Superspecies a22x = make("KKDDD", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                     {{1, 2}, BimoduleSpec::KtoD(1)},
                                     {{2, 3}, BimoduleSpec::DD(1, 0)},
                                     {{0, 4}, BimoduleSpec::KtoD(1)}});
  CHECK(classify_via_table(a22x) == RepType::Wild);
  CHECK(classify_via_quiver(a22x) == RepType::Wild);
}

TEST_CASE("disconnected species combine componentwise") {
  Superspecies two = make("KKKK", {{{0, 1}, BimoduleSpec::KK(1, 0)}, {{2, 3}, BimoduleSpec::KK(1, 1)}});
  // First component finite (A2 doubled), second tame (A~1 -> A~3 doubled).
  CHECK(classify_via_quiver(two) == RepType::Tame);
  CHECK(classify_via_table(two) == RepType::Tame);

  // A wild component dominates tame and finite ones.
  Superspecies mixed = make("KKKKKK", {{{0, 1}, BimoduleSpec::KK(1, 0)},
                                       {{2, 3}, BimoduleSpec::KK(1, 1)},
                                       {{4, 5}, BimoduleSpec::KK(3, 0)}});
  CHECK(classify_via_quiver(mixed) == RepType::Wild);
  CHECK(classify_via_table(mixed) == RepType::Wild);

  // No bimodules at all: every component is a point, finite.
  CHECK(classify_via_quiver(make("KD", {})) == RepType::Finite);
  CHECK(classify_via_table(make("KD", {})) == RepType::Finite);
}

TEST_CASE("quiver_diagram_of coincides with the diagram of quiver_of") {
  uint64_t seed = 31;
  auto next = [&] { return seed = seed * 6364136223846793005ULL + 1442695040888963407ULL; };
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); };
  for (int trial = 0; trial < 2000; ++trial) {
    int n = pick(1, 5);
    Superspecies s;
    for (int v = 0; v < n; ++v) s.vertices.push_back(pick(0, 1) ? VertexType::D : VertexType::K);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || pick(0, 2) != 0) continue;
        bool iD = s.is_D(i), jD = s.is_D(j);
        BimoduleSpec spec;
        if (!iD && !jD)
          spec = BimoduleSpec::KK(pick(0, 2), pick(0, 2));
        else if (!iD && jD)
          spec = BimoduleSpec::KtoD(pick(0, 2));
        else if (iD && !jD)
          spec = BimoduleSpec::DtoK(pick(0, 2));
        else
          spec = BimoduleSpec::DD(pick(0, 2), pick(0, 2));
        if (!spec.is_zero()) s.bimodules[{i, j}] = spec;
      }
    Diagram fast = quiver_diagram_of(s);
    Diagram slow = underlying_diagram(quiver_of(s));
    CHECK(fast.n == slow.n);
    CHECK(fast.edges == slow.edges);
  }
}

TEST_CASE("route agreement on random species with up to 6 vertices") {
  // The exhaustive 4-vertex agreement lives in the acceptance suite; this
  // samples larger species.
  uint64_t seed = 99;
  auto next = [&] { return seed = seed * 6364136223846793005ULL + 1442695040888963407ULL; };
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); };
  for (int trial = 0; trial < 20000; ++trial) {
    int n = pick(2, 6);
    Superspecies s;
    for (int v = 0; v < n; ++v) s.vertices.push_back(pick(0, 1) ? VertexType::D : VertexType::K);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (pick(0, 3) != 0) continue;  // sparse
        bool iD = s.is_D(i), jD = s.is_D(j);
        BimoduleSpec spec;
        if (!iD && !jD)
          spec = BimoduleSpec::KK(pick(0, 2), pick(0, 2));
        else if (!iD && jD)
          spec = BimoduleSpec::KtoD(pick(0, 2));
        else if (iD && !jD)
          spec = BimoduleSpec::DtoK(pick(0, 2));
        else
          spec = BimoduleSpec::DD(pick(0, 2), pick(0, 2));
        if (!spec.is_zero()) s.bimodules[{i, j}] = spec;
      }
    RepType a = classify_via_quiver(s);
    RepType b = classify_via_table(s);
    if (a != b) {
      INFO("disagreement at trial " << trial);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("predicted indecomposable counts") {
  Superspecies ktod = make("KD", {{{0, 1}, BimoduleSpec::KtoD(1)}});
  CHECK(predicted_indec_count(ktod) == 6);  // Q_S = A3
  CHECK(predicted_indec_count(make("K", {})) == 2);
  CHECK(predicted_indec_count(make("D", {})) == 1);
  Superspecies tame = make("KK", {{{0, 1}, BimoduleSpec::KK(1, 1)}});
  CHECK_THROWS_AS(predicted_indec_count(tame), validation_error);
}

TEST_CASE("Q_S shapes of the two-color families hold for n up to 6") {
  using F = DiagramClass::Family;
  auto shape = [&](const Superquiver& q) {
    Superspecies s = species_from(q);
    auto cls = classify_diagram(underlying_diagram(quiver_of(s)));
    REQUIRE(cls.size() == 1);
    return cls[0];
  };
  for (int n = 1; n <= 6; ++n) {
    // D_3 = A_3: the rank-3 member of the D series is recognized as A.
    DiagramClass dn2 = n == 1 ? DiagramClass{F::A, 3} : DiagramClass{F::D, n + 2};
    auto an1 = superrep::detail::family_template(FamilyMatch::Family::An1, n);
    CHECK(shape(*an1) == DiagramClass{F::A, 2 * n + 1});
    auto a1n = superrep::detail::family_template(FamilyMatch::Family::A1n, n);
    CHECK(shape(*a1n) == dn2);
    auto b1n = superrep::detail::family_template(FamilyMatch::Family::B1n, n);
    CHECK(shape(*b1n) == dn2);
    auto cn1 = superrep::detail::family_template(FamilyMatch::Family::Cn1, n);
    CHECK(shape(*cn1) == DiagramClass{F::A, 2 * n + 1});
    auto a1n1 = superrep::detail::family_template(FamilyMatch::Family::A1n1, n);
    CHECK(shape(*a1n1) == DiagramClass{F::Atilde, 2 * n + 1});
    auto ap = superrep::detail::family_template(FamilyMatch::Family::Ap1n1, n);
    CHECK(shape(*ap) == DiagramClass{F::Dtilde, n + 3});
  }
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::A22, 0)) == DiagramClass{F::E, 6});
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::F22, 0)) == DiagramClass{F::E, 6});
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::A32, 0)) == DiagramClass{F::Etilde, 7});
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::A23, 0)) == DiagramClass{F::Etilde, 6});
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::F32, 0)) == DiagramClass{F::Etilde, 7});
  CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::F23, 0)) == DiagramClass{F::Etilde, 6});
  // B/C/D tame families; ranks frozen from the computed classification.
  for (int n = 1; n <= 4; ++n) {
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::B1n1, n)) == DiagramClass{F::Dtilde, n + 3});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::Bp1n1, n)) == DiagramClass{F::Dtilde, n + 3});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::C1n1, n)) == DiagramClass{F::Atilde, 2 * n + 1});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::Cp1n1, n)) == DiagramClass{F::Atilde, 2 * n + 1});
  }
  for (int n = 3; n <= 5; ++n) {
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::Dn1, n)) == DiagramClass{F::Dtilde, 2 * n});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::Dpn1, n)) == DiagramClass{F::Dtilde, 2 * n});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::D1n, n)) == DiagramClass{F::Dtilde, n + 1});
    CHECK(shape(*superrep::detail::family_template(FamilyMatch::Family::Dp1n, n)) == DiagramClass{F::Dtilde, n + 1});
  }
}
