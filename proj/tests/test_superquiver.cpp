#include <catch2/catch_amalgamated.hpp>

#include "superrep/superquiver.hpp"

using namespace superrep;

namespace {

// Compact builder: colors like "wb", arrows as (src, tgt, dotted).
Superquiver sq(const std::string& colors, const std::vector<std::tuple<int, int, bool>>& arrows) {
  Superquiver q;
  q.n = static_cast<int>(colors.size());
  for (char c : colors) q.black.push_back(c == 'b');
  int k = 0;
  for (auto [s, t, d] : arrows) q.arrows.push_back({"a" + std::to_string(++k), s, t, d});
  return q;
}

}  // namespace

TEST_CASE("realizability") {
  CHECK_FALSE(is_realizable(sq("bw", {{0, 1, false}})));          // single solid black->white
  CHECK(is_realizable(sq("bw", {{0, 1, false}, {0, 1, true}})));  // paired solid+dotted
  CHECK_FALSE(is_realizable(sq("wb", {{0, 1, true}})));           // dotted into black
  CHECK(is_realizable(sq("wb", {{0, 1, false}})));
  CHECK(is_realizable(sq("ww", {{0, 1, true}})));
  CHECK(is_realizable(sq("bb", {{0, 1, false}})));
  CHECK_FALSE(is_realizable(sq("bb", {{0, 1, true}})));
}

TEST_CASE("underlying quiver forgets colors and styles") {
  Superquiver b11 = sq("bw", {{0, 1, false}, {0, 1, true}});
  Quiver u = underlying_quiver(b11);
  CHECK(u.n == 2);
  CHECK(u.arrows.size() == 2);
  CHECK(u.arrows[0].source == 0);

  Superquiver solid = sq("ww", {{0, 1, false}});
  CHECK(underlying_quiver(solid).arrows.size() == 1);

  Superquiver dotted = sq("ww", {{0, 1, true}});
  Quiver ud = underlying_quiver(dotted);
  CHECK(ud.arrows.size() == 1);
  auto d = underlying_diagram(ud);
  CHECK(classify_diagram(d)[0] == DiagramClass{DiagramClass::Family::A, 2});
}

TEST_CASE("superquiver isomorphism respects colors, styles and orientation") {
  Superquiver a = sq("wb", {{0, 1, false}});
  Superquiver b = sq("bw", {{1, 0, false}});
  CHECK(superquiver_isomorphic(a, b));
  CHECK_FALSE(superquiver_isomorphic(a, sq("wb", {{1, 0, false}})));  // reversed arrow
  CHECK_FALSE(superquiver_isomorphic(a, sq("ww", {{0, 1, false}})));  // recolored
  CHECK_FALSE(superquiver_isomorphic(sq("ww", {{0, 1, false}}), sq("ww", {{0, 1, true}})));  // restyled
  CHECK(superquiver_isomorphic(sq("wwb", {{0, 1, false}, {1, 2, false}}),
                               sq("bww", {{2, 1, false}, {1, 0, false}})));
}

TEST_CASE("superquiver dot export marks colors and styles") {
  Superquiver q = sq("wb", {{0, 1, true}});
  std::string dot = dot_export(q);
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  Superquiver empty;
  CHECK(dot_export(empty) == "digraph { }\n");
}
