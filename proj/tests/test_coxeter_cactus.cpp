#include <doctest.h>

#include <set>

#include "ajcactus/coxeter_cactus.hpp"
#include "ajcactus/presentations.hpp"

using namespace ajcactus;

TEST_CASE("diagram construction and adjacency") {
  const CoxeterDiagram path(DiagramShape::kPath, 4);
  CHECK(path.adjacent(1, 2));
  CHECK_FALSE(path.adjacent(1, 4));
  const CoxeterDiagram cycle(DiagramShape::kCycle, 4);
  CHECK(cycle.adjacent(1, 4));
  CHECK_FALSE(cycle.adjacent(1, 3));
  CHECK_THROWS_AS(CoxeterDiagram(DiagramShape::kCycle, 2), std::invalid_argument);
}

TEST_CASE("finite irreducible parabolics are the arcs") {
  CHECK(enumerate_irr_finite(CoxeterDiagram(DiagramShape::kCycle, 3)).size() == 6);
  CHECK(enumerate_irr_finite(CoxeterDiagram(DiagramShape::kPath, 3)).size() == 6);
  for (int n = 3; n <= 6; ++n)
    CHECK(enumerate_irr_finite(CoxeterDiagram(DiagramShape::kCycle, n)).size() ==
          static_cast<std::size_t>(n) * (n - 1));
  // wrapping arcs exist on cycles
  const CoxeterDiagram cycle(DiagramShape::kCycle, 4);
  CHECK(arc_vertices(cycle, Arc{3, 3}) == std::vector<int>{3, 4, 1});
  CHECK_THROWS_AS(arc_vertices(cycle, Arc{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(arc_vertices(CoxeterDiagram(DiagramShape::kPath, 4), Arc{3, 3}), std::invalid_argument);
}

TEST_CASE("longest-element action mirrors components") {
  const CoxeterDiagram path(DiagramShape::kPath, 3);
  CHECK(omega_action(path, {1, 2, 3}, {1}) == std::vector<int>{3});
  CHECK(omega_action(path, {1, 2, 3}, {2}) == std::vector<int>{2});
  CHECK(omega_action(path, {1, 2, 3}, {1, 2, 3}) == std::vector<int>{1, 2, 3});

  // two components, as in the diagram-action picture: {2,3,4} and {6,7}
  const CoxeterDiagram long_path(DiagramShape::kPath, 10);
  const std::vector<int> j = {2, 3, 4, 6, 7};
  CHECK(omega_action(long_path, j, {2}) == std::vector<int>{4});
  CHECK(omega_action(long_path, j, {3}) == std::vector<int>{3});
  CHECK(omega_action(long_path, j, {6}) == std::vector<int>{7});
  CHECK(omega_action(long_path, j, {2, 6}) == std::vector<int>{4, 7});
  CHECK(omega_action(long_path, j, j) == j);
  CHECK(omega_action(long_path, j, {1, 9}) == std::vector<int>{1, 9});  // disjoint: fixed
  CHECK_THROWS_AS(omega_action(long_path, j, {2, 9}), std::invalid_argument);

  // wrapping component on a cycle
  const CoxeterDiagram cycle(DiagramShape::kCycle, 5);
  CHECK(omega_action(cycle, {4, 5, 1}, {4}) == std::vector<int>{1});
  CHECK(omega_action(cycle, {4, 5, 1}, {5}) == std::vector<int>{5});
  CHECK_THROWS_AS(omega_action(cycle, {1, 2, 3, 4, 5}, {1}), std::invalid_argument);
}

TEST_CASE("omega action is an involution and preserves arc sizes") {
  const CoxeterDiagram cycle(DiagramShape::kCycle, 6);
  for (const Arc& j : enumerate_irr_finite(cycle)) {
    const std::vector<int> jv = arc_vertices(cycle, j);
    for (const Arc& i : enumerate_irr_finite(cycle)) {
      const std::vector<int> iv = arc_vertices(cycle, i);
      std::set<int> js(jv.begin(), jv.end());
      bool inside = true;
      for (int v : iv) inside = inside && js.count(v);
      if (!inside) continue;
      std::vector<int> sorted = iv;
      std::sort(sorted.begin(), sorted.end());
      const std::vector<int> image = omega_action(cycle, jv, sorted);
      CHECK(image.size() == iv.size());
      CHECK(omega_action(cycle, jv, image) == sorted);
    }
  }
}

TEST_CASE("product condition") {
  const CoxeterDiagram cycle(DiagramShape::kCycle, 4);
  CHECK(product_condition(cycle, Arc{1, 1}, Arc{3, 1}));
  CHECK_FALSE(product_condition(cycle, Arc{1, 1}, Arc{2, 1}));
  CHECK_FALSE(product_condition(cycle, Arc{1, 2}, Arc{1, 2}));
  CHECK_FALSE(product_condition(cycle, Arc{4, 2}, Arc{2, 1}));
}

TEST_CASE("generalized cactus presentation") {
  const CWPresentation a2 = presentation(CoxeterDiagram(DiagramShape::kPath, 2));
  CHECK(a2.generators.size() == 3);
  // quasi-commutation: sigma_{rho_1} sigma_{rho_1 rho_2} = sigma_{rho_1 rho_2} sigma_{rho_2}
  int g1 = -1, g2 = -1, g12 = -1;
  for (std::size_t t = 0; t < a2.generators.size(); ++t) {
    const Arc arc = a2.generators[t];
    if (arc.length == 2) g12 = static_cast<int>(t);
    else if (arc.start == 1) g1 = static_cast<int>(t);
    else g2 = static_cast<int>(t);
  }
  bool found = false;
  for (const auto& [lhs, rhs] : a2.relations)
    found = found || (lhs == std::vector<int>{g1, g12} && rhs == std::vector<int>{g12, g2});
  CHECK(found);
  for (const auto& [lhs, rhs] : a2.relations) CHECK(lhs.size() == rhs.size() + (rhs.empty() ? 2 : 0));

  const CWPresentation c3 = presentation(CoxeterDiagram(DiagramShape::kCycle, 3));
  CHECK(c3.generators.size() == 6);
  CHECK(c3.relations.size() == defining_relations(3).size());
}

TEST_CASE("mechanical isomorphism check") {
  for (int n = 3; n <= 4; ++n) {
    const IsoCertificate cert = iso_check(n);
    CHECK(cert.ok);
    CHECK(cert.mismatch.empty());
    CHECK(cert.table.size() == static_cast<std::size_t>(n) * (n - 1));
    for (const auto& [arc, letter] : cert.table) {
      if (arc.length == 1) {
        CHECK(letter.i == arc.start);
        CHECK(letter.j == mod_strand(arc.start + 1, n));
      }
    }
  }
  CHECK_THROWS_AS(iso_check(2), std::invalid_argument);
}

TEST_CASE("classic cactus presentation counts match the path diagram") {
  // J_n is the generalized cactus group over the A_{n-1} path
  for (int n = 3; n <= 5; ++n) {
    const CWPresentation path = presentation(CoxeterDiagram(DiagramShape::kPath, n - 1));
    const TextPresentation jn = presentation_jn(n);
    CHECK(path.generators.size() == jn.names.size());
    CHECK(path.relations.size() == jn.relations.size());
  }
}
