#include <doctest.h>

#include "oracles.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

namespace {

std::set<std::vector<int>> odd_vertex_sets(const AbstractComplex& k) {
  auto p = as_pseudo(k);
  std::set<std::vector<int>> out;
  for (int w : odd_subcomplex(p).odd_faces) {
    const auto& m = p.faces().members(w).front();
    std::vector<int> vs;
    for (int l : locals_of(m.mask)) vs.push_back(k.facets()[static_cast<std::size_t>(m.facet)][static_cast<std::size_t>(l)]);
    out.insert(vs);
  }
  return out;
}

}  // namespace

TEST_CASE("odd faces match the exhaustive 2-coloring oracle") {
  for (const char* name : {"boundary-simplex-3", "starred-triangle", "hexagon-cone", "torus-z3", "surface:0",
                           "surface:1", "surface:2", "knot-nbhd:3:orientable"}) {
    CAPTURE(name);
    auto e = gallery(name);
    CHECK(odd_vertex_sets(*e.complex) == oracle::odd_faces(e.complex->facets()));
  }
}

TEST_CASE("balanced coloring matches the exhaustive oracle") {
  for (const char* name : {"boundary-simplex-2", "boundary-simplex-3", "starred-triangle", "hexagon-cone",
                           "figure3", "cycle-4", "cycle-5", "surface:0"}) {
    CAPTURE(name);
    auto e = gallery(name);
    CHECK(balanced_coloring(e.pseudo).has_value() == oracle::balanced(e.complex->facets()));
  }
}

TEST_CASE("local strong connectivity") {
  CHECK(is_locally_strongly_connected(as_pseudo(boundary_simplex(3))).connected);
  auto f3 = is_locally_strongly_connected(as_pseudo(figure3_complex()));
  CHECK_FALSE(f3.connected);
  CHECK(f3.witness >= 0);
  CHECK_THROWS_WITH_AS(odd_subcomplex(as_pseudo(figure3_complex())), doctest::Contains("NotLocallyStronglyConnected"),
                       Error);
}

TEST_CASE("pseudo-manifold type, orientability and Euler characteristic") {
  auto sphere = as_pseudo(boundary_simplex(3));
  CHECK(pseudo_manifold_kind(sphere) == ManifoldKind::Closed);
  CHECK(is_orientable(sphere));
  CHECK(euler_characteristic(sphere) == 2);
  auto disk = as_pseudo(hexagon_cone());
  CHECK(pseudo_manifold_kind(disk) == ManifoldKind::WithBoundary);
  CHECK(euler_characteristic(disk) == 1);
  auto torus = as_pseudo(torus_z3());
  CHECK(euler_characteristic(torus) == 0);
  CHECK(is_orientable(torus));
  AbstractComplex book(2, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK(pseudo_manifold_kind(as_pseudo(book)) == ManifoldKind::No);
  CHECK_FALSE(is_orientable(as_pseudo(book)));
  // Klein variant of the knot neighborhood is a non-orientable solid.
  CHECK(is_orientable(knot_neighborhood(3, true).pseudo));
  CHECK_FALSE(is_orientable(knot_neighborhood(3, false).pseudo));
}

TEST_CASE("Euler characteristic agrees with the face-count oracle") {
  for (const auto& name : standard_gallery()) {
    auto e = gallery(name);
    if (!e.complex) continue;
    CAPTURE(name);
    CHECK(euler_characteristic(*e.complex) == oracle::euler(oracle::face_counts(e.complex->facets())));
  }
}

TEST_CASE("mod 2 boundary of the odd subcomplex") {
  auto k = boundary_simplex(3);
  AbstractComplex odd(0, {{0}, {1}, {2}, {3}});
  auto q = mod2_boundary_check(k, odd);
  REQUIRE(q.has_value());
  std::map<int, int> boundary;
  for (const auto& e : *q)
    for (int v : e) boundary[v] ^= 1;
  for (int v = 0; v < 4; ++v) CHECK(boundary[v] == 1);
  AbstractComplex one(0, {{0}});
  CHECK_FALSE(mod2_boundary_check(k, one).has_value());
  CHECK_THROWS_AS(mod2_boundary_check(k, AbstractComplex(1, {{0, 1}})), Error);
}

TEST_CASE("isomorphism search") {
  CHECK(isomorphic(boundary_simplex(3), boundary_simplex(3)).has_value());
  CHECK_FALSE(isomorphic(as_pseudo(hexagon_cone()), as_pseudo(starred_triangle())).has_value());
  AbstractComplex shifted(2, {{5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
  auto w = isomorphic(boundary_simplex(3), shifted);
  REQUIRE(w.has_value());
  CHECK(w->vertex_map.size() == 4);
}

TEST_CASE("niceness") {
  CHECK(check_niceness(as_pseudo(boundary_simplex(3))).nice);
  CHECK(check_niceness(knot_neighborhood(3, true).pseudo).nice);
  CHECK_FALSE(check_niceness(as_pseudo(figure3_complex())).nice);
  auto high = check_niceness(as_pseudo(boundary_simplex(5)));
  CHECK(high.nice);
  CHECK(high.asserted);
}
