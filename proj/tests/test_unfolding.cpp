#include <doctest.h>

#include "oracles.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

TEST_CASE("complete unfolding face counts match the walk oracle") {
  for (const auto& name : standard_gallery()) {
    auto e = gallery(name);
    if (!e.complex) continue;
    CAPTURE(name);
    auto u = complete_unfolding(e.pseudo);
    CHECK(u.total.faces().counts() == oracle::complete_face_counts(e.complex->facets(), 0));
    CHECK(u.sheets == projectivity_group(e.pseudo).group.order());
    validate_map(u.total, e.pseudo, u.projection);
  }
}

TEST_CASE("partial unfolding components match the oracle") {
  for (const auto& name : standard_gallery()) {
    auto e = gallery(name);
    if (!e.complex) continue;
    CAPTURE(name);
    auto u = partial_unfolding(e.pseudo);
    std::vector<int> sizes;
    for (int c = 0; c < u.component_count; ++c) sizes.push_back(static_cast<int>(u.facets_of_component(c).size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::partial_component_sizes(e.complex->facets()));
    CHECK(component_count(e.pseudo) == u.component_count);
  }
}

TEST_CASE("boundary of the tetrahedron") {
  auto p = as_pseudo(boundary_simplex(3));
  auto u = complete_unfolding(p);
  CHECK(u.total.facet_count() == 24);
  CHECK(u.total.faces().count(0) == 12);
  CHECK(euler_characteristic(u.total) == 0);
  CHECK(pseudo_manifold_kind(u.total) == ManifoldKind::Closed);
  CHECK(is_orientable(u.total));
  int odd = 0;
  for (const auto& f : branch_locus_counts(u)) {
    if (!f.odd) continue;
    ++odd;
    CHECK(f.points.size() == 3);
    for (const auto& pt : f.points) CHECK(pt.index == 2);
  }
  CHECK(odd == 4);

  auto t = partial_unfolding(p);
  CHECK(t.component_count == 1);
  CHECK(t.total.facet_count() == 12);
  CHECK(t.total.faces().count(0) == 8);
  CHECK(euler_characteristic(t.total) == 2);
}

TEST_CASE("starred triangle unfolds to the hexagon cone") {
  auto p = as_pseudo(starred_triangle());
  auto u = complete_unfolding(p);
  CHECK(isomorphic(u.total, as_pseudo(hexagon_cone())).has_value());
  auto t = partial_unfolding(p);
  REQUIRE(t.component_count == 2);
  auto a = extract_component(t, 0);
  auto b = extract_component(t, 1);
  validate_map(a.complex, p, a.projection);
  CHECK(a.complex.facet_count() + b.complex.facet_count() == 9);
}

TEST_CASE("unfoldings of unfoldings") {
  auto p = as_pseudo(boundary_simplex(3));
  auto u = complete_unfolding(p);
  CHECK(projectivity_group(u.total).group.is_trivial());
  auto uu = complete_unfolding(u.total);
  CHECK(uu.total.facet_count() == u.total.facet_count());
  CHECK(projects_isomorphically(uu.total, u.total, uu.projection));
}

TEST_CASE("composition tower") {
  for (const char* name : {"boundary-simplex-3", "cycle-5", "starred-triangle"}) {
    CAPTURE(name);
    auto p = gallery(name).pseudo;
    auto tower = composition_tower(p);
    REQUIRE(tower.stages.size() == static_cast<std::size_t>(p.dim() + 2));
    for (std::size_t i = 0; i + 1 < tower.stages.size(); ++i)
      validate_map(tower.stages[i + 1], tower.stages[i], tower.maps[i]);
    CHECK(tower.stages.back().facet_count() == tower.complete.total.facet_count());
  }
}

TEST_CASE("nonsimplicial unfolding doubles an edge") {
  auto p = as_pseudo(nonsimplicial_unfolding_example());
  auto u = complete_unfolding(p);
  CHECK(u.total.facet_count() == 8);
  auto w = is_simplicial(u.total);
  CHECK_FALSE(w.simplicial);
  CHECK(u.total.faces().dim_of(w.class_a) == 1);
}

TEST_CASE("branch census needs a nice base") {
  auto u = complete_unfolding(as_pseudo(figure3_complex()));
  CHECK_THROWS_WITH_AS(branch_locus_counts(u), doctest::Contains("BaseNotNice"), Error);
}
