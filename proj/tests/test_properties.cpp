#include <doctest.h>

#include "oracles.hpp"
#include "random_complexes.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/document.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

TEST_CASE("random complexes: complex round trips") {
  for (const auto& k : random_2_complexes(200, 1234)) {
    auto p = as_pseudo(k);
    REQUIRE(p.faces().counts() == oracle::face_counts(k.facets()));
    REQUIRE(is_simplicial(p).simplicial);
    REQUIRE(to_abstract(p).face_counts() == k.face_counts());
    auto text = emit(k);
    auto back = std::get<AbstractComplex>(parse_document(text).complex);
    REQUIRE(emit(back) == text);
    REQUIRE(back.face_counts() == k.face_counts());
  }
}

TEST_CASE("random complexes: unfolding invariants") {
  for (const auto& k : random_2_complexes(200, 99)) {
    auto p = as_pseudo(k);
    auto pi = projectivity_group(p).group;
    REQUIRE(pi.order() == oracle::group(k.facets(), 0).size());
    auto u = complete_unfolding(p);
    auto t = partial_unfolding(p);
    REQUIRE(u.total.facet_count() == static_cast<int>(pi.order()) * p.facet_count());
    REQUIRE(t.total.facet_count() == 3 * p.facet_count());
    REQUIRE(u.total.faces().counts() == oracle::complete_face_counts(k.facets(), 0));
    REQUIRE(t.component_count == static_cast<int>(pi.orbits().size()));
    REQUIRE(projectivity_group(u.total).group.is_trivial());
    REQUIRE(is_strongly_connected(u.total));
    bool closed = pseudo_manifold_kind(p) == ManifoldKind::Closed;
    if (closed) REQUIRE(pseudo_manifold_kind(u.total) == ManifoldKind::Closed);
    if (is_orientable(p)) REQUIRE(is_orientable(u.total));
    for (int c = 0; c < t.component_count; ++c) {
      auto comp = extract_component(t, c);
      REQUIRE(is_strongly_connected(comp.complex));
      if (closed) REQUIRE(pseudo_manifold_kind(comp.complex) == ManifoldKind::Closed);
      if (is_orientable(p)) REQUIRE(is_orientable(comp.complex));
    }
    int last = p.facet_count() - 1;
    auto v = complete_unfolding(p, last);
    REQUIRE(isomorphic(u.total, v.total, u.projection, v.projection).has_value());
  }
}
