#include <doctest.h>

#include "oracles.hpp"
#include "unfolder/complex.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"

using namespace unfolder;

TEST_CASE("abstract complex normalizes and validates facets") {
  AbstractComplex k(2, {{2, 1, 0}, {0, 1, 2}, {1, 2, 3}});
  CHECK(k.facet_count() == 2);
  CHECK(k.facets()[0] == VertexSet{0, 1, 2});
  CHECK(k.face_counts() == std::vector<long>{4, 5, 2});
  CHECK_THROWS_WITH_AS(AbstractComplex(2, {{0, 1, 2}, {0, 1}}), doctest::Contains("MixedDimension"), Error);
  CHECK_THROWS_WITH_AS(AbstractComplex(2, {{0, 0, 1}}), doctest::Contains("DegenerateFacet"), Error);
}

TEST_CASE("link of a face") {
  auto k = boundary_simplex(3);
  auto l = link(k, {0});
  CHECK(l.dim() == 1);
  CHECK(l.facets() == std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(link(k, {0, 1, 2}).dim() == -1);
  CHECK_THROWS_AS(link(k, {0, 7}), Error);
}

TEST_CASE("as_pseudo face classes agree with the faces of K") {
  for (const char* name : {"boundary-simplex-3", "starred-triangle", "hexagon-cone", "figure3", "torus-z3",
                           "nonsimplicial", "surface:1"}) {
    auto e = gallery(name);
    CAPTURE(name);
    auto p = as_pseudo(*e.complex);
    CHECK(p.faces().counts() == oracle::face_counts(e.complex->facets()));
    CHECK(is_simplicial(p).simplicial);
    auto back = to_abstract(p);
    CHECK(back.face_counts() == e.complex->face_counts());
    CHECK(isomorphic(back, *e.complex).has_value());
    CHECK_FALSE(p.dual_graph().has_loops());
  }
}

TEST_CASE("figure3 needs a vertex gluing beyond ridges") {
  auto k = figure3_complex();
  auto ridges = ridge_glued(2, k.facets());
  CHECK(ridges.faces().count(0) == 8);
  CHECK(as_pseudo(k).faces().count(0) == 7);
}

TEST_CASE("self-identification is rejected") {
  CHECK_THROWS_WITH_AS(PseudoComplex(2, 1, {Gluing{0, 0, {0}, {1}}}), doctest::Contains("SelfIdentification"), Error);
  CHECK_THROWS_WITH_AS(PseudoComplex(2, 2, {Gluing{0, 1, {0, 1}, {0, 1}}, Gluing{0, 1, {1, 2}, {0, 1}}}),
                       doctest::Contains("SelfIdentification"), Error);
  CHECK_NOTHROW(PseudoComplex(2, 2, {Gluing{0, 1, {0, 1}, {0, 1}}, Gluing{0, 1, {2}, {2}}}));
}

TEST_CASE("two triangles glued along their whole boundary") {
  PseudoComplex p(2, 2, {Gluing{0, 1, {0, 1}, {0, 1}}, Gluing{0, 1, {1, 2}, {1, 2}}, Gluing{0, 1, {0, 2}, {0, 2}}});
  CHECK(p.faces().counts() == std::vector<long>{3, 3, 2});
  CHECK(is_simplicial(p).simplicial == false);
  CHECK_THROWS_AS(to_abstract(p), Error);
  auto g = p.dual_graph();
  CHECK(g.edges.size() == 3);
  CHECK(g.connected());
}

TEST_CASE("star and link of a pseudo-complex face") {
  auto p = as_pseudo(boundary_simplex(3));
  int v = p.faces().vertex_class(0, 0);
  auto s = star(p, v);
  CHECK(s.complex.facet_count() == 3);
  auto l = link(p, v);
  CHECK(l.dim() == 1);
  CHECK(l.facet_count() == 3);
  CHECK(l.faces().count(0) == 3);
}
