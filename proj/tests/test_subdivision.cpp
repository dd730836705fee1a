#include <doctest.h>

#include "oracles.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/subdivision.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

namespace {

long fubini(int n) {
  // Ordered set partitions of an n-set.
  std::vector<long> a(static_cast<std::size_t>(n + 1), 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - k)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("ordered partitions are counted by the Fubini numbers") {
  for (int d = 0; d <= 4; ++d) CHECK(static_cast<long>(ordered_partitions(d).size()) == fubini(d + 1));
}

TEST_CASE("barycentric subdivision") {
  auto k = boundary_simplex(3);
  auto rec = barycentric(k);
  CHECK(rec.result.facet_count() == 24);
  CHECK(rec.result.face_counts() == oracle::face_counts(rec.result.facets()));
  CHECK(oracle::balanced(rec.result.facets()));
  CHECK(euler_characteristic(rec.result) == 2);
  for (int v : k.vertices()) CHECK(rec.result.contains_face({v}));
  auto p = barycentric(as_pseudo(starred_triangle()));
  CHECK(projectivity_group(as_pseudo(p.result)).group.is_trivial());
}

TEST_CASE("stellar subdivision") {
  auto k = boundary_simplex(3);
  auto s = stellar(k, 0);
  CHECK(s.facet_count() == 6);
  CHECK(euler_characteristic(s) == 2);
  CHECK_THROWS_WITH_AS(stellar(k, 9), doctest::Contains("NotAFacet"), Error);
  CHECK(stellar_all(k).facet_count() == 12);
  CHECK(iterate(k, SubdivisionKind::Stellar, 2).facet_count() == 36);
}

TEST_CASE("anti-prismatic subdivision") {
  auto k = boundary_simplex(3);
  auto rec = antiprismatic(k);
  CHECK(rec.result.facet_count() == 4 * 13);
  CHECK(euler_characteristic(rec.result) == 2);
  for (int v : k.vertices()) CHECK(rec.result.contains_face({v}));
  auto crumple = crumpling_map(rec);
  for (const auto& f : rec.result.facets()) {
    std::set<int> image;
    for (int v : f) image.insert(crumple.at(v));
    CHECK(k.contains_face({image.begin(), image.end()}));
    CHECK(image.size() == f.size());
  }
}

TEST_CASE("anti-prismatic subdivision simplicializes pseudo-complexes") {
  PseudoComplex p(2, 2, {Gluing{0, 1, {0, 1}, {0, 1}}, Gluing{0, 1, {1, 2}, {1, 2}}, Gluing{0, 1, {0, 2}, {0, 2}}});
  auto a = antiprismatic_complex(p);
  CHECK(is_simplicial(a.complex).simplicial);
  CHECK(euler_characteristic(a.complex) == euler_characteristic(p));
  auto unfolded = complete_unfolding(as_pseudo(nonsimplicial_unfolding_example())).total;
  CHECK(is_simplicial(antiprismatic_complex(unfolded).complex).simplicial);
}

TEST_CASE("anti-prismatic subdivision keeps the group") {
  for (const char* name : {"boundary-simplex-3", "starred-triangle", "torus-z3", "cycle-5"}) {
    CAPTURE(name);
    auto p = gallery(name).pseudo;
    auto a = antiprismatic_complex(p);
    auto pa = projectivity_group(a.complex, 0).group;
    auto pp = projectivity_group(p, a.facet_origin[0]).group;
    CHECK(pa.order() == pp.order());
    CHECK(pa.orbits() == pp.orbits());
    auto h = induced_homomorphism_check(a.complex, p, crumpling_map(a), 0);
    CHECK(h.ok);
    CHECK(h.injective);
    CHECK(h.surjective);
  }
}

TEST_CASE("subdivided maps commute with crumpling") {
  auto p = as_pseudo(starred_triangle());
  auto u = complete_unfolding(p);
  auto ap = antiprismatic_complex(p);
  auto au = antiprismatic_complex(u.total);
  auto f = subdivided_map(au, ap, u.projection);
  validate_map(au.complex, ap.complex, f);
  auto upstairs = complete_unfolding(ap.complex);
  CHECK(isomorphic(upstairs.total, au.complex, upstairs.projection, f).has_value());
}
