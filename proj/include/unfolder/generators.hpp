#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unfolder/complex.hpp"
#include "unfolder/projectivity.hpp"

namespace unfolder {

/// Boundary of the n-simplex on vertices 0..n (n >= 1).
AbstractComplex boundary_simplex(int n);
/// A single d-simplex on vertices 0..d.
AbstractComplex simplex(int d);
/// Cone from vertex 0 over the boundary of the triangle 1 2 3.
AbstractComplex starred_triangle();
/// Cone from vertex 0 over the hexagon 1..6.
AbstractComplex hexagon_cone();
/// Cycle graph on n >= 3 vertices.
AbstractComplex cycle_graph(int n);
/// Strip of six triangles whose two ends share the vertex "a": strongly
/// connected, but the star of "a" falls into two pieces.
AbstractComplex figure3_complex();
/// Torus triangulation whose group of projectivities is cyclic of order 3,
/// found by searching small torus triangulations.
AbstractComplex torus_z3();
/// Eight tetrahedra whose complete unfolding doubles the edge {v, w}.
AbstractComplex nonsimplicial_unfolding_example();

struct KnotNeighborhood {
  int blocks = 0;
  bool orientable = true;
  /// Ridge-glued pseudo-complex, valid for every n >= 2; locals in vertex id order.
  PseudoComplex pseudo;
  /// Same tetrahedra as an abstract complex (present for n >= 3).
  std::optional<AbstractComplex> complex;
  /// Tetrahedra as vertex lists, in the facet order of `pseudo`.
  std::vector<VertexSet> tetrahedra;
  /// v_0..v_{n-1}.
  std::vector<int> core;
  std::vector<VertexSet> core_edges;
  /// {x0, y0, v0, v1} with vertex ids 0, 1, 2, 3, so local labels match the
  /// printed labeling x0->0, y0->1, v0->2, v1->3.
  int base_facet = 0;
  /// Loop once along the core through the x-y prisms.
  FacetPath longitude;
  /// Loop around the core edge v0 v1.
  FacetPath meridian;
  std::vector<std::string> labels;
};

/// n blocks of three prisms of five tetrahedra around the core cycle
/// v_0..v_{n-1}; the Klein variant closes up with x_n = y_0 and y_n = x_0.
KnotNeighborhood knot_neighborhood(int n, bool orientable);

/// Sphere with 2(g+1) facets: the boundary tetrahedron followed by g - 1
/// stellar subdivisions of the lexicographically first facet (g >= 1).
AbstractComplex surface_base(int g);
/// g = 0: bipyramid over a triangle; g >= 1: stellar subdivision of every
/// facet of surface_base(g).
AbstractComplex surface_family(int g);

/// Random strongly connected pure 2-complex: starting from one triangle,
/// repeatedly glue a triangle onto a random edge, its third vertex new or one
/// of at most `max_vertices` existing ones. Deterministic in `seed`.
AbstractComplex random_surface_patch(int facets, int max_vertices, unsigned seed);

/// Known values; absent entries are not asserted.
struct Expected {
  std::optional<std::size_t> group_order;
  std::optional<int> odd_faces;
  std::optional<int> complete_facets;
  std::optional<long> complete_euler;
  std::optional<int> partial_components;
  std::optional<bool> locally_strongly_connected;
};

struct GalleryEntry {
  std::string name;
  PseudoComplex pseudo;
  /// Present when the example is a simplicial complex.
  std::optional<AbstractComplex> complex;
  Expected expected;
};

/// Names: boundary-simplex-n, starred-triangle, hexagon-cone, cycle-n,
/// figure3, torus-z3, nonsimplicial, knot-nbhd:n:orientable|klein, surface:g.
/// Throws BadParameter.
GalleryEntry gallery(const std::string& name);
/// The fixed list of examples exercised by the verification suites.
std::vector<std::string> standard_gallery();

}  // namespace unfolder
