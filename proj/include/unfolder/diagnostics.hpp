#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unfolder/complex.hpp"
#include "unfolder/projectivity.hpp"

namespace unfolder {

bool is_strongly_connected(const PseudoComplex& p);
bool is_strongly_connected(const AbstractComplex& k);

struct LocalConnectivity {
  bool connected = true;
  /// Lowest face class of codimension >= 2 whose star is not strongly connected.
  int witness = -1;
};

LocalConnectivity is_locally_strongly_connected(const PseudoComplex& p);

/// Colors vertex classes by propagating local labels of `base` across the dual
/// graph (every other component starts from its lowest facet). Empty when
/// some vertex class receives two colors.
std::optional<std::vector<int>> balanced_coloring(const PseudoComplex& p, int base = 0);

/// Whether the link graph of a codimension-2 face class is non-bipartite.
/// Parallel edges of the link form 2-cycles and do not make a face odd.
bool is_odd_face(const PseudoComplex& p, int face_class);

struct OddSubcomplex {
  /// Odd codimension-2 face classes, increasing.
  std::vector<int> odd_faces;
  /// Vertex ids are vertex classes of the input.
  AbstractComplex as_complex;
};

/// Throws NotLocallyStronglyConnected.
OddSubcomplex odd_subcomplex(const PseudoComplex& p);

enum class ManifoldKind { Closed, WithBoundary, No };
const char* to_string(ManifoldKind kind);

ManifoldKind pseudo_manifold_kind(const PseudoComplex& p);
/// False for anything that is not a pseudo-manifold.
bool is_orientable(const PseudoComplex& p);
long euler_characteristic(const PseudoComplex& p);
long euler_characteristic(const AbstractComplex& k);

/// Solves, over GF(2), for a set Q of ridges of K whose boundary is the sum
/// of the facets of L. Empty optional when no such Q exists. Throws
/// DimensionMismatch unless L has codimension 2, NotAFace when a facet of L is
/// not a face of K.
std::optional<std::vector<VertexSet>> mod2_boundary_check(const AbstractComplex& k, const AbstractComplex& l);

struct Niceness {
  bool nice = false;
  /// Dimension above 3: only local strong connectivity was checked.
  bool asserted = false;
  int witness = -1;
  std::string reason;
};

/// Dimension <= 2: locally strongly connected. Dimension 3: additionally every
/// vertex link is a 2-sphere or a disk by connectivity, pseudo-manifold type
/// and Euler characteristic.
Niceness check_niceness(const PseudoComplex& p);

struct IsoWitness {
  std::vector<int> facet_map;
  std::vector<Permutation> local;
  /// Face class map, vertex classes first.
  std::vector<int> class_map;
  /// Vertex class map, the dimension-0 part of class_map.
  std::vector<int> vertex_map;
};

/// Exact backtracking search for an isomorphism of face structures.
std::optional<IsoWitness> isomorphic(const PseudoComplex& p, const PseudoComplex& q);
/// As above, additionally commuting with the two maps to a common base.
std::optional<IsoWitness> isomorphic(const PseudoComplex& p, const PseudoComplex& q, const SimplicialMap& proj_p,
                                     const SimplicialMap& proj_q);
std::optional<IsoWitness> isomorphic(const AbstractComplex& k, const AbstractComplex& l);

/// Whether `proj` is bijective on facets and on face classes.
bool projects_isomorphically(const PseudoComplex& total, const PseudoComplex& base, const SimplicialMap& proj);

}  // namespace unfolder
