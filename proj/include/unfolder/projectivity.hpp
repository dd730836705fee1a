#pragma once

#include <map>
#include <string>
#include <vector>

#include "unfolder/complex.hpp"
#include "unfolder/permutation.hpp"

namespace unfolder {

/// Walk through the dual graph: starting facet and the ridge gluings crossed.
struct FacetPath {
  int start = 0;
  std::vector<int> gluings;
};

/// Facets visited by `path`, starting facet included; throws InvalidPath.
std::vector<int> path_facets(const PseudoComplex& p, const FacetPath& path);
int path_end(const PseudoComplex& p, const FacetPath& path);
FacetPath reversed(const PseudoComplex& p, const FacetPath& path);
FacetPath concatenate(const PseudoComplex& p, const FacetPath& first, const FacetPath& second);
/// Path through consecutive facets. Throws InvalidPath when two consecutive
/// facets are not glued along a ridge or are glued along more than one.
FacetPath path_through(const PseudoComplex& p, const std::vector<int>& facets);

/// Maps locals of `from_facet` to locals of the facet across ridge gluing `id`.
Permutation perspectivity(const PseudoComplex& p, int id, int from_facet);
/// Maps locals of the start facet to locals of the end facet.
Permutation projectivity(const PseudoComplex& p, const FacetPath& path);

struct ProjectivityGroup {
  int base = 0;
  PermutationGroup group;
  /// BFS spanning tree: gluing used to reach each facet, -1 at the base.
  std::vector<int> parent_gluing;
  std::vector<int> bfs_order;
  /// Projectivity along the tree path from the base to each facet.
  std::vector<Permutation> transport;
  /// Ridge gluings outside the tree, each contributing one generator.
  std::vector<int> non_tree_gluings;

  FacetPath tree_path(const PseudoComplex& p, int facet) const;
  /// Base -> facet_a (tree) -> facet_b (across `id`) -> base (tree).
  FacetPath generator_loop(const PseudoComplex& p, int id) const;
};

/// Throws NotStronglyConnected.
ProjectivityGroup projectivity_group(const PseudoComplex& p, int base = 0);

/// Subgroup generated by one projectivity around each odd codimension-2 face.
/// Throws NotLocallyStronglyConnected.
PermutationGroup odd_generated_subgroup(const PseudoComplex& p, int base = 0);

/// Projectivities along loops inside the star of `face_class`, moved to the
/// base facet along the tree path of the lowest star facet.
PermutationGroup star_subgroup(const PseudoComplex& p, const ProjectivityGroup& pg, int face_class);

/// Simplicial map given facet-wise: facet f goes to facet_map[f] with local
/// label i going to local[f][i].
struct SimplicialMap {
  std::vector<int> facet_map;
  std::vector<Permutation> local;

  static SimplicialMap identity(const PseudoComplex& p);
};

/// Throws DegenerateMap unless the map respects face classes.
void validate_map(const PseudoComplex& source, const PseudoComplex& target, const SimplicialMap& f);

/// Facet-wise form of a vertex map between complexes, relative to their
/// `as_pseudo` embeddings. Throws DegenerateMap when a facet is not sent
/// onto a facet.
SimplicialMap from_vertex_map(const AbstractComplex& k, const AbstractComplex& l, const std::map<int, int>& f);

struct InducedHomomorphism {
  bool ok = false;
  std::size_t source_order = 0;
  std::size_t image_order = 0;
  std::size_t target_order = 0;
  bool injective = false;
  bool surjective = false;
  std::string failure;
};

/// Pushes each generating loop of Pi(source, base) through `f`, compares its
/// projectivity with the conjugate by the base local map, and checks that the
/// resulting assignment is an injective homomorphism into Pi(target, f(base)).
InducedHomomorphism induced_homomorphism_check(const PseudoComplex& source, const PseudoComplex& target,
                                               const SimplicialMap& f, int base = 0);
InducedHomomorphism induced_homomorphism_check(const AbstractComplex& k, const AbstractComplex& l,
                                               const std::map<int, int>& f, int base = 0);

}  // namespace unfolder
