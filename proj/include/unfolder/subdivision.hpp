#pragma once

#include <map>
#include <vector>

#include "unfolder/complex.hpp"
#include "unfolder/projectivity.hpp"

namespace unfolder {

enum class SubdivisionKind { Barycentric, Antiprismatic, Stellar };

/// Where a vertex of a subdivision comes from, in terms of the face classes of
/// the subdivided pseudo-complex (for an AbstractComplex input: of its
/// `as_pseudo` embedding). Barycentric and stellar vertices have no
/// `vertex_class`.
struct VertexOrigin {
  int face_class = -1;
  int vertex_class = -1;
  bool operator==(const VertexOrigin&) const = default;
};

struct SubdivisionRecord {
  SubdivisionKind kind = SubdivisionKind::Barycentric;
  AbstractComplex result;
  std::map<int, VertexOrigin> provenance;
  /// Facet index of `result` -> facet copy it subdivides.
  std::vector<int> facet_origin;
};

/// Vertex ids are face class ids. Local label k of each flag is the face of
/// dimension k, so the result is balanced.
SubdivisionRecord barycentric(const PseudoComplex& p);
/// Original vertices keep their ids; new vertices are numbered above them.
SubdivisionRecord barycentric(const AbstractComplex& k);

/// Cone over the boundary of one facet from a new vertex. Throws NotAFacet.
AbstractComplex stellar(const AbstractComplex& k, int facet);
/// Stellar subdivision of every facet at once.
AbstractComplex stellar_all(const AbstractComplex& k);

/// The anti-prismatic subdivision as facet copies glued along the faces the
/// input identifies. A-facets of copy f are the ordered set partitions
/// (B_0, ..., B_m) of its local labels; local i of an a-facet is the pair
/// (B_0 u ... u B_j, i) with i in B_j.
struct AntiprismaticComplex {
  PseudoComplex complex;
  /// A-facet -> facet copy of the input.
  std::vector<int> facet_origin;
  /// A-facet -> index of its ordered set partition.
  std::vector<int> partition;
  /// Per a-facet and local: (face class, vertex class) of the input.
  std::vector<std::vector<std::pair<int, int>>> pairs;
};

/// Ordered set partitions of {0..d}, each as the block index of every
/// element, in lexicographic order.
std::vector<std::vector<int>> ordered_partitions(int d);

AntiprismaticComplex antiprismatic_complex(const PseudoComplex& p);
/// Vertex ids are pair ids: pairs (w, w) take the id of vertex class w, the
/// others follow in sorted order. Throws NotSimplicial when the glued
/// complex is not simplicial.
SubdivisionRecord antiprismatic(const PseudoComplex& p);
/// Pairs (w, w) keep the vertex id w of K.
SubdivisionRecord antiprismatic(const AbstractComplex& k);

/// (tau, w) -> w, facet-wise: every a-facet maps to its facet copy with the
/// identity on local labels.
SimplicialMap crumpling_map(const AntiprismaticComplex& a);
/// Vertex form for a subdivision of an AbstractComplex.
std::map<int, int> crumpling_map(const SubdivisionRecord& rec);

/// The subdivision a(f) of a simplicial map f: P -> Q between the inputs of
/// two anti-prismatic complexes.
SimplicialMap subdivided_map(const AntiprismaticComplex& source, const AntiprismaticComplex& target,
                             const SimplicialMap& f);

/// n-fold application; stellar subdivides every facet each round.
AbstractComplex iterate(const AbstractComplex& k, SubdivisionKind kind, int n);

}  // namespace unfolder
