#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unfolder {

using VertexSet = std::vector<int>;
/// Subset of the local labels {0..d} of one facet copy.
using Mask = std::uint32_t;

constexpr int kMaxDim = 10;

int popcount(Mask m);
Mask mask_of(const std::vector<int>& locals);
std::vector<int> locals_of(Mask m);

/// Pure simplicial complex stored by its facets.
class AbstractComplex {
 public:
  AbstractComplex() = default;
  /// Facets are sorted internally and deduplicated. An empty facet list needs
  /// an explicit dimension; `dim == -1` with the single facet {} is the
  /// complex whose only face is the empty one (the link of a facet).
  AbstractComplex(int dim, std::vector<VertexSet> facets);

  /// Infers the dimension from the first facet.
  static AbstractComplex from_facets(std::vector<VertexSet> facets);

  int dim() const { return dim_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  std::vector<int> vertices() const;

  const std::map<int, std::string>& vertex_labels() const { return labels_; }
  void set_vertex_labels(std::map<int, std::string> labels) { labels_ = std::move(labels); }
  /// Display label of `v`; its decimal id when no label is stored.
  std::string label(int v) const;

  /// All faces of dimension `k` (k+1 vertices), sorted.
  std::vector<VertexSet> faces(int k) const;
  /// Face counts f_0..f_d.
  std::vector<long> face_counts() const;
  /// Index of the facet with exactly these vertices, or -1.
  int find_facet(const VertexSet& vertices) const;
  bool contains_face(const VertexSet& vertices) const;

  bool operator==(const AbstractComplex& other) const {
    return dim_ == other.dim_ && facets_ == other.facets_;
  }

 private:
  int dim_ = 0;
  std::vector<VertexSet> facets_;
  std::map<int, std::string> labels_;
};

/// Identification of a face of `facet_a` with a face of `facet_b`:
/// local `a_locals[i]` of facet_a is glued to local `b_locals[i]` of facet_b.
/// A gluing of d labels is a ridge gluing and is an edge of the dual graph;
/// smaller gluings only identify lower faces.
struct Gluing {
  int facet_a = 0;
  int facet_b = 0;
  std::vector<int> a_locals;
  std::vector<int> b_locals;

  int size() const { return static_cast<int>(a_locals.size()); }
  bool involves(int facet) const { return facet == facet_a || facet == facet_b; }
  int other(int facet) const { return facet == facet_a ? facet_b : facet_a; }
  Mask mask_on(int facet) const;

  bool operator==(const Gluing&) const = default;
};

struct FaceRef {
  int facet = 0;
  Mask mask = 0;
  bool operator==(const FaceRef&) const = default;
};

/// Equivalence classes of (facet, local subset) pairs generated by the gluings.
/// Class ids are ordered by dimension, then by first occurrence scanning
/// facets in order and masks in increasing value; vertex classes come first.
class FaceClasses {
 public:
  FaceClasses() = default;
  FaceClasses(int dim, int facet_count, const std::vector<Gluing>& gluings);

  int class_of(int facet, Mask mask) const;
  int vertex_class(int facet, int local) const { return class_of(facet, Mask{1} << local); }
  int class_count() const { return static_cast<int>(dims_.size()); }
  int dim_of(int cls) const { return dims_[static_cast<std::size_t>(cls)]; }
  const std::vector<FaceRef>& members(int cls) const { return members_[static_cast<std::size_t>(cls)]; }
  /// Number of classes of dimension k; index 0..d.
  const std::vector<long>& counts() const { return counts_; }
  long count(int k) const;
  /// First class id of dimension k.
  int first_of_dim(int k) const;
  /// Sorted vertex classes of a face class.
  std::vector<int> vertex_set(int cls) const;
  /// The mask of `cls` inside `facet`, or 0 if the facet does not contain it.
  Mask mask_in(int cls, int facet) const;

 private:
  int dim_ = 0;
  int facet_count_ = 0;
  std::vector<int> node_class_;
  std::vector<int> dims_;
  std::vector<std::vector<FaceRef>> members_;
  std::vector<long> counts_;
  std::vector<int> first_;
};

struct DualGraph {
  int nodes = 0;
  /// (facet_a, facet_b) per edge; edge ids are ridge gluing ids for pseudo-complexes.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_gluing;
  /// Per node: (neighbor, edge id) in increasing edge id.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  bool has_loops() const;
  bool connected() const;
  /// Component id per node, ids in order of lowest node.
  std::vector<int> components(int* count = nullptr) const;
};

/// Facet copies of the standard d-simplex glued along faces.
class PseudoComplex {
 public:
  PseudoComplex() = default;
  PseudoComplex(int dim, int facet_count, std::vector<Gluing> gluings);

  int dim() const { return dim_; }
  int facet_count() const { return facet_count_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  const Gluing& gluing(int id) const { return gluings_[static_cast<std::size_t>(id)]; }
  bool is_ridge_gluing(int id) const { return gluing(id).size() == dim_; }
  /// Ridge gluing ids incident to `facet`, increasing.
  const std::vector<int>& ridge_gluings_of(int facet) const {
    return incident_[static_cast<std::size_t>(facet)];
  }
  /// All gluing ids incident to `facet`, increasing.
  const std::vector<int>& gluings_of(int facet) const { return all_incident_[static_cast<std::size_t>(facet)]; }
  /// Local label of `facet` not in the ridge of gluing `id`.
  int opposite_local(int id, int facet) const;

  const FaceClasses& faces() const { return faces_; }
  DualGraph dual_graph() const;

  /// Optional per-vertex-class display names.
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  void set_vertex_names(std::vector<std::string> names);

 private:
  int dim_ = 0;
  int facet_count_ = 0;
  std::vector<Gluing> gluings_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> all_incident_;
  FaceClasses faces_;
  std::vector<std::string> vertex_names_;
};

/// Pseudo-complex whose facets carry the given vertex lists (locals in list
/// order), with one ridge gluing per pair of facets sharing d vertices and no
/// other identifications.
PseudoComplex ridge_glued(int dim, const std::vector<VertexSet>& facets);

/// Embeds K: facet i of K becomes copy i with locals in sorted vertex order.
/// Beyond the ridge gluings, lower-face gluings are added wherever ridges
/// alone do not identify all occurrences of a face, so face classes biject
/// with the faces of K. Vertex names are the labels of K.
PseudoComplex as_pseudo(const AbstractComplex& k);

struct SimplicialWitness {
  bool simplicial = true;
  /// Two distinct face classes with equal vertex-class sets when not simplicial.
  int class_a = -1;
  int class_b = -1;
};

SimplicialWitness is_simplicial(const PseudoComplex& p);

/// Vertex classes become vertex ids 0..V-1; throws NotSimplicial.
AbstractComplex to_abstract(const PseudoComplex& p);

/// Throws NotAFace when `face` is not contained in a facet.
AbstractComplex link(const AbstractComplex& k, const VertexSet& face);
DualGraph dual_graph(const AbstractComplex& k);

/// Star of a face class: the facet copies containing it, glued by the
/// gluings of P whose glued face contains it.
struct Star {
  PseudoComplex complex;
  /// Star facet -> facet of P.
  std::vector<int> facet_origin;
  /// Star gluing -> gluing of P.
  std::vector<int> gluing_origin;
  /// Mask of the face inside each star facet.
  std::vector<Mask> face_mask;
};

Star star(const PseudoComplex& p, int face_class);
/// Link of a face class of codimension >= 1; facets correspond to star facets.
/// Locals of link facet i are the locals of star facet i outside the face, in
/// increasing order.
PseudoComplex link(const PseudoComplex& p, int face_class);

}  // namespace unfolder
