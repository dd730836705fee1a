#pragma once

#include <vector>

#include "unfolder/complex.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/projectivity.hpp"

namespace unfolder {

enum class UnfoldingKind { Complete, Partial };

struct UnfoldingResult {
  UnfoldingKind kind = UnfoldingKind::Complete;
  PseudoComplex base;
  int base_facet = 0;
  PseudoComplex total;
  /// Total facet -> base facet; local labels are kept, so every local map is the identity.
  SimplicialMap projection;
  /// Complete: coloring of each total facet (local label -> color), colors
  /// being local labels of the base facet.
  std::vector<Permutation> colorings;
  /// Partial: the distinguished local vertex of each total facet.
  std::vector<int> distinguished;
  /// Connected component of each total facet; ids ordered by lowest facet.
  std::vector<int> component;
  int component_count = 0;
  /// Complete: order of the group of projectivities.
  std::size_t sheets = 0;

  std::vector<int> facets_of_component(int k) const;
};

/// Facet (sigma, g) for g in Pi(P, base) sits at index sigma * |Pi| + rank of g
/// and carries the admissible coloring (g * transport(sigma))^-1. Throws
/// NotStronglyConnected.
UnfoldingResult complete_unfolding(const PseudoComplex& p, int base = 0);

/// Facet (sigma, v) sits at index sigma * (d + 1) + v. Disconnected inputs
/// are allowed.
UnfoldingResult partial_unfolding(const PseudoComplex& p, int base = 0);

struct SubComplex {
  PseudoComplex complex;
  /// Facet of the sub-complex -> facet of the parent.
  std::vector<int> facet_origin;
};

/// Facets listed (in that order) with every gluing among them.
SubComplex restrict_to(const PseudoComplex& p, const std::vector<int>& facets);

struct Component {
  PseudoComplex complex;
  std::vector<int> facet_origin;
  /// Component -> base of the unfolding.
  SimplicialMap projection;
};

Component extract_component(const UnfoldingResult& u, int k);

/// Component count of the partial unfolding, checked against the orbits of
/// Pi(P, base) on the local labels. Throws Mismatch.
int component_count(const PseudoComplex& p, int base = 0);

struct Tower {
  /// K_0 = P, K_1, ..., K_{d+1}.
  std::vector<PseudoComplex> stages;
  /// Distinguished facet sigma_i of each stage.
  std::vector<int> base_facets;
  /// maps[i]: K_{i+1} -> K_i.
  std::vector<SimplicialMap> maps;
  /// K_{d+1} -> K_0.
  SimplicialMap composite;
  UnfoldingResult complete;
  /// Isomorphism K_{d+1} -> complete unfolding commuting with the projections.
  IsoWitness witness;
};

/// Repeated partial unfoldings, each time keeping the component of
/// (sigma_i, v_i). `vertex_order` lists the local labels of the base facet;
/// empty means 0..d. Throws IsomorphismNotFound.
Tower composition_tower(const PseudoComplex& p, int base = 0, std::vector<int> vertex_order = {});

struct BranchPoint {
  int total_class = 0;
  int index = 1;
};

struct Fiber {
  int base_class = 0;
  bool odd = false;
  std::vector<BranchPoint> points;
};

/// One fiber per codimension-2 face class of the base. The index of a
/// preimage class is the number of total facets around it divided by the
/// number of base facets around its image. Throws BaseNotNice.
std::vector<Fiber> branch_locus_counts(const UnfoldingResult& u);

}  // namespace unfolder
