// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "random_complexes.hpp"
#include "unfolder/diagnostics.hpp"
#include "unfolder/document.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/subdivision.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

namespace {

struct Failed {
  std::string why;
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

bool lsc(const PseudoComplex& p) { return is_locally_strongly_connected(p).connected; }

std::set<VertexSet> odd_vertex_sets(const PseudoComplex& p, const std::vector<VertexSet>& facets) {
  std::set<VertexSet> out;
  for (int w : odd_subcomplex(p).odd_faces) {
    const auto& m = p.faces().members(w).front();
    VertexSet vs;
    for (int l : locals_of(m.mask)) vs.push_back(facets[static_cast<std::size_t>(m.facet)][static_cast<std::size_t>(l)]);
    std::sort(vs.begin(), vs.end());
    out.insert(vs);
  }
  return out;
}

std::string c1() {
  auto p = as_pseudo(boundary_simplex(3));
  auto g = projectivity_group(p).group;
  need(g.order() == 6, "order " + std::to_string(g.order()));
  // Every permutation of the three labels is present.
  std::vector<int> v{0, 1, 2};
  do need(g.contains(Permutation(v)), "missing a permutation");
  while (std::next_permutation(v.begin(), v.end()));
  need(oracle::group(boundary_simplex(3).facets(), 0).size() == 6, "walk oracle disagrees");
  return "Pi = S3";
}

std::string c2() {
  auto p = as_pseudo(boundary_simplex(3));
  auto u = complete_unfolding(p);
  need(u.total.facet_count() == 24, "facets");
  need(pseudo_manifold_kind(u.total) == ManifoldKind::Closed, "not closed");
  need(is_orientable(u.total), "not orientable");
  need(euler_characteristic(u.total) == 0, "euler characteristic");
  need(oracle::euler(oracle::complete_face_counts(boundary_simplex(3).facets(), 0)) == 0, "oracle euler");
  int fibers = 0;
  for (const auto& f : branch_locus_counts(u)) {
    if (!f.odd) continue;
    ++fibers;
    need(f.points.size() == 3, "fiber with " + std::to_string(f.points.size()) + " points");
    for (const auto& pt : f.points) need(pt.index == 2, "index " + std::to_string(pt.index));
  }
  need(fibers == 4, "odd fibers " + std::to_string(fibers));
  return "24 facets, closed orientable, chi 0, 4 fibers of 3 index-2 points";
}

std::string c3() {
  auto p = as_pseudo(boundary_simplex(3));
  auto t = partial_unfolding(p);
  need(t.component_count == 1, "components");
  need(t.total.facet_count() == 12, "facets");
  need(t.total.faces().count(0) == 8, "vertex classes");
  std::vector<int> degrees;
  for (int c = 0; c < t.total.faces().count(0); ++c) degrees.push_back(static_cast<int>(t.total.faces().members(c).size()));
  std::sort(degrees.begin(), degrees.end());
  need(degrees == std::vector<int>{3, 3, 3, 3, 6, 6, 6, 6}, "degrees");
  need(euler_characteristic(t.total) == 2, "euler characteristic");
  int fibers = 0;
  for (const auto& f : branch_locus_counts(t)) {
    if (!f.odd) continue;
    ++fibers;
    std::multiset<int> indices;
    for (const auto& pt : f.points) indices.insert(pt.index);
    need(indices == std::multiset<int>{1, 2}, "fiber indices");
  }
  need(fibers == 4, "odd fibers");
  return "1 component, 12 facets, degrees 3^4 6^4, chi 2, fibers 2+1";
}

std::string c4() {
  auto p = as_pseudo(starred_triangle());
  auto hex = as_pseudo(hexagon_cone());
  need(projectivity_group(p).group.order() == 2, "Pi order");
  auto u = complete_unfolding(p);
  auto w = isomorphic(u.total, hex);
  need(w.has_value(), "complete unfolding is not the hexagon cone");
  auto t = partial_unfolding(p);
  need(t.component_count == 2, "partial components");
  auto a = extract_component(t, 0).complex;
  auto b = extract_component(t, 1).complex;
  if (a.facet_count() > b.facet_count()) std::swap(a, b);
  auto wa = isomorphic(a, p);
  auto wb = isomorphic(b, hex);
  need(wa.has_value() && wb.has_value(), "partial unfolding is not T + H");
  return "complete = H, partial = T + H (witnesses found)";
}

std::string c5() {
  for (int n = 3; n <= 8; ++n) {
    auto p = as_pseudo(cycle_graph(n));
    bool trivial = projectivity_group(p).group.is_trivial();
    need(trivial == (n % 2 == 0), "cycle " + std::to_string(n) + " Pi");
    if (n % 2 == 1) {
      auto u = complete_unfolding(p);
      need(u.component_count == 1 && u.total.facet_count() == 2 * n, "cycle " + std::to_string(n) + " cover");
      need(isomorphic(u.total, as_pseudo(cycle_graph(2 * n))).has_value(), "cycle " + std::to_string(n) + " cover shape");
    } else {
      auto t = partial_unfolding(p);
      need(t.component_count == 2, "cycle " + std::to_string(n) + " copies");
      for (int c = 0; c < 2; ++c)
        need(isomorphic(extract_component(t, c).complex, p).has_value(), "cycle " + std::to_string(n) + " copy shape");
    }
  }
  return "n = 3..8";
}

std::string c6() {
  int count = 0;
  for (const auto& name : standard_gallery()) {
    auto e = gallery(name);
    const auto& p = e.pseudo;
    auto pi = projectivity_group(p).group;
    auto u = complete_unfolding(p);
    auto t = partial_unfolding(p);
    need(u.total.facet_count() == static_cast<int>(pi.order()) * p.facet_count(), name + ": complete");
    need(t.total.facet_count() == (p.dim() + 1) * p.facet_count(), name + ": partial");
    need(t.component_count == static_cast<int>(pi.orbits().size()), name + ": orbits");
    if (e.complex) {
      need(pi.order() == oracle::group(e.complex->facets(), 0).size(), name + ": oracle group");
      auto sizes = oracle::partial_component_sizes(e.complex->facets());
      need(static_cast<int>(sizes.size()) == t.component_count, name + ": oracle components");
    }
    ++count;
  }
  return std::to_string(count) + " gallery complexes";
}

std::string c7() {
  int count = 0;
  for (const auto& name : standard_gallery()) {
    auto e = gallery(name);
    const auto& p = e.pseudo;
    if (!lsc(p)) continue;
    bool trivial = projectivity_group(p).group.is_trivial();
    bool balanced = balanced_coloring(p).has_value();
    auto u = complete_unfolding(p);
    bool complete_iso = projects_isomorphically(u.total, p, u.projection);
    auto t = partial_unfolding(p);
    bool partial_iso = true;
    for (int c = 0; c < t.component_count; ++c) {
      auto comp = extract_component(t, c);
      partial_iso = partial_iso && projects_isomorphically(comp.complex, p, comp.projection);
    }
    need(trivial == balanced && balanced == complete_iso && complete_iso == partial_iso, name + ": disagreement");
    if (e.complex && e.complex->vertices().size() <= 12) need(balanced == oracle::balanced(e.complex->facets()), name + ": oracle");
    ++count;
  }
  auto f3 = as_pseudo(figure3_complex());
  need(!lsc(f3), "figure3 locally strongly connected");
  need(projectivity_group(f3).group.is_trivial(), "figure3 Pi");
  need(!balanced_coloring(f3).has_value() && !oracle::balanced(figure3_complex().facets()), "figure3 balanced");
  auto u = complete_unfolding(f3);
  need(!projects_isomorphically(u.total, f3, u.projection), "figure3 unfolding isomorphic");
  return std::to_string(count) + " complexes agree; figure3 trivial, unbalanced, not iso";
}

std::string c8() {
  for (const char* name : {"boundary-simplex-3", "cycle-5"}) {
    auto p = gallery(name).pseudo;
    Tower tower;
    try {
      tower = composition_tower(p);
    } catch (const Error& e) {
      throw Failed{std::string(name) + ": " + e.what()};
    }
    need(static_cast<int>(tower.stages.size()) == p.dim() + 2, std::string(name) + ": stages");
    const auto& last = tower.stages.back();
    const auto& w = tower.witness;
    // The witness commutes with the projections to P.
    for (int f = 0; f < last.facet_count(); ++f) {
      int g = w.facet_map[static_cast<std::size_t>(f)];
      need(tower.composite.facet_map[static_cast<std::size_t>(f)] ==
               tower.complete.projection.facet_map[static_cast<std::size_t>(g)],
           std::string(name) + ": witness does not commute");
      need(tower.composite.local[static_cast<std::size_t>(f)] ==
               w.local[static_cast<std::size_t>(f)] * tower.complete.projection.local[static_cast<std::size_t>(g)],
           std::string(name) + ": local maps do not commute");
    }
  }
  return "boundary-simplex-3, cycle-5";
}

std::string c9() {
  std::vector<std::pair<std::string, PseudoComplex>> inputs;
  for (const auto& name : standard_gallery()) inputs.push_back({name, gallery(name).pseudo});
  inputs.push_back({"unfolded nonsimplicial", complete_unfolding(as_pseudo(nonsimplicial_unfolding_example())).total});
  for (const auto& [name, p] : inputs) {
    auto a = antiprismatic_complex(p);
    need(is_simplicial(a.complex).simplicial, name + ": a(P) not simplicial");
    if (!is_strongly_connected(p)) continue;
    auto pa = projectivity_group(a.complex, 0).group;
    auto pp = projectivity_group(p, a.facet_origin[0]).group;
    need(pa.order() == pp.order(), name + ": group orders");
    need(pa.orbits() == pp.orbits(), name + ": orbits");
  }
  for (const char* name : {"starred-triangle", "boundary-simplex-3"}) {
    auto p = gallery(name).pseudo;
    auto ap = antiprismatic_complex(p);
    auto u = complete_unfolding(p);
    auto au = antiprismatic_complex(u.total);
    auto au_proj = subdivided_map(au, ap, u.projection);
    auto upstairs = complete_unfolding(ap.complex);
    need(isomorphic(upstairs.total, au.complex, upstairs.projection, au_proj).has_value(),
         std::string(name) + ": unfolding does not commute with a(.)");
  }
  return std::to_string(inputs.size()) + " simplicial subdivisions, groups kept, T and boundary commute";
}

// Literal reading: even n gives a longitude in {id, (01)(23)}, odd n one in
// {(01), (23)}, for both closings.
std::string c10() {
  std::vector<std::string> problems;
  std::ostringstream seen;
  for (int n = 2; n <= 5; ++n) {
    for (bool orientable : {true, false}) {
      auto kn = knot_neighborhood(n, orientable);
      std::string tag = std::to_string(n) + (orientable ? "o" : "k");
      std::set<VertexSet> core(kn.core_edges.begin(), kn.core_edges.end());
      if (odd_vertex_sets(kn.pseudo, kn.tetrahedra) != core) problems.push_back(tag + " odd subcomplex");
      auto l = projectivity(kn.pseudo, kn.longitude);
      std::set<std::string> allowed = n % 2 == 0 ? std::set<std::string>{"()", "(0 1)(2 3)"}
                                                 : std::set<std::string>{"(0 1)", "(2 3)"};
      seen << (seen.tellp() > 0 ? " " : "") << tag << "=" << l.cycles();
      if (!allowed.count(l.cycles())) problems.push_back(tag + " longitude " + l.cycles());
    }
  }
  if (!problems.empty()) {
    std::string why;
    for (const auto& p : problems) why += (why.empty() ? "" : ", ") + p;
    throw Failed{why + " [" + seen.str() + "]"};
  }
  return seen.str();
}

std::string c11() {
  for (int g = 0; g <= 3; ++g) {
    std::string tag = "g=" + std::to_string(g);
    auto k = surface_family(g);
    auto p = as_pseudo(k);
    need(projectivity_group(p).group.order() == 2, tag + ": Pi order");
    auto odd = odd_subcomplex(p);
    if (g >= 1) need(static_cast<int>(odd.as_complex.vertices().size()) == 2 * (g + 1), tag + ": odd vertices");
    need(static_cast<int>(oracle::odd_faces(k.facets()).size()) == 2 * (g + 1), tag + ": oracle odd vertices");
    auto u = complete_unfolding(p);
    need(euler_characteristic(u.total) == 2 - 2 * g, tag + ": chi");
    need(oracle::euler(oracle::complete_face_counts(k.facets(), 0)) == 2 - 2 * g, tag + ": oracle chi");
  }
  return "g = 0..3";
}

std::string c12() {
  auto k = torus_z3();
  auto p = as_pseudo(k);
  need(euler_characteristic(p) == 0 && pseudo_manifold_kind(p) == ManifoldKind::Closed, "not a torus");
  need(projectivity_group(p).group.order() == 3, "Pi order");
  need(oracle::group(k.facets(), 0).size() == 3, "oracle Pi order");
  need(odd_subcomplex(p).odd_faces.empty(), "odd subcomplex");
  auto u = complete_unfolding(p);
  need(u.component_count == 1, "unfolding disconnected");
  need(euler_characteristic(u.total) == 0, "chi");
  for (const auto& f : branch_locus_counts(u))
    for (const auto& pt : f.points) need(pt.index == 1, "branched");
  return std::to_string(k.facet_count()) + " triangles, connected unbranched 3-fold cover";
}

std::string c13() {
  int count = 0;
  for (const auto& k : random_2_complexes(200, 2024)) {
    std::string tag = "complex " + std::to_string(count);
    auto p = as_pseudo(k);
    need(p.faces().counts() == k.face_counts() && is_simplicial(p).simplicial, tag + ": round trip");
    auto text = emit(k);
    need(emit(parse_document(text)) == text, tag + ": document round trip");
    auto pi = projectivity_group(p).group;
    auto u = complete_unfolding(p);
    auto t = partial_unfolding(p);
    need(u.total.facet_count() == static_cast<int>(pi.order()) * p.facet_count(), tag + ": complete count");
    need(t.total.facet_count() == 3 * p.facet_count(), tag + ": partial count");
    need(projectivity_group(u.total).group.is_trivial(), tag + ": Pi of unfolding");
    need(is_strongly_connected(u.total), tag + ": unfolding connectivity");
    bool closed = pseudo_manifold_kind(p) == ManifoldKind::Closed;
    bool orientable = is_orientable(p);
    if (closed) need(pseudo_manifold_kind(u.total) == ManifoldKind::Closed, tag + ": unfolding closed");
    if (orientable) need(is_orientable(u.total), tag + ": unfolding orientable");
    for (int c = 0; c < t.component_count; ++c) {
      auto comp = extract_component(t, c);
      need(is_strongly_connected(comp.complex), tag + ": component connectivity");
      if (closed) need(pseudo_manifold_kind(comp.complex) == ManifoldKind::Closed, tag + ": component closed");
      if (orientable) need(is_orientable(comp.complex), tag + ": component orientable");
    }
    auto v = complete_unfolding(p, p.facet_count() - 1);
    need(isomorphic(u.total, v.total, u.projection, v.projection).has_value(), tag + ": base dependence");
    ++count;
  }
  return std::to_string(count) + " random complexes";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"group of the tetrahedron boundary is S3", c1},
      {"complete unfolding of the tetrahedron boundary", c2},
      {"partial unfolding of the tetrahedron boundary", c3},
      {"starred triangle unfoldings", c4},
      {"cycle graph dichotomy", c5},
      {"facet-count laws on the gallery", c6},
      {"four-way equivalence and figure3", c7},
      {"composition tower", c8},
      {"anti-prismatic subdivision", c9},
      {"knot neighborhood odd subcomplex and longitude", c10},
      {"surface family", c11},
      {"torus with cyclic group of order 3", c12},
      {"random 2-complex properties", c13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string line;
    try {
      line = "PASS " + std::to_string(i + 1) + " " + criteria[i].first + ": " + criteria[i].second();
    } catch (const Failed& f) {
      line = "FAIL " + std::to_string(i + 1) + " " + criteria[i].first + ": " + f.why;
      ++failed;
    } catch (const std::exception& e) {
      line = "FAIL " + std::to_string(i + 1) + " " + criteria[i].first + ": exception " + e.what();
      ++failed;
    }
    std::cout << line << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
