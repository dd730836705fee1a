#include "unfolder/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "unfolder/diagnostics.hpp"
#include "unfolder/document.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/projectivity.hpp"
#include "unfolder/subdivision.hpp"
#include "unfolder/unfolding.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct CheckFailed {
  std::string message;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw CheckFailed{message};
}

struct Check {
  const char* id;
  const char* suite;
  const char* description;
  std::function<std::string()> run;
};

// Gallery entries whose unfoldings stay small enough for isomorphism searches.
const std::vector<std::string> kSmall = {"boundary-simplex-2", "boundary-simplex-3", "starred-triangle",
                                         "hexagon-cone",       "cycle-3",            "cycle-4",
                                         "cycle-5",            "figure3",            "torus-z3",
                                         "nonsimplicial",      "surface:0",          "surface:1"};

std::vector<GalleryEntry> entries(const std::vector<std::string>& names) {
  std::vector<GalleryEntry> out;
  for (const auto& n : names) out.push_back(gallery(n));
  return out;
}

std::vector<GalleryEntry> all_entries() { return entries(standard_gallery()); }

std::vector<AbstractComplex> random_complexes(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<AbstractComplex> out;
  for (int i = 0; i < count; ++i) {
    int facets = std::uniform_int_distribution<int>(1, 9)(rng);
    int vertices = std::uniform_int_distribution<int>(3, 8)(rng);
    out.push_back(random_surface_patch(facets, vertices, static_cast<unsigned>(rng())));
  }
  return out;
}

bool lsc(const PseudoComplex& p) { return is_locally_strongly_connected(p).connected; }

std::string orbit_string(const std::vector<std::vector<int>>& orbits) {
  std::ostringstream out;
  for (const auto& o : orbits) {
    out << "{";
    for (std::size_t i = 0; i < o.size(); ++i) out << (i ? "," : "") << o[i];
    out << "}";
  }
  return out.str();
}

// Face class c of as_pseudo(K) or a ridge-glued list, as vertex ids.
VertexSet class_vertices(const PseudoComplex& p, const std::vector<VertexSet>& facets, int cls) {
  const auto& m = p.faces().members(cls).front();
  VertexSet out;
  for (int l : locals_of(m.mask)) out.push_back(facets[idx(m.facet)][idx(l)]);
  std::sort(out.begin(), out.end());
  return out;
}

// Projectivity along a random walk of `steps` ridge crossings.
FacetPath random_walk(const PseudoComplex& p, int start, int steps, std::mt19937& rng) {
  FacetPath path{start, {}};
  int at = start;
  for (int i = 0; i < steps; ++i) {
    const auto& inc = p.ridge_gluings_of(at);
    if (inc.empty()) break;
    int g = inc[std::uniform_int_distribution<std::size_t>(0, inc.size() - 1)(rng)];
    path.gluings.push_back(g);
    at = p.gluing(g).other(at);
  }
  return path;
}

bool conjugate_by_relabeling(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.order() != b.order() || a.degree() != b.degree()) return false;
  std::vector<int> images(idx(a.degree()));
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation pi(images);
    bool all = true;
    for (const auto& g : a.elements()) {
      if (!b.contains(pi.inverse() * g * pi)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

// Whether face class `k` lies in face class `w` of the same pseudo-complex.
bool class_within(const FaceClasses& fc, int k, int w) {
  for (const auto& m : fc.members(w)) {
    Mask km = fc.mask_in(k, m.facet);
    if (km != 0 && (km & m.mask) == km) return true;
  }
  return false;
}

bool partial_components_iso(const UnfoldingResult& u) {
  for (int c = 0; c < u.component_count; ++c) {
    auto comp = extract_component(u, c);
    if (!projects_isomorphically(comp.complex, u.base, comp.projection)) return false;
  }
  return true;
}

std::string unfold_invariants(const PseudoComplex& p, const std::string& name) {
  auto pg = projectivity_group(p);
  auto full = complete_unfolding(p);
  auto part = partial_unfolding(p);
  expect(full.total.facet_count() == static_cast<int>(pg.group.order()) * p.facet_count(),
         name + ": complete unfolding facet count");
  expect(part.total.facet_count() == (p.dim() + 1) * p.facet_count(), name + ": partial unfolding facet count");
  expect(projectivity_group(full.total).group.is_trivial(), name + ": Pi of the complete unfolding");
  expect(is_strongly_connected(full.total), name + ": complete unfolding strongly connected");
  bool closed = pseudo_manifold_kind(p) == ManifoldKind::Closed;
  bool orientable = is_orientable(p);
  if (closed) expect(pseudo_manifold_kind(full.total) == ManifoldKind::Closed, name + ": complete unfolding closed");
  if (orientable) expect(is_orientable(full.total), name + ": complete unfolding orientable");
  for (int c = 0; c < part.component_count; ++c) {
    auto comp = extract_component(part, c);
    expect(is_strongly_connected(comp.complex), name + ": partial component strongly connected");
    if (closed) expect(pseudo_manifold_kind(comp.complex) == ManifoldKind::Closed, name + ": partial component closed");
    if (orientable) expect(is_orientable(comp.complex), name + ": partial component orientable");
  }
  expect(part.component_count == static_cast<int>(pg.group.orbits().size()), name + ": components vs orbits");
  return "";
}

std::string base_independence(const PseudoComplex& p, const std::string& name) {
  int last = p.facet_count() - 1;
  auto a = complete_unfolding(p, 0);
  auto b = complete_unfolding(p, last);
  expect(isomorphic(a.total, b.total, a.projection, b.projection).has_value(),
         name + ": complete unfoldings from facets 0 and " + std::to_string(last) + " differ");
  auto c = partial_unfolding(p, 0);
  auto d = partial_unfolding(p, last);
  expect(isomorphic(c.total, d.total, c.projection, d.projection).has_value(),
         name + ": partial unfoldings from facets 0 and " + std::to_string(last) + " differ");
  return "";
}

// ---- complex-core

std::string check_face_counts() {
  int n = 0;
  auto run = [&](const AbstractComplex& k) {
    auto p = as_pseudo(k);
    expect(p.faces().counts() == k.face_counts(), "face class counts differ from face counts");
    expect(is_simplicial(p).simplicial, "as_pseudo is not simplicial");
    ++n;
  };
  for (const auto& e : all_entries())
    if (e.complex) run(*e.complex);
  for (const auto& k : random_complexes(60, 11)) run(k);
  return std::to_string(n) + " complexes";
}

std::string check_self_identification() {
  for (const auto& e : all_entries()) (void)PseudoComplex(e.pseudo.dim(), e.pseudo.facet_count(), e.pseudo.gluings());
  // Two triangles glued along two different edges with a twist that folds one onto itself.
  bool thrown = false;
  try {
    PseudoComplex(2, 2, {Gluing{0, 1, {0, 1}, {0, 1}}, Gluing{0, 1, {1, 2}, {0, 1}}});
  } catch (const Error& e) {
    thrown = e.code() == ErrorCode::SelfIdentification;
  }
  expect(thrown, "folding gluing accepted");
  thrown = false;
  try {
    PseudoComplex(2, 1, {Gluing{0, 0, {0}, {1}}});
  } catch (const Error& e) {
    thrown = e.code() == ErrorCode::SelfIdentification;
  }
  expect(thrown, "vertex glued to another vertex of its own facet accepted");
  return "gallery accepted, two violating inputs rejected";
}

std::string check_dual_loops() {
  for (const auto& e : all_entries()) expect(!e.pseudo.dual_graph().has_loops(), e.name + ": dual graph has a loop");
  return "gallery";
}

std::string check_link_pure() {
  int n = 0;
  for (const auto& e : all_entries()) {
    if (!e.complex) continue;
    const auto& k = *e.complex;
    for (int dim = 0; dim < k.dim(); ++dim) {
      for (const auto& face : k.faces(dim)) {
        auto l = link(k, face);
        expect(l.dim() == k.dim() - dim - 1, e.name + ": link dimension");
        for (const auto& f : l.facets()) expect(static_cast<int>(f.size()) == l.dim() + 1, e.name + ": link not pure");
        ++n;
      }
    }
  }
  return std::to_string(n) + " links";
}

// ---- projectivity

std::string check_inverse_and_concat() {
  std::mt19937 rng(7);
  int n = 0;
  for (const auto& e : all_entries()) {
    const auto& p = e.pseudo;
    if (p.facet_count() == 0) continue;
    for (int t = 0; t < 20; ++t) {
      int start = std::uniform_int_distribution<int>(0, p.facet_count() - 1)(rng);
      auto a = random_walk(p, start, 1 + t % 7, rng);
      auto b = random_walk(p, path_end(p, a), 1 + t % 5, rng);
      expect(projectivity(p, reversed(p, a)) == projectivity(p, a).inverse(), e.name + ": reversed path");
      expect(projectivity(p, concatenate(p, a, b)) == projectivity(p, a) * projectivity(p, b),
             e.name + ": concatenated path");
      ++n;
    }
  }
  return std::to_string(n) + " path pairs";
}

std::string check_base_conjugate() {
  for (const auto& e : entries(kSmall)) {
    const auto& p = e.pseudo;
    auto a = projectivity_group(p, 0).group;
    auto b = projectivity_group(p, p.facet_count() - 1).group;
    expect(conjugate_by_relabeling(a, b), e.name + ": groups at two base facets not conjugate");
  }
  return "small gallery";
}

std::string check_odd_subgroup() {
  const std::set<std::string> simply_connected = {"boundary-simplex-3", "starred-triangle", "hexagon-cone",
                                                   "surface:0", "surface:1", "surface:2"};
  int n = 0;
  for (const auto& e : all_entries()) {
    const auto& p = e.pseudo;
    if (p.dim() < 2 || !lsc(p)) continue;
    auto full = projectivity_group(p).group;
    auto odd = odd_generated_subgroup(p);
    expect(odd.is_subgroup_of(full), e.name + ": odd-generated subgroup not contained in Pi");
    for (const auto& g : odd.generators())
      expect(g.perm.is_identity() || g.perm.is_transposition(), e.name + ": odd generator " + g.perm.cycles());
    if (simply_connected.count(e.name) && check_niceness(p).nice)
      expect(odd.order() == full.order(), e.name + ": odd-generated subgroup is proper");
    ++n;
  }
  return std::to_string(n) + " complexes";
}

std::string check_unfolding_trivial() {
  for (const auto& e : all_entries())
    expect(projectivity_group(complete_unfolding(e.pseudo).total).group.is_trivial(), e.name);
  return "gallery";
}

// ---- unfolding

std::string check_unfold_invariants() {
  int n = 0;
  for (const auto& e : all_entries()) {
    unfold_invariants(e.pseudo, e.name);
    ++n;
  }
  auto nonsimplicial = complete_unfolding(gallery("nonsimplicial").pseudo).total;
  unfold_invariants(nonsimplicial, "unfolded nonsimplicial");
  for (const auto& k : random_complexes(40, 23)) {
    unfold_invariants(as_pseudo(k), "random");
    ++n;
  }
  return std::to_string(n + 1) + " complexes";
}

std::string check_base_independence() {
  for (const auto& e : entries(kSmall)) base_independence(e.pseudo, e.name);
  return "small gallery";
}

std::string check_star_counts() {
  int n = 0;
  for (const auto& e : all_entries()) {
    const auto& p = e.pseudo;
    if (!lsc(p)) continue;
    auto pg = projectivity_group(p);
    auto u = complete_unfolding(p);
    const auto& base_fc = p.faces();
    const auto& total_fc = u.total.faces();
    std::vector<std::set<int>> preimages(idx(base_fc.class_count()));
    for (int c = 0; c < total_fc.class_count(); ++c) {
      const auto& m = total_fc.members(c).front();
      preimages[idx(base_fc.class_of(u.projection.facet_map[idx(m.facet)], m.mask))].insert(c);
    }
    for (int k = 0; k < base_fc.class_count(); ++k) {
      auto h = star_subgroup(p, pg, k);
      expect(pg.group.order() % h.order() == 0, e.name + ": star group order does not divide |Pi|");
      expect(preimages[idx(k)].size() == pg.group.order() / h.order(),
             e.name + ": preimage count over face class " + std::to_string(k));
      ++n;
    }
  }
  return std::to_string(n) + " face classes";
}

// ---- subdivision

std::string check_barycentric() {
  int n = 0;
  for (const auto& e : entries(kSmall)) {
    auto rec = barycentric(e.pseudo);
    auto b = as_pseudo(rec.result);
    expect(balanced_coloring(b).has_value(), e.name + ": barycentric subdivision not balanced");
    expect(projectivity_group(b).group.is_trivial(), e.name + ": Pi of barycentric subdivision");
    if (lsc(e.pseudo)) {
      auto u = complete_unfolding(b);
      expect(projects_isomorphically(u.total, b, u.projection), e.name + ": unfolding of b(P) is not b(P)");
    }
    ++n;
  }
  return std::to_string(n) + " complexes";
}

std::vector<PseudoComplex> antiprismatic_inputs(std::vector<std::string>* names) {
  std::vector<PseudoComplex> out;
  for (const auto& e : all_entries()) {
    out.push_back(e.pseudo);
    names->push_back(e.name);
  }
  out.push_back(complete_unfolding(gallery("nonsimplicial").pseudo).total);
  names->push_back("unfolded nonsimplicial");
  out.push_back(complete_unfolding(gallery("starred-triangle").pseudo).total);
  names->push_back("unfolded starred-triangle");
  return out;
}

std::string check_antiprismatic_simplicial() {
  std::vector<std::string> names;
  auto inputs = antiprismatic_inputs(&names);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    expect(is_simplicial(antiprismatic_complex(inputs[i]).complex).simplicial, names[i]);
  return std::to_string(inputs.size()) + " pseudo-complexes";
}

std::string check_crumpling() {
  std::vector<std::string> names;
  auto inputs = antiprismatic_inputs(&names);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& p = inputs[i];
    if (!is_strongly_connected(p)) continue;
    auto a = antiprismatic_complex(p);
    auto f = crumpling_map(a);
    validate_map(a.complex, p, f);
    auto h = induced_homomorphism_check(a.complex, p, f, 0);
    expect(h.ok, names[i] + ": " + h.failure);
    expect(h.injective && h.surjective, names[i] + ": induced map not bijective");
    auto pa = projectivity_group(a.complex, 0).group;
    auto pp = projectivity_group(p, a.facet_origin[0]).group;
    expect(pa.order() == pp.order(), names[i] + ": group orders differ");
    expect(pa.orbits() == pp.orbits(),
           names[i] + ": orbits " + orbit_string(pa.orbits()) + " vs " + orbit_string(pp.orbits()));
  }
  return std::to_string(inputs.size()) + " pseudo-complexes";
}

std::string check_commutation() {
  for (const char* name : {"starred-triangle", "boundary-simplex-3"}) {
    auto p = gallery(name).pseudo;
    auto ap = antiprismatic_complex(p);
    for (bool complete : {true, false}) {
      auto u = complete ? complete_unfolding(p) : partial_unfolding(p);
      auto upstairs = complete ? complete_unfolding(ap.complex) : partial_unfolding(ap.complex);
      auto au = antiprismatic_complex(u.total);
      auto au_proj = subdivided_map(au, ap, u.projection);
      validate_map(au.complex, ap.complex, au_proj);
      expect(isomorphic(upstairs.total, au.complex, upstairs.projection, au_proj).has_value(),
             std::string(name) + (complete ? ": complete" : ": partial") + " unfolding does not commute with a(.)");
    }
  }
  return "starred-triangle, boundary-simplex-3";
}

std::string check_balanced_iff() {
  std::vector<std::string> names;
  auto inputs = antiprismatic_inputs(&names);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto a = antiprismatic_complex(inputs[i]);
    expect(balanced_coloring(inputs[i]).has_value() == balanced_coloring(a.complex).has_value(), names[i]);
  }
  return std::to_string(inputs.size()) + " pseudo-complexes";
}

// ---- diagnostics

std::string check_equivalence() {
  int n = 0;
  for (const auto& e : all_entries()) {
    const auto& p = e.pseudo;
    if (!lsc(p)) continue;
    bool trivial = projectivity_group(p).group.is_trivial();
    bool balanced = balanced_coloring(p).has_value();
    auto u = complete_unfolding(p);
    bool complete_iso = projects_isomorphically(u.total, p, u.projection);
    bool partial_iso = partial_components_iso(partial_unfolding(p));
    expect(trivial == balanced && balanced == complete_iso && complete_iso == partial_iso,
           e.name + ": the four conditions disagree");
    ++n;
  }
  return std::to_string(n) + " locally strongly connected complexes";
}

std::string check_star_groups() {
  int n = 0;
  for (const auto& e : all_entries()) {
    const auto& p = e.pseudo;
    if (p.dim() < 2 || !check_niceness(p).nice) continue;
    auto pg = projectivity_group(p);
    auto odd = odd_subcomplex(p).odd_faces;
    const auto& fc = p.faces();
    for (int k = 0; k < fc.first_of_dim(p.dim() - 1); ++k) {
      bool in_odd = std::any_of(odd.begin(), odd.end(), [&](int w) { return class_within(fc, k, w); });
      bool nontrivial = !star_subgroup(p, pg, k).is_trivial();
      expect(in_odd == nontrivial, e.name + ": face class " + std::to_string(k));
      ++n;
    }
  }
  return std::to_string(n) + " face classes";
}

std::string check_figure3() {
  auto p = gallery("figure3").pseudo;
  expect(!lsc(p), "figure3 is locally strongly connected");
  expect(projectivity_group(p).group.is_trivial(), "Pi not trivial");
  expect(!balanced_coloring(p).has_value(), "figure3 is balanced");
  auto u = complete_unfolding(p);
  expect(!projects_isomorphically(u.total, p, u.projection), "unfolding projects isomorphically");
  return "trivial Pi, unbalanced, unfolding not isomorphic";
}

std::string check_odd_mod2() {
  int n = 0;
  for (const auto& e : all_entries()) {
    if (!e.complex || e.pseudo.dim() < 2 || !lsc(e.pseudo)) continue;
    if (pseudo_manifold_kind(e.pseudo) != ManifoldKind::Closed) continue;
    const auto& k = *e.complex;
    std::vector<VertexSet> faces;
    for (int w : odd_subcomplex(e.pseudo).odd_faces) faces.push_back(class_vertices(e.pseudo, k.facets(), w));
    AbstractComplex l(k.dim() - 2, faces);
    expect(mod2_boundary_check(k, l).has_value(), e.name + ": odd subcomplex is not a mod 2 boundary");
    ++n;
  }
  return std::to_string(n) + " closed pseudo-manifolds";
}

std::string check_euler() {
  auto a = gallery("boundary-simplex-3");
  auto b = gallery("torus-z3");
  std::vector<VertexSet> facets = a.complex->facets();
  int shift = a.complex->vertices().back() + 1;
  for (auto f : b.complex->facets()) {
    for (int& v : f) v += shift;
    facets.push_back(f);
  }
  AbstractComplex both(2, facets);
  expect(euler_characteristic(both) == euler_characteristic(*a.complex) + euler_characteristic(*b.complex),
         "not additive under disjoint union");
  int n = 0;
  for (const auto& e : entries(kSmall)) {
    long chi = euler_characteristic(e.pseudo);
    expect(euler_characteristic(barycentric(e.pseudo).result) == chi, e.name + ": barycentric");
    expect(euler_characteristic(antiprismatic(e.pseudo).result) == chi, e.name + ": anti-prismatic");
    ++n;
  }
  return "disjoint union and " + std::to_string(n) + " subdivided complexes";
}

// ---- generators

std::string check_surface_counts() {
  for (int g = 0; g <= 3; ++g) {
    if (g >= 1) expect(static_cast<int>(surface_base(g).facet_count()) == 2 * (g + 1), "base facets, g=" + std::to_string(g));
    auto p = surface_family(g);
    expect(static_cast<int>(p.facet_count()) == 6 * (g + 1), "facets, g=" + std::to_string(g));
    expect(complete_unfolding(as_pseudo(p)).total.facet_count() == 12 * (g + 1),
           "unfolding facets, g=" + std::to_string(g));
  }
  return "g = 0..3";
}

std::string check_knot_core() {
  for (int n = 2; n <= 6; ++n) {
    for (bool orientable : {true, false}) {
      auto kn = knot_neighborhood(n, orientable);
      std::set<VertexSet> odd;
      for (int w : odd_subcomplex(kn.pseudo).odd_faces) odd.insert(class_vertices(kn.pseudo, kn.tetrahedra, w));
      std::set<VertexSet> core(kn.core_edges.begin(), kn.core_edges.end());
      expect(odd == core, "n=" + std::to_string(n) + (orientable ? " orientable" : " klein") +
                              ": odd subcomplex is not the core cycle");
    }
  }
  return "n = 2..6, both variants";
}

// The projectivity along the x-y prisms keeps {x0, y0} and reverses (v0, v1)
// exactly when the number of blocks is odd. Each block swaps x and y; the
// Klein closing swaps them once more.
std::string check_knot_parity() {
  std::ostringstream seen;
  for (int n = 2; n <= 6; ++n) {
    for (bool orientable : {true, false}) {
      auto kn = knot_neighborhood(n, orientable);
      auto l = projectivity(kn.pseudo, kn.longitude);
      auto m = projectivity(kn.pseudo, kn.meridian);
      std::string tag = "n=" + std::to_string(n) + (orientable ? " orientable" : " klein");
      expect(m == Permutation::transposition(4, 0, 1), tag + ": meridian " + m.cycles());
      expect((l[0] == 0 || l[0] == 1) && (l[1] == 0 || l[1] == 1), tag + ": longitude " + l.cycles() + " moves x0, y0");
      bool swapped = l[2] == 3;
      expect(swapped == (n % 2 == 1), tag + ": longitude " + l.cycles());
      expect((l[0] == 1) == ((n % 2 == 1) == orientable), tag + ": longitude " + l.cycles() + " on {x0, y0}");
      seen << (seen.tellp() > 0 ? ", " : "") << n << (orientable ? "o:" : "k:") << l.cycles();
    }
  }
  return seen.str();
}

// ---- document

std::string check_round_trip() {
  int n = 0;
  auto round = [&](const std::string& text, const std::string& name) {
    auto doc = parse_document(text);
    auto again = emit(doc);
    expect(again == text, name + ": emit(parse(text)) differs");
    expect(emit(parse_document(again)) == again, name + ": emit is not stable");
    ++n;
  };
  for (const auto& e : all_entries()) {
    if (e.complex) round(emit(*e.complex), e.name);
    round(emit(e.pseudo), e.name + " (pseudo)");
  }
  auto u = complete_unfolding(gallery("nonsimplicial").pseudo);
  round(emit(u.total, u.projection.facet_map), "unfolded nonsimplicial");
  for (const auto& k : random_complexes(20, 5)) round(emit(k), "random");
  return std::to_string(n) + " documents";
}

// ---- worked examples

std::string check_gallery_expectations(const std::string& name) {
  auto e = gallery(name);
  const auto& p = e.pseudo;
  const auto& x = e.expected;
  std::vector<std::string> got;
  if (x.group_order) {
    auto order = projectivity_group(p).group.order();
    expect(order == *x.group_order, "Pi order " + std::to_string(order));
    got.push_back("Pi " + std::to_string(order));
  }
  if (x.locally_strongly_connected) {
    bool l = lsc(p);
    expect(l == *x.locally_strongly_connected, "local strong connectivity");
    got.push_back(l ? "locally strongly connected" : "not locally strongly connected");
  }
  if (x.odd_faces) {
    auto odd = odd_subcomplex(p).odd_faces.size();
    expect(static_cast<int>(odd) == *x.odd_faces, "odd faces " + std::to_string(odd));
    got.push_back("odd " + std::to_string(odd));
  }
  if (x.complete_facets || x.complete_euler) {
    auto u = complete_unfolding(p);
    if (x.complete_facets)
      expect(u.total.facet_count() == *x.complete_facets, "unfolding facets " + std::to_string(u.total.facet_count()));
    if (x.complete_euler) expect(euler_characteristic(u.total) == *x.complete_euler, "unfolding euler characteristic");
    got.push_back("unfolding " + std::to_string(u.total.facet_count()));
  }
  if (x.partial_components) {
    int c = partial_unfolding(p).component_count;
    expect(c == *x.partial_components, "partial components " + std::to_string(c));
    got.push_back("partial " + std::to_string(c));
  }
  std::string out;
  for (const auto& g : got) out += (out.empty() ? "" : ", ") + g;
  return out;
}

std::string check_simplex_boundary() {
  auto p = gallery("boundary-simplex-3").pseudo;
  auto g = projectivity_group(p).group;
  expect(g.order() == 6 && g.orbits().size() == 1, "Pi is not S3");
  auto u = complete_unfolding(p);
  expect(u.total.facet_count() == 24, "complete unfolding facets");
  expect(pseudo_manifold_kind(u.total) == ManifoldKind::Closed && is_orientable(u.total), "complete unfolding type");
  expect(euler_characteristic(u.total) == 0, "complete unfolding euler characteristic");
  int odd_fibers = 0;
  for (const auto& f : branch_locus_counts(u)) {
    if (!f.odd) continue;
    ++odd_fibers;
    expect(f.points.size() == 3, "fiber size");
    for (const auto& pt : f.points) expect(pt.index == 2, "branching index");
  }
  expect(odd_fibers == 4, "odd fibers");
  auto t = partial_unfolding(p);
  expect(t.component_count == 1 && t.total.facet_count() == 12, "partial unfolding");
  std::vector<int> degrees;
  for (int c = 0; c < t.total.faces().count(0); ++c) degrees.push_back(static_cast<int>(t.total.faces().members(c).size()));
  std::sort(degrees.begin(), degrees.end());
  expect(degrees == std::vector<int>{3, 3, 3, 3, 6, 6, 6, 6}, "partial unfolding vertex degrees");
  expect(euler_characteristic(t.total) == 2, "partial unfolding euler characteristic");
  for (const auto& f : branch_locus_counts(t)) {
    if (!f.odd) continue;
    std::multiset<int> idx_set;
    for (const auto& pt : f.points) idx_set.insert(pt.index);
    expect(idx_set == std::multiset<int>{1, 2}, "partial fiber over an odd vertex");
  }
  return "S3, 24 facets, 4 fibers of 3 index-2 points; partial 12 facets, degrees 3^4 6^4";
}

std::string check_starred() {
  auto p = gallery("starred-triangle").pseudo;
  expect(projectivity_group(p).group.order() == 2, "Pi order");
  auto hex = gallery("hexagon-cone").pseudo;
  auto tri = gallery("starred-triangle").pseudo;
  expect(isomorphic(complete_unfolding(p).total, hex).has_value(), "complete unfolding is not the hexagon cone");
  auto t = partial_unfolding(p);
  expect(t.component_count == 2, "partial components");
  auto c0 = extract_component(t, 0).complex;
  auto c1 = extract_component(t, 1).complex;
  if (c0.facet_count() > c1.facet_count()) std::swap(c0, c1);
  expect(isomorphic(c0, tri).has_value(), "small component is not the starred triangle");
  expect(isomorphic(c1, hex).has_value(), "large component is not the hexagon cone");
  return "complete = hexagon cone, partial = starred triangle + hexagon cone";
}

std::string check_cycles() {
  for (int n = 3; n <= 8; ++n) {
    auto p = gallery("cycle-" + std::to_string(n)).pseudo;
    bool trivial = projectivity_group(p).group.is_trivial();
    expect(trivial == (n % 2 == 0), "cycle-" + std::to_string(n) + ": Pi");
    auto u = complete_unfolding(p);
    if (n % 2 == 1) {
      expect(u.component_count == 1 && u.total.facet_count() == 2 * n, "cycle-" + std::to_string(n) + ": double cover");
    } else {
      auto t = partial_unfolding(p);
      expect(t.component_count == 2, "cycle-" + std::to_string(n) + ": two copies");
      for (int c = 0; c < 2; ++c)
        expect(isomorphic(extract_component(t, c).complex, p).has_value(), "cycle-" + std::to_string(n) + ": copy");
    }
  }
  return "n = 3..8";
}

std::string check_tower() {
  for (const char* name : {"boundary-simplex-3", "cycle-5"}) {
    auto p = gallery(name).pseudo;
    auto tower = composition_tower(p);
    expect(static_cast<int>(tower.stages.size()) == p.dim() + 2, std::string(name) + ": stage count");
  }
  return "boundary-simplex-3, cycle-5";
}

std::string check_torus() {
  auto p = gallery("torus-z3").pseudo;
  expect(projectivity_group(p).group.order() == 3, "Pi order");
  expect(odd_subcomplex(p).odd_faces.empty(), "odd subcomplex");
  auto u = complete_unfolding(p);
  expect(u.component_count == 1, "unfolding connected");
  expect(euler_characteristic(u.total) == 0, "unfolding euler characteristic");
  for (const auto& f : branch_locus_counts(u))
    for (const auto& pt : f.points) expect(pt.index == 1, "branched point");
  return std::to_string(p.facet_count()) + " triangles, unbranched 3-fold cover";
}

std::string check_surfaces() {
  for (int g = 0; g <= 3; ++g) {
    auto p = as_pseudo(surface_family(g));
    std::string tag = "g=" + std::to_string(g);
    expect(projectivity_group(p).group.order() == 2, tag + ": Pi order");
    auto odd = odd_subcomplex(p);
    if (g >= 1) expect(static_cast<int>(odd.as_complex.vertices().size()) == 2 * (g + 1), tag + ": odd vertices");
    expect(euler_characteristic(complete_unfolding(p).total) == 2 - 2 * g, tag + ": unfolding euler characteristic");
  }
  return "g = 0..3";
}

std::vector<Check> registry() {
  std::vector<Check> checks = {
      {"complex.dual-no-loops", "props", "dual graphs of pseudo-complexes have no loops", check_dual_loops},
      {"complex.face-counts", "props", "as_pseudo preserves face counts and is simplicial", check_face_counts},
      {"complex.link-pure", "props", "links are pure of dimension d - |face|", check_link_pure},
      {"complex.self-identification", "props", "SelfIdentification fires exactly on folding inputs",
       check_self_identification},
      {"diagnostics.equivalence", "props", "trivial Pi, balanced, unfolding iso, partial iso agree",
       check_equivalence},
      {"diagnostics.euler", "props", "Euler characteristic additive and subdivision invariant", check_euler},
      {"diagnostics.figure3", "props", "figure3: trivial Pi yet unbalanced and unfolding not iso", check_figure3},
      {"diagnostics.odd-mod2", "props", "odd subcomplex of a closed pseudo-manifold is a mod 2 boundary",
       check_odd_mod2},
      {"diagnostics.star-groups", "props", "odd faces are the faces with nontrivial star group", check_star_groups},
      {"document.round-trip", "props", "parse and emit are mutually inverse on canonical forms", check_round_trip},
      {"generators.knot-core", "props", "knot neighborhood odd subcomplex is the core cycle", check_knot_core},
      {"generators.knot-parity", "props", "longitude reverses (v0, v1) iff the block count is odd",
       check_knot_parity},
      {"generators.surface-counts", "props", "surface family facet counts", check_surface_counts},
      {"projectivity.base-conjugate", "props", "groups at different base facets are conjugate",
       check_base_conjugate},
      {"projectivity.odd-subgroup", "props", "odd-generated subgroup: transpositions, contained, equal when nice",
       check_odd_subgroup},
      {"projectivity.paths", "props", "reversal inverts, concatenation multiplies", check_inverse_and_concat},
      {"projectivity.unfolding-trivial", "props", "Pi of the complete unfolding is trivial", check_unfolding_trivial},
      {"subdivision.antiprismatic-simplicial", "props", "a(P) is simplicial", check_antiprismatic_simplicial},
      {"subdivision.balanced-iff", "props", "P balanced iff a(P) balanced", check_balanced_iff},
      {"subdivision.barycentric", "props", "b(P) balanced with trivial Pi and unfolding b(P)", check_barycentric},
      {"subdivision.commutation", "props", "unfolding commutes with a(.)", check_commutation},
      {"subdivision.crumpling", "props", "crumpling induces an isomorphism of groups", check_crumpling},
      {"unfolding.base-independence", "props", "unfoldings from different base facets are isomorphic",
       check_base_independence},
      {"unfolding.invariants", "props", "facet counts, trivial Pi, manifold type, orientability, connectivity",
       check_unfold_invariants},
      {"unfolding.star-counts", "props", "preimage classes over a face = |Pi| / |star group|", check_star_counts},
      {"examples.cycles", "paper", "cycle graphs: trivial Pi iff even, double cover or two copies", check_cycles},
      {"examples.simplex-boundary", "paper", "boundary of the tetrahedron: S3, 24 and 12 facet unfoldings",
       check_simplex_boundary},
      {"examples.starred-triangle", "paper", "starred triangle unfolds to the hexagon cone", check_starred},
      {"examples.surfaces", "paper", "surface family: Pi order 2, odd vertices, Euler characteristic", check_surfaces},
      {"examples.torus", "paper", "torus with cyclic Pi of order 3, unbranched", check_torus},
      {"examples.tower", "paper", "composition tower ends in the complete unfolding", check_tower},
  };
  static const std::vector<std::string> names = standard_gallery();
  static std::vector<std::string> ids;
  if (ids.empty())
    for (const auto& n : names) ids.push_back("examples.gallery." + n);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    checks.push_back({ids[i].c_str(), "paper", "gallery expectations re-derived",
                      [n] { return check_gallery_expectations(n); }});
  }
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return std::string(a.id) < b.id; });
  return checks;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = registry();
  return all;
}

}  // namespace

std::vector<CheckInfo> list_checks() {
  std::vector<CheckInfo> out;
  for (const auto& c : checks()) out.push_back({c.id, c.suite, c.description});
  return out;
}

std::vector<CheckResult> run_checks(const std::string& suite) {
  if (suite != "all" && suite != "props" && suite != "paper")
    throw Error(ErrorCode::BadParameter, "unknown suite '" + suite + "'");
  std::vector<std::future<CheckResult>> pending;
  for (const auto& c : checks()) {
    if (suite != "all" && suite != c.suite) continue;
    pending.push_back(std::async(std::launch::async, [&c] {
      CheckResult r{c.id, c.suite, false, ""};
      try {
        r.detail = c.run();
        r.passed = true;
      } catch (const CheckFailed& f) {
        r.detail = f.message;
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      return r;
    }));
  }
  std::vector<CheckResult> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  int passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ') << r.detail << "\n";
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace unfolder
