#include "unfolder/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"
#include "unfolder/subdivision.hpp"
#include "unfolder/unfolding.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

AbstractComplex labelled(int dim, std::vector<VertexSet> facets, const std::vector<std::string>& names) {
  AbstractComplex k(dim, std::move(facets));
  std::map<int, std::string> labels;
  for (int v = 0; v < static_cast<int>(names.size()); ++v) labels[v] = names[idx(v)];
  k.set_vertex_labels(std::move(labels));
  return k;
}

int parse_int(const std::string& s, const std::string& name) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::BadParameter, "bad number in gallery name '" + name + "'");
  return std::stoi(s);
}

bool torus_z3_candidate(const AbstractComplex& k) {
  PseudoComplex p = as_pseudo(k);
  if (pseudo_manifold_kind(p) != ManifoldKind::Closed || euler_characteristic(p) != 0) return false;
  if (projectivity_group(p).group.order() != 3) return false;
  if (!odd_subcomplex(p).odd_faces.empty()) return false;
  auto u = complete_unfolding(p);
  return u.component_count == 1 && partial_unfolding(p).component_count == 1;
}

}  // namespace

AbstractComplex boundary_simplex(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "boundary of the simplex needs n >= 1");
  std::vector<VertexSet> facets;
  for (int skip = 0; skip <= n; ++skip) {
    VertexSet f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return AbstractComplex(n - 1, std::move(facets));
}

AbstractComplex simplex(int d) {
  if (d < 0) throw Error(ErrorCode::BadParameter, "simplex needs d >= 0");
  VertexSet f;
  for (int v = 0; v <= d; ++v) f.push_back(v);
  return AbstractComplex(d, {f});
}

AbstractComplex starred_triangle() { return AbstractComplex(2, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}}); }

AbstractComplex hexagon_cone() {
  std::vector<VertexSet> facets;
  for (int i = 1; i <= 6; ++i) facets.push_back({0, i, i % 6 + 1});
  return AbstractComplex(2, std::move(facets));
}

AbstractComplex cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::BadParameter, "cycle graph needs n >= 3");
  std::vector<VertexSet> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  return AbstractComplex(1, std::move(facets));
}

AbstractComplex figure3_complex() {
  return labelled(2, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {0, 5, 6}},
                  {"a", "1", "2", "3", "4", "5", "6"});
}

AbstractComplex torus_z3() {
  static const AbstractComplex found = [] {
    std::vector<AbstractComplex> candidates;
    {
      std::vector<VertexSet> facets;
      for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
      }
      candidates.emplace_back(2, std::move(facets));
    }
    for (int m = 3; m <= 6; ++m) {
      for (int n = m; n <= 6; ++n) {
        auto v = [&](int i, int j) { return (i % m) * n + (j % n); };
        std::vector<VertexSet> facets;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) {
            facets.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            facets.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
          }
        }
        candidates.emplace_back(2, std::move(facets));
      }
    }
    for (const auto& k : candidates)
      if (torus_z3_candidate(k)) return k;
    throw Error(ErrorCode::Mismatch, "no torus with a cyclic group of order 3 among the candidates");
  }();
  return found;
}

AbstractComplex nonsimplicial_unfolding_example() {
  // v=0 w=1 a=2 b=3 c=4 d=5 x=6 y=7
  return labelled(3,
                  {{0, 1, 2, 3},
                   {0, 1, 4, 5},
                   {0, 2, 3, 6},
                   {0, 3, 4, 6},
                   {0, 4, 5, 6},
                   {1, 2, 3, 7},
                   {1, 3, 4, 7},
                   {1, 4, 5, 7}},
                  {"v", "w", "a", "b", "c", "d", "x", "y"});
}

KnotNeighborhood knot_neighborhood(int n, bool orientable) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "knot neighborhood needs at least 2 blocks");
  KnotNeighborhood out;
  out.blocks = n;
  out.orientable = orientable;

  std::map<std::string, int> ids;
  auto id = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<int>(ids.size()));
    if (inserted) out.labels.push_back(name);
    return it->second;
  };
  id("x0");
  id("y0");
  id("v0");
  id("v1");
  // ring vertices with the closing identifications
  auto ring = [&](char c, int k) {
    if (k == n) {
      if (!orientable && c == 'x') return id("y0");
      if (!orientable && c == 'y') return id("x0");
      k = 0;
    }
    return id(std::string(1, c) + std::to_string(k));
  };

  struct Prism {
    char a, b, apex;
  };
  const Prism prisms[] = {{'x', 'y', 'r'}, {'y', 'z', 's'}, {'x', 'z', 't'}};
  for (int k = 1; k <= n; ++k) {
    for (const auto& pr : prisms) {
      int v0 = ring('v', k - 1);
      int v1 = ring('v', k);
      int c = id(std::string(1, pr.apex) + std::to_string(k));
      int a0 = ring(pr.a, k - 1);
      int b0 = ring(pr.b, k - 1);
      int a1 = ring(pr.a, k);
      int b1 = ring(pr.b, k);
      std::vector<VertexSet> five = {{v0, v1, a0, b0}, {v1, c, a0, b0}, {v1, c, b0, b1}, {v1, c, b1, a1}, {v1, c, a1, a0}};
      for (auto& t : five) {
        std::sort(t.begin(), t.end());
        out.tetrahedra.push_back(t);
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    out.core.push_back(ring('v', k));
    VertexSet e{ring('v', k), ring('v', k + 1)};
    std::sort(e.begin(), e.end());
    out.core_edges.push_back(e);
  }
  out.pseudo = ridge_glued(3, out.tetrahedra);
  out.pseudo.set_vertex_names([&] {
    std::vector<std::string> names(idx(static_cast<int>(out.pseudo.faces().count(0))));
    for (int f = 0; f < out.pseudo.facet_count(); ++f)
      for (int l = 0; l < 4; ++l)
        names[idx(out.pseudo.faces().vertex_class(f, l))] = out.labels[idx(out.tetrahedra[idx(f)][idx(l)])];
    return names;
  }());
  if (n >= 3) {
    AbstractComplex k(3, out.tetrahedra);
    std::map<int, std::string> labels;
    for (int v = 0; v < static_cast<int>(out.labels.size()); ++v) labels[v] = out.labels[idx(v)];
    k.set_vertex_labels(std::move(labels));
    out.complex = std::move(k);
  }

  auto tet = [](int k, int prism, int t) { return (k - 1) * 15 + prism * 5 + t; };
  out.base_facet = tet(1, 0, 0);
  std::vector<int> along;
  for (int k = 1; k <= n; ++k)
    for (int t = 0; t < 4; ++t) along.push_back(tet(k, 0, t));
  along.push_back(tet(1, 0, 0));
  out.longitude = path_through(out.pseudo, along);
  out.meridian = path_through(out.pseudo, {tet(1, 0, 0), tet(1, 1, 0), tet(1, 2, 0), tet(1, 0, 0)});
  return out;
}

AbstractComplex surface_base(int g) {
  if (g < 1) throw Error(ErrorCode::BadParameter, "surface base needs g >= 1");
  AbstractComplex q = boundary_simplex(3);
  for (int i = 1; i < g; ++i) q = stellar(q, 0);
  return q;
}

AbstractComplex surface_family(int g) {
  if (g < 0) throw Error(ErrorCode::BadParameter, "surface family needs g >= 0");
  if (g == 0) return AbstractComplex(2, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
  return stellar_all(surface_base(g));
}

AbstractComplex random_surface_patch(int facets, int max_vertices, unsigned seed) {
  if (facets < 1 || max_vertices < 3) throw Error(ErrorCode::BadParameter, "random patch needs facets >= 1, vertices >= 3");
  std::mt19937 rng(seed);
  std::set<VertexSet> have{{0, 1, 2}};
  std::vector<VertexSet> list{{0, 1, 2}};
  int vertices = 3;
  for (int attempts = 0; static_cast<int>(list.size()) < facets && attempts < 50 * facets; ++attempts) {
    const auto& f = list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
    int drop = std::uniform_int_distribution<int>(0, 2)(rng);
    VertexSet edge;
    for (int i = 0; i < 3; ++i)
      if (i != drop) edge.push_back(f[idx(i)]);
    int apex;
    if (vertices < max_vertices && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      apex = vertices++;
    } else {
      apex = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
      if (apex == edge[0] || apex == edge[1]) continue;
    }
    VertexSet t{edge[0], edge[1], apex};
    std::sort(t.begin(), t.end());
    if (have.insert(t).second) list.push_back(t);
  }
  return AbstractComplex(2, std::move(list));
}

GalleryEntry gallery(const std::string& name) {
  GalleryEntry e;
  e.name = name;
  auto set_complex = [&](AbstractComplex k) {
    e.pseudo = as_pseudo(k);
    e.complex = std::move(k);
  };
  const std::string bs = "boundary-simplex-";
  const std::string cy = "cycle-";
  const std::string kn = "knot-nbhd:";
  const std::string sf = "surface:";
  if (name.rfind(bs, 0) == 0) {
    int n = parse_int(name.substr(bs.size()), name);
    set_complex(boundary_simplex(n));
    if (n == 2) e.expected = {2, 0, 6, 0, 1, true};
    if (n == 3) e.expected = {6, 4, 24, 0, 1, true};
  } else if (name == "starred-triangle") {
    set_complex(starred_triangle());
    e.expected = {2, 1, 6, 1, 2, true};
  } else if (name == "hexagon-cone") {
    set_complex(hexagon_cone());
    e.expected = {1, 0, 6, 1, 3, true};
  } else if (name.rfind(cy, 0) == 0) {
    int n = parse_int(name.substr(cy.size()), name);
    set_complex(cycle_graph(n));
    bool odd = n % 2 == 1;
    e.expected = {odd ? 2u : 1u, 0, odd ? 2 * n : n, 0, odd ? 1 : 2, true};
  } else if (name == "figure3") {
    set_complex(figure3_complex());
    e.expected.group_order = 1;
    e.expected.complete_facets = 6;
    e.expected.complete_euler = 1;
    e.expected.partial_components = 3;
    e.expected.locally_strongly_connected = false;
  } else if (name == "torus-z3") {
    set_complex(torus_z3());
    int facets = static_cast<int>(e.complex->facet_count());
    e.expected = {3, 0, 3 * facets, 0, 1, true};
  } else if (name == "nonsimplicial") {
    set_complex(nonsimplicial_unfolding_example());
    e.expected.group_order = 1;
    e.expected.complete_facets = 8;
    e.expected.partial_components = 4;
    e.expected.locally_strongly_connected = false;
  } else if (name.rfind(kn, 0) == 0) {
    auto rest = name.substr(kn.size());
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::BadParameter, "expected knot-nbhd:n:orientable|klein");
    int n = parse_int(rest.substr(0, colon), name);
    auto variant = rest.substr(colon + 1);
    if (variant != "orientable" && variant != "klein")
      throw Error(ErrorCode::BadParameter, "knot-nbhd variant must be orientable or klein");
    auto kn_result = knot_neighborhood(n, variant == "orientable");
    e.pseudo = kn_result.pseudo;
    e.complex = kn_result.complex;
    e.expected.odd_faces = n;
  } else if (name.rfind(sf, 0) == 0) {
    int g = parse_int(name.substr(sf.size()), name);
    set_complex(surface_family(g));
    e.expected = {2, 2 * (g + 1), 12 * (g + 1), 2 - 2 * g, 2, true};
  } else {
    throw Error(ErrorCode::BadParameter, "unknown gallery entry '" + name + "'");
  }
  return e;
}

std::vector<std::string> standard_gallery() {
  return {"boundary-simplex-2", "boundary-simplex-3", "starred-triangle", "hexagon-cone", "cycle-3",
          "cycle-4",           "cycle-5",            "figure3",          "torus-z3",     "nonsimplicial",
          "knot-nbhd:2:orientable", "knot-nbhd:3:orientable", "knot-nbhd:3:klein", "surface:0", "surface:1",
          "surface:2"};
}

}  // namespace unfolder
