#include "unfolder/unfolding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "unfolder/error.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int find_root(std::vector<int>& parent, int x) {
  while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
  return x;
}

void label_components(UnfoldingResult& u) {
  const int n = u.total.facet_count();
  std::vector<int> parent(idx(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : u.total.gluings()) {
    int a = find_root(parent, g.facet_a);
    int b = find_root(parent, g.facet_b);
    if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, int> ids;
  u.component.assign(idx(n), -1);
  for (int f = 0; f < n; ++f) {
    auto [it, inserted] = ids.emplace(find_root(parent, f), static_cast<int>(ids.size()));
    u.component[idx(f)] = it->second;
  }
  u.component_count = static_cast<int>(ids.size());
}

SimplicialMap identity_locals(const std::vector<int>& facet_map, int d) {
  SimplicialMap m;
  m.facet_map = facet_map;
  m.local.assign(facet_map.size(), Permutation::identity(d + 1));
  return m;
}

}  // namespace

std::vector<int> UnfoldingResult::facets_of_component(int k) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(component.size()); ++f)
    if (component[idx(f)] == k) out.push_back(f);
  return out;
}

UnfoldingResult complete_unfolding(const PseudoComplex& p, int base) {
  auto pg = projectivity_group(p, base);
  const auto& elements = pg.group.elements();
  const int sheets = static_cast<int>(elements.size());
  auto rank = [&](const Permutation& g) {
    return static_cast<int>(std::lower_bound(elements.begin(), elements.end(), g) - elements.begin());
  };

  UnfoldingResult u;
  u.kind = UnfoldingKind::Complete;
  u.base = p;
  u.base_facet = base;
  u.sheets = elements.size();
  std::vector<int> facet_map;
  for (int s = 0; s < p.facet_count(); ++s) {
    for (const auto& g : elements) {
      facet_map.push_back(s);
      u.colorings.push_back((g * pg.transport[idx(s)]).inverse());
    }
  }
  std::vector<Gluing> gluings;
  for (int id = 0; id < static_cast<int>(p.gluings().size()); ++id) {
    if (!p.is_ridge_gluing(id)) continue;
    const Gluing& e = p.gluing(id);
    Permutation h = pg.transport[idx(e.facet_a)] * perspectivity(p, id, e.facet_a) *
                    pg.transport[idx(e.facet_b)].inverse();
    for (int i = 0; i < sheets; ++i) {
      Gluing g = e;
      g.facet_a = e.facet_a * sheets + i;
      g.facet_b = e.facet_b * sheets + rank(elements[idx(i)] * h);
      gluings.push_back(std::move(g));
    }
  }
  u.total = PseudoComplex(p.dim(), p.facet_count() * sheets, std::move(gluings));
  u.projection = identity_locals(facet_map, p.dim());
  label_components(u);
  return u;
}

UnfoldingResult partial_unfolding(const PseudoComplex& p, int base) {
  const int d = p.dim();
  UnfoldingResult u;
  u.kind = UnfoldingKind::Partial;
  u.base = p;
  u.base_facet = base;
  std::vector<int> facet_map;
  for (int s = 0; s < p.facet_count(); ++s) {
    for (int v = 0; v <= d; ++v) {
      facet_map.push_back(s);
      u.distinguished.push_back(v);
    }
  }
  std::vector<Gluing> gluings;
  for (int id = 0; id < static_cast<int>(p.gluings().size()); ++id) {
    if (!p.is_ridge_gluing(id)) continue;
    const Gluing& e = p.gluing(id);
    Permutation q = perspectivity(p, id, e.facet_a);
    for (int v = 0; v <= d; ++v) {
      Gluing g = e;
      g.facet_a = e.facet_a * (d + 1) + v;
      g.facet_b = e.facet_b * (d + 1) + q[v];
      gluings.push_back(std::move(g));
    }
  }
  u.total = PseudoComplex(d, p.facet_count() * (d + 1), std::move(gluings));
  u.projection = identity_locals(facet_map, d);
  label_components(u);
  return u;
}

SubComplex restrict_to(const PseudoComplex& p, const std::vector<int>& facets) {
  SubComplex out;
  out.facet_origin = facets;
  std::vector<int> position(idx(p.facet_count()), -1);
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) position[idx(facets[idx(i)])] = i;
  std::vector<Gluing> gluings;
  for (const auto& g : p.gluings()) {
    int a = position[idx(g.facet_a)];
    int b = position[idx(g.facet_b)];
    if (a < 0 || b < 0) continue;
    Gluing h = g;
    h.facet_a = a;
    h.facet_b = b;
    gluings.push_back(std::move(h));
  }
  out.complex = PseudoComplex(p.dim(), static_cast<int>(facets.size()), std::move(gluings));
  return out;
}

Component extract_component(const UnfoldingResult& u, int k) {
  if (k < 0 || k >= u.component_count) throw Error(ErrorCode::BadParameter, "component " + std::to_string(k) + " does not exist");
  auto sub = restrict_to(u.total, u.facets_of_component(k));
  Component c;
  c.complex = std::move(sub.complex);
  c.facet_origin = std::move(sub.facet_origin);
  for (int f : c.facet_origin) {
    c.projection.facet_map.push_back(u.projection.facet_map[idx(f)]);
    c.projection.local.push_back(u.projection.local[idx(f)]);
  }
  return c;
}

int component_count(const PseudoComplex& p, int base) {
  auto pg = projectivity_group(p, base);
  auto u = partial_unfolding(p, base);
  auto orbits = pg.group.orbits();
  if (static_cast<int>(orbits.size()) != u.component_count)
    throw Error(ErrorCode::Mismatch, std::to_string(u.component_count) + " components but " +
                                         std::to_string(orbits.size()) + " orbits");
  const int d = p.dim();
  for (const auto& orbit : orbits) {
    for (int v : orbit) {
      if (u.component[idx(base * (d + 1) + v)] != u.component[idx(base * (d + 1) + orbit.front())])
        throw Error(ErrorCode::Mismatch, "orbit splits across components");
    }
  }
  return u.component_count;
}

Tower composition_tower(const PseudoComplex& p, int base, std::vector<int> vertex_order) {
  const int d = p.dim();
  if (vertex_order.empty()) {
    vertex_order.resize(idx(d + 1));
    std::iota(vertex_order.begin(), vertex_order.end(), 0);
  }
  {
    auto sorted = vertex_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= d; ++i)
      if (static_cast<int>(sorted.size()) != d + 1 || sorted[idx(i)] != i)
        throw Error(ErrorCode::BadParameter, "vertex order must list each local label once");
  }
  if (!is_strongly_connected(p)) throw Error(ErrorCode::NotStronglyConnected, "dual graph is disconnected");

  Tower t;
  t.stages.push_back(p);
  t.base_facets.push_back(base);
  std::vector<int> composite(idx(p.facet_count()));
  std::iota(composite.begin(), composite.end(), 0);
  for (int i = 0; i <= d; ++i) {
    const PseudoComplex& current = t.stages.back();
    const int sigma = t.base_facets.back();
    auto u = partial_unfolding(current, sigma);
    const int chosen = sigma * (d + 1) + vertex_order[idx(i)];
    auto c = extract_component(u, u.component[idx(chosen)]);
    int next_base = static_cast<int>(std::find(c.facet_origin.begin(), c.facet_origin.end(), chosen) -
                                     c.facet_origin.begin());
    std::vector<int> next_composite;
    for (int f : c.projection.facet_map) next_composite.push_back(composite[idx(f)]);
    composite = std::move(next_composite);
    t.maps.push_back(c.projection);
    t.stages.push_back(std::move(c.complex));
    t.base_facets.push_back(next_base);
  }
  t.composite = identity_locals(composite, d);
  t.complete = complete_unfolding(p, base);
  auto w = isomorphic(t.stages.back(), t.complete.total, t.composite, t.complete.projection);
  if (!w) throw Error(ErrorCode::IsomorphismNotFound, "last stage of the tower is not the complete unfolding");
  t.witness = std::move(*w);
  return t;
}

std::vector<Fiber> branch_locus_counts(const UnfoldingResult& u) {
  const PseudoComplex& b = u.base;
  auto nice = check_niceness(b);
  if (!nice.nice) throw Error(ErrorCode::BaseNotNice, nice.reason);
  std::vector<Fiber> out;
  if (b.dim() < 2) return out;
  std::vector<std::vector<int>> over(idx(b.facet_count()));
  for (int f = 0; f < u.total.facet_count(); ++f) over[idx(u.projection.facet_map[idx(f)])].push_back(f);

  const int first = b.faces().first_of_dim(b.dim() - 2);
  const int last = b.faces().first_of_dim(b.dim() - 1);
  for (int kappa = first; kappa < last; ++kappa) {
    Fiber fiber;
    fiber.base_class = kappa;
    fiber.odd = is_odd_face(b, kappa);
    const auto& around = b.faces().members(kappa);
    std::map<int, int> upstairs;
    for (const auto& r : around) {
      for (int f : over[idx(r.facet)]) {
        Mask m = 0;
        for (int l : locals_of(r.mask)) m |= Mask{1} << u.projection.local[idx(f)][l];
        ++upstairs[u.total.faces().class_of(f, m)];
      }
    }
    for (auto [cls, count] : upstairs) {
      if (count % static_cast<int>(around.size()) != 0)
        throw Error(ErrorCode::Mismatch, "preimage of face class " + std::to_string(kappa) + " is not a cover of its star");
      fiber.points.push_back({cls, count / static_cast<int>(around.size())});
    }
    out.push_back(std::move(fiber));
  }
  return out;
}

}  // namespace unfolder
