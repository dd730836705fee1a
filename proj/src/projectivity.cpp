#include "unfolder/projectivity.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_facet(const PseudoComplex& p, int f) {
  if (f < 0 || f >= p.facet_count()) throw Error(ErrorCode::NotAFacet, "facet " + std::to_string(f) + " does not exist");
}

}  // namespace

std::vector<int> path_facets(const PseudoComplex& p, const FacetPath& path) {
  if (path.start < 0 || path.start >= p.facet_count())
    throw Error(ErrorCode::InvalidPath, "path starts at a missing facet");
  std::vector<int> out{path.start};
  for (int id : path.gluings) {
    if (id < 0 || id >= static_cast<int>(p.gluings().size()) || !p.is_ridge_gluing(id))
      throw Error(ErrorCode::InvalidPath, "step " + std::to_string(id) + " is not a ridge gluing");
    const Gluing& g = p.gluing(id);
    if (!g.involves(out.back()))
      throw Error(ErrorCode::InvalidPath, "gluing " + std::to_string(id) + " does not touch facet " +
                                              std::to_string(out.back()));
    out.push_back(g.other(out.back()));
  }
  return out;
}

int path_end(const PseudoComplex& p, const FacetPath& path) { return path_facets(p, path).back(); }

FacetPath reversed(const PseudoComplex& p, const FacetPath& path) {
  FacetPath out;
  out.start = path_end(p, path);
  out.gluings.assign(path.gluings.rbegin(), path.gluings.rend());
  return out;
}

FacetPath concatenate(const PseudoComplex& p, const FacetPath& first, const FacetPath& second) {
  if (path_end(p, first) != second.start) throw Error(ErrorCode::InvalidPath, "paths do not meet");
  FacetPath out = first;
  out.gluings.insert(out.gluings.end(), second.gluings.begin(), second.gluings.end());
  return out;
}

FacetPath path_through(const PseudoComplex& p, const std::vector<int>& facets) {
  if (facets.empty()) throw Error(ErrorCode::InvalidPath, "empty facet sequence");
  FacetPath out;
  out.start = facets.front();
  if (out.start < 0 || out.start >= p.facet_count()) throw Error(ErrorCode::InvalidPath, "missing facet");
  for (std::size_t i = 1; i < facets.size(); ++i) {
    int from = facets[i - 1];
    int to = facets[i];
    int found = -1;
    for (int id : p.ridge_gluings_of(from)) {
      if (p.gluing(id).other(from) != to) continue;
      if (found >= 0)
        throw Error(ErrorCode::InvalidPath, "facets " + std::to_string(from) + " and " + std::to_string(to) +
                                                " share several ridges; name the gluing");
      found = id;
    }
    if (found < 0)
      throw Error(ErrorCode::InvalidPath, "facets " + std::to_string(from) + " and " + std::to_string(to) +
                                              " are not adjacent");
    out.gluings.push_back(found);
  }
  return out;
}

Permutation perspectivity(const PseudoComplex& p, int id, int from_facet) {
  if (id < 0 || id >= static_cast<int>(p.gluings().size()) || !p.is_ridge_gluing(id) ||
      !p.gluing(id).involves(from_facet))
    throw Error(ErrorCode::BadGluing, "gluing " + std::to_string(id) + " is not a ridge of facet " +
                                          std::to_string(from_facet));
  const Gluing& g = p.gluing(id);
  const bool forward = g.facet_a == from_facet;
  const auto& src = forward ? g.a_locals : g.b_locals;
  const auto& dst = forward ? g.b_locals : g.a_locals;
  std::vector<int> images(idx(p.dim() + 1));
  for (std::size_t i = 0; i < src.size(); ++i) images[idx(src[i])] = dst[i];
  images[idx(p.opposite_local(id, from_facet))] = p.opposite_local(id, g.other(from_facet));
  return Permutation(std::move(images));
}

Permutation projectivity(const PseudoComplex& p, const FacetPath& path) {
  auto facets = path_facets(p, path);
  Permutation out = Permutation::identity(p.dim() + 1);
  for (std::size_t i = 0; i < path.gluings.size(); ++i) out = out * perspectivity(p, path.gluings[i], facets[i]);
  return out;
}

FacetPath ProjectivityGroup::tree_path(const PseudoComplex& p, int facet) const {
  FacetPath out;
  out.start = base;
  int f = facet;
  while (parent_gluing[idx(f)] >= 0) {
    out.gluings.push_back(parent_gluing[idx(f)]);
    f = p.gluing(parent_gluing[idx(f)]).other(f);
  }
  std::reverse(out.gluings.begin(), out.gluings.end());
  return out;
}

FacetPath ProjectivityGroup::generator_loop(const PseudoComplex& p, int id) const {
  const Gluing& g = p.gluing(id);
  FacetPath out = tree_path(p, g.facet_a);
  out.gluings.push_back(id);
  FacetPath back = reversed(p, tree_path(p, g.facet_b));
  out.gluings.insert(out.gluings.end(), back.gluings.begin(), back.gluings.end());
  return out;
}

ProjectivityGroup projectivity_group(const PseudoComplex& p, int base) {
  require_facet(p, base);
  ProjectivityGroup pg;
  pg.base = base;
  const int n = p.facet_count();
  pg.parent_gluing.assign(idx(n), -1);
  pg.transport.assign(idx(n), Permutation());
  std::vector<char> seen(idx(n), 0);
  std::vector<char> tree(p.gluings().size(), 0);
  seen[idx(base)] = 1;
  pg.transport[idx(base)] = Permutation::identity(p.dim() + 1);
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    pg.bfs_order.push_back(u);
    for (int id : p.ridge_gluings_of(u)) {
      int v = p.gluing(id).other(u);
      if (seen[idx(v)]) continue;
      seen[idx(v)] = 1;
      tree[idx(id)] = 1;
      pg.parent_gluing[idx(v)] = id;
      pg.transport[idx(v)] = pg.transport[idx(u)] * perspectivity(p, id, u);
      queue.push_back(v);
    }
  }
  if (static_cast<int>(pg.bfs_order.size()) != n)
    throw Error(ErrorCode::NotStronglyConnected, "dual graph is disconnected");

  std::vector<Generator> gens;
  for (int id = 0; id < static_cast<int>(p.gluings().size()); ++id) {
    if (!p.is_ridge_gluing(id) || tree[idx(id)]) continue;
    const Gluing& g = p.gluing(id);
    pg.non_tree_gluings.push_back(id);
    Permutation h = pg.transport[idx(g.facet_a)] * perspectivity(p, id, g.facet_a) *
                    pg.transport[idx(g.facet_b)].inverse();
    gens.push_back({std::move(h), GeneratorOrigin::TreeEdge, id});
  }
  pg.group = PermutationGroup::generate(p.dim() + 1, std::move(gens));
  return pg;
}

PermutationGroup star_subgroup(const PseudoComplex& p, const ProjectivityGroup& pg, int face_class) {
  Star s = star(p, face_class);
  const Permutation& t = pg.transport[idx(s.facet_origin.front())];
  auto local = projectivity_group(s.complex, 0);
  std::vector<Generator> gens;
  for (const auto& g : local.group.generators())
    gens.push_back({t * g.perm * t.inverse(), GeneratorOrigin::User, g.source});
  return PermutationGroup::generate(p.dim() + 1, std::move(gens));
}

PermutationGroup odd_generated_subgroup(const PseudoComplex& p, int base) {
  auto lsc = is_locally_strongly_connected(p);
  if (!lsc.connected)
    throw Error(ErrorCode::NotLocallyStronglyConnected,
                "star of face class " + std::to_string(lsc.witness) + " is not strongly connected");
  auto pg = projectivity_group(p, base);
  std::vector<Generator> gens;
  for (int kappa : odd_subcomplex(p).odd_faces) {
    Star s = star(p, kappa);
    auto local = projectivity_group(s.complex, 0);
    const Generator* around = nullptr;
    for (const auto& g : local.group.generators()) {
      if (!g.perm.is_identity()) {
        around = &g;
        break;
      }
    }
    if (!around) throw Error(ErrorCode::Mismatch, "odd face " + std::to_string(kappa) + " has no odd loop");
    const Permutation& t = pg.transport[idx(s.facet_origin.front())];
    Permutation h = t * around->perm * t.inverse();
    if (!h.is_transposition())
      throw Error(ErrorCode::Mismatch, "projectivity around face " + std::to_string(kappa) + " is " + h.cycles());
    gens.push_back({std::move(h), GeneratorOrigin::OddFace, kappa});
  }
  return PermutationGroup::generate(p.dim() + 1, std::move(gens));
}

// ---------------------------------------------------------------------------
// Maps

SimplicialMap SimplicialMap::identity(const PseudoComplex& p) {
  SimplicialMap f;
  for (int i = 0; i < p.facet_count(); ++i) {
    f.facet_map.push_back(i);
    f.local.push_back(Permutation::identity(p.dim() + 1));
  }
  return f;
}

void validate_map(const PseudoComplex& source, const PseudoComplex& target, const SimplicialMap& f) {
  if (source.dim() != target.dim()) throw Error(ErrorCode::DegenerateMap, "dimensions differ");
  if (static_cast<int>(f.facet_map.size()) != source.facet_count() ||
      static_cast<int>(f.local.size()) != source.facet_count())
    throw Error(ErrorCode::DegenerateMap, "map does not cover every facet");
  const int full = 1 << (source.dim() + 1);
  std::vector<int> image(idx(source.faces().class_count()), -1);
  for (int s = 0; s < source.facet_count(); ++s) {
    int t = f.facet_map[idx(s)];
    if (t < 0 || t >= target.facet_count()) throw Error(ErrorCode::DegenerateMap, "facet image missing");
    if (f.local[idx(s)].size() != source.dim() + 1) throw Error(ErrorCode::DegenerateMap, "local map size");
    for (int m = 1; m < full; ++m) {
      Mask mt = 0;
      for (int l : locals_of(static_cast<Mask>(m))) mt |= Mask{1} << f.local[idx(s)][l];
      int cs = source.faces().class_of(s, static_cast<Mask>(m));
      int ct = target.faces().class_of(t, mt);
      if (image[idx(cs)] < 0) image[idx(cs)] = ct;
      if (image[idx(cs)] != ct)
        throw Error(ErrorCode::DegenerateMap, "face class " + std::to_string(cs) + " has two images");
    }
  }
}

SimplicialMap from_vertex_map(const AbstractComplex& k, const AbstractComplex& l, const std::map<int, int>& f) {
  if (k.dim() != l.dim()) throw Error(ErrorCode::DegenerateMap, "dimensions differ");
  SimplicialMap out;
  for (const auto& facet : k.facets()) {
    VertexSet image;
    for (int v : facet) {
      auto it = f.find(v);
      if (it == f.end()) throw Error(ErrorCode::DegenerateMap, "vertex " + std::to_string(v) + " has no image");
      image.push_back(it->second);
    }
    int t = l.find_facet(image);
    if (t < 0) throw Error(ErrorCode::DegenerateMap, "a facet is not sent onto a facet");
    const auto& tv = l.facets()[idx(t)];
    std::vector<int> local;
    for (int v : image) local.push_back(static_cast<int>(std::find(tv.begin(), tv.end(), v) - tv.begin()));
    out.facet_map.push_back(t);
    out.local.emplace_back(std::move(local));
  }
  return out;
}

InducedHomomorphism induced_homomorphism_check(const PseudoComplex& source, const PseudoComplex& target,
                                               const SimplicialMap& f, int base) {
  validate_map(source, target, f);
  InducedHomomorphism out;
  auto ps = projectivity_group(source, base);
  const int tbase = f.facet_map[idx(base)];
  auto pt = projectivity_group(target, tbase);
  const Permutation& phi = f.local[idx(base)];
  out.source_order = ps.group.order();
  out.target_order = pt.group.order();

  auto conj = [&](const Permutation& g) { return phi.inverse() * g * phi; };

  for (const auto& gen : ps.group.generators()) {
    FacetPath loop = ps.generator_loop(source, gen.source);
    auto facets = path_facets(source, loop);
    FacetPath image;
    image.start = tbase;
    for (std::size_t i = 0; i < loop.gluings.size(); ++i) {
      int a = facets[i];
      int b = facets[i + 1];
      int ta = f.facet_map[idx(a)];
      int tb = f.facet_map[idx(b)];
      if (ta == tb) continue;
      Mask ridge = source.gluing(loop.gluings[i]).mask_on(a);
      Mask tridge = 0;
      for (int l : locals_of(ridge)) tridge |= Mask{1} << f.local[idx(a)][l];
      int found = -1;
      for (int id : target.ridge_gluings_of(ta)) {
        const Gluing& g = target.gluing(id);
        if (g.other(ta) == tb && g.mask_on(ta) == tridge) {
          found = id;
          break;
        }
      }
      if (found < 0) {
        out.failure = "no target ridge between images of facets " + std::to_string(a) + " and " + std::to_string(b);
        return out;
      }
      image.gluings.push_back(found);
    }
    Permutation pushed = projectivity(target, image);
    if (pushed != conj(gen.perm)) {
      out.failure = "loop through gluing " + std::to_string(gen.source) + " maps to " + pushed.cycles() +
                    ", expected " + conj(gen.perm).cycles();
      return out;
    }
  }

  std::set<Permutation> images;
  for (const auto& g : ps.group.elements()) {
    Permutation h = conj(g);
    if (!pt.group.contains(h)) {
      out.failure = "image " + h.cycles() + " is not a projectivity of the target";
      return out;
    }
    images.insert(h);
  }
  for (const auto& a : ps.group.elements())
    for (const auto& b : ps.group.elements())
      if (conj(a * b) != conj(a) * conj(b)) {
        out.failure = "not a homomorphism";
        return out;
      }
  out.image_order = images.size();
  out.injective = images.size() == ps.group.order();
  out.surjective = images.size() == pt.group.order();
  out.ok = out.injective;
  if (!out.ok) out.failure = "not injective";
  return out;
}

InducedHomomorphism induced_homomorphism_check(const AbstractComplex& k, const AbstractComplex& l,
                                               const std::map<int, int>& f, int base) {
  return induced_homomorphism_check(as_pseudo(k), as_pseudo(l), from_vertex_map(k, l, f), base);
}

}  // namespace unfolder
