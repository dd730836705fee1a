#include "unfolder/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "unfolder/error.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[idx(x)] != x) {
      parent[idx(x)] = parent[idx(parent[idx(x)])];
      x = parent[idx(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
  }
};

std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace

int popcount(Mask m) { return std::popcount(m); }

Mask mask_of(const std::vector<int>& locals) {
  Mask m = 0;
  for (int l : locals) m |= Mask{1} << l;
  return m;
}

std::vector<int> locals_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// AbstractComplex

AbstractComplex::AbstractComplex(int dim, std::vector<VertexSet> facets) : dim_(dim) {
  if (dim < -1) throw Error(ErrorCode::BadParameter, "dimension below -1");
  for (auto& f : facets) {
    if (static_cast<int>(f.size()) != dim + 1)
      throw Error(ErrorCode::MixedDimension, "facet " + describe(f) + " does not have " +
                                                 std::to_string(dim + 1) + " vertices");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::DegenerateFacet, "facet " + describe(f) + " repeats a vertex");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets_ = std::move(facets);
}

AbstractComplex AbstractComplex::from_facets(std::vector<VertexSet> facets) {
  if (facets.empty()) throw Error(ErrorCode::BadParameter, "no facets given");
  int dim = static_cast<int>(facets.front().size()) - 1;
  return AbstractComplex(dim, std::move(facets));
}

std::vector<int> AbstractComplex::vertices() const {
  std::set<int> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

std::string AbstractComplex::label(int v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

std::vector<VertexSet> AbstractComplex::faces(int k) const {
  std::set<VertexSet> out;
  if (k < 0 || k > dim_) return {};
  int n = dim_ + 1;
  for (const auto& f : facets_) {
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      if (popcount(m) != k + 1) continue;
      VertexSet face;
      for (int i = 0; i < n; ++i)
        if (m & (Mask{1} << i)) face.push_back(f[idx(i)]);
      out.insert(std::move(face));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<long> AbstractComplex::face_counts() const {
  std::vector<long> counts;
  for (int k = 0; k <= dim_; ++k) counts.push_back(static_cast<long>(faces(k).size()));
  return counts;
}

int AbstractComplex::find_facet(const VertexSet& vertices) const {
  VertexSet key = vertices;
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(facets_.begin(), facets_.end(), key);
  if (it == facets_.end() || *it != key) return -1;
  return static_cast<int>(it - facets_.begin());
}

bool AbstractComplex::contains_face(const VertexSet& vertices) const {
  VertexSet key = vertices;
  std::sort(key.begin(), key.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) {
    return std::includes(f.begin(), f.end(), key.begin(), key.end());
  });
}

// ---------------------------------------------------------------------------
// Gluing / FaceClasses

Mask Gluing::mask_on(int facet) const {
  return facet == facet_a ? mask_of(a_locals) : mask_of(b_locals);
}

FaceClasses::FaceClasses(int dim, int facet_count, const std::vector<Gluing>& gluings)
    : dim_(dim), facet_count_(facet_count) {
  const int stride = 1 << (dim + 1);
  const std::size_t nodes = idx(facet_count) * idx(stride);
  UnionFind uf(nodes);
  for (const auto& g : gluings) {
    const int k = g.size();
    for (Mask s = 1; s < (Mask{1} << k); ++s) {
      Mask ma = 0;
      Mask mb = 0;
      for (int i = 0; i < k; ++i) {
        if (!(s & (Mask{1} << i))) continue;
        ma |= Mask{1} << g.a_locals[idx(i)];
        mb |= Mask{1} << g.b_locals[idx(i)];
      }
      uf.unite(g.facet_a * stride + static_cast<int>(ma), g.facet_b * stride + static_cast<int>(mb));
    }
  }

  node_class_.assign(nodes, -1);
  std::vector<int> root_class(nodes, -1);
  counts_.assign(idx(dim + 1), 0);
  for (int k = 0; k <= dim; ++k) {
    first_.push_back(static_cast<int>(dims_.size()));
    for (int f = 0; f < facet_count; ++f) {
      for (Mask m = 1; m < static_cast<Mask>(stride); ++m) {
        if (popcount(m) != k + 1) continue;
        int node = f * stride + static_cast<int>(m);
        int root = uf.find(node);
        if (root_class[idx(root)] < 0) {
          root_class[idx(root)] = static_cast<int>(dims_.size());
          dims_.push_back(k);
          members_.emplace_back();
          ++counts_[idx(k)];
        }
        int cls = root_class[idx(root)];
        node_class_[idx(node)] = cls;
        auto& mem = members_[idx(cls)];
        if (!mem.empty() && mem.back().facet == f) {
          std::ostringstream msg;
          msg << "facet " << f << " has two distinct faces {" << describe(locals_of(mem.back().mask))
              << "} and {" << describe(locals_of(m)) << "} identified";
          throw Error(ErrorCode::SelfIdentification, msg.str());
        }
        mem.push_back({f, m});
      }
    }
  }
}

int FaceClasses::class_of(int facet, Mask mask) const {
  return node_class_[idx(facet) * (idx(1) << (dim_ + 1)) + mask];
}

long FaceClasses::count(int k) const {
  if (k < 0 || k > dim_) return 0;
  return counts_[idx(k)];
}

int FaceClasses::first_of_dim(int k) const {
  if (k < 0) return 0;
  if (k > dim_) return class_count();
  return first_[idx(k)];
}

std::vector<int> FaceClasses::vertex_set(int cls) const {
  const FaceRef& r = members(cls).front();
  std::vector<int> out;
  for (int l : locals_of(r.mask)) out.push_back(vertex_class(r.facet, l));
  std::sort(out.begin(), out.end());
  return out;
}

Mask FaceClasses::mask_in(int cls, int facet) const {
  for (const auto& r : members(cls))
    if (r.facet == facet) return r.mask;
  return 0;
}

// ---------------------------------------------------------------------------
// DualGraph

bool DualGraph::has_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; });
}

std::vector<int> DualGraph::components(int* count) const {
  std::vector<int> comp(idx(nodes), -1);
  int c = 0;
  for (int s = 0; s < nodes; ++s) {
    if (comp[idx(s)] >= 0) continue;
    std::deque<int> queue{s};
    comp[idx(s)] = c;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, e] : adjacency[idx(u)]) {
        if (comp[idx(v)] < 0) {
          comp[idx(v)] = c;
          queue.push_back(v);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool DualGraph::connected() const {
  int count = 0;
  components(&count);
  return count == 1;
}

// ---------------------------------------------------------------------------
// PseudoComplex

PseudoComplex::PseudoComplex(int dim, int facet_count, std::vector<Gluing> gluings)
    : dim_(dim), facet_count_(facet_count) {
  if (dim < 0 || dim > kMaxDim)
    throw Error(ErrorCode::BadParameter, "pseudo-complex dimension out of range");
  if (facet_count < 0) throw Error(ErrorCode::BadParameter, "negative facet count");
  for (auto& g : gluings) {
    if (g.facet_a < 0 || g.facet_a >= facet_count || g.facet_b < 0 || g.facet_b >= facet_count)
      throw Error(ErrorCode::BadGluing, "gluing refers to a missing facet");
    if (g.facet_a == g.facet_b)
      throw Error(ErrorCode::SelfIdentification, "gluing joins facet " + std::to_string(g.facet_a) + " to itself");
    if (g.a_locals.size() != g.b_locals.size())
      throw Error(ErrorCode::BadGluing, "gluing sides differ in size");
    if (g.size() > dim) throw Error(ErrorCode::BadGluing, "gluing identifies whole facets");
    for (const auto* side : {&g.a_locals, &g.b_locals}) {
      for (int l : *side)
        if (l < 0 || l > dim) throw Error(ErrorCode::BadGluing, "local label out of range");
      if (popcount(mask_of(*side)) != g.size()) throw Error(ErrorCode::BadGluing, "repeated local label");
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < g.a_locals.size(); ++i) pairs.emplace_back(g.a_locals[i], g.b_locals[i]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      g.a_locals[i] = pairs[i].first;
      g.b_locals[i] = pairs[i].second;
    }
  }
  gluings.erase(std::remove_if(gluings.begin(), gluings.end(), [](const Gluing& g) { return g.size() == 0; }),
                gluings.end());
  gluings_ = std::move(gluings);
  incident_.assign(idx(facet_count), {});
  all_incident_.assign(idx(facet_count), {});
  for (int id = 0; id < static_cast<int>(gluings_.size()); ++id) {
    all_incident_[idx(gluings_[idx(id)].facet_a)].push_back(id);
    all_incident_[idx(gluings_[idx(id)].facet_b)].push_back(id);
    if (!is_ridge_gluing(id)) continue;
    incident_[idx(gluings_[idx(id)].facet_a)].push_back(id);
    incident_[idx(gluings_[idx(id)].facet_b)].push_back(id);
  }
  faces_ = FaceClasses(dim, facet_count, gluings_);
}

int PseudoComplex::opposite_local(int id, int facet) const {
  const Gluing& g = gluing(id);
  if (!g.involves(facet) || g.size() != dim_)
    throw Error(ErrorCode::BadGluing, "gluing " + std::to_string(id) + " is not a ridge of facet " +
                                          std::to_string(facet));
  Mask full = (Mask{1} << (dim_ + 1)) - 1;
  return std::countr_zero(full & ~g.mask_on(facet));
}

DualGraph PseudoComplex::dual_graph() const {
  DualGraph g;
  g.nodes = facet_count_;
  g.adjacency.assign(idx(facet_count_), {});
  for (int id = 0; id < static_cast<int>(gluings_.size()); ++id) {
    if (!is_ridge_gluing(id)) continue;
    const Gluing& gl = gluing(id);
    int e = static_cast<int>(g.edges.size());
    g.edges.emplace_back(gl.facet_a, gl.facet_b);
    g.edge_gluing.push_back(id);
    g.adjacency[idx(gl.facet_a)].emplace_back(gl.facet_b, e);
    g.adjacency[idx(gl.facet_b)].emplace_back(gl.facet_a, e);
  }
  return g;
}

void PseudoComplex::set_vertex_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<long>(names.size()) != faces_.count(0))
    throw Error(ErrorCode::BadParameter, "vertex name count does not match vertex classes");
  vertex_names_ = std::move(names);
}

// ---------------------------------------------------------------------------
// Constructions

PseudoComplex ridge_glued(int dim, const std::vector<VertexSet>& facets) {
  std::map<VertexSet, std::vector<std::pair<int, int>>> ridges;  // ridge -> (facet, opposite local)
  std::set<VertexSet> seen;
  for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
    const auto& verts = facets[idx(f)];
    if (static_cast<int>(verts.size()) != dim + 1)
      throw Error(ErrorCode::MixedDimension, "facet " + describe(verts) + " has the wrong size");
    VertexSet sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::DegenerateFacet, "facet " + describe(verts) + " repeats a vertex");
    if (!seen.insert(sorted).second)
      throw Error(ErrorCode::BadParameter, "facet " + describe(verts) + " listed twice");
    if (dim == 0) continue;
    for (int skip = 0; skip <= dim; ++skip) {
      VertexSet ridge;
      for (int i = 0; i <= dim; ++i)
        if (i != skip) ridge.push_back(verts[idx(i)]);
      std::sort(ridge.begin(), ridge.end());
      ridges[ridge].emplace_back(f, skip);
    }
  }
  std::vector<Gluing> gluings;
  for (const auto& [ridge, inc] : ridges) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        Gluing g;
        g.facet_a = inc[i].first;
        g.facet_b = inc[j].first;
        const auto& va = facets[idx(g.facet_a)];
        const auto& vb = facets[idx(g.facet_b)];
        for (int la = 0; la <= dim; ++la) {
          if (la == inc[i].second) continue;
          g.a_locals.push_back(la);
          g.b_locals.push_back(static_cast<int>(std::find(vb.begin(), vb.end(), va[idx(la)]) - vb.begin()));
        }
        gluings.push_back(std::move(g));
      }
    }
  }
  std::sort(gluings.begin(), gluings.end(), [](const Gluing& x, const Gluing& y) {
    return std::tie(x.facet_a, x.facet_b, x.a_locals) < std::tie(y.facet_a, y.facet_b, y.a_locals);
  });
  return PseudoComplex(dim, static_cast<int>(facets.size()), std::move(gluings));
}

PseudoComplex as_pseudo(const AbstractComplex& k) {
  if (k.dim() < 0) throw Error(ErrorCode::BadParameter, "cannot embed a complex of dimension -1");
  const auto& facets = k.facets();
  const int d = k.dim();
  PseudoComplex p = ridge_glued(d, facets);
  std::vector<Gluing> gluings = p.gluings();

  for (int level = d - 2; level >= 0; --level) {
    std::map<VertexSet, std::vector<FaceRef>> occurrences;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
      for (Mask m = 1; m < (Mask{1} << (d + 1)); ++m) {
        if (popcount(m) != level + 1) continue;
        VertexSet face;
        for (int l : locals_of(m)) face.push_back(facets[idx(f)][idx(l)]);
        occurrences[face].push_back({f, m});
      }
    }
    bool added = false;
    for (const auto& [face, occ] : occurrences) {
      std::set<int> classes{p.faces().class_of(occ.front().facet, occ.front().mask)};
      for (const auto& r : occ) {
        if (!classes.insert(p.faces().class_of(r.facet, r.mask)).second) continue;
        Gluing g;
        g.facet_a = occ.front().facet;
        g.facet_b = r.facet;
        g.a_locals = locals_of(occ.front().mask);
        g.b_locals = locals_of(r.mask);
        gluings.push_back(std::move(g));
        added = true;
      }
    }
    if (added) p = PseudoComplex(d, static_cast<int>(facets.size()), gluings);
  }

  std::vector<std::string> names(idx(static_cast<int>(p.faces().count(0))));
  for (int f = 0; f < static_cast<int>(facets.size()); ++f)
    for (int l = 0; l <= d; ++l) names[idx(p.faces().vertex_class(f, l))] = k.label(facets[idx(f)][idx(l)]);
  p.set_vertex_names(std::move(names));
  return p;
}

SimplicialWitness is_simplicial(const PseudoComplex& p) {
  std::map<std::vector<int>, int> seen;
  for (int c = 0; c < p.faces().class_count(); ++c) {
    auto [it, inserted] = seen.emplace(p.faces().vertex_set(c), c);
    if (!inserted) return {false, it->second, c};
  }
  return {};
}

AbstractComplex to_abstract(const PseudoComplex& p) {
  auto w = is_simplicial(p);
  if (!w.simplicial)
    throw Error(ErrorCode::NotSimplicial, "face classes " + std::to_string(w.class_a) + " and " +
                                              std::to_string(w.class_b) + " share their vertex set");
  std::vector<VertexSet> facets;
  const int first = p.faces().first_of_dim(p.dim());
  for (int c = first; c < p.faces().class_count(); ++c) facets.push_back(p.faces().vertex_set(c));
  AbstractComplex out(p.dim(), std::move(facets));
  if (!p.vertex_names().empty()) {
    std::map<int, std::string> labels;
    for (int v = 0; v < static_cast<int>(p.vertex_names().size()); ++v) labels[v] = p.vertex_names()[idx(v)];
    out.set_vertex_labels(std::move(labels));
  }
  return out;
}

AbstractComplex link(const AbstractComplex& k, const VertexSet& face) {
  VertexSet key = face;
  std::sort(key.begin(), key.end());
  std::vector<VertexSet> facets;
  for (const auto& f : k.facets()) {
    if (!std::includes(f.begin(), f.end(), key.begin(), key.end())) continue;
    VertexSet rest;
    std::set_difference(f.begin(), f.end(), key.begin(), key.end(), std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  if (facets.empty()) throw Error(ErrorCode::NotAFace, describe(key) + " is not a face");
  AbstractComplex out(k.dim() - static_cast<int>(key.size()), std::move(facets));
  out.set_vertex_labels(k.vertex_labels());
  return out;
}

DualGraph dual_graph(const AbstractComplex& k) { return ridge_glued(k.dim(), k.facets()).dual_graph(); }

Star star(const PseudoComplex& p, int face_class) {
  if (face_class < 0 || face_class >= p.faces().class_count())
    throw Error(ErrorCode::NotAFace, "face class " + std::to_string(face_class) + " does not exist");
  Star s;
  std::vector<int> position(idx(p.facet_count()), -1);
  for (const auto& r : p.faces().members(face_class)) {
    position[idx(r.facet)] = static_cast<int>(s.facet_origin.size());
    s.facet_origin.push_back(r.facet);
    s.face_mask.push_back(r.mask);
  }
  std::set<int> candidates;
  for (int f : s.facet_origin) candidates.insert(p.gluings_of(f).begin(), p.gluings_of(f).end());
  std::vector<Gluing> gluings;
  for (int id : candidates) {
    const Gluing& g = p.gluing(id);
    int a = position[idx(g.facet_a)];
    int b = position[idx(g.facet_b)];
    if (a < 0 || b < 0) continue;
    Mask face = s.face_mask[idx(a)];
    if ((g.mask_on(g.facet_a) & face) != face) continue;
    Gluing h = g;
    h.facet_a = a;
    h.facet_b = b;
    gluings.push_back(std::move(h));
    s.gluing_origin.push_back(id);
  }
  s.complex = PseudoComplex(p.dim(), static_cast<int>(s.facet_origin.size()), std::move(gluings));
  return s;
}

PseudoComplex link(const PseudoComplex& p, int face_class) {
  Star s = star(p, face_class);
  const int k = p.faces().dim_of(face_class);
  if (k >= p.dim()) throw Error(ErrorCode::BadParameter, "link of a facet is empty");
  const int full = (1 << (p.dim() + 1)) - 1;
  // new local index of each old local, per star facet
  std::vector<std::vector<int>> renumber;
  for (Mask face : s.face_mask) {
    std::vector<int> r(idx(p.dim() + 1), -1);
    int next = 0;
    for (int l : locals_of(static_cast<Mask>(full) & ~face)) r[idx(l)] = next++;
    renumber.push_back(std::move(r));
  }
  std::vector<Gluing> gluings;
  for (const auto& g : s.complex.gluings()) {
    Gluing h;
    h.facet_a = g.facet_a;
    h.facet_b = g.facet_b;
    for (std::size_t i = 0; i < g.a_locals.size(); ++i) {
      int la = renumber[idx(g.facet_a)][idx(g.a_locals[i])];
      if (la < 0) continue;
      h.a_locals.push_back(la);
      h.b_locals.push_back(renumber[idx(g.facet_b)][idx(g.b_locals[i])]);
    }
    if (!h.a_locals.empty()) gluings.push_back(std::move(h));
  }
  return PseudoComplex(p.dim() - k - 1, s.complex.facet_count(), std::move(gluings));
}

}  // namespace unfolder
