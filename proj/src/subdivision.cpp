#include "unfolder/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "unfolder/error.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kMaxAntiprismaticDim = 5;

// Sorts facets together with their origins, as AbstractComplex would.
SubdivisionRecord make_record(SubdivisionKind kind, int dim, std::vector<VertexSet> facets, std::vector<int> origin) {
  std::vector<std::size_t> order(facets.size());
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
  SubdivisionRecord rec;
  rec.kind = kind;
  std::vector<VertexSet> sorted;
  for (std::size_t i : order) {
    sorted.push_back(facets[i]);
    rec.facet_origin.push_back(origin[i]);
  }
  rec.result = AbstractComplex(dim, std::move(sorted));
  if (rec.result.facet_count() != rec.facet_origin.size())
    throw Error(ErrorCode::Mismatch, "subdivision produced repeated facets");
  return rec;
}

// Vertex class of as_pseudo(k) -> vertex id of k.
std::vector<int> class_to_vertex(const AbstractComplex& k, const PseudoComplex& p) {
  std::vector<int> out(idx(static_cast<int>(p.faces().count(0))), -1);
  for (int f = 0; f < static_cast<int>(k.facet_count()); ++f)
    for (int l = 0; l <= k.dim(); ++l) out[idx(p.faces().vertex_class(f, l))] = k.facets()[idx(f)][idx(l)];
  return out;
}

// Renames result vertices: ids below `vertex_count` go through `vertex_ids`,
// the rest are shifted above the largest original id.
SubdivisionRecord rename(const SubdivisionRecord& rec, const std::vector<int>& vertex_ids, const AbstractComplex& k) {
  const int vertex_count = static_cast<int>(vertex_ids.size());
  const int shift = (k.vertices().empty() ? -1 : k.vertices().back()) + 1 - vertex_count;
  auto name = [&](int v) { return v < vertex_count ? vertex_ids[idx(v)] : v + shift; };
  std::vector<VertexSet> facets;
  for (const auto& f : rec.result.facets()) {
    VertexSet g;
    for (int v : f) g.push_back(name(v));
    facets.push_back(std::move(g));
  }
  SubdivisionRecord out = make_record(rec.kind, rec.result.dim(), std::move(facets), rec.facet_origin);
  for (const auto& [v, origin] : rec.provenance) out.provenance[name(v)] = origin;
  std::map<int, std::string> labels;
  for (int v = 0; v < vertex_count; ++v)
    if (k.vertex_labels().count(vertex_ids[idx(v)])) labels[vertex_ids[idx(v)]] = k.label(vertex_ids[idx(v)]);
  out.result.set_vertex_labels(std::move(labels));
  return out;
}

std::vector<Mask> block_masks(const std::vector<int>& blocks) {
  std::vector<Mask> masks(blocks.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (blocks[j] <= blocks[i]) masks[i] |= Mask{1} << j;
  return masks;
}

}  // namespace

SubdivisionRecord barycentric(const PseudoComplex& p) {
  const int d = p.dim();
  std::vector<VertexSet> facets;
  std::vector<int> origin;
  for (int f = 0; f < p.facet_count(); ++f) {
    std::vector<int> perm(idx(d + 1));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      VertexSet flag;
      Mask m = 0;
      for (int l : perm) {
        m |= Mask{1} << l;
        flag.push_back(p.faces().class_of(f, m));
      }
      facets.push_back(std::move(flag));
      origin.push_back(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto rec = make_record(SubdivisionKind::Barycentric, d, std::move(facets), std::move(origin));
  for (int c = 0; c < p.faces().class_count(); ++c) rec.provenance[c] = {c, -1};
  return rec;
}

SubdivisionRecord barycentric(const AbstractComplex& k) {
  PseudoComplex p = as_pseudo(k);
  return rename(barycentric(p), class_to_vertex(k, p), k);
}

AbstractComplex stellar(const AbstractComplex& k, int facet) {
  if (facet < 0 || facet >= static_cast<int>(k.facet_count()))
    throw Error(ErrorCode::NotAFacet, "facet " + std::to_string(facet) + " does not exist");
  auto vs = k.vertices();
  const int apex = vs.empty() ? 0 : vs.back() + 1;
  std::vector<VertexSet> facets;
  for (int f = 0; f < static_cast<int>(k.facet_count()); ++f) {
    const auto& verts = k.facets()[idx(f)];
    if (f != facet) {
      facets.push_back(verts);
      continue;
    }
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      VertexSet g{apex};
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) g.push_back(verts[i]);
      facets.push_back(std::move(g));
    }
  }
  AbstractComplex out(k.dim(), std::move(facets));
  out.set_vertex_labels(k.vertex_labels());
  return out;
}

AbstractComplex stellar_all(const AbstractComplex& k) {
  auto vs = k.vertices();
  int next = vs.empty() ? 0 : vs.back() + 1;
  std::vector<VertexSet> facets;
  for (const auto& verts : k.facets()) {
    const int apex = next++;
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      VertexSet g{apex};
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) g.push_back(verts[i]);
      facets.push_back(std::move(g));
    }
  }
  AbstractComplex out(k.dim(), std::move(facets));
  out.set_vertex_labels(k.vertex_labels());
  return out;
}

std::vector<std::vector<int>> ordered_partitions(int d) {
  const int n = d + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> blocks(idx(n), 0);
  while (true) {
    std::vector<char> used(idx(n), 0);
    for (int b : blocks) used[idx(b)] = 1;
    int top = *std::max_element(blocks.begin(), blocks.end());
    if (std::all_of(used.begin(), used.begin() + top + 1, [](char c) { return c != 0; })) out.push_back(blocks);
    int i = n - 1;
    while (i >= 0 && blocks[idx(i)] == n - 1) blocks[idx(i--)] = 0;
    if (i < 0) break;
    ++blocks[idx(i)];
  }
  return out;
}

AntiprismaticComplex antiprismatic_complex(const PseudoComplex& p) {
  const int d = p.dim();
  if (d > kMaxAntiprismaticDim) throw Error(ErrorCode::BadParameter, "anti-prismatic subdivision above dimension 5");
  const auto parts = ordered_partitions(d);
  const int np = static_cast<int>(parts.size());
  std::vector<std::vector<Mask>> masks;
  for (const auto& b : parts) masks.push_back(block_masks(b));

  AntiprismaticComplex a;
  std::vector<Gluing> gluings;
  for (int f = 0; f < p.facet_count(); ++f) {
    for (int i = 0; i < np; ++i) {
      a.facet_origin.push_back(f);
      a.partition.push_back(i);
      std::vector<std::pair<int, int>> pr;
      for (int l = 0; l <= d; ++l) pr.emplace_back(p.faces().class_of(f, masks[idx(i)][idx(l)]), p.faces().vertex_class(f, l));
      a.pairs.push_back(std::move(pr));
    }
    // a-facets of one copy share the pairs on which their flags agree
    for (int i = 0; i < np; ++i) {
      for (int j = i + 1; j < np; ++j) {
        Gluing g;
        g.facet_a = f * np + i;
        g.facet_b = f * np + j;
        for (int l = 0; l <= d; ++l)
          if (masks[idx(i)][idx(l)] == masks[idx(j)][idx(l)]) g.a_locals.push_back(l);
        if (g.a_locals.empty()) continue;
        g.b_locals = g.a_locals;
        gluings.push_back(std::move(g));
      }
    }
  }
  // across an identified face, the part of each a-facet inside that face goes
  // to one a-facet of the other copy containing its image
  for (const auto& e : p.gluings()) {
    std::vector<int> phi(idx(d + 1), -1);
    for (std::size_t i = 0; i < e.a_locals.size(); ++i) phi[idx(e.a_locals[i])] = e.b_locals[i];
    const Mask face = mask_of(e.a_locals);
    auto image = [&](Mask m) {
      Mask out = 0;
      for (int l : locals_of(m)) out |= Mask{1} << phi[idx(l)];
      return out;
    };
    for (int i = 0; i < np; ++i) {
      std::vector<int> inside;
      for (int l = 0; l <= d; ++l)
        if ((masks[idx(i)][idx(l)] & ~face) == 0) inside.push_back(l);
      if (inside.empty()) continue;
      int partner = -1;
      for (int j = 0; j < np && partner < 0; ++j) {
        bool contains = std::all_of(inside.begin(), inside.end(), [&](int l) {
          return masks[idx(j)][idx(phi[idx(l)])] == image(masks[idx(i)][idx(l)]);
        });
        if (contains) partner = j;
      }
      if (partner < 0) throw Error(ErrorCode::Mismatch, "no a-facet contains the image of a glued face");
      Gluing g;
      g.facet_a = e.facet_a * np + i;
      g.facet_b = e.facet_b * np + partner;
      g.a_locals = inside;
      for (int l : inside) g.b_locals.push_back(phi[idx(l)]);
      gluings.push_back(std::move(g));
    }
  }
  a.complex = PseudoComplex(d, p.facet_count() * np, std::move(gluings));
  return a;
}

SubdivisionRecord antiprismatic(const PseudoComplex& p) {
  auto a = antiprismatic_complex(p);
  auto w = is_simplicial(a.complex);
  if (!w.simplicial)
    throw Error(ErrorCode::NotSimplicial, "anti-prismatic subdivision is not simplicial");
  const int vertex_count = static_cast<int>(p.faces().count(0));
  const auto& fc = a.complex.faces();
  std::vector<std::pair<int, int>> pair_of(idx(static_cast<int>(fc.count(0))), {-1, -1});
  for (int f = 0; f < a.complex.facet_count(); ++f) {
    for (int l = 0; l <= p.dim(); ++l) {
      auto& slot = pair_of[idx(fc.vertex_class(f, l))];
      if (slot.first >= 0 && slot != a.pairs[idx(f)][idx(l)])
        throw Error(ErrorCode::Mismatch, "one vertex of the subdivision carries two pairs");
      slot = a.pairs[idx(f)][idx(l)];
    }
  }
  std::set<std::pair<int, int>> distinct(pair_of.begin(), pair_of.end());
  if (distinct.size() != pair_of.size())
    throw Error(ErrorCode::Mismatch, "two vertices of the subdivision carry the same pair");

  std::map<std::pair<int, int>, int> id_of;
  int next = vertex_count;
  for (const auto& pr : distinct) id_of[pr] = pr.first == pr.second ? pr.second : next++;
  std::vector<VertexSet> facets;
  for (const auto& pr : a.pairs) {
    VertexSet f;
    for (const auto& x : pr) f.push_back(id_of.at(x));
    facets.push_back(std::move(f));
  }
  auto rec = make_record(SubdivisionKind::Antiprismatic, p.dim(), std::move(facets), a.facet_origin);
  for (const auto& [pr, id] : id_of) rec.provenance[id] = {pr.first, pr.second};
  return rec;
}

SubdivisionRecord antiprismatic(const AbstractComplex& k) {
  PseudoComplex p = as_pseudo(k);
  return rename(antiprismatic(p), class_to_vertex(k, p), k);
}

SimplicialMap crumpling_map(const AntiprismaticComplex& a) {
  SimplicialMap m;
  m.facet_map = a.facet_origin;
  m.local.assign(a.facet_origin.size(), Permutation::identity(a.complex.dim() + 1));
  return m;
}

std::map<int, int> crumpling_map(const SubdivisionRecord& rec) {
  if (rec.kind != SubdivisionKind::Antiprismatic)
    throw Error(ErrorCode::BadParameter, "crumpling map needs an anti-prismatic subdivision");
  std::map<int, int> vertex_of_class;
  for (const auto& [v, origin] : rec.provenance)
    if (origin.face_class == origin.vertex_class) vertex_of_class[origin.vertex_class] = v;
  std::map<int, int> out;
  for (const auto& [v, origin] : rec.provenance) out[v] = vertex_of_class.at(origin.vertex_class);
  return out;
}

SimplicialMap subdivided_map(const AntiprismaticComplex& source, const AntiprismaticComplex& target,
                             const SimplicialMap& f) {
  const int d = source.complex.dim();
  const auto parts = ordered_partitions(d);
  const int np = static_cast<int>(parts.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < np; ++i) index[parts[idx(i)]] = i;
  SimplicialMap out;
  for (int a = 0; a < source.complex.facet_count(); ++a) {
    const int copy = source.facet_origin[idx(a)];
    const Permutation& lam = f.local[idx(copy)];
    const auto& blocks = parts[idx(source.partition[idx(a)])];
    std::vector<int> moved(idx(d + 1));
    for (int l = 0; l <= d; ++l) moved[idx(lam[l])] = blocks[idx(l)];
    const int t = f.facet_map[idx(copy)] * np + index.at(moved);
    if (t >= target.complex.facet_count()) throw Error(ErrorCode::DegenerateMap, "map leaves the target");
    out.facet_map.push_back(t);
    out.local.push_back(lam);
  }
  return out;
}

AbstractComplex iterate(const AbstractComplex& k, SubdivisionKind kind, int n) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative iteration count");
  AbstractComplex out = k;
  for (int i = 0; i < n; ++i) {
    switch (kind) {
      case SubdivisionKind::Barycentric: out = barycentric(out).result; break;
      case SubdivisionKind::Antiprismatic: out = antiprismatic(out).result; break;
      case SubdivisionKind::Stellar: out = stellar_all(out); break;
    }
  }
  return out;
}

}  // namespace unfolder
