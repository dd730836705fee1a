#include "unfolder/diagnostics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "unfolder/error.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

bool is_strongly_connected(const PseudoComplex& p) {
  return p.facet_count() > 0 && p.dual_graph().connected();
}

bool is_strongly_connected(const AbstractComplex& k) {
  return k.facet_count() > 0 && dual_graph(k).connected();
}

LocalConnectivity is_locally_strongly_connected(const PseudoComplex& p) {
  const int last = p.faces().first_of_dim(p.dim() - 1);
  for (int c = 0; c < last; ++c) {
    if (!star(p, c).complex.dual_graph().connected()) return {false, c};
  }
  return {};
}

std::optional<std::vector<int>> balanced_coloring(const PseudoComplex& p, int base) {
  const int n = p.facet_count();
  const int d = p.dim();
  if (n == 0) return std::vector<int>{};
  if (base < 0 || base >= n) throw Error(ErrorCode::NotAFacet, "base facet does not exist");
  std::vector<std::vector<int>> color(idx(n));
  std::vector<int> starts{base};
  for (int f = 0; f < n; ++f)
    if (f != base) starts.push_back(f);
  for (int s : starts) {
    if (!color[idx(s)].empty()) continue;
    color[idx(s)].resize(idx(d + 1));
    for (int i = 0; i <= d; ++i) color[idx(s)][idx(i)] = i;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int id : p.ridge_gluings_of(u)) {
        int v = p.gluing(id).other(u);
        if (!color[idx(v)].empty()) continue;
        Permutation q = perspectivity(p, id, u);
        color[idx(v)].resize(idx(d + 1));
        for (int i = 0; i <= d; ++i) color[idx(v)][idx(q[i])] = color[idx(u)][idx(i)];
        queue.push_back(v);
      }
    }
  }
  std::vector<int> out(idx(static_cast<int>(p.faces().count(0))), -1);
  for (int f = 0; f < n; ++f) {
    for (int i = 0; i <= d; ++i) {
      int vc = p.faces().vertex_class(f, i);
      int c = color[idx(f)][idx(i)];
      if (out[idx(vc)] >= 0 && out[idx(vc)] != c) return std::nullopt;
      out[idx(vc)] = c;
    }
  }
  return out;
}

bool is_odd_face(const PseudoComplex& p, int face_class) {
  if (p.faces().dim_of(face_class) != p.dim() - 2)
    throw Error(ErrorCode::BadParameter, "face class " + std::to_string(face_class) + " is not of codimension 2");
  PseudoComplex lk = link(p, face_class);
  const int nodes = static_cast<int>(lk.faces().count(0));
  std::vector<std::vector<int>> adj(idx(nodes));
  for (int f = 0; f < lk.facet_count(); ++f) {
    int a = lk.faces().vertex_class(f, 0);
    int b = lk.faces().vertex_class(f, 1);
    adj[idx(a)].push_back(b);
    adj[idx(b)].push_back(a);
  }
  std::vector<int> side(idx(nodes), -1);
  for (int s = 0; s < nodes; ++s) {
    if (side[idx(s)] >= 0) continue;
    side[idx(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[idx(u)]) {
        if (side[idx(v)] < 0) {
          side[idx(v)] = 1 - side[idx(u)];
          queue.push_back(v);
        } else if (side[idx(v)] == side[idx(u)]) {
          return true;
        }
      }
    }
  }
  return false;
}

OddSubcomplex odd_subcomplex(const PseudoComplex& p) {
  OddSubcomplex out;
  if (p.dim() < 2) {
    out.as_complex = AbstractComplex(-1, {});
    return out;
  }
  auto lsc = is_locally_strongly_connected(p);
  if (!lsc.connected)
    throw Error(ErrorCode::NotLocallyStronglyConnected,
                "star of face class " + std::to_string(lsc.witness) + " is not strongly connected");
  const int first = p.faces().first_of_dim(p.dim() - 2);
  const int last = p.faces().first_of_dim(p.dim() - 1);
  std::vector<VertexSet> facets;
  for (int c = first; c < last; ++c) {
    if (!is_odd_face(p, c)) continue;
    out.odd_faces.push_back(c);
    facets.push_back(p.faces().vertex_set(c));
  }
  out.as_complex = AbstractComplex(p.dim() - 2, std::move(facets));
  return out;
}

const char* to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Closed: return "closed";
    case ManifoldKind::WithBoundary: return "with-boundary";
    case ManifoldKind::No: return "no";
  }
  return "no";
}

ManifoldKind pseudo_manifold_kind(const PseudoComplex& p) {
  if (p.dim() == 0 || p.facet_count() == 0) return ManifoldKind::No;
  const int first = p.faces().first_of_dim(p.dim() - 1);
  const int last = p.faces().first_of_dim(p.dim());
  bool boundary = false;
  for (int c = first; c < last; ++c) {
    auto deg = p.faces().members(c).size();
    if (deg > 2) return ManifoldKind::No;
    if (deg == 1) boundary = true;
  }
  return boundary ? ManifoldKind::WithBoundary : ManifoldKind::Closed;
}

bool is_orientable(const PseudoComplex& p) {
  if (pseudo_manifold_kind(p) == ManifoldKind::No) return false;
  const int n = p.facet_count();
  std::vector<int> eps(idx(n), 0);
  for (int s = 0; s < n; ++s) {
    if (eps[idx(s)] != 0) continue;
    eps[idx(s)] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int id : p.ridge_gluings_of(u)) {
        int v = p.gluing(id).other(u);
        int want = -perspectivity(p, id, u).sign() * eps[idx(u)];
        if (eps[idx(v)] == 0) {
          eps[idx(v)] = want;
          queue.push_back(v);
        } else if (eps[idx(v)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

long euler_characteristic(const PseudoComplex& p) {
  long chi = 0;
  for (int k = 0; k <= p.dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * p.faces().count(k);
  return chi;
}

long euler_characteristic(const AbstractComplex& k) {
  long chi = 0;
  auto counts = k.face_counts();
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  return chi;
}

std::optional<std::vector<VertexSet>> mod2_boundary_check(const AbstractComplex& k, const AbstractComplex& l) {
  const int d = k.dim();
  if (l.facet_count() == 0) return std::vector<VertexSet>{};
  if (l.dim() != d - 2 || d < 2)
    throw Error(ErrorCode::DimensionMismatch, "subcomplex must have codimension 2");
  for (const auto& f : l.facets())
    if (!k.contains_face(f)) throw Error(ErrorCode::NotAFace, "facet of the subcomplex is not a face");

  auto ridges = k.faces(d - 1);
  auto lower = k.faces(d - 2);
  std::map<VertexSet, int> row_of;
  for (int i = 0; i < static_cast<int>(lower.size()); ++i) row_of[lower[idx(i)]] = i;
  const int cols = static_cast<int>(ridges.size());
  const std::size_t words = idx(cols / 64 + 1);
  // augmented column sits at bit `cols`
  std::vector<std::vector<std::uint64_t>> rows(lower.size(), std::vector<std::uint64_t>(words, 0));
  auto set_bit = [](std::vector<std::uint64_t>& r, int c) { r[idx(c / 64)] ^= std::uint64_t{1} << (c % 64); };
  auto get_bit = [](const std::vector<std::uint64_t>& r, int c) { return (r[idx(c / 64)] >> (c % 64)) & 1u; };
  for (int c = 0; c < cols; ++c) {
    const auto& r = ridges[idx(c)];
    for (std::size_t skip = 0; skip < r.size(); ++skip) {
      VertexSet face;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (i != skip) face.push_back(r[i]);
      set_bit(rows[idx(row_of.at(face))], c);
    }
  }
  for (const auto& f : l.facets()) set_bit(rows[idx(row_of.at(f))], cols);

  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (get_bit(rows[idx(r)], c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[idx(pivot)], rows[idx(rank)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !get_bit(rows[idx(r)], c)) continue;
      for (std::size_t w = 0; w < words; ++w) rows[idx(r)][w] ^= rows[idx(rank)][w];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r)
    if (get_bit(rows[idx(r)], cols)) return std::nullopt;
  std::vector<VertexSet> chain;
  for (int r = 0; r < rank; ++r)
    if (get_bit(rows[idx(r)], cols)) chain.push_back(ridges[idx(pivot_col[idx(r)])]);
  std::sort(chain.begin(), chain.end());
  return chain;
}

Niceness check_niceness(const PseudoComplex& p) {
  Niceness out;
  auto lsc = is_locally_strongly_connected(p);
  if (!lsc.connected) {
    out.witness = lsc.witness;
    out.reason = "star of face class " + std::to_string(lsc.witness) + " is not strongly connected";
    return out;
  }
  if (p.dim() > 3) {
    out.nice = true;
    out.asserted = true;
    out.reason = "links of faces of codimension above 2 not examined";
    return out;
  }
  if (p.dim() == 3) {
    for (int v = 0; v < p.faces().count(0); ++v) {
      PseudoComplex lk = link(p, v);
      auto kind = pseudo_manifold_kind(lk);
      long chi = euler_characteristic(lk);
      bool sphere = kind == ManifoldKind::Closed && chi == 2;
      bool disk = kind == ManifoldKind::WithBoundary && chi == 1;
      if (!is_strongly_connected(lk) || !(sphere || disk)) {
        out.witness = v;
        out.reason = "link of vertex class " + std::to_string(v) + " is neither a sphere nor a disk";
        return out;
      }
    }
  }
  out.nice = true;
  return out;
}

bool projects_isomorphically(const PseudoComplex& total, const PseudoComplex& base, const SimplicialMap& proj) {
  if (total.dim() != base.dim() || total.facet_count() != base.facet_count()) return false;
  if (total.faces().class_count() != base.faces().class_count()) return false;
  std::vector<char> hit(idx(base.facet_count()), 0);
  for (int f : proj.facet_map) {
    if (f < 0 || f >= base.facet_count() || hit[idx(f)]) return false;
    hit[idx(f)] = 1;
  }
  std::vector<int> image(idx(total.faces().class_count()), -1);
  std::vector<int> preimage(idx(base.faces().class_count()), -1);
  const int full = 1 << (total.dim() + 1);
  for (int f = 0; f < total.facet_count(); ++f) {
    for (int m = 1; m < full; ++m) {
      Mask mb = 0;
      for (int l : locals_of(static_cast<Mask>(m))) mb |= Mask{1} << proj.local[idx(f)][l];
      int ct = total.faces().class_of(f, static_cast<Mask>(m));
      int cb = base.faces().class_of(proj.facet_map[idx(f)], mb);
      if (image[idx(ct)] < 0) image[idx(ct)] = cb;
      if (preimage[idx(cb)] < 0) preimage[idx(cb)] = ct;
      if (image[idx(ct)] != cb || preimage[idx(cb)] != ct) return false;
    }
  }
  return true;
}

}  // namespace unfolder
