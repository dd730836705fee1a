// Brute-force reference computations on abstract complexes, written
// independently of the library's pseudo-complex machinery.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Facets = std::vector<std::vector<int>>;

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline int shared(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  for (int x : a) n += std::count(b.begin(), b.end(), x) > 0;
  return n;
}

// State: a facet with its vertices listed in the order induced from the base
// facet by moving across ridges. The group of projectivities is the set of
// reorderings of the base facet that are reachable.
struct Walk {
  std::vector<std::vector<int>> states;
  std::vector<int> facet_of;
};

inline Walk walk_states(const Facets& facets, int base) {
  std::map<std::vector<int>, int> seen;
  Walk w;
  std::queue<std::vector<int>> todo;
  auto push = [&](std::vector<int> s) {
    if (seen.count(s)) return;
    seen[s] = static_cast<int>(w.states.size());
    w.states.push_back(s);
    auto key = sorted(s);
    int f = static_cast<int>(std::find(facets.begin(), facets.end(), key) - facets.begin());
    w.facet_of.push_back(f);
    todo.push(std::move(s));
  };
  push(facets[static_cast<std::size_t>(base)]);
  while (!todo.empty()) {
    auto s = todo.front();
    todo.pop();
    auto key = sorted(s);
    for (const auto& t : facets) {
      if (t == key || shared(t, key) != static_cast<int>(key.size()) - 1) continue;
      int out = 0;
      for (int x : t)
        if (!std::count(key.begin(), key.end(), x)) out = x;
      auto next = s;
      for (int& x : next)
        if (!std::count(t.begin(), t.end(), x)) x = out;
      push(next);
    }
  }
  return w;
}

// Reachable reorderings of the base facet as permutations of its positions.
inline std::set<std::vector<int>> group(const Facets& facets, int base) {
  auto w = walk_states(facets, base);
  const auto& b = facets[static_cast<std::size_t>(base)];
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < w.states.size(); ++i) {
    if (w.facet_of[i] != base) continue;
    std::vector<int> perm;
    for (int x : w.states[i]) perm.push_back(static_cast<int>(std::find(b.begin(), b.end(), x) - b.begin()));
    out.insert(perm);
  }
  return out;
}

inline int union_find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

// Face counts of the complete unfolding: facet copies are walk states, glued
// along ridges between states related by one move.
inline std::vector<long> complete_face_counts(const Facets& facets, int base) {
  auto w = walk_states(facets, base);
  const int d = static_cast<int>(facets.front().size()) - 1;
  const int masks = 1 << (d + 1);
  const int n = static_cast<int>(w.states.size());
  std::vector<int> parent(static_cast<std::size_t>(n * masks));
  std::iota(parent.begin(), parent.end(), 0);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[w.states[static_cast<std::size_t>(i)]] = i;
  for (int i = 0; i < n; ++i) {
    const auto& s = w.states[static_cast<std::size_t>(i)];
    auto key = sorted(s);
    for (const auto& t : facets) {
      if (t == key || shared(t, key) != d) continue;
      int out = 0;
      for (int x : t)
        if (!std::count(key.begin(), key.end(), x)) out = x;
      auto next = s;
      int gone = -1;
      for (int p = 0; p <= d; ++p)
        if (!std::count(t.begin(), t.end(), next[static_cast<std::size_t>(p)])) {
          next[static_cast<std::size_t>(p)] = out;
          gone = p;
        }
      int j = index.at(next);
      // Position p of state i and position p of state j carry the same ridge vertex.
      for (int m = 1; m < masks; ++m) {
        if (m & (1 << gone)) continue;
        int a = union_find(parent, i * masks + m);
        int b = union_find(parent, j * masks + m);
        parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  std::vector<long> counts(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i < n; ++i)
    for (int m = 1; m < masks; ++m)
      if (union_find(parent, i * masks + m) == i * masks + m) ++counts[static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(m)) - 1)];
  return counts;
}

inline long euler(const std::vector<long>& counts) {
  long chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * counts[k];
  return chi;
}

// Components of the partial unfolding: (facet, vertex) moves to (neighbor,
// image of the vertex under the perspectivity).
inline std::vector<int> partial_component_sizes(const Facets& facets) {
  const int d = static_cast<int>(facets.front().size()) - 1;
  std::map<std::pair<int, int>, int> comp;
  std::vector<int> sizes;
  for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
    for (int v : facets[static_cast<std::size_t>(f)]) {
      if (comp.count({f, v})) continue;
      int id = static_cast<int>(sizes.size());
      sizes.push_back(0);
      std::queue<std::pair<int, int>> todo;
      todo.push({f, v});
      comp[{f, v}] = id;
      while (!todo.empty()) {
        auto [g, x] = todo.front();
        todo.pop();
        ++sizes.back();
        const auto& a = facets[static_cast<std::size_t>(g)];
        for (int h = 0; h < static_cast<int>(facets.size()); ++h) {
          const auto& b = facets[static_cast<std::size_t>(h)];
          if (h == g || shared(a, b) != d) continue;
          int y = x;
          if (!std::count(b.begin(), b.end(), x))
            for (int z : b)
              if (!std::count(a.begin(), a.end(), z)) y = z;
          if (!comp.count({h, y})) {
            comp[{h, y}] = id;
            todo.push({h, y});
          }
        }
      }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Every assignment of d+1 colors to the vertices, looking for a proper one.
inline bool balanced(const Facets& facets) {
  std::vector<int> verts;
  for (const auto& f : facets) verts.insert(verts.end(), f.begin(), f.end());
  verts = sorted(verts);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int colors = static_cast<int>(facets.front().size());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<int> c(verts.size(), 0);
  while (true) {
    bool ok = true;
    for (const auto& f : facets) {
      std::set<int> used;
      for (int v : f) used.insert(c[static_cast<std::size_t>(pos[v])]);
      if (static_cast<int>(used.size()) != colors) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == colors) c[i++] = 0;
    if (i == c.size()) return false;
  }
}

// Codimension-2 faces whose link graph has an odd cycle, by trying every
// 2-coloring of the link vertices.
inline std::set<std::vector<int>> odd_faces(const Facets& facets) {
  const int d = static_cast<int>(facets.front().size()) - 1;
  std::set<std::vector<int>> faces;
  for (const auto& f : facets)
    for (int a = 0; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b) {
        std::vector<int> face;
        for (int i = 0; i <= d; ++i)
          if (i != a && i != b) face.push_back(f[static_cast<std::size_t>(i)]);
        faces.insert(face);
      }
  std::set<std::vector<int>> out;
  for (const auto& face : faces) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> lv;
    for (const auto& f : facets) {
      if (shared(f, face) != static_cast<int>(face.size())) continue;
      std::vector<int> rest;
      for (int x : f)
        if (!std::count(face.begin(), face.end(), x)) rest.push_back(x);
      edges.push_back({rest[0], rest[1]});
      lv.push_back(rest[0]);
      lv.push_back(rest[1]);
    }
    lv = sorted(lv);
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    bool bipartite = false;
    for (unsigned long m = 0; m < (1UL << lv.size()) && !bipartite; ++m) {
      auto side = [&](int v) {
        return (m >> static_cast<unsigned long>(std::find(lv.begin(), lv.end(), v) - lv.begin())) & 1UL;
      };
      bipartite = std::all_of(edges.begin(), edges.end(), [&](auto e) { return side(e.first) != side(e.second); });
    }
    if (!bipartite) out.insert(face);
  }
  return out;
}

// All faces of every dimension, counted by enumerating subsets of facets.
inline std::vector<long> face_counts(const Facets& facets) {
  const int d = static_cast<int>(facets.front().size()) - 1;
  std::vector<std::set<std::vector<int>>> faces(static_cast<std::size_t>(d + 1));
  for (const auto& f : facets)
    for (unsigned m = 1; m < (1U << (d + 1)); ++m) {
      std::vector<int> s;
      for (int i = 0; i <= d; ++i)
        if (m & (1U << i)) s.push_back(f[static_cast<std::size_t>(i)]);
      faces[s.size() - 1].insert(s);
    }
  std::vector<long> out;
  for (const auto& s : faces) out.push_back(static_cast<long>(s.size()));
  return out;
}

}  // namespace oracle
