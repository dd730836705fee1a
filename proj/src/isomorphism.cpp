#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "unfolder/diagnostics.hpp"

namespace unfolder {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<std::vector<std::size_t>> degree_profile(const PseudoComplex& p) {
  std::vector<std::vector<std::size_t>> out(idx(p.dim() + 1));
  for (int c = 0; c < p.faces().class_count(); ++c)
    out[idx(p.faces().dim_of(c))].push_back(p.faces().members(c).size());
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

class Search {
 public:
  Search(const PseudoComplex& p, const PseudoComplex& q, const SimplicialMap* pp, const SimplicialMap* pq)
      : p_(p), q_(q), pp_(pp), pq_(pq), full_(1 << (p.dim() + 1)) {
    const int n = p.facet_count();
    facet_.assign(idx(n), -1);
    used_.assign(idx(q.facet_count()), 0);
    local_.assign(idx(n), Permutation());
    cm_.assign(idx(p.faces().class_count()), -1);
    cmi_.assign(idx(q.faces().class_count()), -1);

    // BFS order over the dual graph of P, one root per component
    std::vector<char> seen(idx(n), 0);
    for (int s = 0; s < n; ++s) {
      if (seen[idx(s)]) continue;
      seen[idx(s)] = 1;
      order_.push_back(s);
      via_.push_back(-1);
      std::deque<int> queue{s};
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int id : p.ridge_gluings_of(u)) {
          int v = p.gluing(id).other(u);
          if (seen[idx(v)]) continue;
          seen[idx(v)] = 1;
          order_.push_back(v);
          via_.push_back(id);
          queue.push_back(v);
        }
      }
    }
  }

  bool run() { return solve(0); }

  IsoWitness witness() const {
    IsoWitness w{facet_, local_, cm_, {}};
    w.vertex_map.assign(cm_.begin(), cm_.begin() + p_.faces().count(0));
    return w;
  }

 private:
  bool assign(int f, int g, const Permutation& lam) {
    const std::size_t mark = trail_.size();
    for (int m = 1; m < full_; ++m) {
      Mask mq = 0;
      for (int l : locals_of(static_cast<Mask>(m))) mq |= Mask{1} << lam[l];
      int cp = p_.faces().class_of(f, static_cast<Mask>(m));
      int cq = q_.faces().class_of(g, mq);
      if (cm_[idx(cp)] == cq) continue;
      if (cm_[idx(cp)] >= 0 || cmi_[idx(cq)] >= 0) {
        undo(mark);
        return false;
      }
      cm_[idx(cp)] = cq;
      cmi_[idx(cq)] = cp;
      trail_.push_back(cp);
    }
    facet_[idx(f)] = g;
    used_[idx(g)] = 1;
    local_[idx(f)] = lam;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int cp = trail_.back();
      trail_.pop_back();
      cmi_[idx(cm_[idx(cp)])] = -1;
      cm_[idx(cp)] = -1;
    }
  }

  void unassign(int f, std::size_t mark) {
    used_[idx(facet_[idx(f)])] = 0;
    facet_[idx(f)] = -1;
    undo(mark);
  }

  // Local map forced by the projections, if any.
  bool allowed(int f, int g, const Permutation& lam) const {
    if (!pp_) return true;
    if (pp_->facet_map[idx(f)] != pq_->facet_map[idx(g)]) return false;
    return lam * pq_->local[idx(g)] == pp_->local[idx(f)];
  }

  bool attempt(std::size_t i, int f, int g, const Permutation& lam) {
    if (!allowed(f, g, lam)) return false;
    const std::size_t mark = trail_.size();
    if (!assign(f, g, lam)) return false;
    if (solve(i + 1)) return true;
    unassign(f, mark);
    return false;
  }

  bool solve(std::size_t i) {
    if (i == order_.size()) return true;
    const int f = order_[i];
    const int d = p_.dim();
    if (via_[i] < 0) {
      for (int g = 0; g < q_.facet_count(); ++g) {
        if (used_[idx(g)]) continue;
        if (pp_) {
          if (pp_->facet_map[idx(f)] != pq_->facet_map[idx(g)]) continue;
          if (attempt(i, f, g, pp_->local[idx(f)] * pq_->local[idx(g)].inverse())) return true;
          continue;
        }
        std::vector<int> images(idx(d + 1));
        std::iota(images.begin(), images.end(), 0);
        do {
          if (attempt(i, f, g, Permutation(images))) return true;
        } while (std::next_permutation(images.begin(), images.end()));
      }
      return false;
    }
    const int id = via_[i];
    const Mask ridge = p_.gluing(id).mask_on(f);
    const int target = cm_[idx(p_.faces().class_of(f, ridge))];
    const int opposite = p_.opposite_local(id, f);
    for (const auto& member : q_.faces().members(target)) {
      const int g = member.facet;
      if (used_[idx(g)]) continue;
      std::vector<int> images(idx(d + 1), -1);
      bool ok = true;
      for (int l : locals_of(ridge)) {
        int want = cm_[idx(p_.faces().vertex_class(f, l))];
        int found = -1;
        for (int j = 0; j <= d; ++j)
          if (q_.faces().vertex_class(g, j) == want) found = j;
        if (found < 0 || !(member.mask & (Mask{1} << found))) {
          ok = false;
          break;
        }
        images[idx(l)] = found;
      }
      if (!ok) continue;
      const Mask full = static_cast<Mask>(full_ - 1);
      images[idx(opposite)] = std::countr_zero(full & ~member.mask);
      if (attempt(i, f, g, Permutation(images))) return true;
    }
    return false;
  }

  const PseudoComplex& p_;
  const PseudoComplex& q_;
  const SimplicialMap* pp_;
  const SimplicialMap* pq_;
  const int full_;
  std::vector<int> order_;
  std::vector<int> via_;
  std::vector<int> facet_;
  std::vector<char> used_;
  std::vector<Permutation> local_;
  std::vector<int> cm_;
  std::vector<int> cmi_;
  std::vector<int> trail_;
};

std::optional<IsoWitness> search(const PseudoComplex& p, const PseudoComplex& q, const SimplicialMap* pp,
                                 const SimplicialMap* pq) {
  if (p.dim() != q.dim() || p.facet_count() != q.facet_count()) return std::nullopt;
  if (p.faces().counts() != q.faces().counts()) return std::nullopt;
  if (degree_profile(p) != degree_profile(q)) return std::nullopt;
  Search s(p, q, pp, pq);
  if (!s.run()) return std::nullopt;
  return s.witness();
}

}  // namespace

std::optional<IsoWitness> isomorphic(const PseudoComplex& p, const PseudoComplex& q) {
  return search(p, q, nullptr, nullptr);
}

std::optional<IsoWitness> isomorphic(const PseudoComplex& p, const PseudoComplex& q, const SimplicialMap& proj_p,
                                     const SimplicialMap& proj_q) {
  return search(p, q, &proj_p, &proj_q);
}

std::optional<IsoWitness> isomorphic(const AbstractComplex& k, const AbstractComplex& l) {
  return isomorphic(as_pseudo(k), as_pseudo(l));
}

}  // namespace unfolder
