#include "unfolder/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "unfolder/error.hpp"

namespace unfolder {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::BadParameter, "images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto images = identity(n).images_;
  std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorCode::BadParameter, "permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = rhs.images_[static_cast<std::size_t>(images_[i])];
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) ++moved;
  return moved == 2;
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int sign = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    out << '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      if (j != i) out << ' ';
      out << j;
      seen[static_cast<std::size_t>(j)] = 1;
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

PermutationGroup PermutationGroup::trivial(int degree) { return generate(degree, {}); }

PermutationGroup PermutationGroup::generate(int degree, std::vector<Generator> generators) {
  PermutationGroup group;
  group.degree_ = degree;
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.perm.size() != degree) throw Error(ErrorCode::BadParameter, "generator degree mismatch");
    if (!g.perm.is_identity()) gens.push_back(g.perm);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Orbit of the identity under right multiplication by the generators; for
  // a finite group this is the whole group.
  std::set<Permutation> elements{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = current * g;
      if (elements.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  group.elements_.assign(elements.begin(), elements.end());
  group.generators_ = std::move(generators);
  return group;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<int> owner(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<int>> result;
  for (int i = 0; i < degree_; ++i) {
    if (owner[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> orbit;
    for (const auto& g : elements_) {
      int image = g[i];
      if (owner[static_cast<std::size_t>(image)] < 0) {
        owner[static_cast<std::size_t>(image)] = static_cast<int>(result.size());
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

}  // namespace unfolder
