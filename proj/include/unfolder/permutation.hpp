#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace unfolder {

/// A bijection of the labels {0..n-1}.
///
/// Products follow the right-action convention used for projectivities:
/// `(a * b)[i] == b[a[i]]`, i.e. `a` is applied first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition of `i` and `j` on `n` labels.
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  bool is_identity() const;
  bool is_transposition() const;
  int sign() const;
  /// Cycle notation with fixed points omitted, "()" for the identity.
  std::string cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

enum class GeneratorOrigin { TreeEdge, OddFace, User };

struct Generator {
  Permutation perm;
  GeneratorOrigin origin = GeneratorOrigin::User;
  /// Non-tree gluing id (TreeEdge) or odd face class id (OddFace); -1 otherwise.
  int source = -1;
};

/// A finite permutation group stored as its full, sorted element list.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Closes `generators` under composition. Identity generators are kept in
  /// the generator list (they record provenance) but do not affect the group.
  static PermutationGroup generate(int degree, std::vector<Generator> generators);
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Generator>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  bool is_trivial() const { return elements_.size() <= 1; }
  bool is_subgroup_of(const PermutationGroup& other) const;
  /// Orbits of the natural action on {0..degree-1}, each sorted, ordered by minimum.
  std::vector<std::vector<int>> orbits() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Generator> generators_;
};

}  // namespace unfolder
