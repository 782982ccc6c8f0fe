#pragma once

// Finite posets: construction, validation and the elementary order queries
// (cones, minimal/maximal elements, sections, pairwise bounds, Hasse edges).

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unsharp/element_set.hpp"

namespace unsharp {

using label_pair = std::pair<std::string, std::string>;
using index_pair = std::pair<element, element>;

enum class cone_dir { lower, upper };
enum class extreme_dir { min, max };
enum class bound_dir { join, meet };

/// A finite partially ordered set over dense indices with string labels.
///
/// The order is stored fully closed: `down(i)` is every element below or
/// equal to `i` and `up(i)` every element above or equal to it. Instances
/// are immutable and always satisfy the partial order axioms.
class poset {
public:
  /// Reflexive-transitive closure of a Hasse diagram.
  /// Throws duplicate_label, unknown_label or cycle_detected.
  static poset from_covers(std::vector<std::string> labels, std::span<const label_pair> covers);

  /// Reflexive closure of `pairs` (each pair is low <= high), validated
  /// against antisymmetry and transitivity without closing it further.
  static poset from_relation(std::vector<std::string> labels, std::span<const label_pair> pairs);
  static poset from_relation(std::vector<std::string> labels, std::span<const index_pair> pairs);

  /// Builds from per-element up-sets (`up[i]` holds every j with i <= j).
  /// Reflexivity is added; antisymmetry and transitivity are validated.
  static poset from_up_sets(std::vector<std::string> labels, std::vector<element_set> up);

  std::size_t size() const { return labels_.size(); }
  element_set carrier() const { return element_set::all(size()); }

  const std::string& label(element e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<element> find(std::string_view label) const;
  /// Like find() but throws unknown_label.
  element at(std::string_view label) const;

  bool leq(element a, element b) const { return up_[a].contains(b); }
  bool lt(element a, element b) const { return a != b && leq(a, b); }
  bool comparable(element a, element b) const { return leq(a, b) || leq(b, a); }

  element_set up(element a) const { return up_[a]; }
  element_set down(element a) const { return down_[a]; }

  std::optional<element> top() const { return top_; }
  std::optional<element> bottom() const { return bottom_; }

  bool operator==(const poset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

private:
  poset(std::vector<std::string> labels, std::vector<element_set> up);

  std::vector<std::string> labels_;
  std::vector<element_set> up_;
  std::vector<element_set> down_;
  std::optional<element> top_;
  std::optional<element> bottom_;
};

/// L(A) or U(A). The cone of the empty set is the whole carrier.
element_set cone(const poset& p, element_set a, cone_dir dir);

/// Min A or Max A; empty exactly when A is empty.
element_set extremes(const poset& p, element_set a, extreme_dir dir);

/// The section [y, 1]. Throws no_top_element when the poset has no top.
element_set section(const poset& p, element y);

/// a v b or a ^ b when it exists.
std::optional<element> bound_of_pair(const poset& p, element a, element b, bound_dir dir);

inline std::optional<element> join(const poset& p, element a, element b) {
  return bound_of_pair(p, a, b, bound_dir::join);
}
inline std::optional<element> meet(const poset& p, element a, element b) {
  return bound_of_pair(p, a, b, bound_dir::meet);
}

bool is_lattice(const poset& p);

/// Transitive reduction of the strict order, sorted by (lower, upper).
std::vector<index_pair> cover_relation(const poset& p);

/// The subposet induced on `subset`, labels kept in ascending index order.
poset induced_subposet(const poset& p, element_set subset);

/// A <= B in the pointwise-universal sense: a <= b for all a in A, b in B.
bool set_leq(const poset& p, element_set a, element_set b);

/// True when no two distinct members of `a` are comparable.
bool is_antichain(const poset& p, element_set a);

}  // namespace unsharp
