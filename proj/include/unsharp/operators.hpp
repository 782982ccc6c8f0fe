#pragma once

// The set-valued implication x->y = (Min U(x,y))^y and conjunction
// x.y = Max L(x,y), their tables, and the law suites they satisfy.

#include <optional>
#include <vector>

#include "unsharp/poset.hpp"
#include "unsharp/report.hpp"
#include "unsharp/sections.hpp"

namespace unsharp {

/// x -> y: the section pseudocomplements of the minimal upper bounds of
/// {x, y} in [y, 1]. Always nonempty.
element_set implication(const sectioned_poset& sp, element x, element y);

/// Pointwise lift: the union of a -> y over a in A.
element_set implication(const sectioned_poset& sp, element_set a, element y);

/// x . y = Max L(x, y). Empty only when x and y have no common lower bound.
element_set conjunction(const poset& p, element x, element y);

/// A . B = Max L(A u B), the maximal common lower bounds of every member.
/// Throws empty_operand when either operand is empty.
element_set conjunction_of_sets(const poset& p, element_set a, element_set b);

/// A . B read as the union of a . b over a in A, b in B, reduced to its
/// maximal elements; equivalently Max of the intersection of the down-sets
/// generated by A and B. Agrees with conjunction_of_sets on singletons.
/// Throws empty_operand when either operand is empty.
element_set conjunction_downset(const poset& p, element_set a, element_set b);

enum class table_kind { section, implication, conjunction, relative, circ };

/// Total n x n table of set-valued cells; absent cells are undefined.
class operator_table {
public:
  operator_table(table_kind kind, std::size_t n) : kind_(kind), n_(n), cells_(n * n) {}

  table_kind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  const std::optional<element_set>& at(element x, element y) const { return cells_[x * n_ + y]; }
  void set(element x, element y, element_set value) { cells_[x * n_ + y] = value; }

  bool operator==(const operator_table&) const = default;

private:
  table_kind kind_;
  std::size_t n_;
  std::vector<std::optional<element_set>> cells_;
};

/// Builds the table of one operator over P x P.
///
/// `section` and `implication` need a top element, and `implication`
/// additionally pseudocomplemented sections (throws
/// not_pseudocomplemented_sections). Undefined cells of the partial
/// operators (x^y, x*y, x o y) are left absent.
operator_table build_operator_table(const poset& p, table_kind kind);
operator_table build_operator_table(const sectioned_poset& sp, table_kind kind);

/// Identities and elementary laws of the implication, each
/// checked over all tuples under its join-existence guard.
check_report implication_properties_report(const sectioned_poset& sp, bool all_witnesses = false);

/// How -> and . relate to the single-valued operators: cells are
/// antichains, implication members lie in [y, 1], x o y stays below x^y, and
/// on lattices every cell collapses to a singleton with x . y = x ^ y. Also
/// tests whether every member of x->y lies above x*y, which does not hold in
/// general (the pentagon fails it at (b, a)). The x->y antichain law holds on
/// every poset below seven points but not on all of them: ^y can map two
/// incomparable upper bounds to comparable elements.
check_report comparison_report(const sectioned_poset& sp, bool all_witnesses = false);

}  // namespace unsharp
