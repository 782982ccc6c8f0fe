#pragma once

// I-algebras: a finite carrier with a set-valued arrow and a unit, their
// six axioms, and the translations to and from posets with
// pseudocomplemented sections.

#include <string>
#include <vector>

#include "unsharp/poset.hpp"
#include "unsharp/report.hpp"
#include "unsharp/sections.hpp"

namespace unsharp {

class ialgebra {
public:
  /// `arrow` is row-major: arrow[x * n + y] is the cell x -> y.
  /// Throws precondition_violated on shape errors or empty cells.
  ialgebra(std::vector<std::string> labels, std::vector<element_set> arrow, element unit);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  element unit() const { return unit_; }
  element_set arrow(element x, element y) const { return arrow_[x * size() + y]; }

  /// True when x -> y is exactly {unit}.
  bool is_unit(element x, element y) const { return arrow(x, y) == element_set::singleton(unit_); }

  /// A copy with one cell replaced.
  ialgebra with_cell(element x, element y, element_set value) const;

  bool operator==(const ialgebra&) const = default;

private:
  std::vector<std::string> labels_;
  std::vector<element_set> arrow_;
  element unit_;
};

/// Evaluates axioms I1 to I6 by exhaustive quantification. "= 1" means the
/// cell equals {unit}; an arrow applied to a set holds for every member.
check_report axioms_report(const ialgebra& a, bool all_witnesses = false);

/// The algebra (P, ->, 1) of a poset with pseudocomplemented sections.
ialgebra algebra_of(const sectioned_poset& sp);
/// Throws not_pseudocomplemented_sections.
ialgebra algebra_of(const poset& p);

struct derived_poset {
  poset order;
  section_table sections;
};

/// x <= y iff x -> y = {1}; x^y is the cell x -> y whenever y <= x.
///
/// Throws order_axiom_failure when the relation is not a partial order with
/// top equal to the unit, non_singleton_section when a cell with y <= x has
/// several members, and section_mismatch when the extracted cells are not
/// the pseudocomplements of the derived order.
derived_poset poset_of(const ialgebra& a);

/// Translates to an algebra and back, comparing orders and section tables.
check_report roundtrip_check(const poset& p);
/// Translates to a poset and back, comparing arrow tables cell by cell.
check_report roundtrip_check(const ialgebra& a);

}  // namespace unsharp
