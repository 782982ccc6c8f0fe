#pragma once

// Single-valued pseudocomplement notions: the pseudocomplement x^y of x in
// the section [y,1], the relative pseudocomplement x*y, the sectional
// pseudocomplement x o y, and the negation x^0 with its laws.

#include <optional>
#include <vector>

#include "unsharp/poset.hpp"
#include "unsharp/report.hpp"

namespace unsharp {

/// Partial map (x, y) -> x^y, defined only when y <= x.
class section_table {
public:
  section_table() = default;
  explicit section_table(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  std::optional<element> at(element x, element y) const { return cells_[x * n_ + y]; }
  void set(element x, element y, element value) { cells_[x * n_ + y] = value; }
  std::size_t defined_count() const;

  bool operator==(const section_table&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::optional<element>> cells_;
};

/// The greatest element of `candidates`, if there is one.
std::optional<element> greatest(const poset& p, element_set candidates);

/// x^y: the greatest z with L(x,z) & [y,1] = {y}, searched over all of P.
///
/// Returns nullopt when x is not in [y,1] or when the candidates have no
/// greatest element. Throws precondition_violated when P has no top.
std::optional<element> section_pseudocomplement(const poset& p, element x, element y);

struct section_check {
  check_report report;
  /// Present exactly when the report passed.
  std::optional<section_table> table;
};

/// Checks that P has a top and that every section [y,1] is pseudocomplemented.
section_check verify_pseudocomplemented_sections(const poset& p, bool all_witnesses = false);

/// A poset together with its complete section table. Holding one is proof
/// that the poset has pseudocomplemented sections.
class sectioned_poset {
public:
  /// Throws not_pseudocomplemented_sections, carrying the first witness.
  explicit sectioned_poset(poset p);

  /// The checked poset, or nullopt when some section is not pseudocomplemented.
  static std::optional<sectioned_poset> try_make(poset p);

  const poset& order() const { return poset_; }
  const section_table& sections() const { return table_; }
  std::size_t size() const { return poset_.size(); }
  element top() const { return *poset_.top(); }

  /// x^y for y <= x.
  element pc(element x, element y) const { return *table_.at(x, y); }

private:
  sectioned_poset(poset p, section_table t) : poset_(std::move(p)), table_(std::move(t)) {}

  poset poset_;
  section_table table_;
};

/// x*y: the greatest z with L(x,z) contained in L(y).
std::optional<element> relative_pseudocomplement(const poset& p, element x, element y);

/// x o y: the greatest z with L(U(x,y), z) = L(y).
std::optional<element> sectional_pseudocomplement(const poset& p, element x, element y);

bool is_relatively_pseudocomplemented(const poset& p);

/// Negation x^0. Throws no_bottom_element when P has no bottom.
element negation(const sectioned_poset& sp, element x);
/// Same, verifying the sections first (throws not_pseudocomplemented_sections).
element negation(const poset& p, element x);

/// Laws P1 to P4 of the negation plus contraposition in order form.
/// Throws no_bottom_element when P has no bottom.
check_report negation_laws_report(const sectioned_poset& sp, bool all_witnesses = false);

struct skeleton {
  /// The image {x^0}, ascending by index in the original poset.
  element_set members;
  poset subposet;
  check_report report;
};

/// The subposet of negation images and a certificate that it is complemented.
///
/// Requires top, bottom and x^0 for every x; throws no_top_element,
/// no_bottom_element or precondition_violated otherwise.
skeleton glivenko_skeleton(const poset& p, bool all_witnesses = false);

}  // namespace unsharp
