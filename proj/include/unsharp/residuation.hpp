#pragma once

// Unsharp residuation of (P, ., ->, 1), divisibility, and the relative
// residuation conditions on lattices.

#include "unsharp/operators.hpp"
#include "unsharp/report.hpp"
#include "unsharp/sections.hpp"

namespace unsharp {

/// Verdicts for the unsharp residuation conditions and divisibility.
///
/// Two conditions admit two readings of a set-valued expression:
///
///  - associativity lifts . to sets either through the down-sets the
///    operands generate (conjunction_downset) or through the common lower
///    cone of all members (conjunction_of_sets);
///  - monotonicity "x . z <= t for some t in y . z" either asks that every
///    member of x . z lies below some member of y . z, or that a single t
///    bounds the whole set.
///
/// The first reading of each gates passed(); the second is recorded
/// alongside so that posets where the readings differ can be surfaced.
struct residuation_report {
  check_report commutativity;
  check_report associativity;
  check_report unit;
  check_report monotonicity;
  check_report adjointness;
  check_report divisibility;

  check_report associativity_common_cone;
  check_report monotonicity_single_bound;

  bool passed() const;
  /// True when the recorded alternative readings disagree with the gating ones.
  bool readings_differ() const;
  /// Every verdict, gating ones first, with alternatives prefixed "recorded: ".
  check_report flatten() const;
};

/// Throws no_top_element when P has no top; the sectioned_poset argument
/// already guarantees pseudocomplemented sections.
residuation_report unsharp_residuation_report(const sectioned_poset& sp, bool all_witnesses = false);

/// For all y <= x: x->y is a singleton and (x . (x->y)) & [y,1] = {y}.
check_report divisibility_report(const sectioned_poset& sp, bool all_witnesses = false);

/// On a lattice with pseudocomplemented sections (where every cell of ->
/// and . is a singleton): monotonicity and relative adjointness, the three
/// identities that axiomatize them, and the equivalence of the two groups.
/// Throws not_a_lattice.
check_report lattice_relative_residuation_report(const sectioned_poset& sp, bool all_witnesses = false);

}  // namespace unsharp
