#include "unsharp/ialgebra.hpp"

#include "unsharp/error.hpp"
#include "unsharp/operators.hpp"

namespace unsharp {

ialgebra::ialgebra(std::vector<std::string> labels, std::vector<element_set> arrow, element unit)
    : labels_(std::move(labels)), arrow_(std::move(arrow)), unit_(unit) {
  const std::size_t n = labels_.size();
  if (n == 0 || n > max_elements) throw error(errc::precondition_violated, "carrier size out of range");
  if (arrow_.size() != n * n) throw error(errc::precondition_violated, "arrow table must be n x n");
  if (unit_ >= n) throw error(errc::precondition_violated, "unit outside the carrier");
  const element_set carrier = element_set::all(n);
  for (const element_set& cell : arrow_) {
    if (cell.empty()) throw error(errc::precondition_violated, "arrow cells must be nonempty");
    if (!cell.subset_of(carrier)) throw error(errc::precondition_violated, "arrow cell outside the carrier");
  }
}

ialgebra ialgebra::with_cell(element x, element y, element_set value) const {
  std::vector<element_set> cells = arrow_;
  cells[x * size() + y] = value;
  return ialgebra(labels_, std::move(cells), unit_);
}

check_report axioms_report(const ialgebra& a, bool all_witnesses) {
  const auto n = static_cast<element>(a.size());
  const element one = a.unit();

  // above[x] = {y | x -> y = 1}, below[y] = {x | x -> y = 1}.
  std::vector<element_set> above(n), below(n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (a.is_unit(x, y)) {
        above[x].insert(y);
        below[y].insert(x);
      }
    }
  }

  check_report r(all_witnesses);
  const auto i1 = r.declare("I1 x->x = x->1 = 1");
  const auto i2 = r.declare("I2 x->y = y->x = 1 => x = y");
  const auto i3 = r.declare("I3 x->y = y->z = 1 => x->z = 1");
  const auto i4 = r.declare("I4 y->z = z->x = z->(x->y) = 1 => z = y");
  const auto i5 = r.declare("I5 y->x = y->u = 1 and (y->z = z->x = z->u = 1 => z = y) => u->(x->y) = 1");
  const auto i6 = r.declare("I6 x->y = {z->y | z minimal with x->z = y->z = 1}");

  for (element x = 0; x < n; ++x) {
    if (!above[x].contains(x) || !above[x].contains(one)) r.fail(i1, witness{x});
  }

  for (element x = 0; x < n; ++x) {
    for (element y : above[x]) {
      if (x != y && above[y].contains(x)) r.fail(i2, witness{x, y});
      for (element z : above[y] - above[x]) r.fail(i3, witness{x, y, z});
    }
  }

  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      const element_set xy = a.arrow(x, y);

      // z with z -> w = 1 for every w in x -> y.
      element_set below_cell = element_set::all(n);
      for (element w : xy) below_cell &= below[w];

      for (element z : above[y] & below[x] & below_cell) {
        if (z != y) r.fail(i4, witness{x, y, z});
      }

      if (above[y].contains(x)) {
        for (element u : above[y]) {
          const bool only_y = (above[y] & below[x] & below[u]).subset_of(element_set::singleton(y));
          if (only_y && !below_cell.contains(u)) r.fail(i5, witness{x, y, u});
        }
      }

      const element_set upper = above[x] & above[y];
      element_set expected;
      for (element z : upper) {
        if ((upper & below[z]).subset_of(element_set::singleton(z))) expected |= a.arrow(z, y);
      }
      if (expected != xy) r.fail(i6, witness{x, y});
    }
  }
  return r;
}

ialgebra algebra_of(const sectioned_poset& sp) {
  const auto n = static_cast<element>(sp.size());
  std::vector<element_set> cells(n * n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) cells[x * n + y] = implication(sp, x, y);
  }
  return ialgebra(sp.order().labels(), std::move(cells), sp.top());
}

ialgebra algebra_of(const poset& p) { return algebra_of(sectioned_poset(p)); }

derived_poset poset_of(const ialgebra& a) {
  const auto n = static_cast<element>(a.size());
  const auto& labels = a.labels();
  std::vector<element_set> up(n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (a.is_unit(x, y)) up[x].insert(y);
    }
    if (!up[x].contains(x)) throw error(errc::order_axiom_failure, "not reflexive at " + labels[x]);
  }

  std::optional<poset> order;
  try {
    order = poset::from_up_sets(labels, std::move(up));
  } catch (const error& e) {
    throw error(errc::order_axiom_failure, e.what());
  }
  if (order->top() != a.unit()) {
    throw error(errc::order_axiom_failure, "unit " + labels[a.unit()] + " is not the top element");
  }

  section_table extracted(n);
  for (element y = 0; y < n; ++y) {
    for (element x : order->up(y)) {
      const element_set cell = a.arrow(x, y);
      if (!cell.is_singleton()) {
        throw error(errc::non_singleton_section, "cell " + labels[x] + "->" + labels[y]);
      }
      extracted.set(x, y, cell.single());
    }
  }

  auto check = verify_pseudocomplemented_sections(*order);
  if (!check.table) throw error(errc::section_mismatch, "derived order lacks pseudocomplemented sections");
  for (element y = 0; y < n; ++y) {
    for (element x : order->up(y)) {
      if (extracted.at(x, y) != check.table->at(x, y)) {
        throw error(errc::section_mismatch, "cell " + labels[x] + "->" + labels[y] + " is " +
                                                labels[*extracted.at(x, y)] + ", pseudocomplement is " +
                                                labels[*check.table->at(x, y)]);
      }
    }
  }
  return derived_poset{std::move(*order), std::move(extracted)};
}

check_report roundtrip_check(const poset& p) {
  check_report r;
  const auto order = r.declare("order survives poset -> algebra -> poset");
  const auto sections = r.declare("sections survive poset -> algebra -> poset");
  try {
    const sectioned_poset sp(p);
    const derived_poset back = poset_of(algebra_of(sp));
    if (!(back.order == p)) r.fail(order, std::string("derived order differs"));
    if (!(back.sections == sp.sections())) r.fail(sections, std::string("derived sections differ"));
  } catch (const error& e) {
    r.fail(order, std::string(e.what()));
  }
  return r;
}

check_report roundtrip_check(const ialgebra& a) {
  check_report r;
  const auto arrow = r.declare("arrow table survives algebra -> poset -> algebra");
  try {
    const derived_poset back = poset_of(a);
    const ialgebra again = algebra_of(sectioned_poset(back.order));
    const auto n = static_cast<element>(a.size());
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (again.arrow(x, y) != a.arrow(x, y)) r.fail(arrow, witness{x, y});
      }
    }
    if (again.unit() != a.unit()) r.fail(arrow, std::string("unit differs"));
  } catch (const error& e) {
    r.fail(arrow, std::string(e.what()));
  }
  return r;
}

}  // namespace unsharp
