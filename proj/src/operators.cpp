#include "unsharp/operators.hpp"

#include "unsharp/error.hpp"

namespace unsharp {

element_set implication(const sectioned_poset& sp, element x, element y) {
  const poset& p = sp.order();
  const element_set min_upper = extremes(p, p.up(x) & p.up(y), extreme_dir::min);
  element_set result;
  for (element m : min_upper) result.insert(sp.pc(m, y));
  return result;
}

element_set implication(const sectioned_poset& sp, element_set a, element y) {
  element_set result;
  for (element x : a) result |= implication(sp, x, y);
  return result;
}

element_set conjunction(const poset& p, element x, element y) {
  return extremes(p, p.down(x) & p.down(y), extreme_dir::max);
}

element_set conjunction_of_sets(const poset& p, element_set a, element_set b) {
  if (a.empty() || b.empty()) throw error(errc::empty_operand, "conjunction of an empty set");
  return extremes(p, cone(p, a | b, cone_dir::lower), extreme_dir::max);
}

element_set conjunction_downset(const poset& p, element_set a, element_set b) {
  if (a.empty() || b.empty()) throw error(errc::empty_operand, "conjunction of an empty set");
  element_set below_a;
  element_set below_b;
  for (element x : a) below_a |= p.down(x);
  for (element y : b) below_b |= p.down(y);
  return extremes(p, below_a & below_b, extreme_dir::max);
}

namespace {

template <class Cell>
operator_table fill(std::size_t n, table_kind kind, Cell cell) {
  operator_table t(kind, n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (std::optional<element_set> v = cell(x, y)) t.set(x, y, *v);
    }
  }
  return t;
}

std::optional<element_set> as_cell(std::optional<element> e) {
  if (e) return element_set::singleton(*e);
  return std::nullopt;
}

}  // namespace

operator_table build_operator_table(const sectioned_poset& sp, table_kind kind) {
  if (kind == table_kind::implication) {
    return fill(sp.size(), kind, [&](element x, element y) -> std::optional<element_set> {
      return implication(sp, x, y);
    });
  }
  return build_operator_table(sp.order(), kind);
}

operator_table build_operator_table(const poset& p, table_kind kind) {
  switch (kind) {
    case table_kind::implication:
      return build_operator_table(sectioned_poset(p), kind);
    case table_kind::section:
      return fill(p.size(), kind, [&](element x, element y) {
        return as_cell(section_pseudocomplement(p, x, y));
      });
    case table_kind::conjunction:
      return fill(p.size(), kind, [&](element x, element y) -> std::optional<element_set> {
        return conjunction(p, x, y);
      });
    case table_kind::relative:
      return fill(p.size(), kind, [&](element x, element y) {
        return as_cell(relative_pseudocomplement(p, x, y));
      });
    case table_kind::circ:
      return fill(p.size(), kind, [&](element x, element y) {
        return as_cell(sectional_pseudocomplement(p, x, y));
      });
  }
  throw error(errc::precondition_violated, "unknown table kind");
}

check_report implication_properties_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  const auto n = static_cast<element>(p.size());
  const element one = sp.top();
  const element_set unit = element_set::singleton(one);

  std::vector<element_set> imp(n * n);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) imp[a * n + b] = implication(sp, a, b);
  }
  auto arrow = [&](element a, element b) { return imp[a * n + b]; };
  auto arrow_set = [&](element_set as, element b) {
    element_set out;
    for (element a : as) out |= arrow(a, b);
    return out;
  };

  check_report r(all_witnesses);
  const auto via_join = r.declare("a v b exists => a->b = (a v b)^b");
  const auto below = r.declare("b <= a => a->b = a^b");
  const auto order = r.declare("a <= b <=> a->b = 1");
  const auto absorb = r.declare("a v b exists => (a v b)->b = a->b");
  const auto left_unit = r.declare("1->a = a");
  const auto weaken = r.declare("a <= b->a");
  const auto k_law = r.declare("a->(b->a) = 1");
  const auto antitone = r.declare("a <= b, a v c exists => b->c <= a->c");
  const auto double_arrow = r.declare("a v b exists => a <= (a->b)->b");
  const auto triple_arrow = r.declare("a v b exists => a->b = ((a->b)->b)->b");

  for (element a = 0; a < n; ++a) {
    if (arrow(one, a) != element_set::singleton(a)) r.fail(left_unit, witness{a});
    for (element b = 0; b < n; ++b) {
      const element_set ab = arrow(a, b);
      if (p.leq(a, b) != (ab == unit)) r.fail(order, witness{a, b});
      if (p.leq(b, a) && ab != element_set::singleton(sp.pc(a, b))) r.fail(below, witness{a, b});
      if (!set_leq(p, element_set::singleton(a), arrow(b, a))) r.fail(weaken, witness{a, b});
      // a -> w must be exactly {1} for every w in b -> a.
      for (element w : arrow(b, a)) {
        if (arrow(a, w) != unit) {
          r.fail(k_law, witness{a, b});
          break;
        }
      }

      if (auto j = join(p, a, b)) {
        if (ab != element_set::singleton(sp.pc(*j, b))) r.fail(via_join, witness{a, b});
        if (arrow(*j, b) != ab) r.fail(absorb, witness{a, b});
        const element_set back = arrow_set(ab, b);
        if (!set_leq(p, element_set::singleton(a), back)) r.fail(double_arrow, witness{a, b});
        if (arrow_set(back, b) != ab) r.fail(triple_arrow, witness{a, b});
      }

      if (p.leq(a, b)) {
        for (element c = 0; c < n; ++c) {
          if (join(p, a, c) && !set_leq(p, arrow(b, c), arrow(a, c))) {
            r.fail(antitone, witness{a, b, c});
          }
        }
      }
    }
  }
  return r;
}

check_report comparison_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  const auto n = static_cast<element>(p.size());
  const bool lattice = is_lattice(p);

  check_report r(all_witnesses);
  const auto imp_antichain = r.declare("x->y is an antichain");
  const auto conj_antichain = r.declare("x.y is an antichain");
  const auto in_section = r.declare("x->y lies in [y,1]");
  const auto dominance = r.declare("x*y exists => x*y <= x->y");
  const auto circ_below = r.declare("y <= x, x o y exists => x o y <= x^y");
  const auto collapse_imp = r.declare("lattice => x->y is a singleton");
  const auto collapse_conj = r.declare("lattice => x.y = x ^ y");

  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      const element_set imp = implication(sp, x, y);
      const element_set conj = conjunction(p, x, y);
      if (!is_antichain(p, imp)) r.fail(imp_antichain, witness{x, y});
      if (!is_antichain(p, conj)) r.fail(conj_antichain, witness{x, y});
      if (!imp.subset_of(p.up(y))) r.fail(in_section, witness{x, y});
      if (auto star = relative_pseudocomplement(p, x, y)) {
        if (!set_leq(p, element_set::singleton(*star), imp)) r.fail(dominance, witness{x, y});
      }
      if (p.leq(y, x)) {
        if (auto circ = sectional_pseudocomplement(p, x, y); circ && !p.leq(*circ, sp.pc(x, y))) {
          r.fail(circ_below, witness{x, y});
        }
      }
      if (lattice) {
        if (!imp.is_singleton()) r.fail(collapse_imp, witness{x, y});
        if (conj != element_set::singleton(*meet(p, x, y))) r.fail(collapse_conj, witness{x, y});
      }
    }
  }
  return r;
}

}  // namespace unsharp
