#include "unsharp/residuation.hpp"

#include "unsharp/error.hpp"

namespace unsharp {

namespace {

// Products with an empty operand are empty under both readings.
element_set lift_downset(const poset& p, element_set a, element_set b) {
  if (a.empty() || b.empty()) return {};
  return conjunction_downset(p, a, b);
}

element_set lift_common_cone(const poset& p, element_set a, element_set b) {
  if (a.empty() || b.empty()) return {};
  return conjunction_of_sets(p, a, b);
}

}  // namespace

bool residuation_report::passed() const {
  return commutativity.passed() && associativity.passed() && unit.passed() && monotonicity.passed() &&
         adjointness.passed() && divisibility.passed();
}

bool residuation_report::readings_differ() const {
  return associativity.passed() != associativity_common_cone.passed() ||
         monotonicity.passed() != monotonicity_single_bound.passed();
}

check_report residuation_report::flatten() const {
  check_report out;
  for (const check_report* r : {&commutativity, &associativity, &unit, &monotonicity, &adjointness, &divisibility}) {
    out.merge(*r);
  }
  out.merge(associativity_common_cone, "recorded: ");
  out.merge(monotonicity_single_bound, "recorded: ");
  return out;
}

residuation_report unsharp_residuation_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  const auto n = static_cast<element>(p.size());
  const element one = sp.top();

  std::vector<element_set> conj(n * n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) conj[x * n + y] = conjunction(p, x, y);
  }
  auto dot = [&](element x, element y) { return conj[x * n + y]; };

  residuation_report out{check_report(all_witnesses), check_report(all_witnesses), check_report(all_witnesses),
                         check_report(all_witnesses), check_report(all_witnesses), check_report(all_witnesses),
                         check_report(all_witnesses), check_report(all_witnesses)};
  const auto comm = out.commutativity.declare("x.y = y.x");
  const auto assoc = out.associativity.declare("(x.y).z = x.(y.z), down-set lift");
  const auto assoc_cc = out.associativity_common_cone.declare("(x.y).z = x.(y.z), common-cone lift");
  const auto unit = out.unit.declare("x.1 = x");
  const auto mono = out.monotonicity.declare("x <= y => each member of x.z is below some t in y.z");
  const auto mono_single =
      out.monotonicity_single_bound.declare("x <= y => some t in y.z bounds all of x.z");
  const auto adj = out.adjointness.declare("z in x.y <=> z <= x, z <= y and x <= y->z");

  for (element x = 0; x < n; ++x) {
    if (dot(x, one) != element_set::singleton(x)) out.unit.fail(unit, witness{x});
    for (element y = 0; y < n; ++y) {
      const element_set xy = dot(x, y);
      if (xy != dot(y, x)) out.commutativity.fail(comm, witness{x, y});

      for (element z = 0; z < n; ++z) {
        const element_set zs = element_set::singleton(z);
        const element_set xs = element_set::singleton(x);
        if (lift_downset(p, xy, zs) != lift_downset(p, xs, dot(y, z))) {
          out.associativity.fail(assoc, witness{x, y, z});
        }
        if (lift_common_cone(p, xy, zs) != lift_common_cone(p, xs, dot(y, z))) {
          out.associativity_common_cone.fail(assoc_cc, witness{x, y, z});
        }

        if (p.leq(x, y)) {
          const element_set low = dot(x, z);
          const element_set high = dot(y, z);
          bool each_below = true;
          for (element m : low) each_below = each_below && (p.up(m) & high) != element_set{};
          if (!each_below) out.monotonicity.fail(mono, witness{x, y, z});
          bool single = false;
          for (element t : high) single = single || set_leq(p, low, element_set::singleton(t));
          if (!single) out.monotonicity_single_bound.fail(mono_single, witness{x, y, z});
        }

        const bool lhs = xy.contains(z);
        const bool rhs = p.leq(z, x) && p.leq(z, y) && set_leq(p, xs, implication(sp, y, z));
        if (lhs != rhs) out.adjointness.fail(adj, witness{x, y, z});
      }
    }
  }
  out.divisibility = divisibility_report(sp, all_witnesses);
  return out;
}

check_report divisibility_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  const auto n = static_cast<element>(p.size());
  check_report r(all_witnesses);
  const auto single = r.declare("y <= x => x->y is a singleton");
  const auto modus_ponens = r.declare("y <= x => (x.(x->y)) & [y,1] = {y}");
  for (element x = 0; x < n; ++x) {
    for (element y : p.down(x)) {
      const element_set xy = implication(sp, x, y);
      if (!xy.is_singleton()) r.fail(single, witness{x, y});
      const element_set meet = conjunction_of_sets(p, element_set::singleton(x), xy) & p.up(y);
      if (meet != element_set::singleton(y)) r.fail(modus_ponens, witness{x, y});
    }
  }
  return r;
}

check_report lattice_relative_residuation_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  if (!is_lattice(p)) throw error(errc::not_a_lattice, "relative residuation needs a lattice");
  const auto n = static_cast<element>(p.size());
  const element one = sp.top();

  // Every cell is a singleton on a lattice with pseudocomplemented sections.
  auto dot = [&](element x, element y) { return conjunction(p, x, y).single(); };
  auto arrow = [&](element x, element y) { return implication(sp, x, y).single(); };
  auto vee = [&](element x, element y) { return *join(p, x, y); };

  check_report r(all_witnesses);
  const auto groupoid = r.declare("x.y = y.x and x.1 = x");
  const auto mono = r.declare("x <= y => x.z <= y.z");
  const auto adj = r.declare("(x v z).(y v z) <= z <=> x v z <= y->z");
  const auto id_mono = r.declare("x.z <= (x v y).z");
  const auto id_unit = r.declare("z v y <= x->(((x v y).(z v y)) v y)");
  const auto id_mp = r.declare("(x->y).(x v y) <= y");
  const auto equiv = r.declare("conditions hold <=> identities hold");

  bool conditions = true;
  bool identities = true;
  for (element x = 0; x < n; ++x) {
    if (dot(x, one) != x) r.fail(groupoid, witness{x});
    for (element y = 0; y < n; ++y) {
      if (dot(x, y) != dot(y, x)) r.fail(groupoid, witness{x, y});
      for (element z = 0; z < n; ++z) {
        if (p.leq(x, y) && !p.leq(dot(x, z), dot(y, z))) {
          r.fail(mono, witness{x, y, z});
          conditions = false;
        }
        const bool lhs = p.leq(dot(vee(x, z), vee(y, z)), z);
        const bool rhs = p.leq(vee(x, z), arrow(y, z));
        if (lhs != rhs) {
          r.fail(adj, witness{x, y, z});
          conditions = false;
        }
        if (!p.leq(dot(x, z), dot(vee(x, y), z))) {
          r.fail(id_mono, witness{x, y, z});
          identities = false;
        }
        if (!p.leq(vee(z, y), arrow(x, vee(dot(vee(x, y), vee(z, y)), y)))) {
          r.fail(id_unit, witness{x, y, z});
          identities = false;
        }
      }
      if (!p.leq(dot(arrow(x, y), vee(x, y)), y)) {
        r.fail(id_mp, witness{x, y});
        identities = false;
      }
    }
  }
  if (conditions != identities) {
    r.fail(equiv, std::string(conditions ? "conditions hold but identities fail"
                                         : "identities hold but conditions fail"));
  }
  return r;
}

}  // namespace unsharp
