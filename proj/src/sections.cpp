#include "unsharp/sections.hpp"

#include "unsharp/error.hpp"

namespace unsharp {

namespace {

element require_bottom(const poset& p) {
  if (!p.bottom()) throw error(errc::no_bottom_element, "negation needs a bottom element");
  return *p.bottom();
}

}  // namespace

std::size_t section_table::defined_count() const {
  std::size_t count = 0;
  for (const auto& c : cells_) count += c.has_value();
  return count;
}

std::optional<element> greatest(const poset& p, element_set candidates) {
  const element_set top = extremes(p, candidates, extreme_dir::max);
  if (top.is_singleton()) return top.single();
  return std::nullopt;
}

std::optional<element> section_pseudocomplement(const poset& p, element x, element y) {
  if (!p.top()) throw error(errc::precondition_violated, "no top element");
  if (!p.leq(y, x)) return std::nullopt;
  const element_set sec = p.up(y);
  const element_set bottom_only = element_set::singleton(y);
  element_set candidates;
  for (element z = 0; z < p.size(); ++z) {
    if ((p.down(x) & p.down(z) & sec) == bottom_only) candidates.insert(z);
  }
  return greatest(p, candidates);
}

section_check verify_pseudocomplemented_sections(const poset& p, bool all_witnesses) {
  section_check out{check_report(all_witnesses), std::nullopt};
  const std::size_t law = out.report.declare("pseudocomplemented sections");
  if (!p.top()) {
    out.report.fail(law, std::string("NoTopElement"));
    return out;
  }
  section_table table(p.size());
  for (element y = 0; y < p.size(); ++y) {
    for (element x : p.up(y)) {
      if (auto z = section_pseudocomplement(p, x, y)) {
        table.set(x, y, *z);
      } else {
        out.report.fail(law, witness{x, y});
        if (!all_witnesses) return out;
      }
    }
  }
  if (out.report.passed()) out.table = std::move(table);
  return out;
}

sectioned_poset::sectioned_poset(poset p) : poset_(std::move(p)) {
  auto check = verify_pseudocomplemented_sections(poset_);
  if (!check.table) {
    const verdict& v = check.report.verdicts().front();
    const std::string why =
        v.witnesses.empty() ? v.note
                            : "no pseudocomplement for " + render_witness(v.witnesses.front(), poset_.labels());
    throw error(errc::not_pseudocomplemented_sections, why);
  }
  table_ = std::move(*check.table);
}

std::optional<sectioned_poset> sectioned_poset::try_make(poset p) {
  auto check = verify_pseudocomplemented_sections(p);
  if (!check.table) return std::nullopt;
  return sectioned_poset(std::move(p), std::move(*check.table));
}

std::optional<element> relative_pseudocomplement(const poset& p, element x, element y) {
  element_set candidates;
  for (element z = 0; z < p.size(); ++z) {
    if ((p.down(x) & p.down(z)).subset_of(p.down(y))) candidates.insert(z);
  }
  return greatest(p, candidates);
}

std::optional<element> sectional_pseudocomplement(const poset& p, element x, element y) {
  const element_set lu = cone(p, cone(p, element_set{x, y}, cone_dir::upper), cone_dir::lower);
  element_set candidates;
  for (element z = 0; z < p.size(); ++z) {
    if ((lu & p.down(z)) == p.down(y)) candidates.insert(z);
  }
  return greatest(p, candidates);
}

bool is_relatively_pseudocomplemented(const poset& p) {
  for (element x = 0; x < p.size(); ++x) {
    for (element y = 0; y < p.size(); ++y) {
      if (!relative_pseudocomplement(p, x, y)) return false;
    }
  }
  return true;
}

element negation(const sectioned_poset& sp, element x) {
  return sp.pc(x, require_bottom(sp.order()));
}

element negation(const poset& p, element x) {
  require_bottom(p);
  return negation(sectioned_poset(p), x);
}

check_report negation_laws_report(const sectioned_poset& sp, bool all_witnesses) {
  const poset& p = sp.order();
  const element zero = require_bottom(p);
  const element one = sp.top();
  const auto n = static_cast<element>(p.size());

  std::vector<element> neg(n);
  for (element x = 0; x < n; ++x) neg[x] = sp.pc(x, zero);

  check_report r(all_witnesses);
  const std::size_t p1 = r.declare("neg 0 = 1 and neg 1 = 0");
  const std::size_t p2 = r.declare("x <= y => neg y <= neg x");
  const std::size_t p3 = r.declare("x <= neg neg x");
  const std::size_t p4 = r.declare("neg neg neg x = neg x");
  const std::size_t contra = r.declare("contraposition: x <= y => neg y <= neg x");

  if (neg[zero] != one) r.fail(p1, witness{zero});
  if (neg[one] != zero) r.fail(p1, witness{one});
  for (element x = 0; x < n; ++x) {
    if (!p.leq(x, neg[neg[x]])) r.fail(p3, witness{x});
    if (neg[neg[neg[x]]] != neg[x]) r.fail(p4, witness{x});
    for (element y : p.up(x)) {
      if (!p.leq(neg[y], neg[x])) {
        r.fail(p2, witness{x, y});
        r.fail(contra, witness{x, y});
      }
    }
  }
  return r;
}

skeleton glivenko_skeleton(const poset& p, bool all_witnesses) {
  if (!p.top()) throw error(errc::no_top_element, "skeleton needs a bounded poset");
  const element zero = require_bottom(p);
  const element one = *p.top();
  const auto n = static_cast<element>(p.size());

  std::vector<element> neg(n);
  for (element x = 0; x < n; ++x) {
    auto z = section_pseudocomplement(p, x, zero);
    if (!z) throw error(errc::precondition_violated, p.label(x) + " has no pseudocomplement");
    neg[x] = *z;
  }

  element_set image;
  for (element x = 0; x < n; ++x) image.insert(neg[x]);

  check_report r(all_witnesses);
  const std::size_t fixed = r.declare("image equals fixed points of double negation");
  const std::size_t closed = r.declare("negation maps the image into itself");
  const std::size_t bounds = r.declare("image contains 0 and 1");
  const std::size_t meets = r.declare("L(a, neg a) = {0} inside the image");
  const std::size_t joins = r.declare("U(a, neg a) = {1} inside the image");

  for (element x = 0; x < n; ++x) {
    if (image.contains(x) != (neg[neg[x]] == x)) r.fail(fixed, witness{x});
  }
  if (!image.contains(zero)) r.fail(bounds, witness{zero});
  if (!image.contains(one)) r.fail(bounds, witness{one});
  for (element a : image) {
    if (!image.contains(neg[a])) r.fail(closed, witness{a});
    const element_set pair{a, neg[a]};
    if ((cone(p, pair, cone_dir::lower) & image) != element_set::singleton(zero)) r.fail(meets, witness{a});
    if ((cone(p, pair, cone_dir::upper) & image) != element_set::singleton(one)) r.fail(joins, witness{a});
  }

  return skeleton{image, induced_subposet(p, image), std::move(r)};
}

}  // namespace unsharp
