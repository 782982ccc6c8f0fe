#include "unsharp/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "unsharp/error.hpp"

namespace unsharp {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > max_elements) {
    throw error(errc::size_limit_exceeded,
                std::to_string(labels.size()) + " elements, at most " + std::to_string(max_elements));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw error(errc::empty_label, "element labels must be non-empty");
    if (!seen.insert(l).second) throw error(errc::duplicate_label, "'" + l + "'");
  }
}

element lookup(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw error(errc::unknown_label, "'" + l + "'");
  return static_cast<element>(it - labels.begin());
}

std::vector<element_set> reflexive(std::size_t n) {
  std::vector<element_set> up(n);
  for (element i = 0; i < n; ++i) up[i].insert(i);
  return up;
}

// Validates antisymmetry and transitivity of a reflexive relation.
void validate_order(const std::vector<std::string>& labels, const std::vector<element_set>& up) {
  const auto n = static_cast<element>(up.size());
  for (element i = 0; i < n; ++i) {
    for (element j : up[i]) {
      if (j != i && up[j].contains(i)) {
        throw error(errc::not_antisymmetric, labels[i] + " <= " + labels[j] + " and back");
      }
      if (!up[j].subset_of(up[i])) {
        element k = (up[j] - up[i]).first();
        throw error(errc::not_transitive,
                    labels[i] + " <= " + labels[j] + " <= " + labels[k] + " but not " + labels[i] +
                        " <= " + labels[k]);
      }
    }
  }
}

}  // namespace

poset::poset(std::vector<std::string> labels, std::vector<element_set> up)
    : labels_(std::move(labels)), up_(std::move(up)), down_(up_.size()) {
  const auto n = static_cast<element>(up_.size());
  for (element i = 0; i < n; ++i) {
    for (element j : up_[i]) down_[j].insert(i);
  }
  const element_set all = element_set::all(n);
  for (element i = 0; i < n; ++i) {
    if (down_[i] == all) top_ = i;
    if (up_[i] == all) bottom_ = i;
  }
}

poset poset::from_covers(std::vector<std::string> labels, std::span<const label_pair> covers) {
  check_labels(labels);
  const auto n = static_cast<element>(labels.size());
  auto up = reflexive(n);
  for (const auto& [lo, hi] : covers) {
    const element a = lookup(labels, lo);
    const element b = lookup(labels, hi);
    if (a == b) throw error(errc::cycle_detected, "cover " + lo + " < " + hi);
    up[a].insert(b);
  }

  // Warshall closure on rows.
  for (element k = 0; k < n; ++k) {
    for (element i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  for (element i = 0; i < n; ++i) {
    for (element j : up[i]) {
      if (j != i && up[j].contains(i)) {
        throw error(errc::cycle_detected, "covers make " + labels[i] + " and " + labels[j] +
                                              " mutually comparable");
      }
    }
  }
  return poset(std::move(labels), std::move(up));
}

poset poset::from_relation(std::vector<std::string> labels, std::span<const label_pair> pairs) {
  check_labels(labels);
  std::vector<index_pair> idx;
  idx.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) idx.emplace_back(lookup(labels, lo), lookup(labels, hi));
  return from_relation(std::move(labels), idx);
}

poset poset::from_relation(std::vector<std::string> labels, std::span<const index_pair> pairs) {
  check_labels(labels);
  auto up = reflexive(labels.size());
  for (const auto& [lo, hi] : pairs) {
    if (lo >= labels.size() || hi >= labels.size()) {
      throw error(errc::unknown_label, "index out of range");
    }
    up[lo].insert(hi);
  }
  validate_order(labels, up);
  return poset(std::move(labels), std::move(up));
}

poset poset::from_up_sets(std::vector<std::string> labels, std::vector<element_set> up) {
  check_labels(labels);
  if (up.size() != labels.size()) {
    throw error(errc::precondition_violated, "one up-set per label required");
  }
  const element_set all = element_set::all(labels.size());
  for (element i = 0; i < up.size(); ++i) {
    if (!up[i].subset_of(all)) throw error(errc::unknown_label, "index out of range");
    up[i].insert(i);
  }
  validate_order(labels, up);
  return poset(std::move(labels), std::move(up));
}

std::optional<element> poset::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<element>(it - labels_.begin());
}

element poset::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw error(errc::unknown_label, "'" + std::string(label) + "'");
}

element_set cone(const poset& p, element_set a, cone_dir dir) {
  element_set result = p.carrier();
  for (element x : a) result &= dir == cone_dir::lower ? p.down(x) : p.up(x);
  return result;
}

element_set extremes(const poset& p, element_set a, extreme_dir dir) {
  element_set result;
  for (element x : a) {
    const element_set beyond = (dir == extreme_dir::min ? p.down(x) : p.up(x)) & a;
    if (beyond == element_set::singleton(x)) result.insert(x);
  }
  return result;
}

element_set section(const poset& p, element y) {
  if (!p.top()) throw error(errc::no_top_element, "sections need a top element");
  return p.up(y);
}

std::optional<element> bound_of_pair(const poset& p, element a, element b, bound_dir dir) {
  const element_set pair{a, b};
  const element_set bounds =
      dir == bound_dir::join ? extremes(p, cone(p, pair, cone_dir::upper), extreme_dir::min)
                             : extremes(p, cone(p, pair, cone_dir::lower), extreme_dir::max);
  // In a finite poset a unique minimal (maximal) bound is the least (greatest) one.
  if (bounds.is_singleton()) return bounds.single();
  return std::nullopt;
}

bool is_lattice(const poset& p) {
  const auto n = static_cast<element>(p.size());
  for (element a = 0; a < n; ++a) {
    for (element b = a + 1; b < n; ++b) {
      if (!join(p, a, b) || !meet(p, a, b)) return false;
    }
  }
  return true;
}

std::vector<index_pair> cover_relation(const poset& p) {
  std::vector<index_pair> covers;
  const auto n = static_cast<element>(p.size());
  for (element a = 0; a < n; ++a) {
    const element_set above = p.up(a) - element_set::singleton(a);
    for (element b : extremes(p, above, extreme_dir::min)) covers.emplace_back(a, b);
  }
  return covers;
}

poset induced_subposet(const poset& p, element_set subset) {
  std::vector<element> members(subset.begin(), subset.end());
  std::vector<std::string> labels;
  std::vector<element_set> up(members.size());
  for (element i = 0; i < members.size(); ++i) {
    labels.push_back(p.label(members[i]));
    for (element j = 0; j < members.size(); ++j) {
      if (p.leq(members[i], members[j])) up[i].insert(j);
    }
  }
  return poset::from_up_sets(std::move(labels), std::move(up));
}

bool set_leq(const poset& p, element_set a, element_set b) {
  for (element x : a) {
    if (!b.subset_of(p.up(x))) return false;
  }
  return true;
}

bool is_antichain(const poset& p, element_set a) {
  for (element x : a) {
    if ((p.up(x) & a) != element_set::singleton(x)) return false;
  }
  return true;
}

}  // namespace unsharp
