#include "unsharp/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "unsharp/error.hpp"

namespace unsharp {

namespace {

std::vector<std::string> corpus_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// Calls f(next) for every one-point extension of the poset given by `up` on
// {0..k-1}: the new element k gets strict down-set D and strict up-set U. Every
// labeled poset on {0..k} arises from exactly one (restriction, D, U): D must be
// down-closed, U up-closed, and D < U.
template <class F>
void for_each_extension(const std::vector<element_set>& up, F&& f) {
  const auto k = static_cast<element>(up.size());
  std::vector<element_set> down(k);
  for (element i = 0; i < k; ++i) {
    for (element j : up[i]) down[j].insert(i);
  }
  std::vector<element_set> down_closed, up_closed;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const element_set s = element_set::from_bits(bits);
    bool is_down = true, is_up = true;
    for (element e : s) {
      is_down = is_down && down[e].subset_of(s);
      is_up = is_up && up[e].subset_of(s);
    }
    if (is_down) down_closed.push_back(s);
    if (is_up) up_closed.push_back(s);
  }
  for (element_set d : down_closed) {
    element_set common_up = element_set::all(k);
    for (element e : d) common_up &= up[e];
    common_up = common_up - d;
    for (element_set u : up_closed) {
      if (!u.subset_of(common_up)) continue;
      std::vector<element_set> next = up;
      for (element e : d) next[e].insert(k);
      next.push_back(u | element_set::singleton(k));
      f(std::move(next));
    }
  }
}

void grow_labeled(std::vector<element_set>& up, std::size_t n, const std::vector<std::string>& labels,
                  const poset_visitor& visit) {
  if (up.size() == n) {
    visit(poset::from_up_sets(labels, up));
    return;
  }
  for_each_extension(up, [&](std::vector<element_set> next) { grow_labeled(next, n, labels, visit); });
}

std::uint64_t code_under(const poset& p, const std::vector<element>& perm) {
  const std::size_t n = p.size();
  const std::size_t cells = n * n;
  std::uint64_t code = 0;
  for (element i = 0; i < n; ++i) {
    for (element j : p.up(i)) {
      if (j == i) continue;
      const std::size_t pos = perm[i] * n + perm[j];
      code |= std::uint64_t{1} << (cells - 1 - pos);
    }
  }
  return code;
}

// The up-sets of p relabeled by the permutation with the smallest code.
std::vector<element_set> canonical_up_sets(const poset& p, std::uint64_t& code) {
  std::vector<element> perm(p.size()), best;
  std::iota(perm.begin(), perm.end(), element{0});
  code = ~std::uint64_t{0};
  do {
    const std::uint64_t c = code_under(p, perm);
    if (c < code) {
      code = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<element_set> up(p.size());
  for (element i = 0; i < p.size(); ++i) {
    for (element j : p.up(i)) up[best[i]].insert(best[j]);
  }
  return up;
}

}  // namespace

void enumerate_posets(std::size_t n, dedup_mode mode, const poset_visitor& visit) {
  if (n < 1 || n > max_corpus_size) {
    throw error(errc::size_limit_exceeded,
                "corpus size " + std::to_string(n) + " outside 1.." + std::to_string(max_corpus_size));
  }
  const auto labels = corpus_labels(n);
  std::vector<element_set> seed{element_set::singleton(0)};
  if (mode == dedup_mode::labeled) {
    grow_labeled(seed, n, labels, visit);
    return;
  }
  // Canonical mode grows one level at a time from the previous level's
  // representatives, keyed (and so ordered) by canonical code.
  std::map<std::uint64_t, std::vector<element_set>> level{{0, seed}};
  for (std::size_t k = 2; k <= n; ++k) {
    const std::vector<std::string> level_labels = corpus_labels(k);
    std::map<std::uint64_t, std::vector<element_set>> next_level;
    for (const auto& [code, up] : level) {
      for_each_extension(up, [&](std::vector<element_set> next) {
        std::uint64_t c = 0;
        auto canon = canonical_up_sets(poset::from_up_sets(level_labels, std::move(next)), c);
        next_level.try_emplace(c, std::move(canon));
      });
    }
    level = std::move(next_level);
  }
  for (const auto& [code, up] : level) visit(poset::from_up_sets(labels, up));
}

std::vector<poset> enumerate_posets(std::size_t n, dedup_mode mode) {
  std::vector<poset> out;
  enumerate_posets(n, mode, [&](const poset& p) { out.push_back(p); });
  return out;
}

poset_visitor filter_pc_sections(sectioned_visitor sink) {
  return [sink = std::move(sink)](const poset& p) {
    if (auto sp = sectioned_poset::try_make(p)) sink(*sp);
  };
}

std::uint64_t incidence_code(const poset& p) {
  std::vector<element> identity(p.size());
  std::iota(identity.begin(), identity.end(), element{0});
  return code_under(p, identity);
}

canonical_form canonicalize(const poset& p) {
  if (p.size() * p.size() > 64) {
    throw error(errc::size_limit_exceeded, "canonical encoding needs n*n <= 64");
  }
  std::vector<element> perm(p.size());
  std::iota(perm.begin(), perm.end(), element{0});
  const std::uint64_t own = code_under(p, perm);
  canonical_form best{own, 0};
  do {
    const std::uint64_t code = code_under(p, perm);
    best.code = std::min(best.code, code);
    if (code == own) ++best.automorphisms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

corpus_stats compute_corpus_stats(std::size_t n) {
  corpus_stats stats;
  stats.n = n;
  enumerate_posets(n, dedup_mode::labeled, [&](const poset& p) {
    ++stats.total_posets;
    if (p.top()) ++stats.with_top;
    if (is_lattice(p)) ++stats.lattices;
    if (is_relatively_pseudocomplemented(p)) ++stats.rel_pc;
    if (verify_pseudocomplemented_sections(p).table) ++stats.pc_sections;
  });
  return stats;
}

}  // namespace unsharp
