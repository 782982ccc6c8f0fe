#pragma once

// Exhaustive generation of small posets, the universe the law suites are
// checked over.

#include <cstdint>
#include <functional>
#include <vector>

#include "unsharp/poset.hpp"
#include "unsharp/sections.hpp"

namespace unsharp {

enum class dedup_mode { labeled, canonical };

inline constexpr std::size_t max_corpus_size = 7;

using poset_visitor = std::function<void(const poset&)>;
using sectioned_visitor = std::function<void(const sectioned_poset&)>;

/// Visits every poset on the labels e0..e{n-1} exactly once (labeled), or one
/// representative per isomorphism class (canonical): the member of the
/// class whose incidence encoding is lexicographically smallest.
///
/// Order within one call is deterministic. Throws size_limit_exceeded unless
/// 1 <= n <= max_corpus_size.
void enumerate_posets(std::size_t n, dedup_mode mode, const poset_visitor& visit);
std::vector<poset> enumerate_posets(std::size_t n, dedup_mode mode);

/// Adapts a visitor of checked posets into a poset visitor that drops every
/// poset without pseudocomplemented sections.
poset_visitor filter_pc_sections(sectioned_visitor sink);

struct canonical_form {
  /// Strict order incidence read row by row, first cell most significant,
  /// minimised over all relabelings.
  std::uint64_t code = 0;
  /// Relabelings that fix the poset; the orbit has n!/automorphisms members.
  std::size_t automorphisms = 0;
};

std::uint64_t incidence_code(const poset& p);
canonical_form canonicalize(const poset& p);

struct corpus_stats {
  std::size_t n = 0;
  std::size_t total_posets = 0;
  std::size_t with_top = 0;
  std::size_t pc_sections = 0;
  std::size_t lattices = 0;
  std::size_t rel_pc = 0;
};

/// Counts over the labeled corpus of size n.
corpus_stats compute_corpus_stats(std::size_t n);

}  // namespace unsharp
