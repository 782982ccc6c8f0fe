#pragma once

// Text formats: the line-oriented poset document, operator tables in the
// row/column layout, Graphviz DOT export, and JSON check reports.
//
// Poset documents look like
//
//   poset pentagon            # header; starts a new document
//   elements: 0 a b c 1
//   covers: 0<a 0<b a<c c<1 b<1
//
// `#` starts a comment and blank lines are ignored. `elements:` and
// `covers:` may repeat; their items accumulate.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/operators.hpp"
#include "unsharp/poset.hpp"
#include "unsharp/report.hpp"

namespace unsharp {

struct poset_document {
  std::string name;
  std::vector<std::string> labels;
  std::vector<label_pair> covers;
  /// 1-based line of the `poset` header.
  std::size_t line = 0;

  /// Throws the build errors of poset::from_covers.
  poset to_poset() const;
};

/// Throws syntax_error naming the offending line.
std::vector<poset_document> parse_poset_file(std::string_view text);

/// Writes a document that parses back to `p` (covers only).
std::string write_poset_document(std::string_view name, const poset& p);

std::string_view table_symbol(table_kind kind);
/// Cell text: "-" when undefined, the bare label for singletons, "{a,b}" otherwise.
std::string render_cell(const std::optional<element_set>& cell, const std::vector<std::string>& labels);
/// Header row and column of labels, one aligned column per element.
std::string render_table(const operator_table& table, const std::vector<std::string>& labels);

/// Directed graph of the cover relation, edges pointing from lower to upper.
std::string to_dot(std::string_view name, const poset& p);

/// {"name": ..., "verdicts": [{"law", "pass", "witness"?, ...}]}
std::string report_to_json(std::string_view name, const check_report& report,
                           const std::vector<std::string>& labels);
std::string report_to_text(std::string_view name, const check_report& report,
                           const std::vector<std::string>& labels);

}  // namespace unsharp
