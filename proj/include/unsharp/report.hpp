#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/element_set.hpp"

namespace unsharp {

/// The tuple of elements that falsifies a law, in the law's variable order.
using witness = std::vector<element>;

struct verdict {
  std::string law;
  bool pass = true;
  /// Number of falsifying tuples seen.
  std::size_t failures = 0;
  /// The first falsifying tuple, or all of them when collecting everything.
  std::vector<witness> witnesses;
  /// Free text for failures that have no tuple (e.g. "no top element").
  std::string note;
};

/// Per-law pass/fail verdicts with concrete counterexamples.
///
/// Laws are declared up front so that a law with no applicable tuple still
/// shows up as passed. A verdict fails iff it carries a witness or a note.
class check_report {
public:
  explicit check_report(bool all_witnesses = false) : all_witnesses_(all_witnesses) {}

  /// Adds a law (or finds an existing one) and returns its slot.
  std::size_t declare(std::string_view law);

  void fail(std::size_t slot, witness w);
  void fail(std::size_t slot, std::string note);

  /// Appends every verdict of `other`, prefixing law names when asked.
  void merge(const check_report& other, std::string_view prefix = {});

  bool passed() const;
  bool all_witnesses() const { return all_witnesses_; }
  const std::vector<verdict>& verdicts() const { return verdicts_; }
  const verdict* find(std::string_view law) const;

  /// Convenience for tests and reporting: true when `law` exists and passed.
  bool passed(std::string_view law) const;

private:
  bool all_witnesses_;
  std::vector<verdict> verdicts_;
};

/// "(a, b, c)" using the given labels.
std::string render_witness(const witness& w, const std::vector<std::string>& labels);

}  // namespace unsharp
