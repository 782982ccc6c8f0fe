#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unsharp {

enum class errc {
  duplicate_label,
  empty_label,
  unknown_label,
  cycle_detected,
  not_transitive,
  not_antisymmetric,
  size_limit_exceeded,
  no_top_element,
  no_bottom_element,
  precondition_violated,
  not_pseudocomplemented_sections,
  not_a_lattice,
  empty_operand,
  order_axiom_failure,
  non_singleton_section,
  section_mismatch,
  syntax_error,
  unknown_command,
  unknown_flag,
};

std::string_view to_string(errc code);

/// The single exception type thrown by the library; `code()` says which
/// contract was violated.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace unsharp
