#include "unsharp/error.hpp"

namespace unsharp {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::empty_label: return "EmptyLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::cycle_detected: return "CycleDetected";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_antisymmetric: return "NotAntisymmetric";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::no_top_element: return "NoTopElement";
    case errc::no_bottom_element: return "NoBottomElement";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::not_pseudocomplemented_sections: return "NotPseudocomplementedSections";
    case errc::not_a_lattice: return "NotALattice";
    case errc::empty_operand: return "EmptyOperand";
    case errc::order_axiom_failure: return "OrderAxiomFailure";
    case errc::non_singleton_section: return "NonSingletonSection";
    case errc::section_mismatch: return "SectionMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_command: return "UnknownCommand";
    case errc::unknown_flag: return "UnknownFlag";
  }
  return "Unknown";
}

}  // namespace unsharp
