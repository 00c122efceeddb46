#ifndef POTENTIA_C1_DECISION_HPP
#define POTENTIA_C1_DECISION_HPP

#include "potentia/c1/valuation.hpp"

#include <optional>
#include <span>

namespace potentia::c1 {

struct ValidityResult {
    bool valid;
    /// First admissible valuation refuting the formula, when invalid.
    std::optional<Valuation> countermodel;
};

struct TrivialityResult {
    bool trivial;
    /// First admissible valuation satisfying every premise, when nontrivial.
    std::optional<Valuation> witness;
};

/// Decide validity by exhausting the admissible valuations of the formula's
/// subformula closure. Throws ResourceLimitError if the closure exceeds
/// node_cap.
ValidityResult is_valid(const FormulaPtr& formula, std::size_t node_cap = kDefaultNodeCap);

/// A premise set is trivial when it entails every formula, which happens
/// exactly when no admissible valuation satisfies all premises. The empty
/// set is nontrivial (witnessed by the empty valuation).
TrivialityResult trivializes(std::span<const FormulaPtr> premises,
                             std::size_t node_cap = kDefaultNodeCap);

/// Semantic entailment: every admissible valuation of the combined closure
/// that satisfies the premises also satisfies the conclusion.
struct EntailmentResult {
    bool entailed;
    std::optional<Valuation> countermodel;
};

EntailmentResult entails(std::span<const FormulaPtr> premises, const FormulaPtr& conclusion,
                         std::size_t node_cap = kDefaultNodeCap);

}  // namespace potentia::c1

#endif
