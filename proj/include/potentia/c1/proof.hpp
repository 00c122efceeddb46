#ifndef POTENTIA_C1_PROOF_HPP
#define POTENTIA_C1_PROOF_HPP

#include "potentia/c1/formula.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace potentia::c1 {

/// One of the twelve fixed axiom schemas. Atoms in the pattern are
/// metavariables: a formula instantiates the schema when it has the
/// pattern's shape with each metavariable bound to one subformula.
struct AxiomSchema {
    std::string id;
    FormulaPtr pattern;
};

/// The Hilbert-style presentation used by check_proof: the positive
/// intuitionistic schemas plus excluded middle, double-negation elimination,
/// well-behaved reductio and well-behavedness propagation. Rule: modus
/// ponens.
const std::vector<AxiomSchema>& axiom_schemas();

/// Returns the schema with the given id, or nullptr.
const AxiomSchema* find_schema(const std::string& id);

/// True when `formula` is an instance of `pattern` (atoms in the pattern
/// acting as metavariables, bound consistently).
bool instantiates(const FormulaPtr& formula, const FormulaPtr& pattern);

struct ProofStep {
    enum class Rule { Hypothesis, Axiom, ModusPonens };

    FormulaPtr formula;
    Rule rule;
    std::string schema_id;        // Axiom only
    std::size_t from_minor = 0;   // ModusPonens: step proving A (1-based)
    std::size_t from_major = 0;   // ModusPonens: step proving A -> B

    static ProofStep hypothesis(FormulaPtr f);
    static ProofStep axiom(FormulaPtr f, std::string schema_id);
    static ProofStep modus_ponens(FormulaPtr f, std::size_t minor, std::size_t major);
};

struct ProofResult {
    bool ok;
    FormulaPtr proved;        // last step's formula when ok
    std::size_t step = 0;     // 1-based index of the first offending step
    std::string reason;
};

/// Checks every step: hypotheses are admitted as stated, axiom steps must
/// instantiate their named schema, modus ponens must cite two earlier steps
/// where the major premise is an implication from the minor premise's
/// formula to this step's formula. Stops at the first offending step.
ProofResult check_proof(std::span<const ProofStep> script);

}  // namespace potentia::c1

#endif
