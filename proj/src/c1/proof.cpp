#include "potentia/c1/proof.hpp"

#include <unordered_map>

namespace potentia::c1 {

const std::vector<AxiomSchema>& axiom_schemas() {
    static const std::vector<AxiomSchema> schemas = [] {
        const std::pair<const char*, const char*> table[] = {
            {"imp-k", "A -> (B -> A)"},
            {"imp-s", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
            {"conj-elim-left", "A & B -> A"},
            {"conj-elim-right", "A & B -> B"},
            {"conj-intro", "A -> (B -> A & B)"},
            {"disj-intro-left", "A -> A | B"},
            {"disj-intro-right", "B -> A | B"},
            {"disj-elim", "(A -> C) -> ((B -> C) -> (A | B -> C))"},
            {"excluded-middle", "A | ~A"},
            {"double-neg-elim", "~~A -> A"},
            {"consistency-reductio", "@B -> ((A -> B) -> ((A -> ~B) -> ~A))"},
            {"consistency-propagation", "@A & @B -> @(A & B) & @(A | B) & @(A -> B)"},
        };
        std::vector<AxiomSchema> out;
        for (const auto& [id, text] : table) out.push_back({id, parse_formula(text)});
        return out;
    }();
    return schemas;
}

const AxiomSchema* find_schema(const std::string& id) {
    for (const AxiomSchema& s : axiom_schemas())
        if (s.id == id) return &s;
    return nullptr;
}

namespace {

bool match(const FormulaPtr& pattern, const FormulaPtr& candidate,
           std::unordered_map<std::string, FormulaPtr>& binding) {
    if (pattern->is_atom()) {
        auto [it, inserted] = binding.try_emplace(pattern->name(), candidate);
        return inserted || structurally_equal(it->second, candidate);
    }
    if (pattern->kind() != candidate->kind()) return false;
    if (pattern->kind() == Kind::Neg) return match(pattern->left(), candidate->left(), binding);
    return match(pattern->left(), candidate->left(), binding) &&
           match(pattern->right(), candidate->right(), binding);
}

}  // namespace

bool instantiates(const FormulaPtr& formula, const FormulaPtr& pattern) {
    std::unordered_map<std::string, FormulaPtr> binding;
    return match(pattern, formula, binding);
}

ProofStep ProofStep::hypothesis(FormulaPtr f) {
    return {std::move(f), Rule::Hypothesis, {}, 0, 0};
}

ProofStep ProofStep::axiom(FormulaPtr f, std::string schema_id) {
    return {std::move(f), Rule::Axiom, std::move(schema_id), 0, 0};
}

ProofStep ProofStep::modus_ponens(FormulaPtr f, std::size_t minor, std::size_t major) {
    return {std::move(f), Rule::ModusPonens, {}, minor, major};
}

ProofResult check_proof(std::span<const ProofStep> script) {
    if (script.empty()) return {false, nullptr, 0, "empty proof script"};

    for (std::size_t k = 0; k < script.size(); ++k) {
        const ProofStep& step = script[k];
        const std::size_t here = k + 1;

        switch (step.rule) {
            case ProofStep::Rule::Hypothesis:
                break;

            case ProofStep::Rule::Axiom: {
                const AxiomSchema* schema = find_schema(step.schema_id);
                if (!schema)
                    return {false, nullptr, here, "unknown axiom schema '" + step.schema_id + "'"};
                if (!instantiates(step.formula, schema->pattern))
                    return {false, nullptr, here,
                            "formula is not an instance of " + step.schema_id};
                break;
            }

            case ProofStep::Rule::ModusPonens: {
                if (step.from_minor == 0 || step.from_minor >= here)
                    return {false, nullptr, here,
                            "step " + std::to_string(step.from_minor) + " is not an earlier step"};
                if (step.from_major == 0 || step.from_major >= here)
                    return {false, nullptr, here,
                            "step " + std::to_string(step.from_major) + " is not an earlier step"};
                const FormulaPtr& minor = script[step.from_minor - 1].formula;
                const FormulaPtr& major = script[step.from_major - 1].formula;
                if (major->kind() != Kind::Impl)
                    return {false, nullptr, here,
                            "step " + std::to_string(step.from_major) + " is not an implication"};
                if (!structurally_equal(major->left(), minor))
                    return {false, nullptr, here,
                            "antecedent of step " + std::to_string(step.from_major) +
                                " does not match step " + std::to_string(step.from_minor)};
                if (!structurally_equal(major->right(), step.formula))
                    return {false, nullptr, here,
                            "formula differs from the consequent of step " +
                                std::to_string(step.from_major)};
                break;
            }
        }
    }

    return {true, script.back().formula, 0, {}};
}

}  // namespace potentia::c1
