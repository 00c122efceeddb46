#include "potentia/c1/decision.hpp"

namespace potentia::c1 {

ValidityResult is_valid(const FormulaPtr& formula, std::size_t node_cap) {
    const FormulaPtr roots[] = {formula};
    auto closure = SubformulaClosure::build(roots, node_cap);
    std::size_t root = closure->root_indices()[0];
    ValuationEnumerator e(closure);
    while (auto v = e.next()) {
        if (!v->value(root)) return {false, std::move(v)};
    }
    return {true, std::nullopt};
}

TrivialityResult trivializes(std::span<const FormulaPtr> premises, std::size_t node_cap) {
    auto closure = SubformulaClosure::build(premises, node_cap);
    ValuationEnumerator e(closure);
    while (auto v = e.next()) {
        bool all = true;
        for (std::size_t r : closure->root_indices()) {
            if (!v->value(r)) {
                all = false;
                break;
            }
        }
        if (all) return {false, std::move(v)};
    }
    return {true, std::nullopt};
}

EntailmentResult entails(std::span<const FormulaPtr> premises, const FormulaPtr& conclusion,
                         std::size_t node_cap) {
    std::vector<FormulaPtr> roots(premises.begin(), premises.end());
    roots.push_back(conclusion);
    auto closure = SubformulaClosure::build(roots, node_cap);
    std::size_t goal = closure->root_indices().back();
    ValuationEnumerator e(closure);
    while (auto v = e.next()) {
        bool all = true;
        for (std::size_t k = 0; k + 1 < closure->root_indices().size(); ++k) {
            if (!v->value(closure->root_indices()[k])) {
                all = false;
                break;
            }
        }
        if (all && !v->value(goal)) return {false, std::move(v)};
    }
    return {true, std::nullopt};
}

}  // namespace potentia::c1
