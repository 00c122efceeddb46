#ifndef POTENTIA_TESTS_CLASSICAL_ORACLE_HPP
#define POTENTIA_TESTS_CLASSICAL_ORACLE_HPP

#include "potentia/c1/formula.hpp"
#include "potentia/rng.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace potentia::c1::testing {

// Two-valued truth-table semantics with negation read classically.
// Independent of the bivaluation engine; used as an oracle.

inline void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
    if (f->is_atom()) {
        out.insert(f->name());
        return;
    }
    collect_atoms(f->left(), out);
    if (f->right()) collect_atoms(f->right(), out);
}

inline bool classical_eval(const FormulaPtr& f, const std::map<std::string, bool>& env) {
    switch (f->kind()) {
        case Kind::Atom: return env.at(f->name());
        case Kind::Neg: return !classical_eval(f->left(), env);
        case Kind::Conj: return classical_eval(f->left(), env) && classical_eval(f->right(), env);
        case Kind::Disj: return classical_eval(f->left(), env) || classical_eval(f->right(), env);
        case Kind::Impl: return !classical_eval(f->left(), env) || classical_eval(f->right(), env);
    }
    return false;
}

inline bool classically_valid(const FormulaPtr& f) {
    std::set<std::string> atom_set;
    collect_atoms(f, atom_set);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
        std::map<std::string, bool> env;
        for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (mask >> i) & 1;
        if (!classical_eval(f, env)) return false;
    }
    return true;
}

inline std::size_t node_count(const FormulaPtr& f) {
    if (f->is_atom()) return 1;
    std::size_t n = 1 + node_count(f->left());
    if (f->right()) n += node_count(f->right());
    return n;
}

// Random formula over atoms {A, B, C} and connectives {~, &, |, ->}.
inline FormulaPtr random_formula(SplitMix64& rng, int max_depth) {
    static const char* names[] = {"A", "B", "C"};
    if (max_depth <= 0 || rng.next_below(4) == 0)
        return Formula::atom(names[rng.next_below(3)]);
    switch (rng.next_below(4)) {
        case 0: return Formula::neg(random_formula(rng, max_depth - 1));
        case 1:
            return Formula::conj(random_formula(rng, max_depth - 1),
                                 random_formula(rng, max_depth - 1));
        case 2:
            return Formula::disj(random_formula(rng, max_depth - 1),
                                 random_formula(rng, max_depth - 1));
        default:
            return Formula::impl(random_formula(rng, max_depth - 1),
                                 random_formula(rng, max_depth - 1));
    }
}

// Rebuild with every weak negation replaced by the strong one.
inline FormulaPtr strengthen_negations(const FormulaPtr& f) {
    switch (f->kind()) {
        case Kind::Atom: return f;
        case Kind::Neg: return Formula::strong_neg(strengthen_negations(f->left()));
        case Kind::Conj:
            return Formula::conj(strengthen_negations(f->left()),
                                 strengthen_negations(f->right()));
        case Kind::Disj:
            return Formula::disj(strengthen_negations(f->left()),
                                 strengthen_negations(f->right()));
        case Kind::Impl:
            return Formula::impl(strengthen_negations(f->left()),
                                 strengthen_negations(f->right()));
    }
    return f;
}

// Substitute every atom by its binding (all atoms must be bound).
inline FormulaPtr substitute(const FormulaPtr& pattern,
                             const std::map<std::string, FormulaPtr>& binding) {
    switch (pattern->kind()) {
        case Kind::Atom: return binding.at(pattern->name());
        case Kind::Neg: return Formula::neg(substitute(pattern->left(), binding));
        case Kind::Conj:
            return Formula::conj(substitute(pattern->left(), binding),
                                 substitute(pattern->right(), binding));
        case Kind::Disj:
            return Formula::disj(substitute(pattern->left(), binding),
                                 substitute(pattern->right(), binding));
        case Kind::Impl:
            return Formula::impl(substitute(pattern->left(), binding),
                                 substitute(pattern->right(), binding));
    }
    return pattern;
}

}  // namespace potentia::c1::testing

#endif
