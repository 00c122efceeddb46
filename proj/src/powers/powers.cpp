#include "potentia/powers/powers.hpp"

#include "potentia/c1/decision.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace potentia::powers {

using hilbert::cplx;
using hilbert::StateVector;

PSA PSA::create(StateVector psi, std::string id) {
    if (id.empty()) throw std::invalid_argument("PSA id must be nonempty");
    return PSA(std::move(psi), std::move(id));
}

bool same_state(const PSA& a, const PSA& b) {
    return a.psi().amplitudes() == b.psi().amplitudes();
}

StateVector canonical_ray(const StateVector& v) {
    for (const cplx& z : v.amplitudes()) {
        double mag = std::abs(z);
        if (mag <= 1e-12) continue;
        cplx rot = std::conj(z) / mag;
        std::vector<cplx> amps = v.amplitudes();
        for (cplx& a : amps) a *= rot;
        return StateVector::create(std::move(amps), v.dim());
    }
    return v;
}

Context Context::create(hilbert::Basis basis, std::vector<std::string> power_names) {
    if (power_names.size() != basis.dim())
        throw std::invalid_argument("context '" + basis.label() + "' names " +
                                    std::to_string(power_names.size()) + " powers for dimension " +
                                    std::to_string(basis.dim()));
    std::set<std::string> seen;
    for (const std::string& name : power_names) {
        if (!c1::is_identifier(name))
            throw std::invalid_argument("power name '" + name + "' is not an identifier");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate power name '" + name + "'");
    }

    std::vector<Power> powers;
    powers.reserve(power_names.size());
    for (std::size_t i = 0; i < power_names.size(); ++i)
        powers.push_back({canonical_ray(basis.vector(i)), power_names[i], basis.label()});
    return Context(std::move(basis), std::move(powers));
}

const Power* Context::find(const std::string& name) const {
    for (const Power& p : powers_)
        if (p.name == name) return &p;
    return nullptr;
}

QuantumSituation QuantumSituation::build(const PSA& psa, const Context& context) {
    if (psa.psi().dim() != context.dim())
        throw std::invalid_argument("PSA '" + psa.id() + "' and context '" + context.label() +
                                    "' have different dimensions");

    std::vector<cplx> coords = hilbert::change_of_basis(psa.psi(), context.basis());
    std::vector<Weighted> pairs;
    pairs.reserve(coords.size());
    double total = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        double p = std::norm(coords[i]);
        total += p;
        pairs.push_back({context.powers()[i], p});
    }
    if (std::abs(total - 1.0) > 1e-8)
        throw std::invalid_argument("potentia values sum to " + std::to_string(total));
    return QuantumSituation(psa.id(), context.label(), std::move(pairs));
}

const Weighted* QuantumSituation::find(const std::string& power_name) const {
    for (const Weighted& w : pairs_)
        if (w.power.name == power_name) return &w;
    return nullptr;
}

bool same_situation(const QuantumSituation& a, const QuantumSituation& b, double tol) {
    if (a.basis_label() != b.basis_label()) return false;
    if (a.pairs().size() != b.pairs().size()) return false;
    for (std::size_t i = 0; i < a.pairs().size(); ++i) {
        if (a.pairs()[i].power.name != b.pairs()[i].power.name) return false;
        if (std::abs(a.pairs()[i].potentia - b.pairs()[i].potentia) > tol) return false;
    }
    return true;
}

PTruth p_truth(const QuantumStatement& s, const PSA& psa, const Context& context) {
    if (s.claimed_potentia < 0.0 || s.claimed_potentia > 1.0)
        throw std::invalid_argument("claimed potentia must lie in [0, 1]");
    const Power* power = context.find(s.power_name);
    if (!power)
        throw std::invalid_argument("power '" + s.power_name + "' is not part of context '" +
                                    context.label() + "'");

    double computed = hilbert::born_weight(psa.psi(), hilbert::rank1_projector(power->ray));
    bool present = computed > 1e-9;
    bool accurate = std::abs(s.claimed_potentia - computed) <= 1e-6;
    return (present && accurate) ? PTruth::PTrue : PTruth::PFalse;
}

ContradictoryPair declare_contradictory(const Power& a, const Power& b,
                                        const hilbert::HermitianOperator& observable,
                                        std::string observable_label) {
    if (a.context != b.context)
        throw std::invalid_argument("powers '" + a.name + "' and '" + b.name +
                                    "' belong to different contexts");
    if (a.ray.dim() != observable.dim())
        throw std::invalid_argument("observable dimension does not match the powers");

    if (std::abs(hilbert::inner(a.ray, b.ray)) > 1e-9)
        throw std::invalid_argument("powers '" + a.name + "' and '" + b.name +
                                    "' are not orthogonal");

    auto eigenvalue_of = [&](const Power& p) {
        std::vector<cplx> image = observable.matrix().apply(p.ray.amplitudes());
        cplx lambda = hilbert::inner(std::span<const cplx>(p.ray.amplitudes()),
                                     std::span<const cplx>(image));
        double residual = 0.0;
        for (std::size_t i = 0; i < image.size(); ++i)
            residual += std::norm(image[i] - lambda * p.ray[i]);
        if (std::sqrt(residual) > 1e-9)
            throw std::invalid_argument("power '" + p.name + "' is not an eigenvector of '" +
                                        observable_label + "'");
        return lambda.real();
    };

    double la = eigenvalue_of(a);
    double lb = eigenvalue_of(b);
    if (std::abs(la - lb) <= 1e-8)
        throw std::invalid_argument("powers '" + a.name + "' and '" + b.name +
                                    "' share the eigenvalue " + std::to_string(la));

    return {a.name, b.name, std::move(observable_label)};
}

namespace {

bool superposed(double potentia) {
    return potentia > 1e-9 && potentia < 1.0 - 1e-9;
}

void push_unique(std::vector<c1::FormulaPtr>& out, c1::FormulaPtr f) {
    for (const auto& g : out)
        if (c1::structurally_equal(g, f)) return;
    out.push_back(std::move(f));
}

}  // namespace

std::vector<c1::FormulaPtr> superposition_formula(const QuantumSituation& qs,
                                                  std::span<const ContradictoryPair> pairs,
                                                  bool reinforce) {
    std::vector<c1::FormulaPtr> conjunctions;
    std::vector<c1::FormulaPtr> implications;

    for (const ContradictoryPair& pair : pairs) {
        for (const std::string& name : {pair.power_a, pair.power_b}) {
            const Weighted* w = qs.find(name);
            if (!w)
                throw std::invalid_argument("pair references power '" + name +
                                            "' absent from the situation");
            if (!superposed(w->potentia)) continue;
            auto atom = c1::Formula::atom(name);
            push_unique(conjunctions, c1::Formula::conj(atom, c1::Formula::neg(atom)));
            if (reinforce) push_unique(implications, c1::Formula::impl(atom, c1::Formula::neg(atom)));
        }
    }

    for (auto& f : implications) conjunctions.push_back(std::move(f));
    return conjunctions;
}

namespace {

void top_conjuncts(const c1::FormulaPtr& f, std::vector<c1::FormulaPtr>& out) {
    if (f->kind() == c1::Kind::Conj) {
        top_conjuncts(f->left(), out);
        top_conjuncts(f->right(), out);
        return;
    }
    out.push_back(f);
}

bool has_contradiction_pattern(std::span<const c1::FormulaPtr> formulas) {
    std::vector<c1::FormulaPtr> conjuncts;
    for (const auto& f : formulas) top_conjuncts(f, conjuncts);
    for (const auto& f : conjuncts) {
        if (!f->is_neg()) continue;
        for (const auto& g : conjuncts)
            if (c1::structurally_equal(f->left(), g)) return true;
    }
    return false;
}

}  // namespace

ConsistencyReport potential_consistency_check(std::span<const c1::FormulaPtr> formulas,
                                              std::size_t node_cap) {
    auto result = c1::trivializes(formulas, node_cap);
    if (result.trivial) return {ConsistencyKind::Trivial, std::nullopt};
    if (has_contradiction_pattern(formulas))
        return {ConsistencyKind::WeaklyInconsistentNontrivial, std::move(result.witness)};
    return {ConsistencyKind::Consistent, std::move(result.witness)};
}

}  // namespace potentia::powers
