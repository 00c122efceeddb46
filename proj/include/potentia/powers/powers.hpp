#ifndef POTENTIA_POWERS_POWERS_HPP
#define POTENTIA_POWERS_POWERS_HPP

#include "potentia/c1/formula.hpp"
#include "potentia/c1/valuation.hpp"
#include "potentia/hilbert/operators.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace potentia::powers {

/// Potential state of affairs: the state vector itself, identified
/// independently of any basis.
class PSA {
  public:
    static PSA create(hilbert::StateVector psi, std::string id);

    const hilbert::StateVector& psi() const { return psi_; }
    const std::string& id() const { return id_; }

  private:
    PSA(hilbert::StateVector psi, std::string id) : psi_(std::move(psi)), id_(std::move(id)) {}

    hilbert::StateVector psi_;
    std::string id_;
};

/// Two PSAs are the same exactly when their vectors coincide; ids and any
/// basis talk are irrelevant to identity.
bool same_state(const PSA& a, const PSA& b);

/// Phase canonicalization used for power rays: first component of
/// magnitude above 1e-12 made real-positive.
hilbert::StateVector canonical_ray(const hilbert::StateVector& v);

/// A basis element read as a capacity of the system. The ray is stored
/// phase-canonically; the name doubles as a propositional atom, so it must
/// be identifier-shaped.
struct Power {
    hilbert::StateVector ray;
    std::string name;
    std::string context;  // label of the basis it belongs to
};

/// A measurement context: an orthonormal basis whose elements are named
/// powers.
class Context {
  public:
    /// Throws std::invalid_argument when names are not distinct
    /// identifiers or their count differs from the basis dimension.
    static Context create(hilbert::Basis basis, std::vector<std::string> power_names);

    const hilbert::Basis& basis() const { return basis_; }
    const std::string& label() const { return basis_.label(); }
    std::size_t dim() const { return basis_.dim(); }
    const std::vector<Power>& powers() const { return powers_; }

    const Power* find(const std::string& name) const;

  private:
    Context(hilbert::Basis basis, std::vector<Power> powers)
        : basis_(std::move(basis)), powers_(std::move(powers)) {}

    hilbert::Basis basis_;
    std::vector<Power> powers_;
};

/// One (power, potentia) pair of a quantum situation.
struct Weighted {
    Power power;
    double potentia;
};

/// Basis-dependent reading of a PSA: every power of the context paired
/// with its potentia, in basis order. Zero-potentia powers are retained.
class QuantumSituation {
  public:
    static QuantumSituation build(const PSA& psa, const Context& context);

    const std::string& psa_id() const { return psa_id_; }
    const std::string& basis_label() const { return basis_label_; }
    const std::vector<Weighted>& pairs() const { return pairs_; }

    const Weighted* find(const std::string& power_name) const;

  private:
    QuantumSituation(std::string psa_id, std::string basis_label, std::vector<Weighted> pairs)
        : psa_id_(std::move(psa_id)),
          basis_label_(std::move(basis_label)),
          pairs_(std::move(pairs)) {}

    std::string psa_id_;
    std::string basis_label_;
    std::vector<Weighted> pairs_;
};

/// Two situations describe different readings unless the basis, the pair
/// order, and every potentia agree.
bool same_situation(const QuantumSituation& a, const QuantumSituation& b, double tol = 1e-12);

/// "Power P has potentia p in PSA psi".
struct QuantumStatement {
    std::string power_name;
    double claimed_potentia;  // must lie in [0, 1]
    std::string psa_id;
};

enum class PTruth { PTrue, PFalse };

/// A statement is p-true when its power genuinely belongs to the PSA
/// (computed potentia above 1e-9) and the claimed potentia is right within
/// 1e-6. Pure query.
PTruth p_truth(const QuantumStatement& s, const PSA& psa, const Context& context);

/// Powers validated as jointly measurable opposites: orthogonal rays that
/// are eigenvectors of the same observable with distinct eigenvalues.
struct ContradictoryPair {
    std::string power_a;
    std::string power_b;
    std::string observable_label;
};

/// Throws std::invalid_argument naming the failed requirement
/// (different contexts, non-orthogonal, not an eigenvector, equal
/// eigenvalues).
ContradictoryPair declare_contradictory(const Power& a, const Power& b,
                                        const hilbert::HermitianOperator& observable,
                                        std::string observable_label);

/// The weak contradictions a superposition supports: for every declared
/// pair member whose potentia lies strictly inside (0, 1), the formula
/// P & ~P; with reinforce, P -> ~P is appended for those members as well.
/// Powers at potentia 0 or 1 contribute nothing.
std::vector<c1::FormulaPtr> superposition_formula(const QuantumSituation& qs,
                                                  std::span<const ContradictoryPair> pairs,
                                                  bool reinforce = false);

enum class ConsistencyKind { Consistent, WeaklyInconsistentNontrivial, Trivial };

struct ConsistencyReport {
    ConsistencyKind kind;
    std::optional<c1::Valuation> witness;  // satisfying valuation when nontrivial
};

/// Classifies a formula set: trivial (entails everything), weakly
/// inconsistent but nontrivial (a conjunct F and its weak negation both
/// appear, yet a satisfying valuation exists), or consistent.
ConsistencyReport potential_consistency_check(std::span<const c1::FormulaPtr> formulas,
                                              std::size_t node_cap = c1::kDefaultNodeCap);

}  // namespace potentia::powers

#endif
