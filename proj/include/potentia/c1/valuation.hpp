#ifndef POTENTIA_C1_VALUATION_HPP
#define POTENTIA_C1_VALUATION_HPP

#include "potentia/c1/formula.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace potentia::c1 {

inline constexpr std::size_t kDefaultNodeCap = 64;
inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Subformula closure of a formula set, ordered so children precede parents.
// Structural duplicates collapse to one node. Clause instances that constrain
// valuations (reductio, well-behavedness propagation) are indexed up front,
// keyed by the largest node index they mention, so the enumerator can check
// them incrementally.
class SubformulaClosure {
  public:
    struct Node {
        Kind kind;
        std::size_t left = npos;   // operand of Neg, or left of a binary node
        std::size_t right = npos;
        std::size_t dneg_inner = npos;    // for ~~X: index of X
        std::size_t ball_subject = npos;  // for ~(Y & ~Y): index of Y
        bool is_ball() const { return ball_subject != npos; }
    };

    // v(B°)=1, v(A->B)=1, v(A->~B)=1 together force v(A)=0
    struct ReductioInstance {
        std::size_t ball;        // B°
        std::size_t impl_pos;    // A->B
        std::size_t impl_neg;    // A->~B
        std::size_t antecedent;  // A
        std::size_t trigger;
    };

    // v(A°)=1 and v(B°)=1 force v((A op B)°)=1
    struct PropagationInstance {
        std::size_t ball_left;
        std::size_t ball_right;
        std::size_t ball_comp;
        std::size_t trigger;
    };

    static std::shared_ptr<const SubformulaClosure> build(std::span<const FormulaPtr> roots,
                                                          std::size_t node_cap = kDefaultNodeCap);

    std::size_t size() const { return nodes_.size(); }
    const FormulaPtr& at(std::size_t i) const { return nodes_[i]; }
    const Node& node(std::size_t i) const { return info_[i]; }
    std::size_t index_of(const FormulaPtr& f) const;
    const std::vector<std::size_t>& root_indices() const { return roots_; }
    std::size_t atom_count() const { return atom_count_; }
    std::size_t negation_count() const { return negation_count_; }

    const std::vector<ReductioInstance>& reductio_at(std::size_t i) const;
    const std::vector<PropagationInstance>& propagation_at(std::size_t i) const;

  private:
    SubformulaClosure() = default;
    std::size_t add(const FormulaPtr& f, std::size_t node_cap);
    void index_clause_instances();

    struct Hash {
        std::size_t operator()(const FormulaPtr& f) const { return f->hash(); }
    };
    struct Eq {
        bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return a->equals(*b); }
    };

    std::vector<FormulaPtr> nodes_;
    std::vector<Node> info_;
    std::unordered_map<FormulaPtr, std::size_t, Hash, Eq> index_;
    std::vector<std::size_t> roots_;
    std::size_t atom_count_ = 0;
    std::size_t negation_count_ = 0;
    std::unordered_map<std::size_t, std::vector<ReductioInstance>> reductio_by_trigger_;
    std::unordered_map<std::size_t, std::vector<PropagationInstance>> propagation_by_trigger_;
};

using ClosurePtr = std::shared_ptr<const SubformulaClosure>;

// One admissible assignment of truth values to every closure node.
//
// Admissibility means:
//   - conjunction, disjunction and implication take their classical values;
//   - v(A)=0 implies v(~A)=1 (no truth-value gaps);
//   - v(~~A)=1 implies v(A)=1;
//   - v(~(Y & ~Y)) = 1 - v(Y & ~Y): a contradiction and its negation never
//     hold together, so A° genuinely records that A behaves classically
//     (this is the closure-local face of the reductio clause; the quantified
//     original would need formulas outside the closure to refute a value);
//   - reductio: v(B°)=v(A->B)=v(A->~B)=1 forces v(A)=0 on in-closure
//     instances;
//   - propagation: v(A°)=v(B°)=1 forces v((A op B)°)=1 for op in &, |, ->.
//
// Weak negation is otherwise unconstrained: v(A)=1 leaves v(~A) free, which
// is where paraconsistency enters.
class Valuation {
  public:
    Valuation(ClosurePtr closure, std::vector<std::uint8_t> bits)
        : closure_(std::move(closure)), bits_(std::move(bits)) {}

    bool value(std::size_t index) const { return bits_[index] != 0; }
    std::optional<bool> value_of(const FormulaPtr& f) const;
    const ClosurePtr& closure() const { return closure_; }

    bool operator==(const Valuation& other) const { return bits_ == other.bits_; }

    // atoms first, then negated subformulas, one "formula=bit" line each
    std::string render() const;

  private:
    ClosurePtr closure_;
    std::vector<std::uint8_t> bits_;
};

// Streams every admissible valuation of a closure in lexicographic order of
// the branch bits (0 before 1 at each free node, nodes in closure order).
class ValuationEnumerator {
  public:
    explicit ValuationEnumerator(ClosurePtr closure);

    std::optional<Valuation> next();

  private:
    struct Choice {
        std::size_t index;
        std::uint8_t taken;
        bool one_available;
    };

    std::optional<std::uint8_t> determined(std::size_t i) const;
    bool clauses_ok_at(std::size_t i) const;
    std::size_t backtrack();

    ClosurePtr closure_;
    std::vector<std::uint8_t> bits_;
    std::vector<Choice> stack_;
    bool first_ = true;
    bool exhausted_ = false;
};

std::vector<Valuation> enumerate_valuations(std::span<const FormulaPtr> formulas,
                                            std::size_t node_cap = kDefaultNodeCap);

}  // namespace potentia::c1

#endif
