#ifndef POTENTIA_C1_FORMULA_HPP
#define POTENTIA_C1_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace potentia::c1 {

enum class Kind { Atom, Neg, Conj, Disj, Impl };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable propositional formula of the calculus C1.
///
/// Stored trees use only the primitive connectives: atoms, weak negation ~,
/// conjunction &, disjunction |, implication ->. The strong negation ~* and
/// the consistency operator @ are definable abbreviations and are expanded
/// by their builders, so they never appear in a stored tree:
///
///   @A  :=  ~(A & ~A)          ("A is well-behaved")
///   ~*A :=  ~A & @A
class Formula {
public:
    static FormulaPtr atom(std::string name);
    static FormulaPtr neg(FormulaPtr inner);
    static FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr impl(FormulaPtr lhs, FormulaPtr rhs);

    /// Expanded abbreviations (see class comment).
    static FormulaPtr ball(FormulaPtr inner);
    static FormulaPtr strong_neg(FormulaPtr inner);

    Kind kind() const noexcept { return kind_; }

    /// Atom name; empty for non-atoms.
    const std::string& name() const noexcept { return name_; }

    /// Left child of a binary node, or the operand of a negation.
    const FormulaPtr& left() const noexcept { return left_; }
    const FormulaPtr& right() const noexcept { return right_; }

    bool is_atom() const noexcept { return kind_ == Kind::Atom; }
    bool is_neg() const noexcept { return kind_ == Kind::Neg; }

    /// True when the formula has the shape X & ~X (a weak contradiction).
    bool is_contradiction_shape() const noexcept;

    std::size_t hash() const noexcept { return hash_; }
    bool equals(const Formula& other) const noexcept;

    /// Minimal-parenthesis rendering. Precedence ~ > & > | > ->, binary
    /// connectives left-associative; parse(to_string()) reproduces the tree.
    std::string to_string() const;

private:
    Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right);

    Kind kind_;
    std::string name_;
    FormulaPtr left_;
    FormulaPtr right_;
    std::size_t hash_;
};

inline bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    return a == b || (a && b && a->equals(*b));
}

/// Parse the ASCII surface syntax:
///
///   formula := impl
///   impl    := disj ("->" disj)*          left-associative
///   disj    := conj ("|" conj)*
///   conj    := unary ("&" unary)*
///   unary   := "~" unary | "~*" unary | "@" unary | primary
///   primary := atom | "(" formula ")"
///   atom    := [A-Za-z_][A-Za-z0-9_]*
///
/// ~* and @ are expanded on the fly. Throws ParseError on malformed or
/// empty input, with a 1-based character position.
FormulaPtr parse_formula(std::string_view text);

/// True iff `text` is a valid atom identifier.
bool is_identifier(std::string_view text) noexcept;

}  // namespace potentia::c1

#endif
