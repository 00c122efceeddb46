#include "potentia/c1/formula.hpp"

#include <utility>

namespace potentia::c1 {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t compute_hash(Kind kind, const std::string& name, const FormulaPtr& l,
                         const FormulaPtr& r) {
    std::size_t h = static_cast<std::size_t>(kind) + 0x51ed270b;
    if (kind == Kind::Atom) return hash_combine(h, std::hash<std::string>{}(name));
    if (l) h = hash_combine(h, l->hash());
    if (r) h = hash_combine(h, r->hash());
    return h;
}

}  // namespace

Formula::Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right)
    : kind_(kind),
      name_(std::move(name)),
      left_(std::move(left)),
      right_(std::move(right)),
      hash_(compute_hash(kind_, name_, left_, right_)) {}

FormulaPtr Formula::atom(std::string name) {
    return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::neg(FormulaPtr inner) {
    return FormulaPtr(new Formula(Kind::Neg, {}, std::move(inner), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr lhs, FormulaPtr rhs) {
    return FormulaPtr(new Formula(Kind::Conj, {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::disj(FormulaPtr lhs, FormulaPtr rhs) {
    return FormulaPtr(new Formula(Kind::Disj, {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::impl(FormulaPtr lhs, FormulaPtr rhs) {
    return FormulaPtr(new Formula(Kind::Impl, {}, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::ball(FormulaPtr inner) {
    return neg(conj(inner, neg(inner)));
}

FormulaPtr Formula::strong_neg(FormulaPtr inner) {
    return conj(neg(inner), ball(inner));
}

bool Formula::is_contradiction_shape() const noexcept {
    return kind_ == Kind::Conj && right_->kind_ == Kind::Neg &&
           structurally_equal(right_->left_, left_);
}

bool Formula::equals(const Formula& other) const noexcept {
    if (this == &other) return true;
    if (kind_ != other.kind_ || hash_ != other.hash_) return false;
    if (kind_ == Kind::Atom) return name_ == other.name_;
    if (!structurally_equal(left_, other.left_)) return false;
    if (kind_ == Kind::Neg) return true;
    return structurally_equal(right_, other.right_);
}

namespace {

// precedence levels; higher binds tighter
int level(Kind k) {
    switch (k) {
        case Kind::Impl: return 1;
        case Kind::Disj: return 2;
        case Kind::Conj: return 3;
        default: return 4;  // Atom, Neg
    }
}

const char* op_text(Kind k) {
    switch (k) {
        case Kind::Conj: return " & ";
        case Kind::Disj: return " | ";
        case Kind::Impl: return " -> ";
        default: return "";
    }
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Kind::Atom:
            out += f.name();
            return;
        case Kind::Neg: {
            out += '~';
            const Formula& inner = *f.left();
            if (level(inner.kind()) < level(Kind::Neg)) {
                out += '(';
                print(inner, out);
                out += ')';
            } else {
                print(inner, out);
            }
            return;
        }
        default: {
            int self = level(f.kind());
            const Formula& l = *f.left();
            const Formula& r = *f.right();
            // left-associative: same-level left child needs no parens,
            // same-level right child does
            if (level(l.kind()) < self) {
                out += '(';
                print(l, out);
                out += ')';
            } else {
                print(l, out);
            }
            out += op_text(f.kind());
            if (level(r.kind()) <= self) {
                out += '(';
                print(r, out);
                out += ')';
            } else {
                print(r, out);
            }
            return;
        }
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(text[0])) return false;
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!tail(text[i])) return false;
    return true;
}

}  // namespace potentia::c1
