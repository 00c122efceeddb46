#include "potentia/c1/valuation.hpp"

#include "potentia/errors.hpp"

#include <algorithm>

namespace potentia::c1 {

std::size_t SubformulaClosure::add(const FormulaPtr& f, std::size_t node_cap) {
    auto it = index_.find(f);
    if (it != index_.end()) return it->second;

    Node n{};
    n.kind = f->kind();
    if (f->left()) n.left = add(f->left(), node_cap);
    if (f->right()) n.right = add(f->right(), node_cap);

    if (nodes_.size() >= node_cap)
        throw ResourceLimitError("subformula closure too large", nodes_.size() + 1, node_cap);

    if (f->kind() == Kind::Neg) {
        ++negation_count_;
        const Formula& inner = *f->left();
        if (inner.kind() == Kind::Neg) n.dneg_inner = index_.at(inner.left());
        if (inner.is_contradiction_shape()) n.ball_subject = index_.at(inner.left());
    } else if (f->kind() == Kind::Atom) {
        ++atom_count_;
    }

    std::size_t idx = nodes_.size();
    nodes_.push_back(f);
    info_.push_back(n);
    index_.emplace(f, idx);
    return idx;
}

void SubformulaClosure::index_clause_instances() {
    // reductio: pairs of implications A->B, A->~B sharing an antecedent,
    // with B's well-behavedness formula in the closure
    std::vector<std::size_t> impls;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (info_[i].kind == Kind::Impl) impls.push_back(i);

    for (std::size_t i : impls) {
        for (std::size_t j : impls) {
            if (info_[i].left != info_[j].left) continue;
            std::size_t cons_i = info_[i].right;
            std::size_t cons_j = info_[j].right;
            // j's consequent must be the weak negation of i's
            if (info_[cons_j].kind != Kind::Neg || info_[cons_j].left != cons_i) continue;
            std::size_t ball = index_of(Formula::ball(nodes_[cons_i]));
            if (ball == npos) continue;
            ReductioInstance inst{ball, i, j, info_[i].left,
                                  std::max({ball, i, j, info_[i].left})};
            reductio_by_trigger_[inst.trigger].push_back(inst);
        }
    }

    // propagation: A°, B° and (A op B)° all present
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!info_[i].is_ball()) continue;
        std::size_t subject = info_[i].ball_subject;
        Kind k = info_[subject].kind;
        if (k != Kind::Conj && k != Kind::Disj && k != Kind::Impl) continue;
        std::size_t bl = index_of(Formula::ball(nodes_[info_[subject].left]));
        std::size_t br = index_of(Formula::ball(nodes_[info_[subject].right]));
        if (bl == npos || br == npos) continue;
        PropagationInstance inst{bl, br, i, std::max({bl, br, i})};
        propagation_by_trigger_[inst.trigger].push_back(inst);
    }
}

std::shared_ptr<const SubformulaClosure> SubformulaClosure::build(
    std::span<const FormulaPtr> roots, std::size_t node_cap) {
    auto closure = std::shared_ptr<SubformulaClosure>(new SubformulaClosure());
    for (const FormulaPtr& root : roots) closure->roots_.push_back(closure->add(root, node_cap));
    closure->index_clause_instances();
    return closure;
}

std::size_t SubformulaClosure::index_of(const FormulaPtr& f) const {
    auto it = index_.find(f);
    return it == index_.end() ? npos : it->second;
}

namespace {
const std::vector<SubformulaClosure::ReductioInstance> kNoReductio;
const std::vector<SubformulaClosure::PropagationInstance> kNoPropagation;
}  // namespace

const std::vector<SubformulaClosure::ReductioInstance>& SubformulaClosure::reductio_at(
    std::size_t i) const {
    auto it = reductio_by_trigger_.find(i);
    return it == reductio_by_trigger_.end() ? kNoReductio : it->second;
}

const std::vector<SubformulaClosure::PropagationInstance>& SubformulaClosure::propagation_at(
    std::size_t i) const {
    auto it = propagation_by_trigger_.find(i);
    return it == propagation_by_trigger_.end() ? kNoPropagation : it->second;
}

std::optional<bool> Valuation::value_of(const FormulaPtr& f) const {
    std::size_t i = closure_->index_of(f);
    if (i == npos) return std::nullopt;
    return value(i);
}

std::string Valuation::render() const {
    std::string out;
    for (std::size_t i = 0; i < closure_->size(); ++i) {
        if (closure_->node(i).kind != Kind::Atom) continue;
        out += closure_->at(i)->name();
        out += value(i) ? "=1\n" : "=0\n";
    }
    for (std::size_t i = 0; i < closure_->size(); ++i) {
        if (closure_->node(i).kind != Kind::Neg) continue;
        out += closure_->at(i)->to_string();
        out += value(i) ? "=1\n" : "=0\n";
    }
    return out;
}

ValuationEnumerator::ValuationEnumerator(ClosurePtr closure)
    : closure_(std::move(closure)), bits_(closure_->size(), 0) {}

std::optional<std::uint8_t> ValuationEnumerator::determined(std::size_t i) const {
    const auto& n = closure_->node(i);
    switch (n.kind) {
        case Kind::Atom:
            return std::nullopt;
        case Kind::Conj:
            return static_cast<std::uint8_t>(bits_[n.left] && bits_[n.right]);
        case Kind::Disj:
            return static_cast<std::uint8_t>(bits_[n.left] || bits_[n.right]);
        case Kind::Impl:
            return static_cast<std::uint8_t>(!bits_[n.left] || bits_[n.right]);
        case Kind::Neg:
            if (!bits_[n.left]) return std::uint8_t{1};           // v(A)=0 forces v(~A)=1
            if (n.is_ball()) return std::uint8_t{0};              // v(Y&~Y)=1 forces v(~(Y&~Y))=0
            if (n.dneg_inner != npos && !bits_[n.dneg_inner])
                return std::uint8_t{0};                           // v(A)=0 forces v(~~A)=0
            return std::nullopt;                                  // weak negation branches
    }
    return std::nullopt;
}

bool ValuationEnumerator::clauses_ok_at(std::size_t i) const {
    for (const auto& r : closure_->reductio_at(i)) {
        if (bits_[r.ball] && bits_[r.impl_pos] && bits_[r.impl_neg] && bits_[r.antecedent])
            return false;
    }
    for (const auto& p : closure_->propagation_at(i)) {
        if (bits_[p.ball_left] && bits_[p.ball_right] && !bits_[p.ball_comp]) return false;
    }
    return true;
}

std::size_t ValuationEnumerator::backtrack() {
    while (!stack_.empty()) {
        Choice& c = stack_.back();
        if (c.one_available) {
            c.one_available = false;
            c.taken = 1;
            bits_[c.index] = 1;
            if (clauses_ok_at(c.index)) return c.index + 1;
            continue;  // 1 also inadmissible here; pop
        }
        stack_.pop_back();
    }
    exhausted_ = true;
    return npos;
}

std::optional<Valuation> ValuationEnumerator::next() {
    if (exhausted_) return std::nullopt;

    std::size_t i;
    if (first_) {
        first_ = false;
        i = 0;
    } else {
        i = backtrack();
        if (exhausted_) return std::nullopt;
    }

    const std::size_t m = closure_->size();
    while (i < m) {
        std::optional<std::uint8_t> forced = determined(i);
        if (forced) {
            bits_[i] = *forced;
        } else {
            stack_.push_back({i, 0, true});
            bits_[i] = 0;
        }
        if (clauses_ok_at(i)) {
            ++i;
        } else {
            i = backtrack();
            if (exhausted_) return std::nullopt;
        }
    }
    return Valuation(closure_, bits_);
}

std::vector<Valuation> enumerate_valuations(std::span<const FormulaPtr> formulas,
                                            std::size_t node_cap) {
    ValuationEnumerator e(SubformulaClosure::build(formulas, node_cap));
    std::vector<Valuation> out;
    while (auto v = e.next()) out.push_back(std::move(*v));
    return out;
}

}  // namespace potentia::c1
