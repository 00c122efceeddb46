#include "potentia/c1/decision.hpp"
#include "potentia/c1/proof.hpp"
#include "potentia/c1/valuation.hpp"
#include "potentia/errors.hpp"
#include "support/classical_oracle.hpp"

#include <doctest.h>

#include <vector>

using namespace potentia;
using namespace potentia::c1;
using namespace potentia::c1::testing;

namespace {

std::vector<Valuation> enumerate(std::initializer_list<const char*> texts,
                                 std::size_t cap = kDefaultNodeCap) {
    std::vector<FormulaPtr> fs;
    for (const char* t : texts) fs.push_back(parse_formula(t));
    return enumerate_valuations(fs, cap);
}

bool holds(const Valuation& v, const char* text) {
    auto r = v.value_of(parse_formula(text));
    REQUIRE(r.has_value());
    return *r;
}

}  // namespace

TEST_CASE("a single atom admits exactly its two assignments") {
    auto vs = enumerate({"A"});
    REQUIRE(vs.size() == 2);
    CHECK_FALSE(holds(vs[0], "A"));
    CHECK(holds(vs[1], "A"));
}

TEST_CASE("weak negation branches only over a true operand") {
    auto vs = enumerate({"~A"});
    REQUIRE(vs.size() == 3);
    // (A, ~A) in stream order
    CHECK((holds(vs[0], "A") == false && holds(vs[0], "~A") == true));
    CHECK((holds(vs[1], "A") == true && holds(vs[1], "~A") == false));
    CHECK((holds(vs[2], "A") == true && holds(vs[2], "~A") == true));
}

TEST_CASE("double negation never holds over a false operand") {
    auto vs = enumerate({"~~A"});
    CHECK(vs.size() == 4);
    for (const auto& v : vs) {
        if (holds(v, "~~A")) CHECK(holds(v, "A"));
    }
}

TEST_CASE("weak contradiction does not explode") {
    auto r = is_valid(parse_formula("A & ~A -> B"));
    REQUIRE_FALSE(r.valid);
    REQUIRE(r.countermodel.has_value());
    CHECK(holds(*r.countermodel, "A"));
    CHECK(holds(*r.countermodel, "~A"));
    CHECK_FALSE(holds(*r.countermodel, "B"));
    CHECK(r.countermodel->render() == "A=1\nB=0\n~A=1\n");
}

TEST_CASE("strong contradiction explodes") {
    CHECK(is_valid(parse_formula("A & ~*A -> B")).valid);
}

TEST_CASE("identity and excluded middle are valid") {
    CHECK(is_valid(parse_formula("A -> A")).valid);
    CHECK(is_valid(parse_formula("A | ~A")).valid);
}

TEST_CASE("a weak contradiction is satisfiable so its negation is not valid") {
    auto r = is_valid(parse_formula("~(A & ~A)"));
    REQUIRE_FALSE(r.valid);
    CHECK(holds(*r.countermodel, "A"));
    CHECK(holds(*r.countermodel, "~A"));
}

TEST_CASE("contradictory premises stay nontrivial") {
    std::vector<FormulaPtr> gamma = {parse_formula("A"), parse_formula("~A")};
    auto r = trivializes(gamma);
    REQUIRE_FALSE(r.trivial);
    REQUIRE(r.witness.has_value());
    CHECK(holds(*r.witness, "A"));
    CHECK(holds(*r.witness, "~A"));
}

TEST_CASE("strongly contradictory premises trivialize") {
    std::vector<FormulaPtr> gamma = {parse_formula("A"), parse_formula("~*A")};
    CHECK(trivializes(gamma).trivial);
}

TEST_CASE("the empty premise set is nontrivial") {
    auto r = trivializes({});
    CHECK_FALSE(r.trivial);
    CHECK(r.witness.has_value());
}

TEST_CASE("reinforced contradictions are still satisfiable") {
    std::vector<FormulaPtr> gamma = {
        parse_formula("P & ~P"),
        parse_formula("Q & ~Q"),
        parse_formula("P -> ~P"),
        parse_formula("Q -> ~Q"),
    };
    auto r = trivializes(gamma);
    REQUIRE_FALSE(r.trivial);
    CHECK(holds(*r.witness, "P & ~P"));
    CHECK(holds(*r.witness, "Q & ~Q"));
}

TEST_CASE("entailment is paraconsistent but modus ponens works") {
    std::vector<FormulaPtr> mp = {parse_formula("A"), parse_formula("A -> B")};
    CHECK(entails(mp, parse_formula("B")).entailed);

    std::vector<FormulaPtr> contradiction = {parse_formula("A & ~A")};
    auto r = entails(contradiction, parse_formula("B"));
    CHECK_FALSE(r.entailed);
    CHECK(r.countermodel.has_value());
}

TEST_CASE("every axiom schema is valid under random substitution") {
    SplitMix64 rng(20260814);
    for (const AxiomSchema& schema : axiom_schemas()) {
        CAPTURE(schema.id);
        for (int trial = 0; trial < 200; ++trial) {
            std::map<std::string, FormulaPtr> binding = {
                {"A", random_formula(rng, 2)},
                {"B", random_formula(rng, 2)},
                {"C", random_formula(rng, 2)},
            };
            auto instance = substitute(schema.pattern, binding);
            CAPTURE(instance->to_string());
            CHECK(is_valid(instance, 512).valid);
        }
    }
}

TEST_CASE("modus ponens preserves validity on valid pairs") {
    SplitMix64 rng(7);
    const auto& schemas = axiom_schemas();
    for (int trial = 0; trial < 100; ++trial) {
        std::map<std::string, FormulaPtr> b1 = {
            {"A", random_formula(rng, 1)},
            {"B", random_formula(rng, 1)},
            {"C", random_formula(rng, 1)},
        };
        std::map<std::string, FormulaPtr> b2 = {
            {"A", random_formula(rng, 1)},
            {"B", random_formula(rng, 1)},
            {"C", random_formula(rng, 1)},
        };
        auto x = substitute(schemas[rng.next_below(schemas.size())].pattern, b1);
        auto y = substitute(schemas[rng.next_below(schemas.size())].pattern, b2);
        auto xy = Formula::impl(x, y);
        REQUIRE(is_valid(x, 512).valid);
        REQUIRE(is_valid(xy, 512).valid);
        CHECK(is_valid(y, 512).valid);
    }
}

TEST_CASE("strengthening negations recovers classical validity") {
    SplitMix64 rng(99);
    int done = 0;
    while (done < 200) {
        auto f = random_formula(rng, 3);
        if (node_count(f) > 10) continue;
        ++done;
        auto strengthened = strengthen_negations(f);
        CAPTURE(f->to_string());
        CHECK(is_valid(strengthened, 256).valid == classically_valid(f));
    }
}

TEST_CASE("enumeration order is deterministic") {
    auto a = enumerate({"~(A & B) -> ~A | C", "~~B"});
    auto b = enumerate({"~(A & B) -> ~A | C", "~~B"});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("admissible valuation count respects the branch bound") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_formula(rng, 3);
        std::vector<FormulaPtr> roots = {f};
        auto closure = SubformulaClosure::build(roots, 256);
        auto vs = enumerate_valuations(roots, 256);
        std::size_t bound = (std::size_t{1} << closure->atom_count())
                          * (std::size_t{1} << closure->negation_count());
        CAPTURE(f->to_string());
        CHECK(vs.size() <= bound);
        CHECK(vs.size() >= 1);
    }
}

TEST_CASE("the closure cap is enforced") {
    std::vector<FormulaPtr> roots = {parse_formula("A & B & C & D")};
    CHECK_THROWS_AS(enumerate_valuations(roots, 3), ResourceLimitError);
    try {
        enumerate_valuations(roots, 3);
    } catch (const ResourceLimitError& e) {
        CHECK(e.cap() == 3);
        CHECK(e.requested() == 4);
    }
}

TEST_CASE("valuations answer only for formulas inside their closure") {
    auto vs = enumerate({"A"});
    CHECK_FALSE(vs[0].value_of(parse_formula("Z")).has_value());
}
