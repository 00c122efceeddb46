#include "potentia/lattice/laws.hpp"

#include <stdexcept>

namespace potentia::lattice {

std::size_t LawReport::total_trials() const {
    std::size_t n = 0;
    for (const LawCheck& c : checks) n += c.trials;
    return n;
}

std::size_t LawReport::total_failures() const {
    std::size_t n = 0;
    for (const LawCheck& c : checks) n += c.failures;
    return n;
}

LawReport verify_laws(std::size_t dim, std::size_t trials, std::uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("lattice laws need dimension >= 2");

    LawReport report{dim, seed, {}};
    report.checks = {{"meet commutes", 0, 0},
                     {"join commutes", 0, 0},
                     {"meet associates", 0, 0},
                     {"join associates", 0, 0},
                     {"absorption a ^ (a v b) = a", 0, 0},
                     {"absorption a v (a ^ b) = a", 0, 0},
                     {"idempotence", 0, 0},
                     {"bounds 0 and 1", 0, 0},
                     {"a ^ a' = 0 and a v a' = 1", 0, 0},
                     {"double complement", 0, 0},
                     {"De Morgan", 0, 0},
                     {"order reversal", 0, 0},
                     {"orthomodular identity", 0, 0}};
    LawCheck& meet_comm = report.checks[0];
    LawCheck& join_comm = report.checks[1];
    LawCheck& meet_assoc = report.checks[2];
    LawCheck& join_assoc = report.checks[3];
    LawCheck& absorb_meet = report.checks[4];
    LawCheck& absorb_join = report.checks[5];
    LawCheck& idem = report.checks[6];
    LawCheck& bounds = report.checks[7];
    LawCheck& complement = report.checks[8];
    LawCheck& involution = report.checks[9];
    LawCheck& de_morgan = report.checks[10];
    LawCheck& order_rev = report.checks[11];
    LawCheck& orthomodular = report.checks[12];

    SplitMix64 rng(seed);
    Subspace zero = Subspace::zero(dim);
    Subspace one = Subspace::full(dim);

    auto run = [](LawCheck& check, bool held) {
        ++check.trials;
        if (!held) ++check.failures;
    };

    for (std::size_t t = 0; t < trials; ++t) {
        Subspace a = random_subspace(rng, dim);
        Subspace b = random_subspace(rng, dim);
        Subspace c = random_subspace(rng, dim);
        auto [p, q] = random_comparable_pair(rng, dim);

        run(meet_comm, same_subspace(meet(a, b), meet(b, a)));
        run(join_comm, same_subspace(join(a, b), join(b, a)));
        run(meet_assoc, same_subspace(meet(meet(a, b), c), meet(a, meet(b, c))));
        run(join_assoc, same_subspace(join(join(a, b), c), join(a, join(b, c))));
        run(absorb_meet, same_subspace(meet(a, join(a, b)), a));
        run(absorb_join, same_subspace(join(a, meet(a, b)), a));
        run(idem, same_subspace(meet(a, a), a) && same_subspace(join(a, a), a));
        run(bounds, same_subspace(meet(a, one), a) && same_subspace(join(a, zero), a) &&
                        same_subspace(meet(a, zero), zero) && same_subspace(join(a, one), one));
        run(complement,
            same_subspace(meet(a, ortho(a)), zero) && same_subspace(join(a, ortho(a)), one));
        run(involution, same_subspace(ortho(ortho(a)), a));
        run(de_morgan, same_subspace(ortho(meet(a, b)), join(ortho(a), ortho(b))) &&
                           same_subspace(ortho(join(a, b)), meet(ortho(a), ortho(b))));
        run(order_rev, leq(ortho(q), ortho(p)));
        run(orthomodular, orthomodular_holds(p, q));
    }

    return report;
}

}  // namespace potentia::lattice
