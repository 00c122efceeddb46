#ifndef POTENTIA_LATTICE_LAWS_HPP
#define POTENTIA_LATTICE_LAWS_HPP

#include "potentia/lattice/subspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace potentia::lattice {

struct LawCheck {
    std::string law;
    std::size_t trials;
    std::size_t failures;
};

struct LawReport {
    std::size_t dim;
    std::uint64_t seed;
    std::vector<LawCheck> checks;

    std::size_t total_trials() const;
    std::size_t total_failures() const;
    bool ok() const { return total_failures() == 0; }
};

/// Draws `trials` random subspace triples (plus a contained pair per
/// trial) in C^dim and checks the orthomodular-lattice laws on each:
/// commutativity, associativity, absorption, idempotence, bounds,
/// complement laws, double complement, De Morgan, order reversal, and
/// the orthomodular identity. Distributivity is deliberately absent; see
/// distributivity_witness.
LawReport verify_laws(std::size_t dim, std::size_t trials, std::uint64_t seed);

}  // namespace potentia::lattice

#endif
