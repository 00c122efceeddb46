#ifndef POTENTIA_POWERS_EXPERIMENT_HPP
#define POTENTIA_POWERS_EXPERIMENT_HPP

#include "potentia/powers/powers.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace potentia::powers {

/// Record of one measurement outcome: a single power expressed in
/// actuality. Constructing one never touches the situation or its PSA;
/// the same situation can be actualized any number of times.
struct ActualEffectuation {
    std::string selected;
    std::map<std::string, bool> truth;  // every power of the context; exactly one true
    std::uint64_t shot_index;
    std::uint64_t seed;
};

/// Samples one power with probability equal to its potentia. Each shot
/// index draws from its own substream of the seed, so outcomes are
/// independent of call order and of how many shots were taken before.
ActualEffectuation actualize(const QuantumSituation& qs, std::uint64_t seed,
                             std::uint64_t shot_index = 0);

struct FrequencyEntry {
    std::string power;
    std::uint64_t count;
    double frequency;
};

struct FrequencyTable {
    std::vector<FrequencyEntry> entries;  // in situation pair order
    std::uint64_t shots;
    std::uint64_t seed;
};

/// shots seeded actualizations of the same unchanged situation.
/// Throws std::invalid_argument when shots is zero.
FrequencyTable run_experiment(const QuantumSituation& qs, std::uint64_t shots,
                              std::uint64_t seed);

struct OppositionReport {
    std::size_t checked;
    std::vector<std::size_t> violations;  // indices into the effectuation list
    bool ok() const { return violations.empty(); }
};

/// Verifies the pair's powers take opposite actual truth values in every
/// effectuation.
OppositionReport square_of_opposition_check(const ContradictoryPair& pair,
                                            std::span<const ActualEffectuation> effectuations);

}  // namespace potentia::powers

#endif
