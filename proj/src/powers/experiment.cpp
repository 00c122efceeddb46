#include "potentia/powers/experiment.hpp"

#include "potentia/rng.hpp"

#include <stdexcept>

namespace potentia::powers {

namespace {

std::size_t sample_index(const QuantumSituation& qs, std::uint64_t seed,
                         std::uint64_t shot_index) {
    double u = SplitMix64(substream_seed(seed, shot_index)).next_unit();
    double cumulative = 0.0;
    std::size_t last_weighted = qs.pairs().size();
    for (std::size_t i = 0; i < qs.pairs().size(); ++i) {
        double p = qs.pairs()[i].potentia;
        if (p <= 0.0) continue;
        cumulative += p;
        last_weighted = i;
        if (u < cumulative) return i;
    }
    // u landed in the rounding slack past the last weighted entry
    if (last_weighted == qs.pairs().size())
        throw std::invalid_argument("situation carries no potentia to actualize");
    return last_weighted;
}

}  // namespace

ActualEffectuation actualize(const QuantumSituation& qs, std::uint64_t seed,
                             std::uint64_t shot_index) {
    std::size_t chosen = sample_index(qs, seed, shot_index);
    ActualEffectuation out;
    out.selected = qs.pairs()[chosen].power.name;
    for (std::size_t i = 0; i < qs.pairs().size(); ++i)
        out.truth[qs.pairs()[i].power.name] = (i == chosen);
    out.shot_index = shot_index;
    out.seed = seed;
    return out;
}

FrequencyTable run_experiment(const QuantumSituation& qs, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("an experiment needs at least one shot");

    std::vector<std::uint64_t> counts(qs.pairs().size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) ++counts[sample_index(qs, seed, shot)];

    FrequencyTable table{{}, shots, seed};
    table.entries.reserve(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        table.entries.push_back({qs.pairs()[i].power.name, counts[i],
                                 static_cast<double>(counts[i]) / static_cast<double>(shots)});
    return table;
}

OppositionReport square_of_opposition_check(const ContradictoryPair& pair,
                                            std::span<const ActualEffectuation> effectuations) {
    OppositionReport report{effectuations.size(), {}};
    for (std::size_t i = 0; i < effectuations.size(); ++i) {
        const auto& truth = effectuations[i].truth;
        auto a = truth.find(pair.power_a);
        auto b = truth.find(pair.power_b);
        bool va = a != truth.end() && a->second;
        bool vb = b != truth.end() && b->second;
        if (va == vb) report.violations.push_back(i);
    }
    return report;
}

}  // namespace potentia::powers
