#ifndef POTENTIA_CLI_SCENARIO_HPP
#define POTENTIA_CLI_SCENARIO_HPP

#include "potentia/caps.hpp"
#include "potentia/powers/powers.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace potentia::cli {

struct ExperimentSpec {
    std::string name;
    std::string psa;
    std::string basis;
    std::uint64_t shots;
    std::optional<std::uint64_t> seed;
};

/// A fully validated scenario file. Everything here has already been
/// through the library constructors, so commands can use it directly.
struct Scenario {
    std::size_t dimension = 0;
    std::vector<powers::PSA> psas;
    std::vector<powers::Context> contexts;
    std::vector<std::pair<std::string, hilbert::HermitianOperator>> observables;
    std::vector<powers::ContradictoryPair> pairs;
    std::optional<std::string> hamiltonian;  // label into observables
    std::vector<double> times;
    std::vector<ExperimentSpec> experiments;

    const powers::PSA* find_psa(const std::string& id) const;
    const powers::Context* find_context(const std::string& label) const;
    const hilbert::HermitianOperator* find_observable(const std::string& label) const;

    /// The declared pairs whose powers belong to the given context.
    std::vector<powers::ContradictoryPair> pairs_for(const powers::Context& ctx) const;
};

/// Parses and validates a scenario document. Throws ScenarioError with a
/// JSON-pointer-style path at the first violation, ResourceLimitError when
/// the dimension exceeds the cap.
Scenario parse_scenario(const nlohmann::ordered_json& doc,
                        std::size_t dim_cap = default_dim_cap());

/// Reads the file, then parse_scenario. Unreadable files and JSON syntax
/// errors also surface as ScenarioError.
Scenario load_scenario(const std::string& file_path, std::size_t dim_cap = default_dim_cap());

}  // namespace potentia::cli

#endif
