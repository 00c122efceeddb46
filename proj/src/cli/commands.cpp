#include "potentia/cli/commands.hpp"

#include "potentia/c1/decision.hpp"
#include "potentia/c1/proof.hpp"
#include "potentia/caps.hpp"
#include "potentia/cli/scenario.hpp"
#include "potentia/errors.hpp"
#include "potentia/hilbert/serialize.hpp"
#include "potentia/hilbert/spectral.hpp"
#include "potentia/lattice/laws.hpp"
#include "potentia/numfmt.hpp"
#include "potentia/powers/experiment.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace potentia::cli {

using nlohmann::ordered_json;

namespace {

std::uint64_t draw_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
}

const char* classification_name(powers::ConsistencyKind kind) {
    switch (kind) {
        case powers::ConsistencyKind::Consistent: return "consistent";
        case powers::ConsistencyKind::WeaklyInconsistentNontrivial:
            return "weakly inconsistent, nontrivial";
        case powers::ConsistencyKind::Trivial: return "trivial";
    }
    return "unknown";
}

/// Valuation lines ("F=0") as a JSON object, preserving render order.
ordered_json valuation_json(const c1::Valuation& v) {
    ordered_json obj = ordered_json::object();
    std::istringstream lines(v.render());
    std::string line;
    while (std::getline(lines, line)) {
        auto eq = line.rfind('=');
        if (eq == std::string::npos) continue;
        obj[line.substr(0, eq)] = line.substr(eq + 1) == "1" ? 1 : 0;
    }
    return obj;
}

std::vector<const powers::PSA*> select_psas(const Scenario& sc, const std::string& filter) {
    std::vector<const powers::PSA*> out;
    for (const auto& p : sc.psas)
        if (filter.empty() || p.id() == filter) out.push_back(&p);
    if (out.empty()) throw std::invalid_argument("state '" + filter + "' is not in the scenario");
    return out;
}

std::vector<const powers::Context*> select_contexts(const Scenario& sc,
                                                    const std::string& filter) {
    std::vector<const powers::Context*> out;
    for (const auto& c : sc.contexts)
        if (filter.empty() || c.label() == filter) out.push_back(&c);
    if (out.empty()) throw std::invalid_argument("basis '" + filter + "' is not in the scenario");
    return out;
}

int cmd_situations(const std::string& scenario_path, const std::string& psa_filter,
                   const std::string& basis_filter, bool reinforce, const std::string& format,
                   std::ostream& out) {
    Scenario sc = load_scenario(scenario_path);
    auto psas = select_psas(sc, psa_filter);
    auto contexts = select_contexts(sc, basis_filter);

    ordered_json report;
    report["situations"] = ordered_json::array();

    for (const powers::PSA* psa : psas) {
        for (const powers::Context* ctx : contexts) {
            powers::QuantumSituation qs = powers::QuantumSituation::build(*psa, *ctx);
            auto pairs = sc.pairs_for(*ctx);
            auto formulas = powers::superposition_formula(qs, pairs, reinforce);
            auto consistency = powers::potential_consistency_check(formulas, default_node_cap());

            if (format == "json") {
                ordered_json block;
                block["psa"] = psa->id();
                block["basis"] = ctx->label();
                block["pairs"] = ordered_json::array();
                for (const auto& w : qs.pairs())
                    block["pairs"].push_back(
                        {{"power", w.power.name}, {"potentia", round12(w.potentia)}});
                block["formulas"] = ordered_json::array();
                for (const auto& f : formulas) block["formulas"].push_back(f->to_string());
                block["classification"] = classification_name(consistency.kind);
                report["situations"].push_back(std::move(block));
                continue;
            }

            out << "psa " << psa->id() << " in basis " << ctx->label() << ":\n";
            for (const auto& w : qs.pairs())
                out << "  " << w.power.name << ": potentia " << fmt12(w.potentia) << "\n";
            out << "  formulas:";
            if (formulas.empty()) {
                out << " (none)";
            } else {
                for (std::size_t i = 0; i < formulas.size(); ++i)
                    out << (i ? "; " : " ") << formulas[i]->to_string();
            }
            out << "\n  classification: " << classification_name(consistency.kind) << "\n";
        }
    }

    if (format == "json") out << report.dump(2) << "\n";
    return 0;
}

struct MeasureResult {
    ExperimentSpec spec;
    std::uint64_t seed = 0;
    bool drawn = false;
    powers::FrequencyTable table;
    std::string fp_before;
    std::string fp_after;
    bool situation_unchanged = false;
};

int cmd_measure(const std::string& scenario_path, const std::string& experiment_filter,
                unsigned jobs, const std::string& format, std::ostream& out) {
    Scenario sc = load_scenario(scenario_path);

    std::vector<MeasureResult> planned;
    for (const auto& spec : sc.experiments) {
        if (!experiment_filter.empty() && spec.name != experiment_filter) continue;
        MeasureResult r;
        r.spec = spec;
        r.drawn = !spec.seed.has_value();
        r.seed = spec.seed ? *spec.seed : draw_seed();
        planned.push_back(std::move(r));
    }
    if (planned.empty()) {
        if (!experiment_filter.empty())
            throw std::invalid_argument("experiment '" + experiment_filter +
                                        "' is not in the scenario");
        throw std::invalid_argument("the scenario declares no experiments");
    }

    auto runner = [&sc](MeasureResult r) {
        const powers::PSA& psa = *sc.find_psa(r.spec.psa);
        const powers::Context& ctx = *sc.find_context(r.spec.basis);
        r.fp_before = hilbert::state_fingerprint(psa.psi());
        powers::QuantumSituation qs = powers::QuantumSituation::build(psa, ctx);
        r.table = powers::run_experiment(qs, r.spec.shots, r.seed);
        r.fp_after = hilbert::state_fingerprint(psa.psi());
        r.situation_unchanged =
            powers::same_situation(qs, powers::QuantumSituation::build(psa, ctx));
        return r;
    };

    std::vector<MeasureResult> done;
    done.reserve(planned.size());
    if (jobs <= 1) {
        for (auto& r : planned) done.push_back(runner(std::move(r)));
    } else {
        // waves of at most `jobs` concurrent experiments; output order is
        // declaration order either way
        for (std::size_t base = 0; base < planned.size(); base += jobs) {
            std::vector<std::future<MeasureResult>> wave;
            for (std::size_t i = base; i < planned.size() && i < base + jobs; ++i)
                wave.push_back(
                    std::async(std::launch::async, runner, std::move(planned[i])));
            for (auto& f : wave) done.push_back(f.get());
        }
    }

    bool all_clean = true;
    ordered_json report;
    report["experiments"] = ordered_json::array();
    for (const MeasureResult& r : done) {
        bool state_unchanged = r.fp_before == r.fp_after;
        all_clean = all_clean && state_unchanged && r.situation_unchanged;

        if (format == "json") {
            ordered_json block;
            block["name"] = r.spec.name;
            block["psa"] = r.spec.psa;
            block["basis"] = r.spec.basis;
            block["shots"] = r.spec.shots;
            block["seed"] = r.seed;
            block["seed_drawn"] = r.drawn;
            block["results"] = ordered_json::array();
            for (const auto& entry : r.table.entries)
                block["results"].push_back({{"power", entry.power},
                                            {"count", entry.count},
                                            {"frequency", round12(entry.frequency)}});
            block["state_fingerprint_before"] = r.fp_before;
            block["state_fingerprint_after"] = r.fp_after;
            block["state_unchanged"] = state_unchanged;
            block["situation_unchanged"] = r.situation_unchanged;
            report["experiments"].push_back(std::move(block));
            continue;
        }

        out << "experiment " << r.spec.name << ": psa " << r.spec.psa << " in basis "
            << r.spec.basis << ", " << r.spec.shots << " shots, seed " << r.seed
            << (r.drawn ? " (drawn)" : "") << "\n";
        for (const auto& entry : r.table.entries)
            out << "  " << entry.power << ": " << entry.count << " (frequency "
                << fmt12(entry.frequency) << ")\n";
        out << "  state fingerprint: " << r.fp_before << " -> " << r.fp_after
            << (state_unchanged ? " (unchanged)" : " (CHANGED)") << "\n";
        out << "  situation rebuilt identically: " << (r.situation_unchanged ? "yes" : "no")
            << "\n";
    }

    if (format == "json") out << report.dump(2) << "\n";
    return all_clean ? 0 : 1;
}

int cmd_evolve(const std::string& scenario_path, const std::string& psa_filter,
               const std::string& format, std::ostream& out) {
    Scenario sc = load_scenario(scenario_path);
    if (!sc.hamiltonian) throw std::invalid_argument("the scenario declares no hamiltonian");
    if (sc.times.empty()) throw std::invalid_argument("the scenario declares no times");
    const hilbert::HermitianOperator& h = *sc.find_observable(*sc.hamiltonian);
    auto psas = select_psas(sc, psa_filter);

    ordered_json report;
    report["hamiltonian"] = *sc.hamiltonian;
    report["trajectories"] = ordered_json::array();

    for (const powers::PSA* psa : psas) {
        ordered_json traj;
        traj["psa"] = psa->id();
        traj["points"] = ordered_json::array();
        if (format != "json") out << "psa " << psa->id() << " under " << *sc.hamiltonian << ":\n";

        for (double t : sc.times) {
            hilbert::StateVector at_t = hilbert::evolve(psa->psi(), h, t);
            powers::PSA snapshot = powers::PSA::create(at_t, psa->id());

            if (format == "json") {
                ordered_json point;
                point["t"] = round12(t);
                point["state"] = hilbert::json_of(at_t);
                point["norm"] = round12(at_t.norm());
                point["situations"] = ordered_json::array();
                for (const auto& ctx : sc.contexts) {
                    powers::QuantumSituation qs = powers::QuantumSituation::build(snapshot, ctx);
                    ordered_json sit;
                    sit["basis"] = ctx.label();
                    sit["potentia"] = ordered_json::array();
                    for (const auto& w : qs.pairs())
                        sit["potentia"].push_back(
                            {{"power", w.power.name}, {"value", round12(w.potentia)}});
                    point["situations"].push_back(std::move(sit));
                }
                traj["points"].push_back(std::move(point));
                continue;
            }

            out << "  t=" << fmt12(t) << " state=" << hilbert::canonical_state_json(at_t)
                << " norm=" << fmt12(at_t.norm()) << "\n";
            for (const auto& ctx : sc.contexts) {
                powers::QuantumSituation qs = powers::QuantumSituation::build(snapshot, ctx);
                out << "    " << ctx.label() << ":";
                for (const auto& w : qs.pairs())
                    out << " " << w.power.name << "=" << fmt12(w.potentia);
                out << "\n";
            }
        }
        report["trajectories"].push_back(std::move(traj));
    }

    if (format == "json") out << report.dump(2) << "\n";
    return 0;
}

int cmd_logic_check(const std::string& text, const std::string& expect, std::size_t node_cap,
                    const std::string& format, std::ostream& out) {
    c1::FormulaPtr f = c1::parse_formula(text);
    c1::ValidityResult res = c1::is_valid(f, node_cap);

    if (format == "json") {
        ordered_json report;
        report["formula"] = f->to_string();
        report["verdict"] = res.valid ? "valid" : "invalid";
        report["countermodel"] =
            res.countermodel ? valuation_json(*res.countermodel) : ordered_json(nullptr);
        out << report.dump(2) << "\n";
    } else {
        out << "formula: " << f->to_string() << "\n";
        out << "verdict: " << (res.valid ? "VALID" : "INVALID") << "\n";
        if (res.countermodel) out << "countermodel:\n" << res.countermodel->render();
    }

    if (!expect.empty() && expect != (res.valid ? "valid" : "invalid")) return 1;
    return 0;
}

int cmd_logic_trivial(const std::vector<std::string>& texts, const std::string& expect,
                      std::size_t node_cap, const std::string& format, std::ostream& out) {
    std::vector<c1::FormulaPtr> formulas;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            formulas.push_back(c1::parse_formula(texts[i]));
        } catch (const ParseError& e) {
            throw std::invalid_argument("formula " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    c1::TrivialityResult res = c1::trivializes(formulas, node_cap);

    if (format == "json") {
        ordered_json report;
        report["formulas"] = ordered_json::array();
        for (const auto& f : formulas) report["formulas"].push_back(f->to_string());
        report["verdict"] = res.trivial ? "trivial" : "nontrivial";
        report["witness"] = res.witness ? valuation_json(*res.witness) : ordered_json(nullptr);
        out << report.dump(2) << "\n";
    } else {
        out << "formulas: " << formulas.size() << "\n";
        for (const auto& f : formulas) out << "  " << f->to_string() << "\n";
        out << "verdict: " << (res.trivial ? "TRIVIAL" : "NONTRIVIAL") << "\n";
        if (res.witness) out << "witness:\n" << res.witness->render();
    }

    if (!expect.empty() && expect != (res.trivial ? "trivial" : "nontrivial")) return 1;
    return 0;
}

c1::ProofStep proof_step_from_json(const ordered_json& step, std::size_t index) {
    std::string where = "steps[" + std::to_string(index + 1) + "]";
    if (!step.is_object()) throw std::invalid_argument(where + ": expected an object");
    for (auto it = step.begin(); it != step.end(); ++it)
        if (it.key() != "rule" && it.key() != "formula" && it.key() != "schema" &&
            it.key() != "minor" && it.key() != "major")
            throw std::invalid_argument(where + ": unknown key '" + it.key() + "'");

    auto field = [&](const char* key) -> const ordered_json& {
        auto it = step.find(key);
        if (it == step.end())
            throw std::invalid_argument(where + ": missing key '" + std::string(key) + "'");
        return *it;
    };

    const ordered_json& rule = field("rule");
    const ordered_json& formula_j = field("formula");
    if (!rule.is_string()) throw std::invalid_argument(where + ".rule: expected a string");
    if (!formula_j.is_string()) throw std::invalid_argument(where + ".formula: expected a string");

    c1::FormulaPtr f;
    try {
        f = c1::parse_formula(formula_j.get<std::string>());
    } catch (const ParseError& e) {
        throw std::invalid_argument(where + ".formula: " + e.what());
    }

    std::string r = rule.get<std::string>();
    if (r == "hypothesis") return c1::ProofStep::hypothesis(std::move(f));
    if (r == "axiom") {
        const ordered_json& schema = field("schema");
        if (!schema.is_string())
            throw std::invalid_argument(where + ".schema: expected a string");
        return c1::ProofStep::axiom(std::move(f), schema.get<std::string>());
    }
    if (r == "mp") {
        const ordered_json& minor = field("minor");
        const ordered_json& major = field("major");
        if (!minor.is_number_integer() || minor.get<long long>() < 1)
            throw std::invalid_argument(where + ".minor: expected a step number >= 1");
        if (!major.is_number_integer() || major.get<long long>() < 1)
            throw std::invalid_argument(where + ".major: expected a step number >= 1");
        return c1::ProofStep::modus_ponens(std::move(f), minor.get<std::size_t>(),
                                           major.get<std::size_t>());
    }
    throw std::invalid_argument(where + ".rule: unknown rule '" + r + "'");
}

int cmd_logic_proof(const std::string& script_path, const std::string& format,
                    std::ostream& out) {
    std::ifstream in(script_path);
    if (!in) throw std::invalid_argument("cannot open proof script '" + script_path + "'");
    ordered_json doc = ordered_json::parse(in);
    if (!doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array())
        throw std::invalid_argument("a proof script is an object with a 'steps' array");

    std::vector<c1::ProofStep> script;
    const ordered_json& steps = doc["steps"];
    for (std::size_t i = 0; i < steps.size(); ++i)
        script.push_back(proof_step_from_json(steps[i], i));

    c1::ProofResult res = c1::check_proof(script);

    if (format == "json") {
        ordered_json report;
        report["steps"] = script.size();
        report["verdict"] = res.ok ? "accepted" : "rejected";
        if (res.ok) {
            report["conclusion"] = res.proved->to_string();
        } else {
            report["step"] = res.step;
            report["reason"] = res.reason;
        }
        out << report.dump(2) << "\n";
    } else {
        out << "steps: " << script.size() << "\n";
        out << "verdict: " << (res.ok ? "ACCEPTED" : "REJECTED") << "\n";
        if (res.ok) {
            out << "conclusion: " << res.proved->to_string() << "\n";
        } else {
            out << "step: " << res.step << "\n";
            out << "reason: " << res.reason << "\n";
        }
    }
    return res.ok ? 0 : 1;
}

int cmd_lattice_verify(std::size_t dim, std::size_t trials, std::uint64_t seed,
                       const std::string& format, std::ostream& out) {
    if (dim > default_dim_cap())
        throw ResourceLimitError("lattice dimension", dim, default_dim_cap());
    lattice::LawReport report = lattice::verify_laws(dim, trials, seed);

    if (format == "json") {
        ordered_json j;
        j["dimension"] = report.dim;
        j["trials"] = trials;
        j["seed"] = report.seed;
        j["laws"] = ordered_json::array();
        for (const auto& check : report.checks)
            j["laws"].push_back(
                {{"law", check.law}, {"trials", check.trials}, {"failures", check.failures}});
        j["ok"] = report.ok();
        out << j.dump(2) << "\n";
    } else {
        out << "dimension " << report.dim << ", trials " << trials << ", seed " << report.seed
            << "\n";
        for (const auto& check : report.checks)
            out << check.law << ": " << (check.trials - check.failures) << "/" << check.trials
                << "\n";
        out << (report.ok() ? "all laws hold" : "law failures detected") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_lattice_witness(std::size_t dim, const std::string& format, std::ostream& out) {
    if (dim > default_dim_cap())
        throw ResourceLimitError("lattice dimension", dim, default_dim_cap());
    lattice::DistributivityWitness w = lattice::distributivity_witness(dim);
    bool lhs_is_c = lattice::same_subspace(w.lhs, w.c);
    bool rhs_is_zero = lattice::same_subspace(w.rhs, lattice::Subspace::zero(dim));

    if (format == "json") {
        ordered_json j;
        j["dimension"] = dim;
        j["rank_a"] = w.a.rank();
        j["rank_b"] = w.b.rank();
        j["rank_c"] = w.c.rank();
        j["lhs_rank"] = w.lhs.rank();
        j["lhs_equals_c"] = lhs_is_c;
        j["rhs_rank"] = w.rhs.rank();
        j["rhs_is_zero"] = rhs_is_zero;
        j["distributive"] = w.distributive;
        out << j.dump(2) << "\n";
    } else {
        out << "dimension " << dim << "\n";
        out << "a: rank " << w.a.rank() << "\n";
        out << "b: rank " << w.b.rank() << "\n";
        out << "c: rank " << w.c.rank() << "\n";
        out << "c ^ (a v b): rank " << w.lhs.rank() << ", equals c: " << (lhs_is_c ? "yes" : "no")
            << "\n";
        out << "(c ^ a) v (c ^ b): rank " << w.rhs.rank()
            << ", zero subspace: " << (rhs_is_zero ? "yes" : "no") << "\n";
        out << "distributive: " << (w.distributive ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum situations with a paraconsistent reading"};
    app.name("potentia");
    app.require_subcommand(1);

    std::string scenario_path, psa_filter, basis_filter, experiment_filter;
    std::string formula_text, expect, script_path;
    std::vector<std::string> formula_texts;
    std::string format = "text";
    bool reinforce = false;
    unsigned jobs = 1;
    std::size_t node_cap = default_node_cap();
    std::size_t dim = 3;
    std::size_t trials = 100;
    std::uint64_t seed = 2026;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::function<int()> action;

    CLI::App* situations =
        app.add_subcommand("situations", "Read each state through the declared bases");
    situations->add_option("scenario", scenario_path, "scenario file")->required();
    situations->add_option("--psa", psa_filter, "only this state id");
    situations->add_option("--basis", basis_filter, "only this basis label");
    situations->add_flag("--reinforce", reinforce, "append the P -> ~P reinforcement formulas");
    add_format(situations);
    situations->callback([&] {
        action = [&] {
            return cmd_situations(scenario_path, psa_filter, basis_filter, reinforce, format,
                                  out);
        };
    });

    CLI::App* measure = app.add_subcommand("measure", "Run the scenario's experiments");
    measure->add_option("scenario", scenario_path, "scenario file")->required();
    measure->add_option("--experiment", experiment_filter, "only this experiment");
    measure->add_option("--jobs", jobs, "experiments to run concurrently")
        ->check(CLI::Range(1u, 64u));
    add_format(measure);
    measure->callback([&] {
        action = [&] { return cmd_measure(scenario_path, experiment_filter, jobs, format, out); };
    });

    CLI::App* evolve =
        app.add_subcommand("evolve", "Trajectory under the scenario hamiltonian");
    evolve->add_option("scenario", scenario_path, "scenario file")->required();
    evolve->add_option("--psa", psa_filter, "only this state id");
    add_format(evolve);
    evolve->callback(
        [&] { action = [&] { return cmd_evolve(scenario_path, psa_filter, format, out); }; });

    CLI::App* logic = app.add_subcommand("logic", "Paraconsistent calculus");
    logic->require_subcommand(1);

    CLI::App* check = logic->add_subcommand("check", "Decide validity of a formula");
    check->add_option("formula", formula_text, "formula text")->required();
    check->add_option("--expect", expect, "fail unless the verdict matches")
        ->check(CLI::IsMember({"valid", "invalid"}));
    check->add_option("--node-cap", node_cap, "subformula closure limit");
    add_format(check);
    check->callback([&] {
        action = [&] { return cmd_logic_check(formula_text, expect, node_cap, format, out); };
    });

    CLI::App* trivial = logic->add_subcommand("trivial", "Test a premise set for triviality");
    trivial->add_option("formulas", formula_texts, "premise formulas")->required();
    trivial->add_option("--expect", expect, "fail unless the verdict matches")
        ->check(CLI::IsMember({"trivial", "nontrivial"}));
    trivial->add_option("--node-cap", node_cap, "subformula closure limit");
    add_format(trivial);
    trivial->callback([&] {
        action = [&] { return cmd_logic_trivial(formula_texts, expect, node_cap, format, out); };
    });

    CLI::App* proof = logic->add_subcommand("proof", "Check a Hilbert-style proof script");
    proof->add_option("script", script_path, "proof script (JSON)")->required();
    add_format(proof);
    proof->callback(
        [&] { action = [&] { return cmd_logic_proof(script_path, format, out); }; });

    CLI::App* lattice_cmd = app.add_subcommand("lattice", "Subspace lattice checks");
    lattice_cmd->require_subcommand(1);

    CLI::App* verify = lattice_cmd->add_subcommand("verify", "Check the lattice laws");
    verify->add_option("--dim", dim, "space dimension");
    verify->add_option("--trials", trials, "random cases per law")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    add_format(verify);
    verify->callback(
        [&] { action = [&] { return cmd_lattice_verify(dim, trials, seed, format, out); }; });

    CLI::App* witness =
        lattice_cmd->add_subcommand("witness", "Show the distributivity counterexample");
    witness->add_option("--dim", dim, "space dimension");
    add_format(witness);
    witness->callback(
        [&] { action = [&] { return cmd_lattice_witness(dim, format, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ScenarioError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace potentia::cli
