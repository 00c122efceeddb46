#include "potentia/cli/scenario.hpp"

#include "potentia/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace potentia::cli {

using nlohmann::ordered_json;
using hilbert::cplx;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& detail) {
    throw ScenarioError(path, detail);
}

const ordered_json& member(const ordered_json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing required key '") + key + "'");
    return *it;
}

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool found = false;
        for (const char* k : known)
            if (it.key() == k) found = true;
        if (!found) fail(path + "/" + it.key(), "unknown key");
    }
}

std::string require_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string() || j.get<std::string>().empty())
        fail(path, "expected a nonempty string");
    return j.get<std::string>();
}

double require_number(const ordered_json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "expected a finite number");
    return v;
}

cplx require_complex(const ordered_json& j, const std::string& path) {
    if (j.is_number()) return cplx(require_number(j, path), 0.0);
    if (j.is_array() && j.size() == 2)
        return cplx(require_number(j[0], path + "/0"), require_number(j[1], path + "/1"));
    fail(path, "expected a number or an [re, im] pair");
}

std::vector<cplx> require_vector(const ordered_json& j, std::size_t dim,
                                 const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of amplitudes");
    if (j.size() != dim)
        fail(path, "expected " + std::to_string(dim) + " amplitudes, got " +
                       std::to_string(j.size()));
    std::vector<cplx> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(require_complex(j[i], path + "/" + std::to_string(i)));
    return out;
}

const ordered_json& require_array(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

}  // namespace

const powers::PSA* Scenario::find_psa(const std::string& id) const {
    for (const auto& p : psas)
        if (p.id() == id) return &p;
    return nullptr;
}

const powers::Context* Scenario::find_context(const std::string& label) const {
    for (const auto& c : contexts)
        if (c.label() == label) return &c;
    return nullptr;
}

const hilbert::HermitianOperator* Scenario::find_observable(const std::string& label) const {
    for (const auto& o : observables)
        if (o.first == label) return &o.second;
    return nullptr;
}

std::vector<powers::ContradictoryPair> Scenario::pairs_for(const powers::Context& ctx) const {
    std::vector<powers::ContradictoryPair> out;
    for (const auto& pair : pairs)
        if (ctx.find(pair.power_a) && ctx.find(pair.power_b)) out.push_back(pair);
    return out;
}

Scenario parse_scenario(const ordered_json& doc, std::size_t dim_cap) {
    if (!doc.is_object()) fail("/", "expected a JSON object");
    reject_unknown_keys(doc,
                        {"schema_version", "dimension", "psas", "bases", "observables", "pairs",
                         "hamiltonian", "times", "experiments"},
                        "");

    const ordered_json& version = member(doc, "schema_version", "/schema_version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        fail("/schema_version", "this loader understands schema_version 1");

    const ordered_json& dim_j = member(doc, "dimension", "/dimension");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() < 2)
        fail("/dimension", "dimension must be an integer >= 2");
    std::size_t dim = dim_j.get<std::size_t>();
    if (dim > dim_cap) throw ResourceLimitError("scenario dimension", dim, dim_cap);

    Scenario sc;
    sc.dimension = dim;

    const ordered_json& psas = require_array(member(doc, "psas", "/psas"), "/psas");
    if (psas.empty()) fail("/psas", "at least one state is required");
    for (std::size_t i = 0; i < psas.size(); ++i) {
        std::string path = "/psas/" + std::to_string(i);
        const ordered_json& p = psas[i];
        if (!p.is_object()) fail(path, "expected an object");
        reject_unknown_keys(p, {"id", "amplitudes"}, path);
        std::string id = require_string(member(p, "id", path + "/id"), path + "/id");
        if (sc.find_psa(id)) fail(path + "/id", "duplicate state id '" + id + "'");
        std::vector<cplx> amps =
            require_vector(member(p, "amplitudes", path + "/amplitudes"), dim,
                           path + "/amplitudes");
        try {
            sc.psas.push_back(
                powers::PSA::create(hilbert::StateVector::create(std::move(amps), dim_cap), id));
        } catch (const std::invalid_argument& e) {
            fail(path + "/amplitudes", e.what());
        }
    }

    std::set<std::string> power_owner;
    const ordered_json& bases = require_array(member(doc, "bases", "/bases"), "/bases");
    for (std::size_t i = 0; i < bases.size(); ++i) {
        std::string path = "/bases/" + std::to_string(i);
        const ordered_json& b = bases[i];
        if (!b.is_object()) fail(path, "expected an object");
        reject_unknown_keys(b, {"label", "vectors", "powers"}, path);
        std::string label = require_string(member(b, "label", path + "/label"), path + "/label");
        if (sc.find_context(label)) fail(path + "/label", "duplicate basis label '" + label + "'");

        const ordered_json& vecs_j =
            require_array(member(b, "vectors", path + "/vectors"), path + "/vectors");
        if (vecs_j.size() != dim)
            fail(path + "/vectors", "expected " + std::to_string(dim) + " vectors, got " +
                                        std::to_string(vecs_j.size()));
        std::vector<hilbert::StateVector> vectors;
        for (std::size_t k = 0; k < vecs_j.size(); ++k) {
            std::string vpath = path + "/vectors/" + std::to_string(k);
            try {
                vectors.push_back(
                    hilbert::StateVector::create(require_vector(vecs_j[k], dim, vpath), dim_cap));
            } catch (const std::invalid_argument& e) {
                fail(vpath, e.what());
            }
        }

        const ordered_json& powers_j =
            require_array(member(b, "powers", path + "/powers"), path + "/powers");
        std::vector<std::string> names;
        for (std::size_t k = 0; k < powers_j.size(); ++k) {
            std::string ppath = path + "/powers/" + std::to_string(k);
            std::string name = require_string(powers_j[k], ppath);
            if (!power_owner.insert(name).second)
                fail(ppath, "power name '" + name + "' is already used by another basis");
            names.push_back(std::move(name));
        }

        try {
            sc.contexts.push_back(
                powers::Context::create(hilbert::Basis::create(label, std::move(vectors)),
                                        std::move(names)));
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }

    if (doc.contains("observables")) {
        const ordered_json& obs = require_array(doc["observables"], "/observables");
        for (std::size_t i = 0; i < obs.size(); ++i) {
            std::string path = "/observables/" + std::to_string(i);
            const ordered_json& o = obs[i];
            if (!o.is_object()) fail(path, "expected an object");
            reject_unknown_keys(o, {"label", "matrix"}, path);
            std::string label =
                require_string(member(o, "label", path + "/label"), path + "/label");
            if (sc.find_observable(label))
                fail(path + "/label", "duplicate observable label '" + label + "'");

            const ordered_json& rows =
                require_array(member(o, "matrix", path + "/matrix"), path + "/matrix");
            if (rows.size() != dim)
                fail(path + "/matrix", "expected " + std::to_string(dim) + " rows");
            hilbert::CMatrix m(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                std::vector<cplx> row =
                    require_vector(rows[r], dim, path + "/matrix/" + std::to_string(r));
                for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = row[c];
            }
            try {
                sc.observables.emplace_back(label, hilbert::HermitianOperator::create(m));
            } catch (const std::invalid_argument& e) {
                fail(path + "/matrix", e.what());
            }
        }
    }

    if (doc.contains("pairs")) {
        const ordered_json& pairs = require_array(doc["pairs"], "/pairs");
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::string path = "/pairs/" + std::to_string(i);
            const ordered_json& p = pairs[i];
            if (!p.is_object()) fail(path, "expected an object");
            reject_unknown_keys(p, {"a", "b", "observable"}, path);
            std::string a = require_string(member(p, "a", path + "/a"), path + "/a");
            std::string b = require_string(member(p, "b", path + "/b"), path + "/b");
            std::string obs_label =
                require_string(member(p, "observable", path + "/observable"), path + "/observable");

            const powers::Context* home = nullptr;
            for (const auto& ctx : sc.contexts)
                if (ctx.find(a)) home = &ctx;
            if (!home) fail(path + "/a", "power '" + a + "' is not declared by any basis");
            const powers::Power* pa = home->find(a);
            const powers::Power* pb = home->find(b);
            if (!pb)
                fail(path + "/b",
                     "power '" + b + "' is not in basis '" + home->label() + "' alongside '" + a +
                         "'");
            const hilbert::HermitianOperator* observable = sc.find_observable(obs_label);
            if (!observable)
                fail(path + "/observable", "observable '" + obs_label + "' is not declared");
            try {
                sc.pairs.push_back(powers::declare_contradictory(*pa, *pb, *observable, obs_label));
            } catch (const std::invalid_argument& e) {
                fail(path, e.what());
            }
        }
    }

    if (doc.contains("hamiltonian")) {
        std::string label = require_string(doc["hamiltonian"], "/hamiltonian");
        if (!sc.find_observable(label))
            fail("/hamiltonian", "observable '" + label + "' is not declared");
        sc.hamiltonian = label;
    }

    if (doc.contains("times")) {
        if (!sc.hamiltonian) fail("/times", "times need a hamiltonian to evolve under");
        const ordered_json& times = require_array(doc["times"], "/times");
        for (std::size_t i = 0; i < times.size(); ++i)
            sc.times.push_back(require_number(times[i], "/times/" + std::to_string(i)));
    }

    if (doc.contains("experiments")) {
        const ordered_json& exps = require_array(doc["experiments"], "/experiments");
        for (std::size_t i = 0; i < exps.size(); ++i) {
            std::string path = "/experiments/" + std::to_string(i);
            const ordered_json& e = exps[i];
            if (!e.is_object()) fail(path, "expected an object");
            reject_unknown_keys(e, {"name", "psa", "basis", "shots", "seed"}, path);
            ExperimentSpec spec;
            spec.name = require_string(member(e, "name", path + "/name"), path + "/name");
            for (const auto& other : sc.experiments)
                if (other.name == spec.name)
                    fail(path + "/name", "duplicate experiment name '" + spec.name + "'");
            spec.psa = require_string(member(e, "psa", path + "/psa"), path + "/psa");
            if (!sc.find_psa(spec.psa))
                fail(path + "/psa", "state '" + spec.psa + "' is not declared");
            spec.basis = require_string(member(e, "basis", path + "/basis"), path + "/basis");
            if (!sc.find_context(spec.basis))
                fail(path + "/basis", "basis '" + spec.basis + "' is not declared");

            const ordered_json& shots = member(e, "shots", path + "/shots");
            if (!shots.is_number_integer() || shots.get<long long>() < 1)
                fail(path + "/shots", "shots must be an integer >= 1");
            spec.shots = shots.get<std::uint64_t>();

            if (e.contains("seed")) {
                const ordered_json& seed = e["seed"];
                if (!seed.is_number_integer() || seed.get<long long>() < 0)
                    fail(path + "/seed", "seed must be a non-negative integer");
                spec.seed = seed.get<std::uint64_t>();
            }
            sc.experiments.push_back(std::move(spec));
        }
    }

    return sc;
}

Scenario load_scenario(const std::string& file_path, std::size_t dim_cap) {
    std::ifstream in(file_path);
    if (!in) fail(file_path, "cannot open scenario file");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(file_path, e.what());
    }
    return parse_scenario(doc, dim_cap);
}

}  // namespace potentia::cli
