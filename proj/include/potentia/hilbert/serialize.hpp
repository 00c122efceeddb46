#ifndef POTENTIA_HILBERT_SERIALIZE_HPP
#define POTENTIA_HILBERT_SERIALIZE_HPP

#include "potentia/hilbert/matrix.hpp"
#include "potentia/hilbert/state.hpp"
#include "potentia/numfmt.hpp"

#include <json.hpp>

#include <string>

namespace potentia::hilbert {

// Complex numbers serialize as [re, im], rounded to 12 significant digits
// so that equal states always produce byte-identical JSON.

inline nlohmann::ordered_json json_of(const cplx& z) {
    return nlohmann::ordered_json::array({round12(z.real()), round12(z.imag())});
}

inline nlohmann::ordered_json json_of(const StateVector& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const cplx& z : v.amplitudes()) arr.push_back(json_of(z));
    return arr;
}

inline nlohmann::ordered_json json_of(const CMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(json_of(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

/// Canonical serialized form of a state, the input to fingerprint hashes.
inline std::string canonical_state_json(const StateVector& v) {
    return json_of(v).dump();
}

inline std::string state_fingerprint(const StateVector& v) {
    return hex64(fnv1a64(canonical_state_json(v)));
}

}  // namespace potentia::hilbert

#endif
