#ifndef POTENTIA_CAPS_HPP
#define POTENTIA_CAPS_HPP

#include <cstddef>
#include <cstdlib>

namespace potentia {

/// Resource caps, overridable through the environment. Read once.
///   POTENTIA_DIM_CAP   largest allowed Hilbert-space dimension (default 8)
///   POTENTIA_NODE_CAP  largest allowed subformula closure (default 64)

inline std::size_t env_cap(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

inline std::size_t default_dim_cap() {
    static const std::size_t cap = env_cap("POTENTIA_DIM_CAP", 8);
    return cap;
}

inline std::size_t default_node_cap() {
    static const std::size_t cap = env_cap("POTENTIA_NODE_CAP", 64);
    return cap;
}

}  // namespace potentia

#endif
