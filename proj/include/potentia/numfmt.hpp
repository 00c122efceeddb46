#ifndef POTENTIA_NUMFMT_HPP
#define POTENTIA_NUMFMT_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

namespace potentia {

/// Report convention: all floating output carries 12 significant digits.
inline std::string fmt12(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
}

/// Round to 12 significant digits (used before emitting JSON numbers so that
/// serialized reports are byte-stable).
inline double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

/// FNV-1a 64-bit hash, used to fingerprint serialized states.
inline std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace potentia

#endif
