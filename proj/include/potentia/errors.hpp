#ifndef POTENTIA_ERRORS_HPP
#define POTENTIA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potentia {

/// Malformed textual input (formula strings, proof scripts).
/// `position` is the 1-based character offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A computation exceeded a configured resource cap (e.g. the subformula
/// closure grew past the node limit for the quasi-matrix procedure).
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::size_t requested, std::size_t cap)
        : std::runtime_error(what + ": " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

/// Scenario file failed validation. `path` is a JSON-pointer-style location
/// of the first violation.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(const std::string& path, const std::string& detail)
        : std::runtime_error(path + ": " + detail), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace potentia

#endif
