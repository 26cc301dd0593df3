#ifndef COSMASH_ERROR_HPP
#define COSMASH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cosmash {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error {
    // position is a 0-based character offset into the offending input
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct field_mismatch_error : error {
    explicit field_mismatch_error(const std::string& what) : error(what) {}
};

struct limit_exceeded_error : error {
    std::size_t estimate;
    limit_exceeded_error(const std::string& what, std::size_t est)
        : error(what), estimate(est) {}
};

} // namespace cosmash

#endif
