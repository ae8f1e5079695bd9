#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cihom {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad file syntax, ill-defined map, ring mismatch.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// Input file syntax error with position information.
class ParseError : public InvalidInputError {
public:
    ParseError(int line, int col, const std::string& msg)
        : InvalidInputError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// A computation exceeded one of the configurable ceilings.
class ResourceGuardError : public Error {
public:
    explicit ResourceGuardError(const std::string& msg) : Error(msg) {}
};

// A theorem-derived runtime assertion failed; indicates a bug in the engine.
class TheoremMismatchError : public Error {
public:
    explicit TheoremMismatchError(const std::string& msg) : Error(msg) {}
};

// Ceilings for the heavy kernels, overridable through the environment:
//   CIHOM_MAX_GB_PAIRS    - S-pair reductions per Groebner/syzygy run
//   CIHOM_MAX_BETTI       - rank ceiling for any free module in a resolution
struct ResourceLimits {
    std::uint64_t max_gb_pairs = 2'000'000;
    std::uint64_t max_betti = 4096;

    static const ResourceLimits& get();
};

} // namespace cihom
