#pragma once

#include <stdexcept>
#include <string>

namespace mdslab {

// Base class for every failure the library reports.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Lossless oscillator evaluated exactly on resonance.
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

// |1 - n^2 beta^2| below tolerance; alpha and m diverge.
struct cherenkov_error : error {
    explicit cherenkov_error(const std::string& what) : error(what) {}
};

// Quantity defined only for kappa > 0 requested in the lossless limit.
struct lossless_error : error {
    explicit lossless_error(const std::string& what) : error(what) {}
};

// A matrix that must be positive (or negative) semidefinite is not.
struct nonpassive_error : error {
    explicit nonpassive_error(const std::string& what) : error(what) {}
};

// An internal cross-check (e.g. the absorption row-norm guard) failed.
struct consistency_error : error {
    explicit consistency_error(const std::string& what) : error(what) {}
};

struct config_error : error {
    explicit config_error(const std::string& what) : error(what) {}
};

struct io_error : error {
    explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace mdslab
