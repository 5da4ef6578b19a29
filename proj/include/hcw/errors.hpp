#pragma once

#include <stdexcept>
#include <string>

namespace hcw {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live over different generator sets.
struct incompatible_algebras : error {
    using error::error;
};

// A derivation was applied to a generator it has no value for.
struct undefined_derivation : error {
    using error::error;
};

// Generator images of a morphism do not preserve degree.
struct invalid_morphism : error {
    using error::error;
};

// Structure constants violating antisymmetry or Jacobi; message names the witness.
struct invalid_presentation : error {
    using error::error;
};

// A construction demanded a nonzero ingredient that degenerates (e.g. a 7-cocycle on so(3)).
struct degenerate_error : error {
    using error::error;
};

// Numeric precondition violated at a concrete point (cut locus, unbounded sample, ...).
struct domain_error : error {
    using error::error;
};

struct config_error : error {
    int line = 0, col = 0;
    config_error(const std::string& msg, int l, int c)
        : error(msg + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l), col(c) {}
};

struct tolerance_failure : error {
    using error::error;
};

}  // namespace hcw
