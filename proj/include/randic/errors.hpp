#ifndef RANDIC_ERRORS_HPP
#define RANDIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace randic {

// Malformed or unsupported graph6 input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graph handed to a regular-only formula is not k-regular.
struct RegularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix too large for the 2^n permanent loop.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver failed to reach the requested residual.
struct ConvergenceError : std::runtime_error {
    double best_residual;
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), best_residual(residual) {}
};

// Census and reference table disagree; indicates an enumeration or
// transcription bug and is always fatal.
struct CatalogMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace randic

#endif
