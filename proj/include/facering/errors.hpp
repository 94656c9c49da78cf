#ifndef FACERING_ERRORS_HPP
#define FACERING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace facering {

/// Base class for all domain errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured retry or pair budget ran out before the computation finished.
struct budget_exhausted : error {
    using error::error;
};

/// An enumeration cap (face count, row-subset size, degree bound) was hit.
struct cap_exceeded : error {
    using error::error;
};

/// Raised when an operation requires a Groebner basis and the given
/// generators fail Buchberger's criterion.
struct not_a_groebner_basis : error {
    using error::error;
};

}  // namespace facering

#endif
