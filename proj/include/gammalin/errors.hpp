#ifndef GAMMALIN_ERRORS_HPP
#define GAMMALIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammalin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arithmetic in incompatible scalar fields (e.g. zeta(3) * zeta(4))
struct field_error : error {
    using error::error;
};

// matrix dimension mismatch
struct shape_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

// a symbol or variable required by evaluation has no binding
struct missing_binding : error {
    using error::error;
};

}  // namespace gammalin

#endif
