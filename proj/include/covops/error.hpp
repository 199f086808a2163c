#pragma once
#include <stdexcept>
#include <string>

namespace covops {

// All library errors derive from error so callers can catch one type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error {      // matrix/universe size mismatch
    using error::error;
};
struct range_error : error {          // bad cardinality, order, exponent, index
    using error::error;
};
struct missing_variable_error : error {   // evaluation point does not cover a variable
    int var;
    missing_variable_error(int v, const std::string& msg) : error(msg), var(v) {}
};
struct insufficient_order_error : error { // jet order too small for a derivative
    using error::error;
};
struct not_defined_error : error {    // singular matrix / zero constant term / zero character
    using error::error;
};
struct pole_error : error {           // normalization scalar evaluated at a pole
    std::string factor;               // the vanishing linear factor, e.g. "lambda - 2"
    pole_error(std::string f, const std::string& msg) : error(msg), factor(std::move(f)) {}
};
struct parse_error : error {
    using error::error;
};

} // namespace covops
