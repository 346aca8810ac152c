#ifndef ASYMPROD_ERRORS_HPP
#define ASYMPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asymprod {

// A function evaluated to NaN/Inf inside its probe interval.
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation applied to a FunctionSpec of the wrong kind.
struct kind_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A combinator output failed re-classification.
struct closure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A product factor violated the positivity hypothesis inside (0, eps].
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No positive epsilon satisfies the Theorem hypotheses at the scan resolution.
struct no_valid_epsilon_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares fit could not be performed (degenerate design, too few points).
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-arithmetic term cap exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace asymprod

#endif
