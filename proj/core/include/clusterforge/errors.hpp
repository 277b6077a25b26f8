#ifndef CLUSTERFORGE_ERRORS_HPP
#define CLUSTERFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clusterforge {

// Base class for every failure the engine can diagnose.  Subclasses exist so
// callers can react to the cause; the what() string always carries the details.
struct cluster_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division that was required to be exact left a remainder.  The offending
// operands are kept in rendered form for diagnostics.
struct non_exact_division : cluster_error {
    std::string numerator;
    std::string denominator;
    non_exact_division(std::string num, std::string den)
        : cluster_error("non-exact division: (" + num + ") / (" + den + ")"),
          numerator(std::move(num)), denominator(std::move(den)) {}
};

// A substitution fed a non-invertible value into a negative exponent and the
// result did not cancel back to a Laurent polynomial.
struct bad_substitution : cluster_error {
    using cluster_error::cluster_error;
};

// The extended exchange matrix does not have full column rank, so g-vectors
// are not defined for it.
struct rank_deficient : cluster_error {
    using cluster_error::cluster_error;
};

// No monomial of the candidate variable can serve as the base point of the
// normal form z = R(yhat) * x^g.
struct no_valid_base_point : cluster_error {
    using cluster_error::cluster_error;
};

// Structural validation of an input object (matrix, quiver, seed,
// representation) failed.  The message names the offending field.
struct schema_error : cluster_error {
    using cluster_error::cluster_error;
};

// A hard size gate was hit (permutation canonicalization, submodule
// enumeration).  Distinct from budget exhaustion, which is a partial result.
struct bound_exceeded : cluster_error {
    using cluster_error::cluster_error;
};

// Point counts over the sample primes are not explained by one integer
// polynomial, so no Euler characteristic is reported.
struct interpolation_mismatch : cluster_error {
    using cluster_error::cluster_error;
};

} // namespace clusterforge

#endif
