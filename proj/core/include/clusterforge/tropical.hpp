#ifndef CLUSTERFORGE_TROPICAL_HPP
#define CLUSTERFORGE_TROPICAL_HPP

#include <cstdint>
#include <vector>

#include "clusterforge/laurent.hpp"

namespace clusterforge {

/*
 * Element of the tropical semifield Trop(u_1..u_m): a Laurent monomial in the
 * u_j, stored as its exponent vector.  Multiplication adds exponents and the
 * semifield addition takes the componentwise minimum.
 */
using TropicalElement = std::vector<int64_t>;

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b);
TropicalElement trop_add(const TropicalElement& a, const TropicalElement& b);

// Evaluates a polynomial with nonnegative exponents and positive coefficients
// monomial by monomial in the tropical semifield: coefficients drop, each
// monomial contributes the integer combination of its images, and the terms
// combine by componentwise minimum.  The zero polynomial has no tropical value.
TropicalElement tropical_eval(const LaurentPoly& p,
                              const std::vector<TropicalElement>& images);

} // namespace clusterforge

#endif
