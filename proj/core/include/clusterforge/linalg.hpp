#ifndef CLUSTERFORGE_LINALG_HPP
#define CLUSTERFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "clusterforge/laurent.hpp"

namespace clusterforge {

/*
 * Exact dense linear algebra over the integers and rationals.  Rank and
 * determinant use fraction-free (Bareiss) elimination, so every intermediate
 * value stays an integer; solving uses rational elimination with exact
 * arithmetic throughout.
 */
using IntMat = std::vector<std::vector<Int>>;

int int_rank(IntMat a);
Int int_det(IntMat a);

// Solves a x = b exactly.  Requires a to have full column rank (checked);
// returns no value when the system is inconsistent.
std::optional<std::vector<Rat>> solve_full_column_rank(const IntMat& a,
                                                       const std::vector<Int>& b);

} // namespace clusterforge

#endif
