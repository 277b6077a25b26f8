#ifndef CLUSTERFORGE_ICE_QUIVER_HPP
#define CLUSTERFORGE_ICE_QUIVER_HPP

#include <utility>
#include <vector>

#include "clusterforge/exchange_matrix.hpp"

namespace clusterforge {

/*
 * Quiver on vertices 1..n with the frozen ones at r+1..n.  Arrows are stored
 * as (source, target) pairs in input order; parallel arrows repeat the pair.
 * Valid ice quivers have no loops, no 2-cycles and no arrows between frozen
 * vertices, which makes them equivalent data to exchange matrices via
 * b_ij = #(i -> j) - #(j -> i).
 */
struct IceQuiver {
    int n = 0;
    int r = 0;
    std::vector<std::pair<int, int>> arrows;

    // order-insensitive comparison: same vertices and same arrow multiset
    friend bool operator==(const IceQuiver& a, const IceQuiver& b);
};

// Throws schema_error on loops, 2-cycles, frozen-frozen arrows or bad indices.
void validate(const IceQuiver& q);

IceQuiver make_quiver(int n, int r, std::vector<std::pair<int, int>> arrows);

ExchangeMatrix quiver_to_matrix(const IceQuiver& q);
// inverse of quiver_to_matrix; arrows come out sorted by (source, target)
IceQuiver matrix_to_quiver(const ExchangeMatrix& m);

// true when the subquiver on mutable vertices has no oriented cycle
bool is_acyclic(const IceQuiver& q);

} // namespace clusterforge

#endif
