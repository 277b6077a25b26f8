#ifndef CLUSTERFORGE_SEED_HPP
#define CLUSTERFORGE_SEED_HPP

#include <string>
#include <vector>

#include "clusterforge/exchange_matrix.hpp"
#include "clusterforge/laurent.hpp"

namespace clusterforge {

// Mutation directions, 1-based, applied left to right.
using MutationSequence = std::vector<int>;

/*
 * Seed of a cluster pattern: an extended exchange matrix together with the
 * current cluster, each entry a Laurent polynomial in the initial variables
 * x_1..x_n.  Entries r+1..n are the frozen generators and never change.
 * Optional display names relabel variables on output only.
 */
struct Seed {
    ExchangeMatrix matrix;
    std::vector<LaurentPoly> cluster;
    std::vector<std::string> names; // empty, or one name per variable

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.matrix == b.matrix && a.cluster == b.cluster;
    }
};

// Seed at the start of a pattern: cluster entry i is the variable x_i.
Seed initial_seed(const ExchangeMatrix& m);

/*
 * Mutation in direction s: the matrix mutates, and entry s is replaced via
 * the exchange relation
 *     z_s' * z_s = prod_i z_i^[b_is]+  +  prod_i z_i^[-b_is]+
 * evaluated on the current cluster.  The division is exact for every seed
 * reachable from an initial seed; a failure would disprove the Laurent
 * property and raises non_exact_division.
 */
Seed seed_mutate(const Seed& s, int direction);

// Left-to-right composition of seed mutations.
Seed apply_sequence(Seed s, const MutationSequence& seq);

} // namespace clusterforge

#endif
