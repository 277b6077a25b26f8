#ifndef CLUSTERFORGE_EXCHANGE_GRAPH_HPP
#define CLUSTERFORGE_EXCHANGE_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "clusterforge/seed.hpp"

namespace clusterforge {

/*
 * Canonicalization identifies seeds that differ only by a relabeling of the
 * mutable indices 1..r: the permutation acts on cluster slots and on matrix
 * rows and columns simultaneously, frozen rows stay in place.  The canonical
 * representative minimizes the rendered (cluster, matrix) pair over all r!
 * permutations; r is capped at 8.
 */
struct CanonicalSeed {
    Seed seed;
    std::vector<int> permutation; // image of each mutable index, 1-based
    std::string key;
};

CanonicalSeed canonical_form(const Seed& s);

/*
 * Breadth-first closure of the mutation class of a seed, deduplicated by
 * canonical key.  Stops either at closure (finite == true) or when max_seeds
 * distinct seeds have been collected (finite == false, meaning unknown).
 * Frontier expansion may run on several threads; the discovery order, and so
 * every reported list, is independent of the thread count.
 */
struct TraversalReport {
    struct Node {
        Seed seed;
        MutationSequence path;  // from the root to this seed
        std::vector<int> adj;   // per direction: index of the neighbor node
    };
    struct Variable {
        LaurentPoly value;
        std::string key;        // canonical rendering of value
        MutationSequence path;  // mutations that first produced it
        int slot = 0;           // cluster position holding it, 1-based
    };

    std::vector<Node> nodes;
    std::vector<Variable> variables; // in discovery order, initial ones first
    bool finite = false;

    size_t seed_count() const { return nodes.size(); }
    size_t variable_count() const { return variables.size(); }
    // index into variables for a rendered value, -1 when absent
    int variable_index(const std::string& key) const;
};

TraversalReport traverse_exchange_graph(const Seed& root, size_t max_seeds,
                                        int threads = 0);

// All products of the r mutable entries of a single cluster with total degree
// at most `degree`, collected over every node and deduplicated; degree 0
// yields just the constant 1.
std::vector<LaurentPoly> collect_cluster_monomials(const TraversalReport& report,
                                                   int degree);

} // namespace clusterforge

#endif
