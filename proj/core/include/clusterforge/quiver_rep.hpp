#ifndef CLUSTERFORGE_QUIVER_REP_HPP
#define CLUSTERFORGE_QUIVER_REP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clusterforge/ice_quiver.hpp"
#include "clusterforge/laurent.hpp"

namespace clusterforge {

// finite-dimensional representation of an acyclic quiver without frozen
// vertices: a dimension at every vertex and a matrix over Z for every arrow
struct QuiverRep {
    IceQuiver quiver;
    std::vector<int> dim;                 // dim[i-1] at vertex i
    std::vector<std::vector<std::vector<int64_t>>> maps; // maps[a]: dim[t] x dim[s]
};

// throws schema_error unless the quiver is acyclic with no frozen vertices
// and every matrix has shape dim[target] x dim[source]
void validate(const QuiverRep& rep);

QuiverRep zero_rep(const IceQuiver& q);
QuiverRep simple_rep(const IceQuiver& q, int vertex);
QuiverRep projective_rep(const IceQuiver& q, int vertex);

// Euler form <d, e> = sum_i d_i e_i - sum_{a: s->t} d_s e_t
int64_t euler_form(const IceQuiver& q, const std::vector<int64_t>& d,
                   const std::vector<int64_t>& e);

// dim Hom(m, n), computed as the kernel rank of the intertwiner system
int64_t hom_dim(const QuiverRep& m, const QuiverRep& n);

// dim Ext^1(m, n) = dim Hom(m, n) - <dim m, dim n>
int64_t ext1_dim(const QuiverRep& m, const QuiverRep& n);

bool is_rigid(const QuiverRep& rep);

// number of subrepresentations with dimension vector e, over the field with
// p elements; throws bound_exceeded when the total dimension is too large
// to enumerate
int64_t count_submodules_mod_p(const QuiverRep& rep, const std::vector<int>& e,
                               int64_t p);

// Euler characteristic of the quiver Grassmannian of subrepresentations of
// dimension vector e, recovered from the counts over enough prime fields
Int grassmannian_euler_char(const QuiverRep& rep, const std::vector<int>& e);

// index of the rep with respect to its projective presentation:
// g_i = corank_i - (multiplicity of P_i in the presentation kernel)
std::vector<int64_t> g_from_presentation(const QuiverRep& rep);

// sum over dimension vectors e of chi(Gr_e) * y^e
LaurentPoly module_F_polynomial(const QuiverRep& rep);

struct MatchReport {
    bool matched = false;
    size_t variables = 0;      // non-initial cluster variables in the pattern
    size_t reps = 0;
    std::vector<std::string> mismatches;
};

// compares the F-polynomials of a list of reps of q against the non-initial
// cluster variables of the principal-coefficient pattern of the opposite
// quiver; also checks that each rep's dimension vector matches the f-vector
// of its own F-polynomial
MatchReport match_against_traversal(const IceQuiver& q,
                                    const std::vector<QuiverRep>& reps,
                                    size_t max_seeds = 100000);

} // namespace clusterforge

#endif
