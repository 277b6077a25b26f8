#ifndef CLUSTERFORGE_INVARIANTS_HPP
#define CLUSTERFORGE_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clusterforge/exchange_graph.hpp"
#include "clusterforge/seed.hpp"

namespace clusterforge {

/*
 * Normal form of a cluster monomial: z = R(yhat_1..yhat_r) * x^base, where
 * yhat_j = prod_i x_i^(b_ij), the exponent vectors of R are nonnegative with
 * at least one zero, and base is the exponent vector of the distinguished
 * monomial.  Exists and is unique when the extended matrix has full column
 * rank; the first r entries of base form the g-vector.
 */
struct NormalForm {
    std::vector<int64_t> base;  // length n
    LaurentPoly coefficient_part; // R, a polynomial in r variables
};

NormalForm extract_normal_form(const LaurentPoly& z, const ExchangeMatrix& m);
std::vector<int64_t> extract_g_vector(const LaurentPoly& z, const ExchangeMatrix& m);

// The images yhat_j as Laurent monomials in x_1..x_n, ready for substitution.
std::vector<RationalFn> yhat_images(const ExchangeMatrix& m);
// Evaluates R(yhat) * x^base; by construction equal to the original z.
LaurentPoly reconstruct(const NormalForm& nf, const ExchangeMatrix& m);

// Specializes x_1..x_r to 1 and renames the frozen variables to y_1..y_r.
// Requires a matrix of principal shape (n = 2r with identity bottom block).
LaurentPoly extract_F_polynomial(const LaurentPoly& z, const ExchangeMatrix& m);

// Componentwise maximal y-exponents, computed tropically.
std::vector<int64_t> f_vector(const LaurentPoly& F);

// d_i = -min exponent of x_i over the terms of z, for mutable i only.
std::vector<int64_t> denominator_vector(const LaurentPoly& z, int r);

/*
 * The pair of coefficient degenerations of a variable in direction l.  The
 * variable is named structurally: `path` and `slot` locate it in the pattern
 * with principal coefficients rooted at the square matrix b.  h evaluates its
 * F-polynomial in Trop(u) under y_j -> u^[-b_lj]+ (y_l -> u^-1); h_prime does
 * the same for the variable's avatar in the pattern rooted at mu_l(b), whose
 * own root matrix supplies the substitution exponents.
 */
struct HPair {
    int64_t h = 0;
    int64_t h_prime = 0;
};

HPair h_vectors(const ExchangeMatrix& b, const MutationSequence& path, int slot,
                int l);

// The piecewise-linear transformation rule for g-vectors along one edge.
std::vector<int64_t> g_vector_mutation(const std::vector<int64_t>& g,
                                       const ExchangeMatrix& b, int l);

struct CheckOptions {
    size_t max_seeds = 100000;
    int degree = 3; // monomial degree bound for the independence checks
    int threads = 0;
};

/*
 * Conjecture checkers.  Verdicts: "pass", "violated" (genuine counterexample
 * found; findings carry the witnesses as JSON object strings) or "partial"
 * (seed budget exhausted before closure).  stats is one JSON object string.
 */
struct CheckReport {
    std::string kind;
    std::string verdict;
    std::vector<std::string> findings;
    std::string stats;
};

// kinds: 5.4 (F-polynomials have constant term 1), 7.2 (cluster monomials up
// to the degree bound are linearly independent), 7.10 (distinct monomials
// have distinct g-vectors, cluster g-matrices are unimodular), 7.12 (g-vector
// transformation rule on every edge), 6.10 (h-pairs match the g-vector
// predictions), 7.17 (f-vector equals denominator vector; the inequality
// f >= d is asserted), sign-coherence (columns of the frozen block share a
// sign in every seed).
CheckReport check_conjecture(const std::string& kind, const Seed& root,
                             const CheckOptions& options = {});

} // namespace clusterforge

#endif
