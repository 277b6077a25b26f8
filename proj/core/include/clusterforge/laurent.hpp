#ifndef CLUSTERFORGE_LAURENT_HPP
#define CLUSTERFORGE_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clusterforge/monomial.hpp"

namespace clusterforge {

using Int = mpz_class;
using Rat = mpq_class;

/*
 * Sparse multivariate Laurent polynomial with arbitrary-precision integer
 * coefficients.  Terms are held in a map keyed by the global monomial order,
 * zero coefficients are never stored, and the variable count is fixed per
 * value; mixing variable counts is a hard error.  Map order equals rendering
 * order, so str() is canonical.
 */
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int, MonomialOrder>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, Int c);
    // x_i for 1-based i
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly term(int nvars, std::vector<int32_t> exps, Int c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // exactly one term
    bool is_monomial() const { return terms_.size() == 1; }
    // one term with coefficient +-1: invertible in the Laurent ring
    bool is_unit() const;
    Int constant_term() const;

    // minimum exponent of x_i (1-based) over all terms; zero polynomial -> 0
    int32_t min_exponent(int i) const;
    // componentwise maximum of the exponent vectors; zero polynomial -> zeros
    std::vector<int32_t> max_exponents() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    // k >= 0 always; k < 0 additionally requires a unit base
    LaurentPoly pow(int k) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // canonical rendering, e.g. "x1^-1 + x1^-1*x2"; prefix selects the
    // variable family (x for cluster variables, y for coefficients)
    std::string str(std::string_view prefix = "x") const;

    void add_term(const Monomial& m, const Int& c);

private:
    int nvars_;
    TermMap terms_;
};

// Quotient of Laurent polynomials.  Normalization folds single-term
// denominators into the numerator (keeping any leftover integer content), and
// attempts exact division for multi-term denominators, so den == 1 whenever
// the value is actually a Laurent polynomial.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    explicit RationalFn(LaurentPoly n);
    RationalFn(LaurentPoly n, LaurentPoly d);

    bool is_polynomial() const { return den.is_one(); }
    RationalFn pow(int k) const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string str(std::string_view prefix = "x") const;
};

// Exact quotient num/den in the Laurent ring; throws non_exact_division if
// den does not divide num (the exception carries both operands rendered).
LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Substitutes images[i-1] for x_i.  Images must all share one variable count.
// Throws bad_substitution when a negative exponent consumes a non-unit image
// and the final denominator fails to cancel to a unit.
RationalFn lp_substitute(const LaurentPoly& p, const std::vector<RationalFn>& images);

} // namespace clusterforge

#endif
