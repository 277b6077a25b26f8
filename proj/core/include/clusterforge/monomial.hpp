#ifndef CLUSTERFORGE_MONOMIAL_HPP
#define CLUSTERFORGE_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace clusterforge {

/*
 * A monomial is an integer exponent vector; negative entries are allowed
 * (Laurent monomials).  The global term order is graded: lower total degree
 * first, and within one degree the lexicographically larger exponent vector
 * first.  This order is translation invariant, so it doubles as the division
 * order, and on nonnegative vectors every strictly decreasing chain is finite.
 */
struct Monomial {
    std::vector<int32_t> e;

    int64_t degree() const {
        return std::accumulate(e.begin(), e.end(), int64_t{0});
    }
    bool is_constant() const {
        for (int32_t v : e) if (v != 0) return false;
        return true;
    }
    bool nonnegative() const {
        for (int32_t v : e) if (v < 0) return false;
        return true;
    }
    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
        return m;
    }
    friend Monomial operator-(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (size_t i = 0; i < m.e.size(); ++i) m.e[i] -= b.e[i];
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e == b.e;
    }
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        // ties: lexicographically larger vector comes first
        return std::lexicographical_compare(b.e.begin(), b.e.end(),
                                            a.e.begin(), a.e.end());
    }
};

} // namespace clusterforge

#endif
