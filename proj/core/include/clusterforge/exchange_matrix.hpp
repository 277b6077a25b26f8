#ifndef CLUSTERFORGE_EXCHANGE_MATRIX_HPP
#define CLUSTERFORGE_EXCHANGE_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace clusterforge {

/*
 * Extended exchange matrix: n rows over r columns with 0 <= r <= n, whose top
 * r x r block (the principal part) is antisymmetric.  Rows r+1..n belong to
 * the frozen directions.  Entries are machine integers; mutation changes them
 * by bounded amounts, and inputs of this size never overflow 64 bits.
 */
struct ExchangeMatrix {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int64_t>> rows;

    int64_t at(int i, int j) const { return rows[i - 1][j - 1]; } // 1-based
    std::vector<std::vector<int64_t>> principal_part() const;
    // compact canonical rendering, rows joined by ';', entries by ','
    std::string str() const;
    friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
        return a.n == b.n && a.r == b.r && a.rows == b.rows;
    }
};

// Throws schema_error unless the shape and antisymmetry invariants hold.
void validate(const ExchangeMatrix& m);

ExchangeMatrix make_matrix(int n, int r, std::vector<std::vector<int64_t>> rows);
// square antisymmetric principal part only (n == r)
ExchangeMatrix make_principal_part(std::vector<std::vector<int64_t>> rows);

// Matrix mutation in direction s (1 <= s <= r): row s and column s flip sign,
// every other entry gains sgn(b_is) * max(b_is * b_sj, 0).
ExchangeMatrix matrix_mutate(const ExchangeMatrix& m, int s);

// Stacks an identity block under a square matrix: the result has n = 2r and
// fresh frozen directions in bijection with the mutable ones.
ExchangeMatrix principal_extend(const ExchangeMatrix& m);

} // namespace clusterforge

#endif
