#include "clusterforge/linalg.hpp"

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

// Fraction-free forward elimination after Bareiss: each 2x2 cross step is
// divided by the previous pivot, which is always exact, so entries stay
// integral and of modest size.  Returns the pivot count; sign tracks row
// swaps for determinants.
int bareiss(IntMat& a, int* sign_out) {
    int rows = (int)a.size();
    int cols = rows == 0 ? 0 : (int)a[0].size();
    Int prev = 1;
    int sign = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            sign = -sign;
        }
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    if (sign_out) *sign_out = sign;
    return rank;
}

} // namespace

int int_rank(IntMat a) {
    return bareiss(a, nullptr);
}

Int int_det(IntMat a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw schema_error("determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    int rank = bareiss(a, &sign);
    if (rank < (int)n) return 0;
    // after full elimination the last pivot is the determinant up to sign
    return sign * a[n - 1][n - 1];
}

std::optional<std::vector<Rat>> solve_full_column_rank(const IntMat& a,
                                                       const std::vector<Int>& b) {
    int rows = (int)a.size();
    int cols = rows == 0 ? 0 : (int)a[0].size();
    if ((int)b.size() != rows) throw schema_error("right-hand side length mismatch");

    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
        m[i][cols] = Rat(b[i]);
    }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[row]);
        Rat inv = m[row][col];
        for (int j = col; j <= cols; ++j) m[row][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if ((int)pivot_col.size() != cols)
        throw rank_deficient("matrix does not have full column rank: rank " +
                             std::to_string(pivot_col.size()) + " < " + std::to_string(cols));
    // inconsistency shows as a nonzero entry in a pivot-free row
    for (int i = row; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;

    std::vector<Rat> x(cols);
    for (int i = 0; i < (int)pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

} // namespace clusterforge
