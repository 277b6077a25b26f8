#include "clusterforge/exchange_matrix.hpp"

#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

int sgn(int64_t x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }
int64_t pos(int64_t x) { return x > 0 ? x : 0; }

} // namespace

void validate(const ExchangeMatrix& m) {
    if (m.r < 0 || m.r > m.n)
        throw schema_error("matrix shape: need 0 <= r <= n, got n=" +
                           std::to_string(m.n) + " r=" + std::to_string(m.r));
    if ((int)m.rows.size() != m.n)
        throw schema_error("matrix shape: " + std::to_string(m.rows.size()) +
                           " rows, expected " + std::to_string(m.n));
    for (int i = 0; i < m.n; ++i)
        if ((int)m.rows[i].size() != m.r)
            throw schema_error("matrix shape: row " + std::to_string(i + 1) + " has " +
                               std::to_string(m.rows[i].size()) + " entries, expected " +
                               std::to_string(m.r));
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.r; ++j)
            if (m.rows[i][j] != -m.rows[j][i])
                throw schema_error("principal part not antisymmetric at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

ExchangeMatrix make_matrix(int n, int r, std::vector<std::vector<int64_t>> rows) {
    ExchangeMatrix m{n, r, std::move(rows)};
    validate(m);
    return m;
}

ExchangeMatrix make_principal_part(std::vector<std::vector<int64_t>> rows) {
    int n = (int)rows.size();
    return make_matrix(n, n, std::move(rows));
}

std::vector<std::vector<int64_t>> ExchangeMatrix::principal_part() const {
    std::vector<std::vector<int64_t>> p(rows.begin(), rows.begin() + r);
    return p;
}

std::string ExchangeMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        if (i) out << ";";
        for (int j = 0; j < r; ++j) {
            if (j) out << ",";
            out << rows[i][j];
        }
    }
    return out.str();
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& m, int s) {
    if (s < 1 || s > m.r)
        throw schema_error("mutation direction " + std::to_string(s) +
                           " out of range 1.." + std::to_string(m.r));
    ExchangeMatrix out = m;
    int si = s - 1;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.r; ++j) {
            if (i == si || j == si) {
                out.rows[i][j] = -m.rows[i][j];
            } else {
                out.rows[i][j] =
                    m.rows[i][j] + sgn(m.rows[i][si]) * pos(m.rows[i][si] * m.rows[si][j]);
            }
        }
    }
    return out;
}

ExchangeMatrix principal_extend(const ExchangeMatrix& m) {
    if (m.n != m.r)
        throw schema_error("principal extension needs a square matrix, got n=" +
                           std::to_string(m.n) + " r=" + std::to_string(m.r));
    ExchangeMatrix out;
    out.n = 2 * m.r;
    out.r = m.r;
    out.rows = m.rows;
    for (int i = 0; i < m.r; ++i) {
        std::vector<int64_t> row(m.r, 0);
        row[i] = 1;
        out.rows.push_back(std::move(row));
    }
    validate(out);
    return out;
}

} // namespace clusterforge
