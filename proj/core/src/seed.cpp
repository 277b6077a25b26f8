#include "clusterforge/seed.hpp"

#include "clusterforge/errors.hpp"

namespace clusterforge {

Seed initial_seed(const ExchangeMatrix& m) {
    validate(m);
    Seed s{m, {}, {}};
    s.cluster.reserve(m.n);
    for (int i = 1; i <= m.n; ++i) s.cluster.push_back(LaurentPoly::variable(m.n, i));
    return s;
}

Seed seed_mutate(const Seed& s, int direction) {
    const ExchangeMatrix& m = s.matrix;
    if (direction < 1 || direction > m.r)
        throw schema_error("mutation direction " + std::to_string(direction) +
                           " out of range 1.." + std::to_string(m.r));
    if ((int)s.cluster.size() != m.n)
        throw schema_error("cluster has " + std::to_string(s.cluster.size()) +
                           " entries, expected " + std::to_string(m.n));

    LaurentPoly plus = LaurentPoly::constant(m.n, 1);
    LaurentPoly minus = LaurentPoly::constant(m.n, 1);
    for (int i = 1; i <= m.n; ++i) {
        int64_t b = m.at(i, direction);
        if (b > 0) plus *= s.cluster[i - 1].pow((int)b);
        if (b < 0) minus *= s.cluster[i - 1].pow((int)-b);
    }

    Seed out = s;
    out.matrix = matrix_mutate(m, direction);
    out.cluster[direction - 1] = lp_exact_divide(plus + minus, s.cluster[direction - 1]);
    return out;
}

Seed apply_sequence(Seed s, const MutationSequence& seq) {
    for (int k : seq) s = seed_mutate(s, k);
    return s;
}

} // namespace clusterforge
