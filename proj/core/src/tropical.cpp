#include "clusterforge/tropical.hpp"

#include <algorithm>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

void require_same_length(const TropicalElement& a, const TropicalElement& b) {
    if (a.size() != b.size())
        throw schema_error("tropical elements of different lengths: " +
                           std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b) {
    require_same_length(a, b);
    TropicalElement r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

TropicalElement trop_add(const TropicalElement& a, const TropicalElement& b) {
    require_same_length(a, b);
    TropicalElement r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], b[i]);
    return r;
}

TropicalElement tropical_eval(const LaurentPoly& p,
                              const std::vector<TropicalElement>& images) {
    if ((int)images.size() != p.nvars())
        throw schema_error("expected " + std::to_string(p.nvars()) + " images, got " +
                           std::to_string(images.size()));
    if (p.is_zero())
        throw schema_error("tropical evaluation of the zero polynomial");
    size_t m = images.empty() ? 0 : images[0].size();
    for (const auto& img : images)
        if (img.size() != m) throw schema_error("tropical images of different lengths");

    bool first = true;
    TropicalElement acc(m, 0);
    for (const auto& [mono, c] : p.terms()) {
        if (!mono.nonnegative())
            throw schema_error("tropical evaluation requires nonnegative exponents");
        TropicalElement v(m, 0);
        for (int j = 0; j < p.nvars(); ++j)
            for (size_t i = 0; i < m; ++i) v[i] += mono.e[j] * images[j][i];
        acc = first ? v : trop_add(acc, v);
        first = false;
    }
    return acc;
}

} // namespace clusterforge
