#include "clusterforge/ice_quiver.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "clusterforge/errors.hpp"

namespace clusterforge {

bool operator==(const IceQuiver& a, const IceQuiver& b) {
    if (a.n != b.n || a.r != b.r) return false;
    auto sa = a.arrows, sb = b.arrows;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

void validate(const IceQuiver& q) {
    if (q.r < 0 || q.r > q.n)
        throw schema_error("quiver shape: need 0 <= r <= n, got n=" +
                           std::to_string(q.n) + " r=" + std::to_string(q.r));
    std::map<std::pair<int, int>, int> count;
    for (const auto& [s, t] : q.arrows) {
        if (s < 1 || s > q.n || t < 1 || t > q.n)
            throw schema_error("arrow (" + std::to_string(s) + "," + std::to_string(t) +
                               ") leaves the vertex range 1.." + std::to_string(q.n));
        if (s == t)
            throw schema_error("loop at vertex " + std::to_string(s));
        if (s > q.r && t > q.r)
            throw schema_error("arrow between frozen vertices " + std::to_string(s) +
                               " and " + std::to_string(t));
        ++count[{s, t}];
    }
    for (const auto& [a, c] : count)
        if (count.count({a.second, a.first}))
            throw schema_error("2-cycle between vertices " + std::to_string(a.first) +
                               " and " + std::to_string(a.second));
}

IceQuiver make_quiver(int n, int r, std::vector<std::pair<int, int>> arrows) {
    IceQuiver q{n, r, std::move(arrows)};
    validate(q);
    return q;
}

ExchangeMatrix quiver_to_matrix(const IceQuiver& q) {
    validate(q);
    std::vector<std::vector<int64_t>> rows(q.n, std::vector<int64_t>(q.r, 0));
    for (const auto& [s, t] : q.arrows) {
        if (t <= q.r) rows[s - 1][t - 1] += 1;
        if (s <= q.r) rows[t - 1][s - 1] -= 1;
    }
    return make_matrix(q.n, q.r, std::move(rows));
}

IceQuiver matrix_to_quiver(const ExchangeMatrix& m) {
    validate(m);
    IceQuiver q{m.n, m.r, {}};
    for (int i = 1; i <= m.n; ++i) {
        for (int j = 1; j <= m.r; ++j) {
            if (i <= m.r && j <= i) continue; // principal part: upper triangle once
            int64_t b = m.at(i, j);
            for (int64_t k = 0; k < b; ++k) q.arrows.push_back({i, j});
            for (int64_t k = 0; k < -b; ++k) q.arrows.push_back({j, i});
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    validate(q);
    return q;
}

bool is_acyclic(const IceQuiver& q) {
    // Kahn peeling on the mutable subquiver
    std::vector<int> indegree(q.r + 1, 0);
    std::vector<std::vector<int>> out(q.r + 1);
    for (const auto& [s, t] : q.arrows) {
        if (s <= q.r && t <= q.r) {
            out[s].push_back(t);
            ++indegree[t];
        }
    }
    std::vector<int> stack;
    for (int v = 1; v <= q.r; ++v)
        if (indegree[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indegree[w] == 0) stack.push_back(w);
    }
    return seen == q.r;
}

} // namespace clusterforge
