#include "clusterforge/exchange_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "clusterforge/errors.hpp"
#include "clusterforge/parallel.hpp"

namespace clusterforge {

namespace {

std::string seed_key(const std::vector<std::string>& cluster_strs,
                     const ExchangeMatrix& m, const std::vector<int>& perm) {
    // perm[k] is the 0-based image of mutable index k
    std::string key;
    std::vector<const std::string*> ordered(cluster_strs.size());
    for (int k = 0; k < m.r; ++k) ordered[perm[k]] = &cluster_strs[k];
    for (int k = m.r; k < m.n; ++k) ordered[k] = &cluster_strs[k];
    for (const auto* s : ordered) {
        key += *s;
        key += '|';
    }
    key += '#';
    std::vector<std::vector<int64_t>> rows(m.n, std::vector<int64_t>(m.r));
    for (int i = 0; i < m.n; ++i) {
        int ti = i < m.r ? perm[i] : i;
        for (int j = 0; j < m.r; ++j) rows[ti][perm[j]] = m.rows[i][j];
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.r; ++j) {
            key += std::to_string(rows[i][j]);
            key += j + 1 < m.r ? ',' : ';';
        }
    return key;
}

} // namespace

CanonicalSeed canonical_form(const Seed& s) {
    const ExchangeMatrix& m = s.matrix;
    validate(m);
    if (m.r > 8)
        throw bound_exceeded("canonical form enumerates r! permutations; r = " +
                             std::to_string(m.r) + " exceeds the cap of 8");
    if ((int)s.cluster.size() != m.n)
        throw schema_error("cluster has " + std::to_string(s.cluster.size()) +
                           " entries, expected " + std::to_string(m.n));

    std::vector<std::string> strs;
    strs.reserve(m.n);
    for (const auto& z : s.cluster) strs.push_back(z.str());

    std::vector<int> perm(m.r), best_perm;
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key = seed_key(strs, m, perm);
        if (best.empty() || key < best) {
            best = std::move(key);
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    CanonicalSeed out;
    out.key = best;
    out.permutation.resize(m.r);
    for (int k = 0; k < m.r; ++k) out.permutation[k] = best_perm[k] + 1;

    out.seed.matrix.n = m.n;
    out.seed.matrix.r = m.r;
    out.seed.matrix.rows.assign(m.n, std::vector<int64_t>(m.r));
    out.seed.cluster.resize(m.n, LaurentPoly(m.n));
    out.seed.names = s.names;
    for (int i = 0; i < m.n; ++i) {
        int ti = i < m.r ? best_perm[i] : i;
        out.seed.cluster[ti] = s.cluster[i];
        for (int j = 0; j < m.r; ++j)
            out.seed.matrix.rows[ti][best_perm[j]] = m.rows[i][j];
    }
    return out;
}

int TraversalReport::variable_index(const std::string& key) const {
    for (size_t i = 0; i < variables.size(); ++i)
        if (variables[i].key == key) return (int)i;
    return -1;
}

TraversalReport traverse_exchange_graph(const Seed& root, size_t max_seeds,
                                        int threads) {
    if (max_seeds < 1) throw schema_error("max_seeds must be at least 1");
    const int r = root.matrix.r;

    TraversalReport report;
    std::map<std::string, int> seen;           // canonical key -> node index
    std::map<std::string, int> variable_seen;  // rendering -> variable index

    auto add_variable = [&](const LaurentPoly& z, const MutationSequence& path, int slot) {
        std::string key = z.str();
        if (variable_seen.count(key)) return;
        variable_seen.emplace(key, (int)report.variables.size());
        report.variables.push_back({z, std::move(key), path, slot});
    };

    seen.emplace(canonical_form(root).key, 0);
    report.nodes.push_back({root, {}, std::vector<int>(r, -1)});
    for (int i = 1; i <= r; ++i) add_variable(root.cluster[i - 1], {}, i);

    std::vector<int> frontier{0};
    bool budget_hit = false;

    while (!frontier.empty() && !budget_hit) {
        struct Task {
            int node;
            int direction; // 1-based
            Seed result;
            std::string key;
        };
        std::vector<Task> tasks;
        tasks.reserve(frontier.size() * r);
        for (int idx : frontier)
            for (int k = 1; k <= r; ++k) tasks.push_back({idx, k, Seed{}, {}});

        parallel_for(
            tasks.size(),
            [&](size_t t) {
                tasks[t].result = seed_mutate(report.nodes[tasks[t].node].seed,
                                              tasks[t].direction);
                tasks[t].key = canonical_form(tasks[t].result).key;
            },
            threads);

        std::vector<int> next;
        for (auto& t : tasks) {
            auto it = seen.find(t.key);
            if (it != seen.end()) {
                report.nodes[t.node].adj[t.direction - 1] = it->second;
                continue;
            }
            if (report.nodes.size() >= max_seeds) {
                budget_hit = true;
                break;
            }
            int idx = (int)report.nodes.size();
            seen.emplace(t.key, idx);
            MutationSequence path = report.nodes[t.node].path;
            path.push_back(t.direction);
            add_variable(t.result.cluster[t.direction - 1], path, t.direction);
            report.nodes[t.node].adj[t.direction - 1] = idx;
            report.nodes.push_back({std::move(t.result), std::move(path),
                                    std::vector<int>(r, -1)});
            next.push_back(idx);
        }
        frontier = std::move(next);
    }

    report.finite = !budget_hit;
    return report;
}

std::vector<LaurentPoly> collect_cluster_monomials(const TraversalReport& report,
                                                   int degree) {
    if (degree < 0) throw schema_error("degree bound must be nonnegative");
    if (report.nodes.empty()) return {};
    const int r = report.nodes[0].seed.matrix.r;
    const int n = report.nodes[0].seed.matrix.n;

    std::vector<LaurentPoly> out;
    std::map<std::string, bool> seen;
    auto push = [&](const LaurentPoly& p) {
        std::string key = p.str();
        if (seen.emplace(std::move(key), true).second) out.push_back(p);
    };

    for (const auto& node : report.nodes) {
        // odometer over exponent vectors with total degree <= degree
        std::vector<int> a(r, 0);
        while (true) {
            LaurentPoly m = LaurentPoly::constant(n, 1);
            for (int i = 0; i < r; ++i)
                if (a[i] > 0) m *= node.seed.cluster[i].pow(a[i]);
            push(m);
            int total = std::accumulate(a.begin(), a.end(), 0);
            int pos = r - 1;
            if (pos < 0) break;
            if (total < degree) {
                ++a[pos];
            } else {
                while (pos >= 0 && a[pos] == 0) --pos;
                if (pos <= 0) break;
                a[pos] = 0;
                ++a[pos - 1];
            }
        }
    }
    return out;
}

} // namespace clusterforge
