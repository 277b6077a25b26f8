#include "clusterforge/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "clusterforge/errors.hpp"
#include "clusterforge/linalg.hpp"
#include "clusterforge/parallel.hpp"
#include "clusterforge/tropical.hpp"

namespace clusterforge {

namespace {

using ordered_json = nlohmann::ordered_json;

int64_t pos(int64_t x) { return x > 0 ? x : 0; }

IntMat matrix_to_int(const ExchangeMatrix& m) {
    IntMat a(m.n, std::vector<Int>(m.r));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.r; ++j) a[i][j] = m.rows[i][j];
    return a;
}

bool principal_shape(const ExchangeMatrix& m) {
    if (m.n != 2 * m.r) return false;
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.r; ++j)
            if (m.rows[m.r + i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

void require_principal(const ExchangeMatrix& m, const std::string& who) {
    if (!principal_shape(m))
        throw schema_error(who + " requires principal coefficients "
                           "(n = 2r with an identity bottom block)");
}

} // namespace

NormalForm extract_normal_form(const LaurentPoly& z, const ExchangeMatrix& m) {
    validate(m);
    if (z.nvars() != m.n)
        throw schema_error("value lives in " + std::to_string(z.nvars()) +
                           " variables, matrix has n = " + std::to_string(m.n));
    if (z.is_zero()) throw no_valid_base_point("the zero value has no normal form");

    IntMat a = matrix_to_int(m);
    if (int_rank(a) != m.r)
        throw rank_deficient("extended exchange matrix has rank below " +
                             std::to_string(m.r) + "; g-vectors are undefined");

    std::vector<const Monomial*> monos;
    for (const auto& [mono, c] : z.terms()) monos.push_back(&mono);

    for (const Monomial* base : monos) {
        LaurentPoly coeff_part(m.r);
        bool ok = true;
        for (const auto& [mono, c] : z.terms()) {
            std::vector<Int> rhs(m.n);
            for (int i = 0; i < m.n; ++i) rhs[i] = Int(mono.e[i]) - Int(base->e[i]);
            auto sol = solve_full_column_rank(a, rhs);
            if (!sol) { ok = false; break; }
            std::vector<int32_t> e(m.r);
            for (int j = 0; j < m.r; ++j) {
                const Rat& v = (*sol)[j];
                if (v.get_den() != 1 || v < 0) { ok = false; break; }
                e[j] = (int32_t)v.get_num().get_si();
            }
            if (!ok) break;
            coeff_part.add_term(Monomial{std::move(e)}, c);
        }
        if (!ok) continue;
        NormalForm nf;
        nf.base.assign(base->e.begin(), base->e.end());
        nf.coefficient_part = std::move(coeff_part);
        return nf;
    }
    throw no_valid_base_point("no monomial of " + z.str() +
                              " is a valid base point for this matrix");
}

std::vector<int64_t> extract_g_vector(const LaurentPoly& z, const ExchangeMatrix& m) {
    NormalForm nf = extract_normal_form(z, m);
    return std::vector<int64_t>(nf.base.begin(), nf.base.begin() + m.r);
}

std::vector<RationalFn> yhat_images(const ExchangeMatrix& m) {
    validate(m);
    std::vector<RationalFn> images;
    images.reserve(m.r);
    for (int j = 1; j <= m.r; ++j) {
        std::vector<int32_t> e(m.n);
        for (int i = 1; i <= m.n; ++i) e[i - 1] = (int32_t)m.at(i, j);
        images.emplace_back(LaurentPoly::term(m.n, std::move(e), 1));
    }
    return images;
}

LaurentPoly reconstruct(const NormalForm& nf, const ExchangeMatrix& m) {
    RationalFn value = lp_substitute(nf.coefficient_part, yhat_images(m));
    if (!value.is_polynomial())
        throw no_valid_base_point("coefficient part does not evaluate to a Laurent polynomial");
    std::vector<int32_t> e(nf.base.begin(), nf.base.end());
    return value.num * LaurentPoly::term(m.n, std::move(e), 1);
}

LaurentPoly extract_F_polynomial(const LaurentPoly& z, const ExchangeMatrix& m) {
    require_principal(m, "F-polynomial extraction");
    if (z.nvars() != m.n)
        throw schema_error("value lives in " + std::to_string(z.nvars()) +
                           " variables, matrix has n = " + std::to_string(m.n));
    std::vector<RationalFn> images;
    images.reserve(m.n);
    for (int i = 0; i < m.r; ++i)
        images.emplace_back(LaurentPoly::constant(m.r, 1));
    for (int j = 1; j <= m.r; ++j)
        images.emplace_back(LaurentPoly::variable(m.r, j));
    RationalFn f = lp_substitute(z, images);
    if (!f.is_polynomial())
        throw schema_error("specialization of " + z.str() + " is not polynomial");
    return f.num;
}

std::vector<int64_t> f_vector(const LaurentPoly& F) {
    std::vector<TropicalElement> images;
    images.reserve(F.nvars());
    for (int j = 0; j < F.nvars(); ++j) {
        TropicalElement u(F.nvars(), 0);
        u[j] = -1;
        images.push_back(std::move(u));
    }
    TropicalElement v = tropical_eval(F, images);
    std::vector<int64_t> f(v.size());
    for (size_t i = 0; i < v.size(); ++i) f[i] = -v[i];
    return f;
}

std::vector<int64_t> denominator_vector(const LaurentPoly& z, int r) {
    if (z.is_zero()) throw schema_error("denominator vector of the zero value");
    if (r < 1 || r > z.nvars())
        throw schema_error("mutable count " + std::to_string(r) + " out of range");
    std::vector<int64_t> d(r);
    for (int i = 1; i <= r; ++i) d[i - 1] = -(int64_t)z.min_exponent(i);
    return d;
}

namespace {

// min over the monomials e of F of sum_j e_j * w_j, with w_l = -1 and
// w_j = [-b(l,j)]+ otherwise: the tropical specialization in direction l.
int64_t h_tropical(const LaurentPoly& F, const ExchangeMatrix& b_root, int l) {
    std::vector<TropicalElement> images(F.nvars());
    for (int j = 1; j <= F.nvars(); ++j)
        images[j - 1] = {j == l ? int64_t{-1} : pos(-b_root.at(l, j))};
    return tropical_eval(F, images)[0];
}

LaurentPoly pattern_variable(const ExchangeMatrix& b, const MutationSequence& path,
                             int slot) {
    Seed s = apply_sequence(initial_seed(principal_extend(b)), path);
    if (slot < 1 || slot > b.r)
        throw schema_error("slot " + std::to_string(slot) + " out of range 1.." +
                           std::to_string(b.r));
    return s.cluster[slot - 1];
}

} // namespace

HPair h_vectors(const ExchangeMatrix& b, const MutationSequence& path, int slot, int l) {
    if (b.n != b.r)
        throw schema_error("h-vectors are rooted at a square principal part");
    if (l < 1 || l > b.r)
        throw schema_error("direction " + std::to_string(l) + " out of range 1.." +
                           std::to_string(b.r));

    LaurentPoly z1 = pattern_variable(b, path, slot);
    LaurentPoly f1 = extract_F_polynomial(z1, principal_extend(b));

    ExchangeMatrix b2 = matrix_mutate(b, l);
    MutationSequence path2;
    path2.reserve(path.size() + 1);
    path2.push_back(l);
    path2.insert(path2.end(), path.begin(), path.end());
    LaurentPoly z2 = pattern_variable(b2, path2, slot);
    LaurentPoly f2 = extract_F_polynomial(z2, principal_extend(b2));

    return HPair{h_tropical(f1, b, l), h_tropical(f2, b2, l)};
}

std::vector<int64_t> g_vector_mutation(const std::vector<int64_t>& g,
                                       const ExchangeMatrix& b, int l) {
    if (b.n != b.r) throw schema_error("the transformation rule uses a square matrix");
    if ((int)g.size() != b.r) throw schema_error("g-vector length mismatch");
    if (l < 1 || l > b.r)
        throw schema_error("direction " + std::to_string(l) + " out of range 1.." +
                           std::to_string(b.r));
    std::vector<int64_t> out(g.size());
    int64_t gl = g[l - 1];
    for (int j = 1; j <= b.r; ++j) {
        if (j == l) {
            out[j - 1] = -gl;
        } else {
            int64_t bjl = b.at(j, l);
            out[j - 1] = g[j - 1] + pos(bjl) * gl - bjl * std::min(gl, int64_t{0});
        }
    }
    return out;
}

namespace {

struct CheckContext {
    const Seed& root;
    const CheckOptions& options;
    TraversalReport traversal;
    std::vector<ordered_json> findings;
    ordered_json stats;
};

ordered_json to_json_vector(const std::vector<int64_t>& v) {
    return ordered_json(v);
}

void check_constant_terms(CheckContext& ctx) {
    require_principal(ctx.root.matrix, "kind 5.4");
    for (const auto& v : ctx.traversal.variables) {
        LaurentPoly f = extract_F_polynomial(v.value, ctx.root.matrix);
        Int c = f.constant_term();
        if (c != 1)
            ctx.findings.push_back({{"variable", v.key},
                                    {"F", f.str("y")},
                                    {"constant_term", c.get_str()}});
    }
    ctx.stats["variables"] = ctx.traversal.variable_count();
}

void check_monomial_independence(CheckContext& ctx) {
    std::vector<LaurentPoly> monomials =
        collect_cluster_monomials(ctx.traversal, ctx.options.degree);
    std::map<Monomial, int, MonomialOrder> columns;
    for (const auto& p : monomials)
        for (const auto& [mono, c] : p.terms())
            columns.emplace(mono, 0);
    int col = 0;
    for (auto& [mono, idx] : columns) idx = col++;

    IntMat a(monomials.size(), std::vector<Int>(columns.size(), 0));
    for (size_t i = 0; i < monomials.size(); ++i)
        for (const auto& [mono, c] : monomials[i].terms())
            a[i][columns.at(mono)] = c;
    int rank = int_rank(std::move(a));
    if (rank != (int)monomials.size())
        ctx.findings.push_back({{"monomials", monomials.size()},
                                {"rank", rank},
                                {"degree", ctx.options.degree}});
    ctx.stats["monomials"] = monomials.size();
    ctx.stats["rank"] = rank;
    ctx.stats["degree"] = ctx.options.degree;
}

void check_g_vector_injectivity(CheckContext& ctx) {
    const ExchangeMatrix& m = ctx.root.matrix;
    // distinct cluster monomials up to the degree bound get distinct g-vectors
    std::vector<LaurentPoly> monomials =
        collect_cluster_monomials(ctx.traversal, ctx.options.degree);
    std::map<std::vector<int64_t>, std::string> by_g;
    for (const auto& p : monomials) {
        std::vector<int64_t> g = extract_g_vector(p, m);
        auto [it, fresh] = by_g.emplace(g, p.str());
        if (!fresh)
            ctx.findings.push_back({{"g", to_json_vector(g)},
                                    {"monomials", {it->second, p.str()}}});
    }
    // the g-vectors of each cluster form a unimodular matrix
    std::map<std::string, std::vector<int64_t>> variable_g;
    for (const auto& v : ctx.traversal.variables)
        variable_g.emplace(v.key, extract_g_vector(v.value, m));
    for (size_t idx = 0; idx < ctx.traversal.nodes.size(); ++idx) {
        const Seed& s = ctx.traversal.nodes[idx].seed;
        IntMat gmat(m.r, std::vector<Int>(m.r));
        for (int i = 0; i < m.r; ++i) {
            const auto& g = variable_g.at(s.cluster[i].str());
            for (int j = 0; j < m.r; ++j) gmat[i][j] = g[j];
        }
        Int det = int_det(std::move(gmat));
        if (det != 1 && det != -1)
            ctx.findings.push_back(
                {{"node", idx},
                 {"path", ordered_json(ctx.traversal.nodes[idx].path)},
                 {"det", det.get_str()}});
    }
    ctx.stats["monomials"] = monomials.size();
    ctx.stats["degree"] = ctx.options.degree;
}

void check_g_vector_mutation_rule(CheckContext& ctx, bool& closed) {
    // every edge of the exchange graph contributes the pair (principal part
    // at its source, direction); equal pairs run the same test once
    std::map<std::string, ExchangeMatrix> parts;
    for (const auto& node : ctx.traversal.nodes) {
        ExchangeMatrix b = make_principal_part(node.seed.matrix.principal_part());
        std::string key = b.str();
        parts.emplace(std::move(key), std::move(b));
    }
    std::map<std::string, TraversalReport> patterns;
    for (const auto& [key, b] : parts)
        patterns.emplace(key,
                         traverse_exchange_graph(initial_seed(principal_extend(b)),
                                                 ctx.options.max_seeds,
                                                 ctx.options.threads));

    size_t edges = 0;
    for (const auto& [key, b] : parts) {
        const TraversalReport& p1 = patterns.at(key);
        if (!p1.finite) { closed = false; continue; }
        ExchangeMatrix p1root = principal_extend(b);
        for (int k = 1; k <= b.r; ++k) {
            ++edges;
            ExchangeMatrix b2 = matrix_mutate(b, k);
            ExchangeMatrix p2root = principal_extend(b2);

            std::vector<std::string> results(p1.variables.size());
            parallel_for(
                p1.variables.size(),
                [&](size_t vi) {
                    const auto& v = p1.variables[vi];
                    std::vector<int64_t> g1 = extract_g_vector(v.value, p1root);
                    MutationSequence path2{k};
                    path2.insert(path2.end(), v.path.begin(), v.path.end());
                    LaurentPoly z2 =
                        apply_sequence(initial_seed(p2root), path2).cluster[v.slot - 1];
                    std::vector<int64_t> g2 = extract_g_vector(z2, p2root);
                    std::vector<int64_t> expected = g_vector_mutation(g1, b, k);
                    if (g2 != expected)
                        results[vi] = ordered_json{{"matrix", b.str()},
                                                   {"direction", k},
                                                   {"variable", v.key},
                                                   {"g", to_json_vector(g1)},
                                                   {"g_rerooted", to_json_vector(g2)},
                                                   {"expected", to_json_vector(expected)}}
                                          .dump();
                },
                ctx.options.threads);
            for (const auto& s : results)
                if (!s.empty()) ctx.findings.push_back(ordered_json::parse(s));
        }
    }
    ctx.stats["edge_classes"] = edges;
}

void check_h_vector_identities(CheckContext& ctx, bool& closed) {
    ExchangeMatrix b = make_principal_part(ctx.root.matrix.principal_part());
    TraversalReport p1 = traverse_exchange_graph(initial_seed(principal_extend(b)),
                                                 ctx.options.max_seeds,
                                                 ctx.options.threads);
    if (!p1.finite) closed = false;
    ExchangeMatrix p1root = principal_extend(b);
    size_t checked = 0;
    for (int l = 1; l <= b.r; ++l) {
        std::vector<std::string> results(p1.variables.size());
        parallel_for(
            p1.variables.size(),
            [&](size_t vi) {
                const auto& v = p1.variables[vi];
                std::vector<int64_t> g = extract_g_vector(v.value, p1root);
                HPair h = h_vectors(b, v.path, v.slot, l);
                int64_t gl = g[l - 1];
                if (h.h_prime != -pos(gl) || h.h != std::min(int64_t{0}, gl))
                    results[vi] = ordered_json{{"direction", l},
                                               {"variable", v.key},
                                               {"h", h.h},
                                               {"h_prime", h.h_prime},
                                               {"g_l", gl}}
                                      .dump();
            },
            ctx.options.threads);
        checked += p1.variables.size();
        for (const auto& s : results)
            if (!s.empty()) ctx.findings.push_back(ordered_json::parse(s));
    }
    ctx.stats["pairs_checked"] = checked;
}

void check_f_equals_d(CheckContext& ctx) {
    require_principal(ctx.root.matrix, "kind 7.17");
    const int r = ctx.root.matrix.r;
    size_t compared = 0;
    for (const auto& v : ctx.traversal.variables) {
        LaurentPoly F = extract_F_polynomial(v.value, ctx.root.matrix);
        std::vector<int64_t> f = f_vector(F);
        std::vector<int64_t> d = denominator_vector(v.value, r);
        for (int i = 0; i < r; ++i)
            if (f[i] < d[i])
                throw cluster_error("denominator bound violated for " + v.key +
                                    ": f=" + ordered_json(f).dump() +
                                    " d=" + ordered_json(d).dump());
        if (v.path.empty()) continue; // initial variables: d = -e_i by convention
        ++compared;
        if (f != d)
            ctx.findings.push_back({{"variable", v.key},
                                    {"f", to_json_vector(f)},
                                    {"d", to_json_vector(d)}});
    }
    ctx.stats["variables"] = ctx.traversal.variable_count();
    ctx.stats["compared"] = compared;
}

void check_sign_coherence(CheckContext& ctx) {
    const ExchangeMatrix& m = ctx.root.matrix;
    if (m.n == m.r)
        throw schema_error("sign coherence concerns the frozen rows; the pattern has none");
    for (size_t idx = 0; idx < ctx.traversal.nodes.size(); ++idx) {
        const ExchangeMatrix& b = ctx.traversal.nodes[idx].seed.matrix;
        for (int j = 0; j < b.r; ++j) {
            bool has_pos = false, has_neg = false;
            for (int i = b.r; i < b.n; ++i) {
                if (b.rows[i][j] > 0) has_pos = true;
                if (b.rows[i][j] < 0) has_neg = true;
            }
            if (has_pos && has_neg) {
                std::vector<int64_t> column;
                for (int i = b.r; i < b.n; ++i) column.push_back(b.rows[i][j]);
                ctx.findings.push_back(
                    {{"node", idx},
                     {"path", ordered_json(ctx.traversal.nodes[idx].path)},
                     {"column", j + 1},
                     {"entries", to_json_vector(column)}});
            }
        }
    }
    ctx.stats["seeds"] = ctx.traversal.seed_count();
}

} // namespace

CheckReport check_conjecture(const std::string& kind, const Seed& root,
                             const CheckOptions& options) {
    CheckContext ctx{root, options, {}, {}, ordered_json::object()};

    // 7.17 hunts for a violation, and its known counterexamples live on
    // mutation-infinite patterns where a full-budget traversal would drown in
    // giant Laurent polynomials first.  The budget therefore escalates
    // geometrically and stops at the first level that either shows a
    // violation or closes the pattern.
    if (kind == "7.17") {
        size_t budget = std::min<size_t>(size_t{8}, options.max_seeds);
        while (true) {
            ctx.traversal = traverse_exchange_graph(root, budget, options.threads);
            ctx.findings.clear();
            ctx.stats = ordered_json::object();
            check_f_equals_d(ctx);
            if (!ctx.findings.empty() || ctx.traversal.finite ||
                budget >= options.max_seeds)
                break;
            budget = std::min(budget * 2, options.max_seeds);
        }
    } else {
        ctx.traversal =
            traverse_exchange_graph(root, options.max_seeds, options.threads);
    }
    bool closed = ctx.traversal.finite;

    if (kind == "5.4") {
        check_constant_terms(ctx);
    } else if (kind == "7.2") {
        check_monomial_independence(ctx);
    } else if (kind == "7.10") {
        check_g_vector_injectivity(ctx);
    } else if (kind == "7.12") {
        check_g_vector_mutation_rule(ctx, closed);
    } else if (kind == "6.10") {
        check_h_vector_identities(ctx, closed);
    } else if (kind == "7.17") {
        // already ran under the escalation loop above
    } else if (kind == "sign-coherence") {
        check_sign_coherence(ctx);
    } else {
        throw schema_error("unknown check kind: " + kind);
    }

    CheckReport report;
    report.kind = kind;
    report.verdict = !ctx.findings.empty() ? "violated" : closed ? "pass" : "partial";
    for (const auto& f : ctx.findings) report.findings.push_back(f.dump());

    ordered_json stats;
    stats["kind"] = kind;
    stats["verdict"] = report.verdict;
    stats["seeds"] = ctx.traversal.seed_count();
    stats["variables"] = ctx.traversal.variable_count();
    stats["finite"] = ctx.traversal.finite;
    stats["findings"] = ctx.findings.size();
    for (auto& [k, v] : ctx.stats.items())
        if (!v.is_null()) stats[k] = v;
    report.stats = stats.dump();
    return report;
}

} // namespace clusterforge
