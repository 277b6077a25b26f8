#include "clusterforge/quiver_rep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "clusterforge/errors.hpp"
#include "clusterforge/exchange_graph.hpp"
#include "clusterforge/invariants.hpp"
#include "clusterforge/linalg.hpp"

namespace clusterforge {

namespace {

// enumeration gate for submodule counting; counts grow with the product of
// Gaussian binomials, so the dimension vector is kept small
constexpr int kMaxTotalDim = 8;
constexpr int kMaxVertexDim = 3;

std::string render_dims(const std::vector<int>& d) {
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

// all paths out of v, grouped by endpoint; a path is its arrow-index list in
// traversal order, the trivial path is empty.  Acyclicity bounds the walk.
std::vector<std::vector<std::vector<int>>> paths_from(const IceQuiver& q, int v) {
    std::vector<std::vector<std::vector<int>>> by_target(q.n);
    std::vector<std::pair<int, std::vector<int>>> queue;
    queue.emplace_back(v, std::vector<int>{});
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [w, path] = queue[head];
        by_target[w - 1].push_back(path);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].first != w) continue;
            std::vector<int> longer = path;
            longer.push_back(static_cast<int>(a));
            queue.emplace_back(q.arrows[a].second, std::move(longer));
        }
    }
    return by_target;
}

// vertices ordered so that every arrow points forward
std::vector<int> topological_order(const IceQuiver& q) {
    std::vector<int> indegree(q.n, 0);
    for (const auto& [s, t] : q.arrows) {
        (void)s;
        ++indegree[t - 1];
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = q.n; v >= 1; --v)
        if (indegree[v - 1] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (const auto& [s, t] : q.arrows)
            if (s == v && --indegree[t - 1] == 0) ready.push_back(t);
    }
    return order;
}

void require_same_quiver(const QuiverRep& m, const QuiverRep& n) {
    if (m.quiver.n != n.quiver.n || m.quiver.arrows != n.quiver.arrows)
        throw schema_error("representations live over different quivers");
}

int64_t reduce_mod(int64_t x, int64_t p) {
    int64_t v = x % p;
    return v < 0 ? v + p : v;
}

using ModMat = std::vector<std::vector<int64_t>>;

// all e-dimensional subspaces of F_p^d as reduced row-echelon bases
std::vector<ModMat> subspaces(int d, int e, int64_t p) {
    std::vector<ModMat> out;
    if (e < 0 || e > d) return out;
    if (e == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> pivot(e);
    for (int i = 0; i < e; ++i) pivot[i] = i;
    while (true) {
        // free entries sit right of their row's pivot, outside pivot columns
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < e; ++i)
            for (int j = pivot[i] + 1; j < d; ++j)
                if (std::find(pivot.begin(), pivot.end(), j) == pivot.end())
                    free_pos.emplace_back(i, j);
        std::vector<int64_t> fill(free_pos.size(), 0);
        while (true) {
            ModMat basis(e, std::vector<int64_t>(d, 0));
            for (int i = 0; i < e; ++i) basis[i][pivot[i]] = 1;
            for (size_t k = 0; k < free_pos.size(); ++k)
                basis[free_pos[k].first][free_pos[k].second] = fill[k];
            out.push_back(std::move(basis));
            size_t k = 0;
            while (k < fill.size() && ++fill[k] == p) fill[k++] = 0;
            if (k == fill.size()) break;
        }
        // next pivot-column combination in lexicographic order
        int i = e - 1;
        while (i >= 0 && pivot[i] == d - e + i) --i;
        if (i < 0) break;
        ++pivot[i];
        for (int j = i + 1; j < e; ++j) pivot[j] = pivot[j - 1] + 1;
    }
    return out;
}

bool in_rowspace(const ModMat& basis, std::vector<int64_t> v, int64_t p) {
    for (const auto& row : basis) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        int64_t c = v[lead]; // leading entries are 1, so c is the coefficient
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = reduce_mod(v[j] - c * row[j], p);
    }
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

bool is_prime(int64_t v) {
    if (v < 2) return false;
    for (int64_t f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}

std::vector<int64_t> first_primes(size_t count) {
    std::vector<int64_t> out;
    for (int64_t v = 2; out.size() < count; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

Rat lagrange_eval(const std::vector<int64_t>& xs, const std::vector<int64_t>& ys,
                  const Rat& x) {
    Rat acc = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        Rat term(static_cast<long>(ys[k]));
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            term *= (x - Rat(static_cast<long>(xs[j]))) /
                    Rat(static_cast<long>(xs[k] - xs[j]));
        }
        acc += term;
    }
    return acc;
}

std::vector<int64_t> to_int64(const std::vector<int>& v) {
    return std::vector<int64_t>(v.begin(), v.end());
}

} // namespace

void validate(const QuiverRep& rep) {
    validate(rep.quiver);
    if (rep.quiver.r != rep.quiver.n)
        throw schema_error("representations do not take frozen vertices");
    if (!is_acyclic(rep.quiver))
        throw schema_error("representations require an acyclic quiver");
    if (rep.dim.size() != static_cast<size_t>(rep.quiver.n))
        throw schema_error("dim: expected one entry per vertex");
    for (int d : rep.dim)
        if (d < 0) throw schema_error("dim: entries must be nonnegative");
    if (rep.maps.size() != rep.quiver.arrows.size())
        throw schema_error("arrows: expected one matrix per arrow");
    for (size_t a = 0; a < rep.maps.size(); ++a) {
        auto [s, t] = rep.quiver.arrows[a];
        size_t rows = rep.dim[t - 1], cols = rep.dim[s - 1];
        if (rep.maps[a].size() != rows)
            throw schema_error("arrow matrix " + std::to_string(a + 1) +
                               ": expected " + std::to_string(rows) + " rows");
        for (const auto& row : rep.maps[a])
            if (row.size() != cols)
                throw schema_error("arrow matrix " + std::to_string(a + 1) +
                                   ": expected " + std::to_string(cols) +
                                   " columns");
    }
}

QuiverRep zero_rep(const IceQuiver& q) {
    QuiverRep rep;
    rep.quiver = q;
    rep.dim.assign(q.n, 0);
    rep.maps.assign(q.arrows.size(), {});
    validate(rep);
    return rep;
}

QuiverRep simple_rep(const IceQuiver& q, int vertex) {
    if (vertex < 1 || vertex > q.n)
        throw schema_error("vertex out of range");
    QuiverRep rep;
    rep.quiver = q;
    rep.dim.assign(q.n, 0);
    rep.dim[vertex - 1] = 1;
    for (const auto& [s, t] : q.arrows) {
        (void)s;
        rep.maps.push_back(
            ModMat(rep.dim[t - 1], std::vector<int64_t>(rep.dim[s - 1], 0)));
    }
    validate(rep);
    return rep;
}

QuiverRep projective_rep(const IceQuiver& q, int vertex) {
    if (vertex < 1 || vertex > q.n)
        throw schema_error("vertex out of range");
    if (q.r != q.n || !is_acyclic(q))
        throw schema_error("projectives require an acyclic quiver without "
                           "frozen vertices");
    auto basis = paths_from(q, vertex);
    std::vector<std::map<std::vector<int>, int>> index(q.n);
    for (int w = 1; w <= q.n; ++w)
        for (size_t i = 0; i < basis[w - 1].size(); ++i)
            index[w - 1][basis[w - 1][i]] = static_cast<int>(i);

    QuiverRep rep;
    rep.quiver = q;
    for (int w = 1; w <= q.n; ++w)
        rep.dim.push_back(static_cast<int>(basis[w - 1].size()));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        ModMat mat(rep.dim[t - 1], std::vector<int64_t>(rep.dim[s - 1], 0));
        // the arrow acts by appending itself to a path ending at its source
        for (size_t j = 0; j < basis[s - 1].size(); ++j) {
            std::vector<int> image = basis[s - 1][j];
            image.push_back(static_cast<int>(a));
            mat[index[t - 1].at(image)][j] = 1;
        }
        rep.maps.push_back(std::move(mat));
    }
    validate(rep);
    return rep;
}

int64_t euler_form(const IceQuiver& q, const std::vector<int64_t>& d,
                   const std::vector<int64_t>& e) {
    if (d.size() != static_cast<size_t>(q.n) ||
        e.size() != static_cast<size_t>(q.n))
        throw schema_error("euler form: expected one entry per vertex");
    int64_t acc = 0;
    for (int i = 0; i < q.n; ++i) acc += d[i] * e[i];
    for (const auto& [s, t] : q.arrows) acc -= d[s - 1] * e[t - 1];
    return acc;
}

int64_t hom_dim(const QuiverRep& m, const QuiverRep& n) {
    validate(m);
    validate(n);
    require_same_quiver(m, n);
    const int nv = m.quiver.n;

    // unknowns: the entries of one matrix f_i (dim n_i x m_i) per vertex
    std::vector<int> offset(nv + 1, 0);
    for (int i = 0; i < nv; ++i)
        offset[i + 1] = offset[i] + n.dim[i] * m.dim[i];
    const int unknowns = offset[nv];
    if (unknowns == 0) return 0;

    // one equation per entry of f_t M_a - N_a f_s, per arrow a: s -> t
    IntMat rows;
    for (size_t a = 0; a < m.quiver.arrows.size(); ++a) {
        auto [s, t] = m.quiver.arrows[a];
        int ms = m.dim[s - 1], mt = m.dim[t - 1];
        int ns = n.dim[s - 1], nt = n.dim[t - 1];
        for (int p = 0; p < nt; ++p)
            for (int q = 0; q < ms; ++q) {
                std::vector<Int> row(unknowns, 0);
                for (int k = 0; k < mt; ++k)
                    row[offset[t - 1] + p * mt + k] += m.maps[a][k][q];
                for (int k = 0; k < ns; ++k)
                    row[offset[s - 1] + k * ms + q] -= n.maps[a][p][k];
                rows.push_back(std::move(row));
            }
    }
    int rank = rows.empty() ? 0 : int_rank(rows);
    return unknowns - rank;
}

int64_t ext1_dim(const QuiverRep& m, const QuiverRep& n) {
    return hom_dim(m, n) -
           euler_form(m.quiver, to_int64(m.dim), to_int64(n.dim));
}

bool is_rigid(const QuiverRep& rep) { return ext1_dim(rep, rep) == 0; }

int64_t count_submodules_mod_p(const QuiverRep& rep, const std::vector<int>& e,
                               int64_t p) {
    validate(rep);
    if (e.size() != static_cast<size_t>(rep.quiver.n))
        throw schema_error("e: expected one entry per vertex");
    if (!is_prime(p)) throw schema_error("p must be prime");
    int total = 0;
    for (int d : rep.dim) {
        total += d;
        if (d > kMaxVertexDim)
            throw bound_exceeded("dimension vector " + render_dims(rep.dim) +
                                 " exceeds the per-vertex enumeration bound " +
                                 std::to_string(kMaxVertexDim));
    }
    if (total > kMaxTotalDim)
        throw bound_exceeded("dimension vector " + render_dims(rep.dim) +
                             " exceeds the total enumeration bound " +
                             std::to_string(kMaxTotalDim));
    for (int i = 0; i < rep.quiver.n; ++i)
        if (e[i] < 0 || e[i] > rep.dim[i]) return 0;

    std::vector<std::vector<ModMat>> lists;
    for (int i = 0; i < rep.quiver.n; ++i)
        lists.push_back(subspaces(rep.dim[i], e[i], p));
    std::vector<ModMat> maps_mod;
    for (const auto& mat : rep.maps) {
        ModMat reduced = mat;
        for (auto& row : reduced)
            for (auto& x : row) x = reduce_mod(x, p);
        maps_mod.push_back(std::move(reduced));
    }

    int64_t count = 0;
    std::vector<size_t> pick(rep.quiver.n, 0);
    while (true) {
        bool closed = true;
        for (size_t a = 0; a < rep.quiver.arrows.size() && closed; ++a) {
            auto [s, t] = rep.quiver.arrows[a];
            const ModMat& us = lists[s - 1][pick[s - 1]];
            const ModMat& ut = lists[t - 1][pick[t - 1]];
            for (const auto& u : us) {
                std::vector<int64_t> v(rep.dim[t - 1], 0);
                for (int i = 0; i < rep.dim[t - 1]; ++i) {
                    int64_t acc = 0;
                    for (int j = 0; j < rep.dim[s - 1]; ++j)
                        acc += maps_mod[a][i][j] * u[j];
                    v[i] = reduce_mod(acc, p);
                }
                if (!in_rowspace(ut, std::move(v), p)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == lists[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return count;
}

Int grassmannian_euler_char(const QuiverRep& rep, const std::vector<int>& e) {
    validate(rep);
    if (e.size() != static_cast<size_t>(rep.quiver.n))
        throw schema_error("e: expected one entry per vertex");
    for (int i = 0; i < rep.quiver.n; ++i)
        if (e[i] < 0 || e[i] > rep.dim[i]) return 0;

    // the count is a polynomial in p of degree at most the Grassmannian
    // product dimension, so D+1 samples determine it and one more checks it
    int64_t degree = 0;
    for (int i = 0; i < rep.quiver.n; ++i)
        degree += static_cast<int64_t>(e[i]) * (rep.dim[i] - e[i]);
    std::vector<int64_t> primes = first_primes(degree + 2);
    std::vector<int64_t> samples;
    for (size_t k = 0; k + 1 < primes.size(); ++k)
        samples.push_back(count_submodules_mod_p(rep, e, primes[k]));
    std::vector<int64_t> xs(primes.begin(), primes.end() - 1);

    int64_t extra = count_submodules_mod_p(rep, e, primes.back());
    Rat at_extra = lagrange_eval(xs, samples, Rat(static_cast<long>(primes.back())));
    if (at_extra != Rat(static_cast<long>(extra)))
        throw interpolation_mismatch(
            "count at p=" + std::to_string(primes.back()) + " is " +
            std::to_string(extra) + " but the interpolant predicts " +
            at_extra.get_str() + " (dim " + render_dims(rep.dim) + ", e " +
            render_dims(e) + ")");

    Rat chi = lagrange_eval(xs, samples, Rat(1));
    if (chi.get_den() != 1)
        throw interpolation_mismatch("Euler characteristic " + chi.get_str() +
                                     " is not an integer (dim " +
                                     render_dims(rep.dim) + ", e " +
                                     render_dims(e) + ")");
    return chi.get_num();
}

std::vector<int64_t> g_from_presentation(const QuiverRep& rep) {
    validate(rep);
    const IceQuiver& q = rep.quiver;

    // corank of the radical at each vertex = multiplicity of P_i in the cover
    std::vector<int64_t> top(q.n, 0);
    for (int i = 1; i <= q.n; ++i) {
        IntMat incoming(rep.dim[i - 1]);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].second != i) continue;
            for (int row = 0; row < rep.dim[i - 1]; ++row)
                for (int64_t x : rep.maps[a][row])
                    incoming[row].push_back(x);
        }
        int rank = (rep.dim[i - 1] == 0 || incoming[0].empty())
                       ? 0
                       : int_rank(incoming);
        top[i - 1] = rep.dim[i - 1] - rank;
    }

    std::vector<std::vector<int64_t>> path_count(q.n);
    for (int v = 1; v <= q.n; ++v) {
        auto basis = paths_from(q, v);
        for (int w = 1; w <= q.n; ++w)
            path_count[v - 1].push_back(static_cast<int64_t>(basis[w - 1].size()));
    }

    // kernel of the cover is projective; peel its indecomposable summands
    // off in topological order, where the path-count matrix is unitriangular
    std::vector<int64_t> residue(q.n, 0);
    for (int w = 1; w <= q.n; ++w) {
        for (int v = 1; v <= q.n; ++v)
            residue[w - 1] += top[v - 1] * path_count[v - 1][w - 1];
        residue[w - 1] -= rep.dim[w - 1];
    }
    std::vector<int64_t> kernel(q.n, 0);
    for (int v : topological_order(q)) {
        kernel[v - 1] = residue[v - 1];
        if (kernel[v - 1] < 0)
            throw cluster_error("projective cover failed on dimension vector " +
                                render_dims(rep.dim));
        for (int w = 1; w <= q.n; ++w)
            residue[w - 1] -= kernel[v - 1] * path_count[v - 1][w - 1];
    }
    for (int64_t x : residue)
        if (x != 0)
            throw cluster_error("presentation kernel is not projective on "
                                "dimension vector " + render_dims(rep.dim));

    std::vector<int64_t> g(q.n);
    for (int i = 0; i < q.n; ++i) g[i] = top[i] - kernel[i];
    return g;
}

LaurentPoly module_F_polynomial(const QuiverRep& rep) {
    validate(rep);
    LaurentPoly F = LaurentPoly::constant(rep.quiver.n, 0);
    std::vector<int> e(rep.quiver.n, 0);
    while (true) {
        Int chi = grassmannian_euler_char(rep, e);
        if (chi != 0) {
            Monomial mono;
            mono.e.assign(e.begin(), e.end());
            F.add_term(mono, chi);
        }
        size_t i = 0;
        while (i < e.size() && ++e[i] > rep.dim[i]) e[i++] = 0;
        if (i == e.size()) break;
    }
    return F;
}

MatchReport match_against_traversal(const IceQuiver& q,
                                    const std::vector<QuiverRep>& reps,
                                    size_t max_seeds) {
    validate(q);
    if (q.r != q.n)
        throw schema_error("matching requires a quiver without frozen vertices");
    for (const auto& rep : reps) {
        validate(rep);
        if (rep.quiver.n != q.n || rep.quiver.arrows != q.arrows)
            throw schema_error("representations live over different quivers");
    }

    // modules of the path algebra pair with the pattern of the transposed
    // matrix, which for the antisymmetric principal part is its negation
    ExchangeMatrix b = quiver_to_matrix(q);
    for (auto& row : b.rows)
        for (auto& x : row) x = -x;
    ExchangeMatrix root = principal_extend(b);
    TraversalReport pattern = traverse_exchange_graph(initial_seed(root), max_seeds);

    MatchReport report;
    report.reps = reps.size();
    if (!pattern.finite) {
        report.mismatches.push_back("traversal budget exhausted before closure");
        return report;
    }

    std::multiset<std::string> from_pattern;
    for (const auto& v : pattern.variables) {
        if (v.path.empty()) continue; // initial variable
        from_pattern.insert(extract_F_polynomial(v.value, root).str("y"));
        ++report.variables;
    }

    bool ok = true;
    std::multiset<std::string> from_reps;
    for (size_t i = 0; i < reps.size(); ++i) {
        LaurentPoly F = module_F_polynomial(reps[i]);
        from_reps.insert(F.str("y"));
        if (f_vector(F) != to_int64(reps[i].dim)) {
            ok = false;
            report.mismatches.push_back(
                "rep " + std::to_string(i + 1) + ": f-vector of " + F.str("y") +
                " differs from dimension vector " + render_dims(reps[i].dim));
        }
    }
    std::multiset<std::string> only_pattern = from_pattern;
    for (const auto& s : from_reps) {
        auto it = only_pattern.find(s);
        if (it != only_pattern.end()) only_pattern.erase(it);
    }
    std::multiset<std::string> only_reps = from_reps;
    for (const auto& s : from_pattern) {
        auto it = only_reps.find(s);
        if (it != only_reps.end()) only_reps.erase(it);
    }
    for (const auto& s : only_pattern) {
        ok = false;
        report.mismatches.push_back("pattern only: " + s);
    }
    for (const auto& s : only_reps) {
        ok = false;
        report.mismatches.push_back("representations only: " + s);
    }

    report.matched = ok;
    return report;
}

} // namespace clusterforge
