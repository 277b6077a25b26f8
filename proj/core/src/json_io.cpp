#include "clusterforge/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw schema_error(std::string("malformed JSON: ") + e.what());
    }
}

int64_t get_integer(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw schema_error(where + ": expected an integer");
    return j.get<int64_t>();
}

const ordered_json& get_field(const ordered_json& j, const std::string& name,
                              const std::string& where) {
    if (!j.is_object())
        throw schema_error(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end())
        throw schema_error(where + ": missing field \"" + name + "\"");
    return *it;
}

std::vector<std::vector<int64_t>> get_int_rows(const ordered_json& j,
                                               const std::string& where) {
    if (!j.is_array())
        throw schema_error(where + ": expected an array of rows");
    std::vector<std::vector<int64_t>> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        std::string label = where + "[" + std::to_string(i) + "]";
        if (!row.is_array())
            throw schema_error(label + ": expected an array");
        std::vector<int64_t> out;
        for (size_t k = 0; k < row.size(); ++k)
            out.push_back(
                get_integer(row[k], label + "[" + std::to_string(k) + "]"));
        rows.push_back(std::move(out));
    }
    return rows;
}

ExchangeMatrix matrix_from_value(const ordered_json& j, const std::string& where) {
    int64_t n = get_integer(get_field(j, "n", where), where + ".n");
    int64_t r = get_integer(get_field(j, "r", where), where + ".r");
    auto rows = get_int_rows(get_field(j, "rows", where), where + ".rows");
    if (rows.size() != static_cast<size_t>(n))
        throw schema_error(where + ".rows: expected " + std::to_string(n) +
                           " rows");
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != static_cast<size_t>(r))
            throw schema_error(where + ".rows[" + std::to_string(i) +
                               "]: expected " + std::to_string(r) + " entries");
    return make_matrix(static_cast<int>(n), static_cast<int>(r), std::move(rows));
}

IceQuiver quiver_from_value(const ordered_json& j, const std::string& where) {
    int64_t n =
        get_integer(get_field(j, "vertices", where), where + ".vertices");
    const auto& frozen = get_field(j, "frozen", where);
    if (!frozen.is_array())
        throw schema_error(where + ".frozen: expected an array");
    std::vector<int64_t> ids;
    for (size_t i = 0; i < frozen.size(); ++i)
        ids.push_back(get_integer(frozen[i], where + ".frozen[" +
                                                 std::to_string(i) + "]"));
    // frozen vertices occupy the top indices r+1..n by convention
    int64_t r = n - static_cast<int64_t>(ids.size());
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] != r + 1 + static_cast<int64_t>(i))
            throw schema_error(where + ".frozen: expected the highest vertex "
                               "indices in increasing order");
    auto pairs = get_int_rows(get_field(j, "arrows", where), where + ".arrows");
    std::vector<std::pair<int, int>> arrows;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].size() != 2)
            throw schema_error(where + ".arrows[" + std::to_string(i) +
                               "]: expected a [source, target] pair");
        arrows.emplace_back(static_cast<int>(pairs[i][0]),
                            static_cast<int>(pairs[i][1]));
    }
    return make_quiver(static_cast<int>(n), static_cast<int>(r),
                       std::move(arrows));
}

ordered_json matrix_to_value(const ExchangeMatrix& m) {
    ordered_json j;
    j["n"] = m.n;
    j["r"] = m.r;
    j["rows"] = m.rows;
    return j;
}

ordered_json quiver_to_value(const IceQuiver& q) {
    ordered_json j;
    j["vertices"] = q.n;
    std::vector<int> frozen;
    for (int v = q.r + 1; v <= q.n; ++v) frozen.push_back(v);
    j["frozen"] = frozen;
    ordered_json arrows = ordered_json::array();
    for (const auto& [s, t] : q.arrows) arrows.push_back({s, t});
    j["arrows"] = std::move(arrows);
    return j;
}

} // namespace

ExchangeMatrix matrix_from_json(const std::string& text) {
    return matrix_from_value(parse(text), "matrix");
}

std::string matrix_to_json(const ExchangeMatrix& m) {
    return matrix_to_value(m).dump();
}

IceQuiver quiver_from_json(const std::string& text) {
    return quiver_from_value(parse(text), "quiver");
}

std::string quiver_to_json(const IceQuiver& q) {
    return quiver_to_value(q).dump();
}

Seed seed_from_json(const std::string& text) {
    ordered_json j = parse(text);
    if (!j.is_object())
        throw schema_error("seed: expected an object");
    ExchangeMatrix m;
    if (j.contains("rows"))
        m = matrix_from_value(j, "seed");
    else if (j.contains("vertices"))
        m = quiver_to_matrix(quiver_from_value(j, "seed"));
    else
        throw schema_error("seed: expected a matrix (\"rows\") or a quiver "
                           "(\"vertices\") object");
    Seed s = initial_seed(m);
    if (j.contains("variables")) {
        const auto& names = j["variables"];
        if (!names.is_array() || names.size() != static_cast<size_t>(m.n))
            throw schema_error("seed.variables: expected " +
                               std::to_string(m.n) + " names");
        for (size_t i = 0; i < names.size(); ++i) {
            if (!names[i].is_string())
                throw schema_error("seed.variables[" + std::to_string(i) +
                                   "]: expected a string");
            s.names.push_back(names[i].get<std::string>());
        }
    }
    return s;
}

QuiverRep rep_from_json(const std::string& text) {
    ordered_json j = parse(text);
    IceQuiver q = quiver_from_value(get_field(j, "quiver", "rep"), "rep.quiver");
    const auto& dim = get_field(j, "dim", "rep");
    if (!dim.is_array() || dim.size() != static_cast<size_t>(q.n))
        throw schema_error("rep.dim: expected " + std::to_string(q.n) +
                           " entries");
    QuiverRep rep;
    rep.quiver = q;
    for (size_t i = 0; i < dim.size(); ++i)
        rep.dim.push_back(static_cast<int>(
            get_integer(dim[i], "rep.dim[" + std::to_string(i) + "]")));

    const auto& entries = get_field(j, "arrows", "rep");
    if (!entries.is_array())
        throw schema_error("rep.arrows: expected an array");
    // one matrix per quiver arrow; parallel arrows are matched in file order
    std::vector<bool> used(q.arrows.size(), false);
    rep.maps.resize(q.arrows.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        std::string label = "rep.arrows[" + std::to_string(i) + "]";
        int s = static_cast<int>(
            get_integer(get_field(entries[i], "from", label), label + ".from"));
        int t = static_cast<int>(
            get_integer(get_field(entries[i], "to", label), label + ".to"));
        size_t slot = q.arrows.size();
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (!used[a] && q.arrows[a] == std::make_pair(s, t)) {
                slot = a;
                break;
            }
        if (slot == q.arrows.size())
            throw schema_error(label + ": no unmatched quiver arrow " +
                               std::to_string(s) + " -> " + std::to_string(t));
        used[slot] = true;
        rep.maps[slot] =
            get_int_rows(get_field(entries[i], "matrix", label), label + ".matrix");
    }
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (!used[a])
            throw schema_error("rep.arrows: missing matrix for arrow " +
                               std::to_string(q.arrows[a].first) + " -> " +
                               std::to_string(q.arrows[a].second));
    validate(rep);
    return rep;
}

std::string rep_to_json(const QuiverRep& rep) {
    ordered_json j;
    j["quiver"] = quiver_to_value(rep.quiver);
    j["dim"] = rep.dim;
    ordered_json arrows = ordered_json::array();
    for (size_t a = 0; a < rep.quiver.arrows.size(); ++a) {
        ordered_json entry;
        entry["from"] = rep.quiver.arrows[a].first;
        entry["to"] = rep.quiver.arrows[a].second;
        entry["matrix"] = rep.maps[a];
        arrows.push_back(std::move(entry));
    }
    j["arrows"] = std::move(arrows);
    return j.dump();
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cluster_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cluster_error("cannot open file for writing: " + path);
    out << text;
    if (!out.flush()) throw cluster_error("write failed: " + path);
}

} // namespace clusterforge
