#include "cli.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "clusterforge/errors.hpp"
#include "clusterforge/exchange_graph.hpp"
#include "clusterforge/invariants.hpp"
#include "clusterforge/json_io.hpp"
#include "clusterforge/quiver_rep.hpp"
#include "clusterforge/seed.hpp"

namespace clusterforge::cli {

namespace {

// flag or command problems; reported with a distinct prefix and exit code 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using FlagMap = std::map<std::string, std::string>;

FlagMap parse_flags(const std::vector<std::string>& args,
                    const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
    FlagMap flags;
    for (size_t i = 1; i < args.size(); i += 2) {
        const std::string& name = args[i];
        if (name.rfind("--", 0) != 0)
            throw usage_error("expected a flag, got: " + name);
        if (!required.count(name) && !optional.count(name))
            throw usage_error("unknown flag for " + args[0] + ": " + name);
        if (flags.count(name))
            throw usage_error("duplicate flag: " + name);
        if (i + 1 >= args.size())
            throw usage_error("flag " + name + " needs a value");
        flags[name] = args[i + 1];
    }
    for (const auto& name : required)
        if (!flags.count(name))
            throw usage_error(args[0] + " requires " + name);
    return flags;
}

int64_t parse_integer(const std::string& text, const std::string& what) {
    size_t used = 0;
    int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw usage_error(what + ": expected an integer, got: " + text);
    }
    if (used != text.size())
        throw usage_error(what + ": expected an integer, got: " + text);
    return value;
}

std::vector<int64_t> parse_integer_list(const std::string& text,
                                        const std::string& what) {
    std::vector<int64_t> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_integer(piece, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string render_vector(const std::vector<int64_t>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

Seed load_seed(const FlagMap& flags) {
    return seed_from_json(load_text_file(flags.at("--seed")));
}

QuiverRep load_rep(const FlagMap& flags) {
    return rep_from_json(load_text_file(flags.at("--rep")));
}

std::string variable_name(const Seed& s, int slot) {
    if (s.names.size() == static_cast<size_t>(s.matrix.n))
        return s.names[slot - 1];
    return "x" + std::to_string(slot);
}

MutationSequence parse_sequence(const FlagMap& flags, int r) {
    MutationSequence seq;
    for (int64_t k : parse_integer_list(flags.at("--sequence"), "--sequence")) {
        if (k < 1 || k > r)
            throw usage_error("--sequence: direction " + std::to_string(k) +
                              " is out of range 1.." + std::to_string(r));
        seq.push_back(static_cast<int>(k));
    }
    return seq;
}

int parse_slot(const FlagMap& flags, int r) {
    int64_t slot = parse_integer(flags.at("--slot"), "--slot");
    if (slot < 1 || slot > r)
        throw usage_error("--slot: expected a value in 1.." + std::to_string(r));
    return static_cast<int>(slot);
}

size_t parse_max_seeds(const FlagMap& flags) {
    if (!flags.count("--max-seeds")) return 100000;
    int64_t v = parse_integer(flags.at("--max-seeds"), "--max-seeds");
    if (v < 1) throw usage_error("--max-seeds: expected a positive value");
    return static_cast<size_t>(v);
}

int cmd_mutate(const FlagMap& flags, std::ostream& out) {
    Seed seed = load_seed(flags);
    Seed result = apply_sequence(seed, parse_sequence(flags, seed.matrix.r));
    int only = flags.count("--slot") ? parse_slot(flags, seed.matrix.r) : 0;
    for (int i = 1; i <= seed.matrix.r; ++i) {
        if (only != 0 && i != only) continue;
        if (only == 0 && result.cluster[i - 1] == seed.cluster[i - 1])
            continue; // untouched slots stay silent unless asked for
        out << variable_name(seed, i) << "' = " << result.cluster[i - 1].str()
            << "\n";
    }
    return 0;
}

int cmd_traverse(const FlagMap& flags, std::ostream& out) {
    Seed seed = load_seed(flags);
    TraversalReport report =
        traverse_exchange_graph(seed, parse_max_seeds(flags));
    out << "seeds=" << report.seed_count()
        << " variables=" << report.variable_count()
        << " finite=" << (report.finite ? "true" : "false") << "\n";
    return 0;
}

int cmd_invariants(const FlagMap& flags, std::ostream& out) {
    Seed seed = load_seed(flags);
    Seed result = apply_sequence(seed, parse_sequence(flags, seed.matrix.r));
    int slot = parse_slot(flags, seed.matrix.r);
    const LaurentPoly& z = result.cluster[slot - 1];
    LaurentPoly F = extract_F_polynomial(z, seed.matrix);
    out << "g = " << render_vector(extract_g_vector(z, seed.matrix)) << "\n";
    out << "F = " << F.str("y") << "\n";
    out << "f = " << render_vector(f_vector(F)) << "\n";
    out << "d = " << render_vector(denominator_vector(z, seed.matrix.r)) << "\n";
    return 0;
}

int cmd_check(const FlagMap& flags, std::ostream& out) {
    static const std::set<std::string> kinds{
        "5.4", "6.10", "7.2", "7.10", "7.12", "7.17", "sign-coherence"};
    std::string kind = flags.at("--kind");
    if (!kinds.count(kind))
        throw usage_error("--kind: unknown check: " + kind);
    Seed seed = load_seed(flags);
    CheckOptions options;
    options.max_seeds = parse_max_seeds(flags);
    if (flags.count("--degree")) {
        int64_t d = parse_integer(flags.at("--degree"), "--degree");
        if (d < 0) throw usage_error("--degree: expected a nonnegative value");
        options.degree = static_cast<int>(d);
    }
    CheckReport report = check_conjecture(kind, seed, options);
    for (const auto& finding : report.findings) out << finding << "\n";
    out << report.stats << "\n";
    return report.verdict == "violated" ? 3 : 0;
}

int cmd_char(const FlagMap& flags, std::ostream& out) {
    QuiverRep rep = load_rep(flags);
    out << "F = " << module_F_polynomial(rep).str("y") << "\n";
    out << "g = " << render_vector(g_from_presentation(rep)) << "\n";
    out << "dim = "
        << render_vector(std::vector<int64_t>(rep.dim.begin(), rep.dim.end()))
        << "\n";
    return 0;
}

int cmd_grassmannian(const FlagMap& flags, std::ostream& out) {
    QuiverRep rep = load_rep(flags);
    std::vector<int> e;
    for (int64_t v : parse_integer_list(flags.at("--e"), "--e"))
        e.push_back(static_cast<int>(v));
    out << "chi = " << grassmannian_euler_char(rep, e).get_str() << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        if (args.empty())
            throw usage_error("expected a command: mutate | traverse | "
                              "invariants | check | char | grassmannian");
        const std::string& cmd = args[0];
        if (cmd == "mutate")
            return cmd_mutate(
                parse_flags(args, {"--seed", "--sequence"}, {"--slot"}), out);
        if (cmd == "traverse")
            return cmd_traverse(parse_flags(args, {"--seed"}, {"--max-seeds"}),
                                out);
        if (cmd == "invariants")
            return cmd_invariants(
                parse_flags(args, {"--seed", "--sequence", "--slot"}, {}), out);
        if (cmd == "check")
            return cmd_check(parse_flags(args, {"--kind", "--seed"},
                                         {"--max-seeds", "--degree"}),
                             out);
        if (cmd == "char")
            return cmd_char(parse_flags(args, {"--rep"}, {}), out);
        if (cmd == "grassmannian")
            return cmd_grassmannian(parse_flags(args, {"--rep", "--e"}, {}),
                                    out);
        throw usage_error("unknown command: " + cmd);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const cluster_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace clusterforge::cli
