#include "treestab/cli.hpp"

#include "treestab/dh.hpp"
#include "treestab/families.hpp"
#include "treestab/json_io.hpp"
#include "treestab/newton.hpp"
#include "treestab/stability.hpp"
#include "treestab/sturm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace treestab::cli {

namespace {

enum class OutputFormat { Human, Json };

struct InputOptions {
    std::string path;
    std::string text;
    std::string family;
    std::string format = "auto";
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    OutputFormat format = OutputFormat::Human;
    std::uint64_t guard = kDefaultTreeGuard;
    std::uint64_t seed = 1;
};

// Input problems the user can fix; reported with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw InputError("not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InputError("not an integer: '" + s + "'");
    }
}

Graph load_graph(const InputOptions& opt, Context& ctx) {
    const int given = (!opt.path.empty() ? 1 : 0) + (!opt.text.empty() ? 1 : 0) + (!opt.family.empty() ? 1 : 0);
    if (given > 1) throw InputError("give exactly one of FILE, --text, --family");
    if (!opt.family.empty()) return family_from_tokens(split_tokens(opt.family), ctx.seed);

    std::string source = "<stdin>";
    std::string text;
    if (!opt.text.empty()) {
        source = "<text>";
        text = opt.text;
    } else if (!opt.path.empty() && opt.path != "-") {
        source = opt.path;
        text = read_file(opt.path);
    } else {
        std::ostringstream ss;
        ss << ctx.in.rdbuf();
        text = ss.str();
    }
    try {
        if (opt.format == "edgelist") return parse_graph(text, GraphFormat::EdgeList);
        if (opt.format == "graph6") return parse_graph(text, GraphFormat::Graph6);
        return parse_graph_auto(text);
    } catch (const ParseError& e) {
        throw InputError(source + ": " + e.what());
    } catch (const GraphError& e) {
        throw InputError(source + ": " + e.what());
    }
}

void add_input_options(CLI::App* cmd, InputOptions& opt) {
    cmd->add_option("input", opt.path, "Graph file (edge list or graph6); '-' or omitted reads stdin");
    cmd->add_option("--text", opt.text, "Graph given inline");
    cmd->add_option("--family", opt.family, "Named family, e.g. \"K 5\", \"Kmn 2 3\", \"C 6\", \"gem\"");
    cmd->add_option("--input-format", opt.format, "auto, edgelist or graph6")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

std::string render_factored(const FactoredForm& f) {
    if (f.factors.empty()) return "1";
    std::vector<std::pair<VertexSet, int>> grouped;
    for (const auto& s : f.factors) {
        auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto& p) { return p.first == s; });
        if (it == grouped.end()) grouped.emplace_back(s, 1);
        else ++it->second;
    }
    std::string out;
    for (const auto& [s, count] : grouped) {
        if (!out.empty()) out += "*";
        std::string term;
        for (Vertex v : s) term += (term.empty() ? "x" : " + x") + std::to_string(v);
        if (s.size() > 1) term = "(" + term + ")";
        out += term;
        if (count > 1) out += "^" + std::to_string(count);
    }
    return out;
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

// ---- subcommands --------------------------------------------------------------------------

int cmd_poly(Context& ctx, const InputOptions& in, bool factored) {
    Graph g = load_graph(in, ctx);
    MultiPoly p = vertex_spanning_polynomial(g, ctx.guard);
    std::optional<FactoredForm> form;
    if (factored && g.order() >= 2) {
        if (auto seq = pruning_sequence(g)) form = factored_polynomial(*seq);
    }
    if (ctx.format == OutputFormat::Json) {
        Json j{{"n", g.order()}, {"polynomial", render(p)}};
        if (form) j["factored"] = to_json(*form);
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << (form ? render_factored(*form) : render(p)) << '\n';
    }
    if (factored && !form && g.order() >= 2) {
        ctx.err << "no product of linear forms: the graph is not distance-hereditary\n";
        return kAnalysisFailure;
    }
    return kOk;
}

int cmd_edgepoly(Context& ctx, const InputOptions& in) {
    Graph g = load_graph(in, ctx);
    MultiPoly q = edge_spanning_polynomial(g, ctx.guard);
    if (ctx.format == OutputFormat::Json) {
        ctx.out << Json{{"polynomial", render(q)}, {"edges", edges_json(g.edges())}}.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            ctx.out << "# x" << i << " = " << g.edges()[i].u << "-" << g.edges()[i].v << '\n';
        ctx.out << render(q) << '\n';
    }
    return kOk;
}

int cmd_wpoly(Context& ctx, const InputOptions& in, const std::string& weights_path) {
    Graph g = load_graph(in, ctx);
    EdgeWeights w;
    try {
        w = parse_weights(read_file(weights_path));
        w.validate(g);
    } catch (const ParseError& e) {
        throw InputError(weights_path + ": " + e.what());
    } catch (const GraphError& e) {
        throw InputError(weights_path + ": " + e.what());
    }
    MultiPoly p = weighted_vertex_spanning_polynomial(g, w, ctx.guard);
    WeightedSignResult sign = weighted_sign_check(g, w);
    const bool mixed = sign.verdict == WeightedSign::MixedSignUnstable;
    if (ctx.format == OutputFormat::Json) {
        Json j{{"polynomial", render(p)}, {"sign_check", mixed ? "mixed_sign_unstable" : "inconclusive"}};
        if (sign.pivot) {
            j["pivot"] = *sign.pivot;
            Json point = Json::array();
            for (const auto& z : sign.zero_of_divisor) point.push_back(to_json(z));
            j["zero_of_divisor"] = point;
        }
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << render(p) << '\n';
        ctx.out << "# sign check: " << (mixed ? "mixed_sign_unstable" : "inconclusive");
        if (sign.pivot) ctx.out << " (vertex " << *sign.pivot << " meets weights of both signs)";
        ctx.out << '\n';
    }
    return kOk;
}

int cmd_trees(Context& ctx, const InputOptions& in, bool list) {
    Graph g = load_graph(in, ctx);
    BigInt count = matrix_tree_count(g);
    if (ctx.format == OutputFormat::Json) {
        Json j{{"count", count.get_str()}};
        if (list) {
            Json trees = Json::array();
            for_each_spanning_tree(g, [&](const SpanningTree& t) { trees.push_back(edges_json(t.edges())); }, ctx.guard);
            j["trees"] = trees;
        }
        ctx.out << j.dump() << '\n';
        return kOk;
    }
    ctx.out << count.get_str() << '\n';
    if (list) {
        for_each_spanning_tree(
            g,
            [&](const SpanningTree& t) {
                ctx.out << '\n' << render_edge_list(Graph(t.order(), t.edges()));
            },
            ctx.guard);
    }
    return kOk;
}

int cmd_dh(Context& ctx, const InputOptions& in) {
    Graph g = load_graph(in, ctx);
    auto seq = pruning_sequence(g);
    std::optional<ForbiddenWitness> witness;
    if (!seq) witness = find_forbidden_induced_subgraph(g);
    if (ctx.format == OutputFormat::Json) {
        Json j{{"distance_hereditary", seq.has_value()}};
        if (seq) {
            Json steps = Json::array();
            for (const auto& s : seq->steps) steps.push_back(to_json(s));
            j["sequence"] = steps;
        }
        if (witness) j["witness"] = to_json(*witness);
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << "distance-hereditary: " << (seq ? "yes" : "no") << '\n';
        if (seq) ctx.out << to_json_lines(*seq);
        if (witness) ctx.out << to_json(*witness).dump() << '\n';
    }
    return kOk;
}

int cmd_stability(Context& ctx, const InputOptions& in) {
    Graph g = load_graph(in, ctx);
    StabilityVerdict v = decide_stability(g, ctx.guard);
    if (ctx.format == OutputFormat::Json) {
        Json j = to_json(v);
        if (v.refutation) j["reduced"] = render(replay_refutation(g, *v.refutation).polynomials.back());
        ctx.out << j.dump() << '\n';
        return kOk;
    }
    if (v.stable) {
        ctx.out << "stable\n";
        ctx.out << "P = " << render_factored(*v.factored) << '\n';
    } else {
        ctx.out << "unstable\n";
        ctx.out << "witness: " << to_json(*v.witness).dump() << '\n';
        ctx.out << "reduced: " << render(replay_refutation(g, *v.refutation).polynomials.back()) << '\n';
        ctx.out << "certificate: " << to_json(*v.refutation).dump() << '\n';
    }
    return kOk;
}

int cmd_check_cert(Context& ctx, const InputOptions& in, const std::string& cert_path) {
    Graph g = load_graph(in, ctx);
    RefutationCertificate cert;
    try {
        Json doc = Json::parse(read_file(cert_path));
        if (doc.is_object() && doc.contains("certificate")) doc = doc.at("certificate");
        cert = certificate_from_json(doc);
    } catch (const Json::exception& e) {
        throw InputError(cert_path + ": " + e.what());
    } catch (const JsonFormatError& e) {
        throw InputError(cert_path + ": " + e.what());
    }
    RefutationReplay replay;
    try {
        replay = replay_refutation(g, cert);
    } catch (const MalformedCertificate& e) {
        throw InputError(cert_path + ": malformed certificate: " + e.what());
    }
    if (ctx.format == OutputFormat::Json) {
        Json j{{"valid", replay.valid}, {"reduced", render(replay.polynomials.back())}};
        if (!replay.valid) j["failure"] = replay.failure;
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << (replay.valid ? "valid" : "invalid: " + replay.failure) << '\n';
    }
    return replay.valid ? kOk : kAnalysisFailure;
}

int cmd_newton(Context& ctx, const InputOptions& in, bool edge) {
    Graph g = load_graph(in, ctx);
    MultiPoly p = edge ? edge_spanning_polynomial(g, ctx.guard) : vertex_spanning_polynomial(g, ctx.guard);
    LatticePolytope hull = newton_polytope(p);
    SaturationReport sat = saturation_check(p);
    if (ctx.format == OutputFormat::Json) {
        ctx.out << Json{{"dim", hull.dim}, {"vertices", hull.vertices}, {"saturated", sat.saturated},
                        {"missing", sat.missing}}
                       .dump()
                << '\n';
        return kOk;
    }
    auto point = [](const Exponent& e) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + ")";
    };
    ctx.out << "vertices: " << hull.vertices.size() << '\n';
    for (const auto& v : hull.vertices) ctx.out << "  " << point(v) << '\n';
    ctx.out << (sat.saturated ? "saturated" : "not saturated") << '\n';
    for (const auto& m : sat.missing) ctx.out << "  missing " << point(m) << '\n';
    return kOk;
}

int cmd_weakstable(Context& ctx, const InputOptions& in, std::size_t max_parts) {
    Graph g = load_graph(in, ctx);
    WeakStabilityResult r = weak_stability_check(g, max_parts, ctx.guard);
    if (ctx.format == OutputFormat::Json) {
        Json j{{"weakly_stable", r.weakly_stable}, {"partitions_checked", r.partitions_checked}};
        if (!r.weakly_stable) {
            j["coloring"] = r.coloring;
            j["parts"] = r.parts;
            j["missing"] = r.missing;
        }
        ctx.out << j.dump() << '\n';
        return kOk;
    }
    if (r.weakly_stable) {
        ctx.out << "weakly stable (" << r.partitions_checked << " partitions checked)\n";
    } else {
        ctx.out << "not weakly stable\ncoloring:";
        for (auto c : r.coloring) ctx.out << ' ' << c;
        ctx.out << "\nmissing monomial: ";
        MultiPoly m(r.parts);
        m.add_term(r.missing, 1);
        ctx.out << render(m, "y") << '\n';
    }
    return kOk;
}

int cmd_family(Context& ctx, const std::vector<std::string>& tokens, bool graph6) {
    Graph g = family_from_tokens(tokens, ctx.seed);
    ctx.out << (graph6 ? render_graph6(g) + "\n" : render_edge_list(g));
    return kOk;
}

// ---- census -------------------------------------------------------------------------------

struct CensusRow {
    int n = 0;
    std::size_t graphs = 0;
    std::size_t stable = 0;
    std::size_t dh_bruteforce = 0;
    std::size_t no_forbidden = 0;
    std::size_t pruned = 0;
    std::size_t disagreements = 0;
};

std::uint64_t canonical_key(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if ((mask >> b) & 1U) {
            adj[static_cast<std::size_t>(pairs[b].first)][static_cast<std::size_t>(pairs[b].second)] = 1;
            adj[static_cast<std::size_t>(pairs[b].second)][static_cast<std::size_t>(pairs[b].first)] = 1;
        }
    }
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t key = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[b].first)])]
                   [static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[b].second)])])
                key |= 1ULL << b;
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CensusRow census_row(int n, bool canonical, std::uint64_t guard) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    std::vector<Graph> graphs;
    std::set<std::uint64_t> seen;
    const std::uint64_t total = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1U) edges.emplace_back(pairs[b].first, pairs[b].second);
        if (edges.size() + 1 < static_cast<std::size_t>(n)) continue;
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        if (canonical && !seen.insert(canonical_key(n, pairs, mask)).second) continue;
        graphs.push_back(std::move(g));
    }

    struct Outcome {
        bool stable, dh, no_forbidden, pruned;
    };
    std::vector<Outcome> outcomes(graphs.size());
    const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < graphs.size(); i += workers) {
                const Graph& g = graphs[i];
                outcomes[i] = {decide_stability(g, guard).stable, is_distance_hereditary_bruteforce(g),
                               !find_forbidden_induced_subgraph(g).has_value(), pruning_sequence(g).has_value()};
            }
        }));
    }
    for (auto& t : tasks) t.get();

    CensusRow row;
    row.n = n;
    row.graphs = graphs.size();
    for (const auto& o : outcomes) {
        row.stable += o.stable;
        row.dh_bruteforce += o.dh;
        row.no_forbidden += o.no_forbidden;
        row.pruned += o.pruned;
        if (!(o.stable == o.dh && o.dh == o.no_forbidden && o.no_forbidden == o.pruned)) ++row.disagreements;
    }
    return row;
}

int cmd_census(Context& ctx, int max_n, bool canonical) {
    if (max_n < 2 || max_n > 7) throw InputError("census supports 2 <= n <= 7");
    std::vector<CensusRow> rows;
    for (int n = 2; n <= max_n; ++n) rows.push_back(census_row(n, canonical, ctx.guard));
    std::size_t disagreements = 0;
    for (const auto& r : rows) disagreements += r.disagreements;

    if (ctx.format == OutputFormat::Json) {
        Json table = Json::array();
        for (const auto& r : rows)
            table.push_back({{"n", r.n},
                             {"graphs", r.graphs},
                             {"stable", r.stable},
                             {"dh_bruteforce", r.dh_bruteforce},
                             {"no_forbidden", r.no_forbidden},
                             {"pruned", r.pruned},
                             {"disagreements", r.disagreements}});
        ctx.out << Json{{"canonical", canonical}, {"rows", table}, {"disagreements", disagreements}}.dump() << '\n';
    } else {
        ctx.out << "n  graphs  stable  dh_bruteforce  no_forbidden  pruned  disagreements\n";
        for (const auto& r : rows) {
            char line[128];
            std::snprintf(line, sizeof line, "%-2d %7zu %7zu %14zu %13zu %7zu %14zu\n", r.n, r.graphs, r.stable,
                          r.dh_bruteforce, r.no_forbidden, r.pruned, r.disagreements);
            ctx.out << line;
        }
    }
    return disagreements == 0 ? kOk : kAnalysisFailure;
}

}  // namespace

Graph family_from_tokens(const std::vector<std::string>& tokens, std::uint64_t seed) {
    if (tokens.empty()) throw InputError("family name missing");
    std::string name = tokens[0];
    std::vector<std::string> args(tokens.begin() + 1, tokens.end());
    // allow compact forms like K5, C6, K2,3
    if (args.empty() && name.size() > 1 && (name[0] == 'K' || name[0] == 'C') && std::isdigit(static_cast<unsigned char>(name[1]))) {
        std::string rest = name.substr(1);
        name = name.substr(0, 1);
        if (auto comma = rest.find(','); comma != std::string::npos) {
            name = "Kmn";
            args = {rest.substr(0, comma), rest.substr(comma + 1)};
        } else {
            args = {rest};
        }
    }
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw InputError("family '" + name + "' takes " + std::to_string(count) + " argument(s)");
    };
    auto positive = [&](const std::string& s) {
        int v = to_int(s);
        if (v < 1 || v > 62) throw InputError("family size must be in 1..62");
        return v;
    };
    if (name == "K") {
        need(1);
        return families::complete(positive(args[0]));
    }
    if (name == "Kmn") {
        need(2);
        return families::complete_bipartite(positive(args[0]), positive(args[1]));
    }
    if (name == "C") {
        need(1);
        int n = positive(args[0]);
        if (n < 3) throw InputError("cycle needs at least 3 vertices");
        return families::cycle(n);
    }
    if (name == "path") {
        need(1);
        return families::path(positive(args[0]));
    }
    if (name == "star") {
        need(1);
        return families::star(positive(args[0]));
    }
    if (name == "gem") {
        need(0);
        return families::gem();
    }
    if (name == "house") {
        need(0);
        return families::house();
    }
    if (name == "domino") {
        need(0);
        return families::domino();
    }
    if (name == "random") {
        need(2);
        double p = 0;
        try {
            p = std::stod(args[1]);
        } catch (const std::logic_error&) {
            throw InputError("edge probability must be a number");
        }
        if (p < 0 || p > 1) throw InputError("edge probability must lie in [0, 1]");
        return families::random_connected(positive(args[0]), p, seed);
    }
    throw InputError("unknown family '" + name + "' (K, Kmn, C, path, star, gem, house, domino, random)");
}

EdgeWeights parse_weights(std::string_view text) {
    EdgeWeights w;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (tokens.size() != 3) throw ParseError(ParseErrorKind::Malformed, line_no, where + "expected 'u v weight'");
        int u = 0;
        int v = 0;
        Rational weight;
        try {
            u = to_int(tokens[0]);
            v = to_int(tokens[1]);
            weight = parse_rational(tokens[2]);
        } catch (const std::exception& e) {
            throw ParseError(ParseErrorKind::Malformed, line_no, where + e.what());
        }
        if (u < 0 || v < 0) throw ParseError(ParseErrorKind::OutOfRange, line_no, where + "negative vertex");
        if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no, where + "self-loop");
        if (w.all().count(Edge(u, v)))
            throw ParseError(ParseErrorKind::DuplicateEdge, line_no, where + "edge weighted twice");
        w.set(Edge(u, v), weight);
    }
    return w;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& guard_env) {
    CLI::App app{"Spanning-tree degree enumerators and their real stability"};
    app.require_subcommand(1);

    std::string format = "human";
    std::optional<std::uint64_t> max_trees;
    std::uint64_t seed = 1;
    bool canonical = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--max-trees", max_trees, "Spanning tree enumeration guard (default 10^7)");
    app.add_option("--seed", seed, "Seed for randomized families");
    app.add_flag("--canonical", canonical, "census: count isomorphism classes instead of labeled graphs");

    InputOptions poly_in, edge_in, wpoly_in, trees_in, dh_in, stab_in, cert_in, newton_in, weak_in;
    bool factored = false;
    bool list_trees = false;
    bool edge_newton = false;
    bool graph6_out = false;
    std::string weights_path;
    std::string cert_path;
    std::size_t max_parts = 0;
    std::vector<std::string> family_tokens;
    int census_n = 0;

    auto* poly = app.add_subcommand("poly", "Vertex spanning polynomial P_G");
    add_input_options(poly, poly_in);
    poly->add_flag("--factored", factored, "Print the product of linear forms (distance-hereditary graphs)");

    auto* edgepoly = app.add_subcommand("edgepoly", "Edge spanning polynomial Q_G");
    add_input_options(edgepoly, edge_in);

    auto* wpoly = app.add_subcommand("wpoly", "Weighted vertex spanning polynomial");
    add_input_options(wpoly, wpoly_in);
    wpoly->add_option("--weights", weights_path, "File of 'u v weight' lines")->required();

    auto* trees = app.add_subcommand("trees", "Spanning tree count (Kirchhoff) and optional listing");
    add_input_options(trees, trees_in);
    trees->add_flag("--list", list_trees, "List every spanning tree as an edge list");

    auto* dh = app.add_subcommand("dh", "Distance-hereditary recognition");
    add_input_options(dh, dh_in);

    auto* stability = app.add_subcommand("stability", "Real stability verdict with certificate");
    add_input_options(stability, stab_in);

    auto* check_cert = app.add_subcommand("check-cert", "Validate a refutation certificate against a graph");
    add_input_options(check_cert, cert_in);
    check_cert->add_option("--cert", cert_path, "Certificate JSON (bare or inside a verdict)")->required();

    auto* newton = app.add_subcommand("newton", "Newton polytope and saturation report");
    add_input_options(newton, newton_in);
    newton->add_flag("--edge", edge_newton, "Use the edge spanning polynomial");

    auto* weak = app.add_subcommand("weakstable", "Saturation of every variable identification");
    add_input_options(weak, weak_in);
    weak->add_option("--max-parts", max_parts, "Only partitions with at most this many blocks (0 = all)");

    auto* family = app.add_subcommand("family", "Print a named graph as an edge list");
    family->add_option("spec", family_tokens, "K n | Kmn m n | C n | path n | star k | gem | house | domino | random n p")
        ->required();
    family->add_flag("--graph6", graph6_out, "Print graph6 instead of an edge list");

    auto* census = app.add_subcommand("census", "Cross-validate all connected graphs up to n vertices");
    census->add_option("n", census_n, "Largest vertex count")->required();

    std::vector<std::string> argv_store{"treestab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Context ctx{in, out, err};
    ctx.format = format == "json" ? OutputFormat::Json : OutputFormat::Human;
    ctx.seed = seed;
    try {
        if (max_trees) {
            ctx.guard = *max_trees;
        } else if (guard_env && !guard_env->empty()) {
            ctx.guard = std::stoull(*guard_env);
        }
    } catch (const std::logic_error&) {
        err << "error: TREESTAB_GUARD_TREES must be a non-negative integer\n";
        return kInputError;
    }

    try {
        if (*poly) return cmd_poly(ctx, poly_in, factored);
        if (*edgepoly) return cmd_edgepoly(ctx, edge_in);
        if (*wpoly) return cmd_wpoly(ctx, wpoly_in, weights_path);
        if (*trees) return cmd_trees(ctx, trees_in, list_trees);
        if (*dh) return cmd_dh(ctx, dh_in);
        if (*stability) return cmd_stability(ctx, stab_in);
        if (*check_cert) return cmd_check_cert(ctx, cert_in, cert_path);
        if (*newton) return cmd_newton(ctx, newton_in, edge_newton);
        if (*weak) return cmd_weakstable(ctx, weak_in, max_parts);
        if (*family) return cmd_family(ctx, family_tokens, graph6_out);
        if (*census) return cmd_census(ctx, census_n, canonical);
    } catch (const GuardExceeded& e) {
        err << "guard: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const SequenceError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PolyError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kAnalysisFailure;
    }
    return kInputError;
}

}  // namespace treestab::cli
