#include "treestab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>

namespace treestab {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), edges_(edges) {
    if (n < 0) throw GraphError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n) throw GraphError("edge endpoint out of range");
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

    const auto nn = static_cast<std::size_t>(n);
    adj_.assign(nn, {});
    matrix_.assign(nn * nn, 0);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        matrix_[static_cast<std::size_t>(e.u) * nn + static_cast<std::size_t>(e.v)] = 1;
        matrix_[static_cast<std::size_t>(e.v) * nn + static_cast<std::size_t>(e.u)] = 1;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

Graph parse_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        auto where = "line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], n) || n < 0)
                throw ParseError(ParseErrorKind::Malformed, line_no, where + "expected header 'n <count>'");
            continue;
        }
        long long a = 0;
        long long b = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b))
            throw ParseError(ParseErrorKind::Malformed, line_no, where + "expected 'u v'");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(ParseErrorKind::OutOfRange, line_no,
                             where + "vertex out of range 0.." + std::to_string(n - 1));
        if (a == b) throw ParseError(ParseErrorKind::SelfLoop, line_no, where + "self-loop at vertex " + std::to_string(a));
        Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
        for (const auto& [prev, prev_line] : seen) {
            if (prev == e)
                throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                                 where + "duplicate edge (first seen on line " + std::to_string(prev_line) + ")");
        }
        seen.emplace_back(e, line_no);
        edges.push_back(e);
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError(ParseErrorKind::Malformed, line_no, "missing header 'n <count>'");
    return Graph(static_cast<int>(n), edges);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Graph parse_graph6(std::string_view raw) {
    std::string_view text = trim(raw);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError(ParseErrorKind::Malformed, 0, "graph6: empty input");
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(ParseErrorKind::Malformed, i, "graph6: byte " + std::to_string(i) + " outside 63..126");
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63) throw ParseError(ParseErrorKind::Malformed, 0, "graph6: only graphs with n <= 62 are supported");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw ParseError(ParseErrorKind::Malformed, std::min(text.size(), 1 + bytes),
                         "graph6: expected " + std::to_string(1 + bytes) + " bytes, got " + std::to_string(text.size()));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw ParseError(ParseErrorKind::Malformed, 1 + k / 6, "graph6: nonzero padding bit");
    }
    return Graph(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

Graph parse_graph_auto(std::string_view text) {
    std::string_view t = trim(text);
    bool graph6 = !t.empty() && t.find_first_of(" \t\n") == std::string_view::npos;
    if (graph6) {
        graph6 = std::all_of(t.begin(), t.end(), [](char c) {
            auto u = static_cast<unsigned char>(c);
            return u >= 63 && u <= 126;
        });
    }
    return parse_graph(text, graph6 ? GraphFormat::Graph6 : GraphFormat::EdgeList);
}

std::string render_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string render_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw GraphError("graph6 output supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
    if (u.empty()) throw GraphError("induced subgraph of an empty vertex set");
    if (u.members().front() < 0 || u.members().back() >= g.order()) throw GraphError("induced subgraph vertex out of range");
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < u.size(); ++i) local[static_cast<std::size_t>(u[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = local[static_cast<std::size_t>(e.u)];
        int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return {Graph(static_cast<int>(u.size()), edges), u.members()};
}

InducedSubgraph remove_vertex(const Graph& g, Vertex v) {
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v) rest.push_back(w);
    return induced_subgraph(g, VertexSet(rest));
}

std::vector<VertexSet> components(const Graph& g) {
    if (g.order() == 0) throw GraphError("components of the empty graph");
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> members{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (Vertex w : g.neighbors(members[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    members.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw GraphError("cut vertices requested for a disconnected graph");
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        auto vi = static_cast<std::size_t>(v);
        disc[vi] = low[vi] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (w == parent) continue;
            if (disc[wi] >= 0) {
                low[vi] = std::min(low[vi], disc[wi]);
                continue;
            }
            ++children;
            dfs(w, v);
            low[vi] = std::min(low[vi], low[wi]);
            if (parent >= 0 && low[wi] >= disc[vi]) is_cut[vi] = 1;
        }
        if (parent < 0 && children > 1) is_cut[vi] = 1;
    };
    dfs(0, -1);

    std::vector<Vertex> out;
    for (std::size_t v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.order()) throw GraphError("BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    if (std::find(dist.begin(), dist.end(), -1) != dist.end())
        throw GraphError("BFS distances undefined on a disconnected graph");
    return dist;
}

}  // namespace treestab
