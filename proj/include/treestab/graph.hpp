#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treestab {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, deduplicated subset of 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex a, Vertex b) const {
        return matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
    }
    /// Position of the edge in the canonical edge order, or -1.
    int edge_index(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> matrix_;
};

enum class GraphFormat { EdgeList, Graph6 };

enum class ParseErrorKind { Malformed, OutOfRange, DuplicateEdge, SelfLoop };

class ParseError : public std::runtime_error {
public:
    /// `location` is a 1-based line number for edge lists and a 0-based byte offset for graph6.
    ParseError(ParseErrorKind kind, std::size_t location, const std::string& what)
        : std::runtime_error(what), kind_(kind), location_(location) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t location() const { return location_; }

private:
    ParseErrorKind kind_;
    std::size_t location_;
};

Graph parse_graph(std::string_view text, GraphFormat format);

/// Chooses graph6 when the trimmed text is a single line of printable graph6 bytes without spaces.
Graph parse_graph_auto(std::string_view text);

std::string render_edge_list(const Graph& g);
std::string render_graph6(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the parent graph relabeled to i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
VertexSet cut_vertices(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Graph with vertex v removed; remaining vertices keep their relative order.
InducedSubgraph remove_vertex(const Graph& g, Vertex v);

}  // namespace treestab
