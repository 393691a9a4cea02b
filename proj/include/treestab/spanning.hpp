#pragma once

#include "treestab/graph.hpp"
#include "treestab/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace treestab {

/// Enumeration is refused above this many trees unless the caller raises the guard.
inline constexpr std::uint64_t kDefaultTreeGuard = 10'000'000;

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n-1 edges forming a spanning tree; validated on construction.
class SpanningTree {
public:
    SpanningTree(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> degrees() const;

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Nonzero rational weight on every edge of a graph.
class EdgeWeights {
public:
    EdgeWeights() = default;
    explicit EdgeWeights(std::map<Edge, Rational> weights) : weights_(std::move(weights)) {}

    static EdgeWeights uniform(const Graph& g, const Rational& w);

    void set(Edge e, const Rational& w) { weights_[e] = w; }
    /// Throws GraphError if an edge of g is missing or has weight zero.
    void validate(const Graph& g) const;
    const Rational& at(Edge e) const;
    const std::map<Edge, Rational>& all() const { return weights_; }

private:
    std::map<Edge, Rational> weights_;
};

/// Kirchhoff count: determinant of the Laplacian with the last row and column removed,
/// by fraction-free (Bareiss) elimination. Throws GraphError on disconnected input.
BigInt matrix_tree_count(const Graph& g);

/// Streams every spanning tree exactly once, in lexicographic order of the sorted edge lists.
/// Throws GuardExceeded if the tree count is larger than `guard`.
void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                            std::uint64_t guard = kDefaultTreeGuard);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t guard = kDefaultTreeGuard);

/// sum over trees of prod_v x_v^(deg_T(v)-1). Returns the constant 1 when n <= 2.
MultiPoly vertex_spanning_polynomial(const Graph& g, std::uint64_t guard = kDefaultTreeGuard);

/// sum over trees of the product of edge variables; variable i is the i-th canonical edge.
MultiPoly edge_spanning_polynomial(const Graph& g, std::uint64_t guard = kDefaultTreeGuard);

MultiPoly weighted_vertex_spanning_polynomial(const Graph& g, const EdgeWeights& w,
                                              std::uint64_t guard = kDefaultTreeGuard);

}  // namespace treestab
