#include "treestab/spanning.hpp"

#include <algorithm>
#include <numeric>

namespace treestab {

namespace {

// Union-find with rollback; no path compression so unions can be undone.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }

    void undo() {
        int b = history_.back();
        history_.pop_back();
        int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

    int components() const { return static_cast<int>(parent_.size() - history_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

void require_connected(const Graph& g, const char* what) {
    if (g.order() == 0 || !is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

class TreeWalker {
public:
    TreeWalker(const Graph& g, const std::function<void(const SpanningTree&)>& visit)
        : g_(g), visit_(visit), dsu_(g.order()) {}

    void run() {
        if (g_.order() == 1) {
            visit_(SpanningTree(1, {}));
            return;
        }
        descend(0);
    }

private:
    // Can the current partial forest still be completed using edges[from..]?
    bool completable(std::size_t from) const {
        RollbackDsu probe = dsu_;
        const auto& edges = g_.edges();
        for (std::size_t i = from; i < edges.size() && probe.components() > 1; ++i)
            probe.unite(edges[i].u, edges[i].v);
        return probe.components() == 1;
    }

    void descend(std::size_t index) {
        const auto& edges = g_.edges();
        if (dsu_.components() == 1) {
            visit_(SpanningTree(g_.order(), chosen_));
            return;
        }
        if (index == edges.size()) return;

        const Edge& e = edges[index];
        if (dsu_.unite(e.u, e.v)) {
            chosen_.push_back(e);
            descend(index + 1);
            chosen_.pop_back();
            dsu_.undo();
        }
        if (completable(index + 1)) descend(index + 1);
    }

    const Graph& g_;
    const std::function<void(const SpanningTree&)>& visit_;
    RollbackDsu dsu_;
    std::vector<Edge> chosen_;
};

void check_guard(const Graph& g, std::uint64_t guard) {
    BigInt count = matrix_tree_count(g);
    if (count > BigInt(std::to_string(guard)))
        throw GuardExceeded("graph has " + count.get_str() + " spanning trees, above the enumeration guard of " +
                            std::to_string(guard) + "; use the determinant count instead");
}

}  // namespace

SpanningTree::SpanningTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1 || edges_.size() != static_cast<std::size_t>(n - 1)) throw GraphError("spanning tree must have n-1 edges");
    std::sort(edges_.begin(), edges_.end());
    RollbackDsu dsu(n);
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n || e.u == e.v) throw GraphError("spanning tree edge out of range");
        if (!dsu.unite(e.u, e.v)) throw GraphError("spanning tree edges contain a cycle");
    }
}

std::vector<int> SpanningTree::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

EdgeWeights EdgeWeights::uniform(const Graph& g, const Rational& w) {
    EdgeWeights out;
    for (const Edge& e : g.edges()) out.set(e, w);
    return out;
}

void EdgeWeights::validate(const Graph& g) const {
    for (const Edge& e : g.edges()) {
        auto it = weights_.find(e);
        if (it == weights_.end())
            throw GraphError("missing weight for edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        if (sgn(it->second) == 0)
            throw GraphError("zero weight on edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    for (const auto& [e, w] : weights_) {
        if (g.edge_index(e) < 0)
            throw GraphError("weight given for non-edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
}

const Rational& EdgeWeights::at(Edge e) const {
    auto it = weights_.find(e);
    if (it == weights_.end()) throw GraphError("missing weight for edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    return it->second;
}

BigInt matrix_tree_count(const Graph& g) {
    require_connected(g, "matrix-tree count");
    const int m = g.order() - 1;
    if (m == 0) return 1;

    const auto mm = static_cast<std::size_t>(m);
    std::vector<std::vector<BigInt>> a(mm, std::vector<BigInt>(mm, 0));
    for (int i = 0; i < m; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.degree(i);
        for (Vertex w : g.neighbors(i))
            if (w < m) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] = -1;
    }

    // Bareiss: after step k every entry below row k is an exact minor, divided by the previous pivot.
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < mm; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < mm && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == mm) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < mm; ++i) {
            for (std::size_t j = k + 1; j < mm; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[mm - 1][mm - 1];
    return sign > 0 ? det : BigInt(-det);
}

void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                            std::uint64_t guard) {
    require_connected(g, "spanning tree enumeration");
    check_guard(g, guard);
    TreeWalker(g, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t guard) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); }, guard);
    return out;
}

MultiPoly vertex_spanning_polynomial(const Graph& g, std::uint64_t guard) {
    return weighted_vertex_spanning_polynomial(g, EdgeWeights::uniform(g, 1), guard);
}

MultiPoly weighted_vertex_spanning_polynomial(const Graph& g, const EdgeWeights& w, std::uint64_t guard) {
    require_connected(g, "vertex spanning polynomial");
    w.validate(g);
    const auto n = static_cast<std::size_t>(g.order());
    if (n == 1) return MultiPoly::constant(1, 1);

    std::map<Exponent, Rational, GrlexGreater> acc;
    Exponent e(n);
    for_each_spanning_tree(
        g,
        [&](const SpanningTree& t) {
            Rational weight = 1;
            std::fill(e.begin(), e.end(), 0U);
            for (const Edge& edge : t.edges()) {
                weight *= w.at(edge);
                ++e[static_cast<std::size_t>(edge.u)];
                ++e[static_cast<std::size_t>(edge.v)];
            }
            for (auto& x : e) --x;
            acc[e] += weight;
        },
        guard);

    MultiPoly p(n);
    for (const auto& [exp, c] : acc) p.add_term(exp, c);
    return p;
}

MultiPoly edge_spanning_polynomial(const Graph& g, std::uint64_t guard) {
    require_connected(g, "edge spanning polynomial");
    const std::size_t k = g.size();
    MultiPoly p(k);
    Exponent e(k);
    for_each_spanning_tree(
        g,
        [&](const SpanningTree& t) {
            std::fill(e.begin(), e.end(), 0U);
            for (const Edge& edge : t.edges()) e[static_cast<std::size_t>(g.edge_index(edge))] = 1;
            p.add_term(e, 1);
        },
        guard);
    return p;
}

}  // namespace treestab
