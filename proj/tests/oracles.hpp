#pragma once

// Test-only reference computations. Each one takes a deliberately different route
// from the library code it is compared against.

#include "treestab/dh.hpp"
#include "treestab/graph.hpp"
#include "treestab/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace treestab::oracle {

/// num/den in lowest terms; mpq_class does not reduce on construction.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// P_G by checking every (n-1)-subset of edges for acyclicity with a plain DFS.
inline MultiPoly vertex_polynomial_by_subsets(const Graph& g) {
    const int n = g.order();
    const auto m = g.edges().size();
    MultiPoly p(static_cast<std::size_t>(n));
    if (n == 1) return MultiPoly::constant(1, 1);
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - (n - 1), pick.end(), 1);
    do {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < m; ++i) {
            if (!pick[i]) continue;
            adj[static_cast<std::size_t>(g.edges()[i].u)].push_back(g.edges()[i].v);
            adj[static_cast<std::size_t>(g.edges()[i].v)].push_back(g.edges()[i].u);
        }
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n) continue;  // n-1 edges reaching everything form a tree
        Exponent e(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(v)] = static_cast<unsigned>(adj[static_cast<std::size_t>(v)].size() - 1);
        p.add_term(e, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return p;
}

/// Vertices whose removal increases the number of components.
inline std::vector<Vertex> cut_vertices_by_removal(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.order() == 1) break;
        if (components(remove_vertex(g, v).graph).size() > 1) out.push_back(v);
    }
    return out;
}

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Solves the square system A x = b exactly; returns false if singular.
inline bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

/// Hull membership through Caratheodory: q lies in conv(points) iff it is a convex
/// combination of some affinely independent subset. Each candidate subset is
/// checked by solving the (least-squares-free) square system on a row subset.
inline bool in_hull_caratheodory(const std::vector<Exponent>& points, const Exponent& q) {
    if (std::find(points.begin(), points.end(), q) != points.end()) return true;
    const std::size_t dim = q.size();
    const std::size_t m = points.size();
    for (std::size_t size = 2; size <= std::min(m, dim + 1); ++size) {
        std::vector<int> pick(m, 0);
        std::fill(pick.end() - static_cast<long>(size), pick.end(), 1);
        do {
            std::vector<const Exponent*> chosen;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i]) chosen.push_back(&points[i]);
            // rows: all coordinates plus the affine row; pick `size` independent rows
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            for (std::size_t r = 0; r <= dim; ++r) {
                std::vector<Rational> row(size);
                for (std::size_t j = 0; j < size; ++j) row[j] = r < dim ? Rational((*chosen[j])[r]) : Rational(1);
                rows.push_back(row);
                rhs.push_back(r < dim ? Rational(q[r]) : Rational(1));
            }
            std::vector<int> rpick(dim + 1, 0);
            std::fill(rpick.end() - static_cast<long>(size), rpick.end(), 1);
            do {
                std::vector<std::vector<Rational>> a;
                std::vector<Rational> b;
                for (std::size_t r = 0; r <= dim; ++r)
                    if (rpick[r]) {
                        a.push_back(rows[r]);
                        b.push_back(rhs[r]);
                    }
                std::vector<Rational> x;
                if (!solve_exact(a, b, x)) continue;
                bool ok = std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) >= 0; });
                for (std::size_t r = 0; r <= dim && ok; ++r) {
                    Rational s = 0;
                    for (std::size_t j = 0; j < size; ++j) s += rows[r][j] * x[j];
                    ok = s == rhs[r];
                }
                if (ok) return true;
                break;  // independent rows determine x uniquely; other row subsets give the same x
            } while (std::next_permutation(rpick.begin(), rpick.end()));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return false;
}

/// Integer points of the bounding box of the support that lie in the hull but carry no coefficient.
inline std::vector<Exponent> missing_points_bruteforce(const MultiPoly& p) {
    std::vector<Exponent> support;
    for (const auto& [e, c] : p.terms()) support.push_back(e);
    const std::size_t dim = p.nvars();
    Exponent lo = support[0];
    Exponent hi = support[0];
    for (const auto& s : support)
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] = std::min(lo[i], s[i]);
            hi[i] = std::max(hi[i], s[i]);
        }
    std::vector<Exponent> out;
    Exponent q = lo;
    while (true) {
        if (sgn(p.coefficient(q)) == 0 && in_hull_caratheodory(support, q)) out.push_back(q);
        std::size_t i = 0;
        while (i < dim && q[i] == hi[i]) {
            q[i] = lo[i];
            ++i;
        }
        if (i == dim) break;
        ++q[i];
    }
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, unsigned max_exp) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    MultiPoly p(nvars);
    for (int t = terms(rng); t > 0; --t) {
        Exponent e(nvars);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, frac(num(rng), den(rng)));
    }
    return p;
}

/// Every labeled simple graph on n vertices (n <= 7), filtered by connectivity.
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint64_t total = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1U) edges.push_back(pairs[b]);
        Graph g(n, edges);
        if (is_connected(g)) visit(g);
    }
}

/// Random build script on n >= 2 vertices with ids shuffled, so every id in 0..n-1 appears once.
inline ConstructionSequence random_construction_sequence(std::mt19937_64& rng, int n) {
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    auto id = [&](int i) { return label[static_cast<std::size_t>(i)]; };
    ConstructionSequence seq;
    seq.steps.emplace_back(StartStep{id(0), id(1)});
    for (int i = 2; i < n; ++i) {
        const Vertex other = id(static_cast<int>(rng() % static_cast<std::uint64_t>(i)));
        switch (rng() % 3) {
            case 0: seq.steps.emplace_back(AddPendant{id(i), other}); break;
            case 1: seq.steps.emplace_back(AddFalseTwin{id(i), other}); break;
            default: seq.steps.emplace_back(AddTrueTwin{id(i), other}); break;
        }
    }
    return seq;
}

/// Copy of g with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(g.order(), edges);
}

}  // namespace treestab::oracle
