#include "treestab/dh.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace treestab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class PruningState {
public:
    explicit PruningState(const Graph& g)
        : n_(g.order()), alive_(static_cast<std::size_t>(n_), 1), adj_(static_cast<std::size_t>(n_ * n_), 0) {
        for (const Edge& e : g.edges()) {
            at(e.u, e.v) = 1;
            at(e.v, e.u) = 1;
        }
        remaining_ = n_;
    }

    int remaining() const { return remaining_; }
    bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
    bool adjacent(Vertex a, Vertex b) const { return adj_[index(a, b)] != 0; }

    int degree(Vertex v) const {
        int d = 0;
        for (Vertex w = 0; w < n_; ++w) d += (alive(w) && adjacent(v, w)) ? 1 : 0;
        return d;
    }

    Vertex first_neighbor(Vertex v) const {
        for (Vertex w = 0; w < n_; ++w)
            if (alive(w) && adjacent(v, w)) return w;
        return -1;
    }

    // Same neighbors among the alive vertices other than a and b.
    bool same_neighbors(Vertex a, Vertex b) const {
        for (Vertex w = 0; w < n_; ++w) {
            if (w == a || w == b || !alive(w)) continue;
            if (adjacent(a, w) != adjacent(b, w)) return false;
        }
        return true;
    }

    void remove(Vertex v) {
        alive_[static_cast<std::size_t>(v)] = 0;
        --remaining_;
    }

    int order() const { return n_; }

private:
    std::size_t index(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }
    char& at(Vertex a, Vertex b) { return adj_[index(a, b)]; }

    int n_;
    int remaining_ = 0;
    std::vector<char> alive_;
    std::vector<char> adj_;
};

std::optional<ConstructionStep> next_removal(const PruningState& s) {
    const int n = s.order();
    for (Vertex v = 0; v < n; ++v)
        if (s.alive(v) && s.degree(v) == 1) return AddPendant{v, s.first_neighbor(v)};
    for (Vertex v = 0; v < n; ++v) {
        if (!s.alive(v)) continue;
        for (Vertex w = 0; w < n; ++w)
            if (w != v && s.alive(w) && !s.adjacent(v, w) && s.same_neighbors(v, w)) return AddFalseTwin{v, w};
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!s.alive(v)) continue;
        for (Vertex w = 0; w < n; ++w)
            if (w != v && s.alive(w) && s.adjacent(v, w) && s.same_neighbors(v, w)) return AddTrueTwin{v, w};
    }
    return std::nullopt;
}

Vertex removed_vertex(const ConstructionStep& step) {
    return std::visit(Overloaded{[](const StartStep& s) { return s.u; }, [](const AddPendant& s) { return s.added; },
                                 [](const AddFalseTwin& s) { return s.added; },
                                 [](const AddTrueTwin& s) { return s.added; }},
                      step);
}

// Next k-subset of 0..n-1 in lexicographic order.
bool next_combination(std::vector<Vertex>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<Vertex> first_combination(int k) {
    std::vector<Vertex> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

std::optional<std::vector<Vertex>> induced_cycle_order(const Graph& g, const std::vector<Vertex>& subset) {
    std::map<Vertex, std::vector<Vertex>> nbrs;
    for (Vertex a : subset) {
        auto& list = nbrs[a];
        for (Vertex b : subset)
            if (a != b && g.has_edge(a, b)) list.push_back(b);
        if (list.size() != 2) return std::nullopt;
    }
    std::vector<Vertex> order{subset.front()};
    Vertex prev = subset.front();
    Vertex cur = nbrs[prev][0];
    while (cur != subset.front()) {
        order.push_back(cur);
        const auto& list = nbrs[cur];
        Vertex next = list[0] == prev ? list[1] : list[0];
        prev = cur;
        cur = next;
    }
    if (order.size() != subset.size()) return std::nullopt;  // union of shorter cycles
    return order;
}

std::vector<int> sorted_degrees_within(const Graph& g, const std::vector<Vertex>& subset, int& edge_count) {
    std::vector<int> deg;
    edge_count = 0;
    for (Vertex a : subset) {
        int d = 0;
        for (Vertex b : subset)
            if (a != b && g.has_edge(a, b)) ++d;
        deg.push_back(d);
        edge_count += d;
    }
    edge_count /= 2;
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::optional<std::vector<Vertex>> match_pattern(const Graph& g, const Graph& pattern, std::vector<Vertex> perm) {
    const int k = pattern.order();
    do {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                ok = g.has_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) == pattern.has_edge(a, b);
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<ForbiddenWitness> find_pattern(const Graph& g, ForbiddenKind kind) {
    const Graph pattern = pattern_graph(kind, 0);
    const int k = pattern.order();
    if (g.order() < k) return std::nullopt;
    int want_edges = 0;
    std::vector<Vertex> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    const std::vector<int> want_degrees = sorted_degrees_within(pattern, all, want_edges);

    std::vector<Vertex> subset = first_combination(k);
    do {
        int edges = 0;
        if (sorted_degrees_within(g, subset, edges) != want_degrees || edges != want_edges) continue;
        if (auto perm = match_pattern(g, pattern, subset)) return ForbiddenWitness{kind, *perm};
    } while (next_combination(subset, g.order()));
    return std::nullopt;
}

}  // namespace

Graph replay(const ConstructionSequence& seq) {
    if (seq.steps.empty() || !std::holds_alternative<StartStep>(seq.steps.front()))
        throw SequenceError("construction sequence must begin with a start step");

    std::map<Vertex, std::set<Vertex>> adj;
    auto require_existing = [&](Vertex v) {
        if (!adj.count(v)) throw SequenceError("step references nonexistent vertex " + std::to_string(v));
    };
    auto add_vertex = [&](Vertex v) {
        if (v < 0) throw SequenceError("negative vertex id");
        if (!adj.emplace(v, std::set<Vertex>{}).second) throw SequenceError("vertex " + std::to_string(v) + " added twice");
    };
    auto join = [&](Vertex a, Vertex b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };

    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& step = seq.steps[i];
        if (i > 0 && std::holds_alternative<StartStep>(step)) throw SequenceError("start step after the first position");
        std::visit(Overloaded{[&](const StartStep& s) {
                                  if (s.u == s.v) throw SequenceError("start step needs two distinct vertices");
                                  add_vertex(s.u);
                                  add_vertex(s.v);
                                  join(s.u, s.v);
                              },
                              [&](const AddPendant& s) {
                                  require_existing(s.anchor);
                                  add_vertex(s.added);
                                  join(s.added, s.anchor);
                              },
                              [&](const AddFalseTwin& s) {
                                  require_existing(s.of);
                                  std::set<Vertex> nbrs = adj[s.of];
                                  add_vertex(s.added);
                                  for (Vertex w : nbrs) join(s.added, w);
                              },
                              [&](const AddTrueTwin& s) {
                                  require_existing(s.of);
                                  std::set<Vertex> nbrs = adj[s.of];
                                  add_vertex(s.added);
                                  for (Vertex w : nbrs) join(s.added, w);
                                  join(s.added, s.of);
                              }},
                   step);
    }

    const int n = static_cast<int>(adj.size());
    if (adj.rbegin()->first != n - 1) throw SequenceError("vertex ids must be exactly 0..n-1");
    std::vector<Edge> edges;
    for (const auto& [a, nbrs] : adj)
        for (Vertex b : nbrs)
            if (a < b) edges.emplace_back(a, b);
    return Graph(n, edges);
}

std::optional<ConstructionSequence> pruning_sequence(const Graph& g) {
    if (g.order() < 2) throw GraphError("pruning sequence needs at least 2 vertices");
    if (!is_connected(g)) throw GraphError("pruning sequence needs a connected graph");

    PruningState state(g);
    std::vector<ConstructionStep> removals;
    while (state.remaining() > 2) {
        auto step = next_removal(state);
        if (!step) return std::nullopt;
        state.remove(removed_vertex(*step));
        removals.push_back(*step);
    }
    StartStep start;
    std::vector<Vertex> last;
    for (Vertex v = 0; v < g.order(); ++v)
        if (state.alive(v)) last.push_back(v);
    start.u = last[0];
    start.v = last[1];

    ConstructionSequence seq;
    seq.steps.emplace_back(start);
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) seq.steps.push_back(*it);
    return seq;
}

std::string to_string(ForbiddenKind kind) {
    switch (kind) {
        case ForbiddenKind::LongCycle: return "long_cycle";
        case ForbiddenKind::Gem: return "gem";
        case ForbiddenKind::House: return "house";
        case ForbiddenKind::Domino: return "domino";
    }
    return "unknown";
}

ForbiddenKind forbidden_kind_from_string(const std::string& s) {
    if (s == "long_cycle") return ForbiddenKind::LongCycle;
    if (s == "gem") return ForbiddenKind::Gem;
    if (s == "house") return ForbiddenKind::House;
    if (s == "domino") return ForbiddenKind::Domino;
    throw std::invalid_argument("unknown forbidden kind '" + s + "'");
}

Graph pattern_graph(ForbiddenKind kind, int size) {
    switch (kind) {
        case ForbiddenKind::LongCycle: {
            if (size < 5) throw GraphError("long cycle pattern needs at least 5 vertices");
            std::vector<Edge> edges;
            for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
            return Graph(size, edges);
        }
        case ForbiddenKind::Gem: return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
        case ForbiddenKind::House: return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
        case ForbiddenKind::Domino: return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    }
    throw GraphError("unknown pattern");
}

bool validate_witness(const Graph& g, const ForbiddenWitness& w) {
    const int k = static_cast<int>(w.vertices.size());
    if (w.kind == ForbiddenKind::LongCycle && k < 5) return false;
    Graph pattern = pattern_graph(w.kind, k);
    if (pattern.order() != k) return false;
    std::set<Vertex> distinct(w.vertices.begin(), w.vertices.end());
    if (static_cast<int>(distinct.size()) != k) return false;
    for (Vertex v : w.vertices)
        if (v < 0 || v >= g.order()) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(w.vertices[static_cast<std::size_t>(a)], w.vertices[static_cast<std::size_t>(b)]) !=
                pattern.has_edge(a, b))
                return false;
    return true;
}

std::optional<ForbiddenWitness> find_forbidden_induced_subgraph(const Graph& g) {
    const int n = g.order();
    for (int len = 5; len <= n; ++len) {
        std::vector<Vertex> subset = first_combination(len);
        do {
            if (auto order = induced_cycle_order(g, subset)) return ForbiddenWitness{ForbiddenKind::LongCycle, *order};
        } while (next_combination(subset, n));
    }
    for (ForbiddenKind kind : {ForbiddenKind::Gem, ForbiddenKind::House, ForbiddenKind::Domino})
        if (auto w = find_pattern(g, kind)) return w;
    return std::nullopt;
}

bool is_distance_hereditary_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > kBruteForceDhLimit)
        throw GraphError("brute-force distance-hereditary check is limited to " + std::to_string(kBruteForceDhLimit) +
                         " vertices");
    if (n == 0 || !is_connected(g)) throw GraphError("distance-hereditary check needs a connected graph");

    std::vector<std::vector<int>> dist;
    for (Vertex s = 0; s < n; ++s) dist.push_back(bfs_distances(g, s));
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= 1U << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= 1U << e.u;
    }

    const std::uint32_t full = (1U << n) - 1;
    std::vector<int> local(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 3) continue;  // one or two vertices cannot stretch a distance
        const int s0 = std::countr_zero(mask);
        // BFS from every member, restricted to the mask
        for (std::uint32_t sources = mask; sources; sources &= sources - 1) {
            const int s = std::countr_zero(sources);
            std::fill(local.begin(), local.end(), -1);
            local[static_cast<std::size_t>(s)] = 0;
            std::uint32_t frontier = 1U << s;
            std::uint32_t seen = frontier;
            int depth = 0;
            while (frontier) {
                ++depth;
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
                next &= mask & ~seen;
                for (std::uint32_t f = next; f; f &= f - 1) local[static_cast<std::size_t>(std::countr_zero(f))] = depth;
                seen |= next;
                frontier = next;
            }
            if (seen != mask) {
                if (s == s0) break;  // disconnected induced subgraph
                continue;
            }
            for (std::uint32_t t = mask; t; t &= t - 1) {
                const int v = std::countr_zero(t);
                if (local[static_cast<std::size_t>(v)] != dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)])
                    return false;
            }
        }
    }
    return true;
}

}  // namespace treestab
