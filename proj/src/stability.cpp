#include "treestab/stability.hpp"

#include "treestab/newton.hpp"
#include "treestab/sturm.hpp"

#include <algorithm>
#include <set>

namespace treestab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const GaussianRational kI{Rational(0), Rational(1)};

}  // namespace

MultiPoly expand(const FactoredForm& f) {
    MultiPoly out = MultiPoly::constant(f.nvars, 1);
    for (const VertexSet& factor : f.factors) {
        std::vector<std::size_t> vars(factor.begin(), factor.end());
        out = out * MultiPoly::sum_of(f.nvars, vars);
    }
    return out;
}

FactoredForm factored_polynomial(const ConstructionSequence& seq) {
    const Graph target = replay(seq);
    const auto n = static_cast<std::size_t>(target.order());
    std::vector<std::set<Vertex>> adj(n);
    std::vector<std::set<Vertex>> factors;
    auto join = [&](Vertex a, Vertex b) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    };
    auto double_vertex = [&](Vertex added, Vertex of) {
        for (auto& f : factors)
            if (f.count(of)) f.insert(added);
        std::set<Vertex> nbrs = adj[static_cast<std::size_t>(of)];
        for (Vertex w : nbrs) join(added, w);
        return nbrs;
    };

    for (const auto& step : seq.steps) {
        std::visit(Overloaded{[&](const StartStep& s) { join(s.u, s.v); },
                              [&](const AddPendant& s) {
                                  factors.push_back({s.anchor});
                                  join(s.added, s.anchor);
                              },
                              [&](const AddFalseTwin& s) { factors.push_back(double_vertex(s.added, s.of)); },
                              [&](const AddTrueTwin& s) {
                                  std::set<Vertex> f = double_vertex(s.added, s.of);
                                  f.insert(s.of);
                                  f.insert(s.added);
                                  join(s.added, s.of);
                                  factors.push_back(std::move(f));
                              }},
                   step);
    }

    FactoredForm out;
    out.nvars = n;
    for (const auto& f : factors) out.factors.emplace_back(std::vector<Vertex>(f.begin(), f.end()));
    return out;
}

MultiPoly apply_op(const MultiPoly& p, const RefutationOp& op) {
    auto check_var = [&](std::size_t var) {
        if (var >= p.nvars())
            throw MalformedCertificate("variable " + std::to_string(var) + " out of range for " +
                                       std::to_string(p.nvars()) + " variables");
    };
    return std::visit(Overloaded{[&](const SubstituteReal& s) {
                                     check_var(s.var);
                                     return substitute_real(p, s.var, s.value);
                                 },
                                 [&](const IdentifyVariables& s) {
                                     if (s.map.size() != p.nvars() || s.k == 0 ||
                                         std::any_of(s.map.begin(), s.map.end(), [&](std::size_t t) { return t >= s.k; }))
                                         throw MalformedCertificate("identification map does not fit the polynomial");
                                     return identify_variables(p, s.map, s.k);
                                 },
                                 [&](const ReverseVariable& s) {
                                     check_var(s.var);
                                     return reverse_variable(p, s.var);
                                 },
                                 [&](const PartialDerivative& s) {
                                     check_var(s.var);
                                     return partial_derivative(p, s.var);
                                 }},
                      op);
}

RefutationCertificate build_refutation(const ForbiddenWitness& witness) {
    const std::size_t k = witness.vertices.size();
    RefutationCertificate cert;
    cert.subgraph = VertexSet(witness.vertices);
    if (cert.subgraph.size() != k) throw MalformedCertificate("witness repeats a vertex");

    // local[label] = variable index of that pattern label inside G[subgraph]
    std::vector<std::size_t> local(k);
    for (std::size_t label = 0; label < k; ++label) {
        auto it = std::lower_bound(cert.subgraph.begin(), cert.subgraph.end(), witness.vertices[label]);
        local[label] = static_cast<std::size_t>(it - cert.subgraph.begin());
    }
    auto sub = [&](std::size_t label, long value) { cert.ops.emplace_back(SubstituteReal{local[label], Rational(value)}); };
    auto collapse_all = [&] { cert.ops.emplace_back(IdentifyVariables{std::vector<std::size_t>(k, 0), 1}); };

    switch (witness.kind) {
        case ForbiddenKind::LongCycle: {
            if (k < 5) throw MalformedCertificate("long cycle witness needs at least 5 vertices");
            std::vector<GaussianRational> point(k, kI);
            if (k == 5) {
                // P(1, x2, -1, x4, x5) = x2 (x5 - x4 - 1), zero at x4 = i, x5 = 1 + i
                sub(0, 1);
                sub(2, -1);
                point[local[4]] = GaussianRational(1, 1);
            } else {
                // reversing every variable turns P into +-sum x_j x_{j+1}; then x1 x2 + 1 remains
                for (std::size_t v = 0; v < k; ++v) cert.ops.emplace_back(ReverseVariable{v});
                for (std::size_t label = 0; label < k; ++label)
                    if (label != 0 && label != 1 && label != 3 && label != 4) sub(label, 0);
                sub(3, 1);
                sub(4, 1);
            }
            cert.terminal = ExactZero{point};
            break;
        }
        case ForbiddenKind::House:
            // P(1, x, 1, x, 1) = x (2x^2 + 5x + 4)
            sub(0, 1);
            sub(2, 1);
            sub(4, 1);
            collapse_all();
            cert.terminal = NonRealRootedUnivariate{};
            break;
        case ForbiddenKind::Gem:
            // P(x, -1, 1, 1, -1) = x (x^2 + 2x + 2)
            sub(1, -1);
            sub(2, 1);
            sub(3, 1);
            sub(4, -1);
            collapse_all();
            cert.terminal = NonRealRootedUnivariate{};
            break;
        case ForbiddenKind::Domino:
            // P(x, 1, 1, x, 1, 1) = x (x + 2) (x^2 + 2x + 2)
            sub(1, 1);
            sub(2, 1);
            sub(4, 1);
            sub(5, 1);
            collapse_all();
            cert.terminal = NonRealRootedUnivariate{};
            break;
    }
    return cert;
}

RefutationReplay replay_refutation(const Graph& g, const RefutationCertificate& cert) {
    if (cert.subgraph.empty()) throw MalformedCertificate("certificate subgraph is empty");
    if (cert.subgraph.members().front() < 0 || cert.subgraph.members().back() >= g.order())
        throw MalformedCertificate("certificate subgraph has a vertex outside the graph");
    const InducedSubgraph sub = induced_subgraph(g, cert.subgraph);
    if (!is_connected(sub.graph)) throw MalformedCertificate("certificate subgraph is not connected");

    RefutationReplay out;
    out.polynomials.push_back(vertex_spanning_polynomial(sub.graph));
    for (std::size_t i = 0; i < cert.ops.size(); ++i) {
        out.polynomials.push_back(apply_op(out.polynomials.back(), cert.ops[i]));
        if (out.polynomials.back().is_zero()) {
            out.failure = "operation " + std::to_string(i) + " produced the zero polynomial";
            return out;
        }
    }

    const MultiPoly& reduced = out.polynomials.back();
    std::visit(Overloaded{[&](const ExactZero& z) {
                              if (z.point.size() != reduced.nvars())
                                  throw MalformedCertificate("zero point has " + std::to_string(z.point.size()) +
                                                             " coordinates, polynomial has " +
                                                             std::to_string(reduced.nvars()) + " variables");
                              if (!std::all_of(z.point.begin(), z.point.end(),
                                               [](const GaussianRational& c) { return c.in_upper_half_plane(); })) {
                                  out.failure = "zero point leaves the open upper half-plane";
                                  return;
                              }
                              if (!eval_gaussian(reduced, z.point).is_zero())
                                  out.failure = "reduced polynomial does not vanish at the zero point";
                          },
                          [&](const NonRealRootedUnivariate&) {
                              if (reduced.nvars() != 1) {
                                  out.failure = "reduced polynomial is not univariate";
                                  return;
                              }
                              if (sturm_real_rooted(reduced) == RootReality::RealRooted)
                                  out.failure = "reduced polynomial is real-rooted";
                          }},
               cert.terminal);
    out.valid = out.failure.empty();
    return out;
}

bool check_refutation(const Graph& g, const RefutationCertificate& cert) { return replay_refutation(g, cert).valid; }

StabilityVerdict decide_stability(const Graph& g, std::uint64_t guard) {
    if (g.order() < 2) throw GraphError("stability verdict needs at least 2 vertices");
    if (!is_connected(g)) throw GraphError("stability verdict needs a connected graph");

    StabilityVerdict verdict;
    if (auto seq = pruning_sequence(g)) {
        if (replay(*seq) != g) throw std::logic_error("construction sequence does not replay to the input graph");
        FactoredForm factored = factored_polynomial(*seq);
        if (factored.factors.size() != static_cast<std::size_t>(g.order() - 2))
            throw std::logic_error("factorization has the wrong number of factors");
        if (matrix_tree_count(g) <= BigInt(std::to_string(guard)) && expand(factored) != vertex_spanning_polynomial(g, guard))
            throw std::logic_error("factorization does not expand to the spanning polynomial");
        verdict.stable = true;
        verdict.sequence = std::move(seq);
        verdict.factored = std::move(factored);
        return verdict;
    }

    auto witness = find_forbidden_induced_subgraph(g);
    if (!witness) throw std::logic_error("no pruning sequence and no forbidden induced subgraph");
    RefutationCertificate cert = build_refutation(*witness);
    if (!check_refutation(g, cert)) throw std::logic_error("refutation certificate failed to validate");
    verdict.stable = false;
    verdict.witness = std::move(witness);
    verdict.refutation = std::move(cert);
    return verdict;
}

WeakStabilityResult weak_stability_check(const Graph& g, std::size_t max_parts, std::uint64_t guard) {
    const int n = g.order();
    if (n > kWeakStabilityLimit)
        throw GuardExceeded("weak stability check enumerates set partitions and is limited to " +
                            std::to_string(kWeakStabilityLimit) + " vertices");
    const MultiPoly p = vertex_spanning_polynomial(g, guard);
    const auto nn = static_cast<std::size_t>(n);

    WeakStabilityResult result;
    // restricted growth string: f[0] = 0, f[i] <= 1 + max(f[0..i-1])
    std::vector<std::size_t> f(nn, 0);
    std::vector<std::size_t> prefix_max(nn, 0);
    while (true) {
        const std::size_t parts = prefix_max[nn - 1] + 1;
        if (max_parts == 0 || parts <= max_parts) {
            ++result.partitions_checked;
            SaturationReport report = saturation_check(identify_variables(p, f, parts));
            if (!report.saturated) {
                result.weakly_stable = false;
                result.coloring = f;
                result.parts = parts;
                result.missing = report.missing.front();
                return result;
            }
        }
        std::size_t i = nn - 1;
        while (i > 0 && f[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++f[i];
        prefix_max[i] = std::max(prefix_max[i - 1], f[i]);
        for (std::size_t j = i + 1; j < nn; ++j) {
            f[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return result;
}

WeightedSignResult weighted_sign_check(const Graph& g, const EdgeWeights& w) {
    if (g.order() == 0 || !is_connected(g)) throw GraphError("weighted sign check needs a connected graph");
    w.validate(g);

    WeightedSignResult result;
    result.two_connected = g.order() >= 3 && cut_vertices(g).empty();
    bool has_negative = false;
    bool has_positive = false;
    for (const Edge& e : g.edges()) (sgn(w.at(e)) < 0 ? has_negative : has_positive) = true;
    if (!result.two_connected || !has_negative || !has_positive) return result;

    // A connected graph with both signs has a vertex meeting both signs.
    for (Vertex v = 0; v < g.order() && !result.pivot; ++v) {
        std::optional<Vertex> neg;
        std::optional<Vertex> pos;
        for (Vertex u : g.neighbors(v)) {
            if (sgn(w.at({u, v})) < 0 && !neg) neg = u;
            if (sgn(w.at({u, v})) > 0 && !pos) pos = u;
        }
        if (!neg || !pos) continue;
        result.pivot = v;

        // Every other coordinate is i; pick positive imaginary parts c_neg, c_pos with
        // w_neg c_neg + w_pos c_pos = -(sum of the other neighbor weights).
        Rational others = 0;
        for (Vertex u : g.neighbors(v))
            if (u != *neg && u != *pos) others += w.at({u, v});
        const Rational w_neg = w.at({*neg, v});
        const Rational w_pos = w.at({*pos, v});
        Rational c_neg = (others + w_pos) / (-w_neg);
        Rational c_pos = 1;
        if (sgn(c_neg) <= 0) {
            c_neg = 1;
            c_pos = (-others - w_neg) / w_pos;
        }
        result.zero_of_divisor.assign(static_cast<std::size_t>(g.order()), kI);
        result.zero_of_divisor[static_cast<std::size_t>(*neg)] = GaussianRational(0, c_neg);
        result.zero_of_divisor[static_cast<std::size_t>(*pos)] = GaussianRational(0, c_pos);
    }
    result.verdict = WeightedSign::MixedSignUnstable;
    return result;
}

}  // namespace treestab
