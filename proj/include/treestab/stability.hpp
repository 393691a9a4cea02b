#pragma once

#include "treestab/dh.hpp"
#include "treestab/graph.hpp"
#include "treestab/polynomial.hpp"
#include "treestab/spanning.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace treestab {

/// Product of 0/1 linear forms: each factor S stands for sum_{v in S} x_v.
struct FactoredForm {
    std::size_t nvars = 0;
    std::vector<VertexSet> factors;
    friend bool operator==(const FactoredForm&, const FactoredForm&) = default;
};

MultiPoly expand(const FactoredForm& f);

/// Builds the factorization of P_G along a construction sequence:
///   false twin t of u:  x_u -> x_u + x_t in every factor, then append N(u)
///   true twin t of u:   same substitution, then append N(u) + {u, t}
///   pendant p at a:     append {a}
/// Throws SequenceError on an invalid sequence.
FactoredForm factored_polynomial(const ConstructionSequence& seq);

// Closure operations admitted in refutation certificates. Each maps a stable
// polynomial to a stable polynomial or to zero.
struct SubstituteReal {
    std::size_t var = 0;
    Rational value;
    friend bool operator==(const SubstituteReal&, const SubstituteReal&) = default;
};
struct IdentifyVariables {
    std::vector<std::size_t> map;
    std::size_t k = 0;
    friend bool operator==(const IdentifyVariables&, const IdentifyVariables&) = default;
};
struct ReverseVariable {
    std::size_t var = 0;
    friend bool operator==(const ReverseVariable&, const ReverseVariable&) = default;
};
struct PartialDerivative {
    std::size_t var = 0;
    friend bool operator==(const PartialDerivative&, const PartialDerivative&) = default;
};
using RefutationOp = std::variant<SubstituteReal, IdentifyVariables, ReverseVariable, PartialDerivative>;

/// The reduced polynomial vanishes at a point of the open upper half-plane (one coordinate
/// per remaining variable, including variables that no longer occur).
struct ExactZero {
    std::vector<GaussianRational> point;
    friend bool operator==(const ExactZero&, const ExactZero&) = default;
};
/// The reduced polynomial is univariate and has a non-real root.
struct NonRealRootedUnivariate {
    friend bool operator==(const NonRealRootedUnivariate&, const NonRealRootedUnivariate&) = default;
};
using RefutationTerminal = std::variant<ExactZero, NonRealRootedUnivariate>;

/// Instability evidence for P_{G[subgraph]}; propagates to G because connected
/// induced subgraphs of stable graphs are stable.
struct RefutationCertificate {
    VertexSet subgraph;
    std::vector<RefutationOp> ops;
    RefutationTerminal terminal;
    friend bool operator==(const RefutationCertificate&, const RefutationCertificate&) = default;
};

class MalformedCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies one op; throws MalformedCertificate on out-of-range indices.
MultiPoly apply_op(const MultiPoly& p, const RefutationOp& op);

/// The canned reduction for a witness, expressed in the variables of G[sorted witness vertices].
RefutationCertificate build_refutation(const ForbiddenWitness& witness);

struct RefutationReplay {
    bool valid = false;
    std::string failure;               // empty when valid
    std::vector<MultiPoly> polynomials;  // start polynomial followed by one entry per op applied
};

/// Replays a certificate from scratch and reports every intermediate polynomial.
/// Throws MalformedCertificate for structural problems (bad indices, disconnected subgraph).
RefutationReplay replay_refutation(const Graph& g, const RefutationCertificate& cert);

bool check_refutation(const Graph& g, const RefutationCertificate& cert);

struct StabilityVerdict {
    bool stable = false;
    std::optional<ConstructionSequence> sequence;
    std::optional<FactoredForm> factored;
    std::optional<ForbiddenWitness> witness;
    std::optional<RefutationCertificate> refutation;
};

/// Decides real stability of P_G and attaches a validated certificate. When the
/// tree count is at most `guard` the factorization is also checked against the
/// enumerated polynomial. Throws std::logic_error if a certificate fails to validate.
StabilityVerdict decide_stability(const Graph& g, std::uint64_t guard = kDefaultTreeGuard);

inline constexpr int kWeakStabilityLimit = 10;

struct WeakStabilityResult {
    bool weakly_stable = true;
    std::size_t partitions_checked = 0;
    // Set when weakly_stable is false.
    std::vector<std::size_t> coloring;
    std::size_t parts = 0;
    Exponent missing;
};

/// Checks saturation of Q_{G,f} for every set partition f of the vertices with at most
/// max_parts blocks (0 means no limit), in restricted-growth-string order.
WeakStabilityResult weak_stability_check(const Graph& g, std::size_t max_parts = 0,
                                         std::uint64_t guard = kDefaultTreeGuard);

enum class WeightedSign { MixedSignUnstable, Inconclusive };

struct WeightedSignResult {
    WeightedSign verdict = WeightedSign::Inconclusive;
    bool two_connected = false;
    // For MixedSignUnstable: a vertex with incident weights of both signs, and a point
    // of the open upper half-plane where sum_{u in N(v)} w(uv) x_u vanishes.
    std::optional<Vertex> pivot;
    std::vector<GaussianRational> zero_of_divisor;
};

WeightedSignResult weighted_sign_check(const Graph& g, const EdgeWeights& w);

}  // namespace treestab
