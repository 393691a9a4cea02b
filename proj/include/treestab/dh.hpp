#pragma once

#include "treestab/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treestab {

struct StartStep {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const StartStep&, const StartStep&) = default;
};
struct AddPendant {
    Vertex added = 0;
    Vertex anchor = 0;
    friend bool operator==(const AddPendant&, const AddPendant&) = default;
};
/// Copy of `of` with the same open neighborhood, not adjacent to it.
struct AddFalseTwin {
    Vertex added = 0;
    Vertex of = 0;
    friend bool operator==(const AddFalseTwin&, const AddFalseTwin&) = default;
};
/// Copy of `of` with the same neighborhood, joined to it.
struct AddTrueTwin {
    Vertex added = 0;
    Vertex of = 0;
    friend bool operator==(const AddTrueTwin&, const AddTrueTwin&) = default;
};

using ConstructionStep = std::variant<StartStep, AddPendant, AddFalseTwin, AddTrueTwin>;

/// Build script for a distance-hereditary graph, starting from a single edge.
/// Vertex ids are those of the target graph.
struct ConstructionSequence {
    std::vector<ConstructionStep> steps;
    friend bool operator==(const ConstructionSequence&, const ConstructionSequence&) = default;
};

class SequenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rebuilds the graph a sequence describes. The result has one vertex per id used,
/// so the ids must be exactly 0..n-1. Throws SequenceError on a malformed sequence.
Graph replay(const ConstructionSequence& seq);

/// Peels pendant vertices and twins until a single edge remains. Ties go to the
/// lowest eligible vertex, pendants before false twins before true twins.
/// Returns nullopt when the graph is not distance-hereditary.
std::optional<ConstructionSequence> pruning_sequence(const Graph& g);

enum class ForbiddenKind { LongCycle, Gem, House, Domino };

std::string to_string(ForbiddenKind kind);
ForbiddenKind forbidden_kind_from_string(const std::string& s);

/// Induced copy of a forbidden pattern: vertices[i] plays pattern label i.
/// LongCycle lists the cycle in order; gem/house/domino use the labelings in families.hpp.
struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::LongCycle;
    std::vector<Vertex> vertices;
    friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// The pattern graph a witness claims, on labels 0..k-1.
Graph pattern_graph(ForbiddenKind kind, int size);

/// True iff g induces exactly the pattern on the witness vertices under the recorded labeling.
bool validate_witness(const Graph& g, const ForbiddenWitness& w);

/// Exhaustive search: induced cycles of length >= 5 (shortest first), then gem, house, domino.
std::optional<ForbiddenWitness> find_forbidden_induced_subgraph(const Graph& g);

inline constexpr int kBruteForceDhLimit = 12;

/// Definition check over every connected induced subgraph. Throws GraphError above
/// kBruteForceDhLimit vertices.
bool is_distance_hereditary_bruteforce(const Graph& g);

}  // namespace treestab
