#include "oracles.hpp"
#include "treestab/dh.hpp"
#include "treestab/families.hpp"

#include <doctest.h>

#include <random>

using namespace treestab;

TEST_CASE("replay builds the described graph") {
    ConstructionSequence seq{{StartStep{0, 1}, AddPendant{2, 0}, AddFalseTwin{3, 2}, AddTrueTwin{4, 0}}};
    // 0-1, 0-2, 3 copies 2 (adjacent to 0), 4 copies 0 (adjacent to 1,2,3) and joins 0
    Graph expected(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {0, 4}});
    CHECK(replay(seq) == expected);
}

TEST_CASE("replay rejects malformed sequences") {
    CHECK_THROWS_AS(replay(ConstructionSequence{}), SequenceError);
    CHECK_THROWS_AS(replay({{AddPendant{1, 0}}}), SequenceError);
    CHECK_THROWS_AS(replay({{StartStep{0, 0}}}), SequenceError);
    CHECK_THROWS_AS(replay({{StartStep{0, 1}, AddPendant{2, 5}}}), SequenceError);
    CHECK_THROWS_AS(replay({{StartStep{0, 1}, AddPendant{1, 0}}}), SequenceError);
    CHECK_THROWS_AS(replay({{StartStep{0, 1}, StartStep{2, 3}}}), SequenceError);
    CHECK_THROWS_AS(replay({{StartStep{0, 2}}}), SequenceError);  // id 1 never used
    CHECK_THROWS_AS(replay({{StartStep{-1, 0}}}), SequenceError);
}

TEST_CASE("pruning of named families") {
    for (int n = 2; n <= 7; ++n) {
        auto seq = pruning_sequence(families::complete(n));
        REQUIRE(seq);
        CHECK(replay(*seq) == families::complete(n));
    }
    auto k23 = pruning_sequence(families::complete_bipartite(2, 3));
    REQUIRE(k23);
    CHECK(replay(*k23) == families::complete_bipartite(2, 3));
    CHECK(pruning_sequence(families::cycle(4)));
    CHECK_FALSE(pruning_sequence(families::cycle(5)));
    CHECK_FALSE(pruning_sequence(families::gem()));
    CHECK_FALSE(pruning_sequence(families::house()));
    CHECK_FALSE(pruning_sequence(families::domino()));

    CHECK(pruning_sequence(families::complete(2))->steps.size() == 1);
    CHECK_THROWS_AS(pruning_sequence(Graph(1, {})), GraphError);
    CHECK_THROWS_AS(pruning_sequence(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("pruning tie-breaks are deterministic") {
    // path 0-1-2: lowest pendant is 0, then 1 and 2 remain
    auto seq = pruning_sequence(families::path(3));
    REQUIRE(seq);
    CHECK(*seq == ConstructionSequence{{StartStep{1, 2}, AddPendant{0, 1}}});
    // C4 has no pendant; 0 and 2 are false twins
    auto c4 = pruning_sequence(families::cycle(4));
    REQUIRE(c4);
    CHECK(c4->steps.back() == ConstructionStep{AddFalseTwin{0, 2}});
    // K3: true twins
    auto k3 = pruning_sequence(families::complete(3));
    REQUIRE(k3);
    CHECK(*k3 == ConstructionSequence{{StartStep{1, 2}, AddTrueTwin{0, 1}}});
}

TEST_CASE("witness search on patterns") {
    auto c5 = find_forbidden_induced_subgraph(families::cycle(5));
    REQUIRE(c5);
    CHECK(c5->kind == ForbiddenKind::LongCycle);
    CHECK(c5->vertices.size() == 5);
    CHECK(validate_witness(families::cycle(5), *c5));

    auto c8 = find_forbidden_induced_subgraph(families::cycle(8));
    REQUIRE(c8);
    CHECK(c8->vertices.size() == 8);

    for (auto [g, kind] : {std::pair{families::gem(), ForbiddenKind::Gem}, std::pair{families::house(), ForbiddenKind::House},
                           std::pair{families::domino(), ForbiddenKind::Domino}}) {
        auto w = find_forbidden_induced_subgraph(g);
        REQUIRE(w);
        CHECK(w->kind == kind);
        CHECK(validate_witness(g, *w));
        CHECK(pattern_graph(kind, static_cast<int>(w->vertices.size())) == g);
    }
    CHECK_FALSE(find_forbidden_induced_subgraph(families::complete(6)));
    CHECK_FALSE(find_forbidden_induced_subgraph(families::cycle(4)));
}

TEST_CASE("shortest induced long cycle comes first") {
    // C7 plus the chord 0-4: an induced C5 on 0..4 and a C4 on 0,4,5,6
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    edges.emplace_back(0, 4);
    Graph g(7, edges);
    auto w = find_forbidden_induced_subgraph(g);
    REQUIRE(w);
    CHECK(w->kind == ForbiddenKind::LongCycle);
    CHECK(w->vertices.size() == 5);
    CHECK(validate_witness(g, *w));
}

TEST_CASE("witness validation rejects bad witnesses") {
    Graph c5 = families::cycle(5);
    CHECK_FALSE(validate_witness(c5, {ForbiddenKind::LongCycle, {0, 2, 1, 3, 4}}));
    CHECK_FALSE(validate_witness(c5, {ForbiddenKind::LongCycle, {0, 1, 2, 3}}));
    CHECK_FALSE(validate_witness(c5, {ForbiddenKind::LongCycle, {0, 1, 2, 3, 3}}));
    CHECK_FALSE(validate_witness(c5, {ForbiddenKind::LongCycle, {0, 1, 2, 3, 9}}));
    CHECK_FALSE(validate_witness(c5, {ForbiddenKind::House, {0, 1, 2, 3, 4}}));
    CHECK(validate_witness(c5, {ForbiddenKind::LongCycle, {2, 3, 4, 0, 1}}));
    CHECK(forbidden_kind_from_string(to_string(ForbiddenKind::Domino)) == ForbiddenKind::Domino);
    CHECK_THROWS_AS(forbidden_kind_from_string("kite"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_graph(ForbiddenKind::LongCycle, 4), GraphError);
}

TEST_CASE("brute-force distance-hereditary check") {
    CHECK(is_distance_hereditary_bruteforce(families::complete(5)));
    CHECK(is_distance_hereditary_bruteforce(families::cycle(4)));
    CHECK_FALSE(is_distance_hereditary_bruteforce(families::cycle(5)));
    CHECK_FALSE(is_distance_hereditary_bruteforce(families::house()));
    CHECK_THROWS_AS(is_distance_hereditary_bruteforce(families::complete(13)), GraphError);
    CHECK_THROWS_AS(is_distance_hereditary_bruteforce(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("three recognisers agree on every connected graph up to 6 vertices") {
    for (int n = 2; n <= 6; ++n) {
        int disagreements = 0;
        oracle::for_each_connected_graph(n, [&](const Graph& g) {
            auto seq = pruning_sequence(g);
            auto witness = find_forbidden_induced_subgraph(g);
            const bool brute = is_distance_hereditary_bruteforce(g);
            if (seq.has_value() != brute || witness.has_value() == brute) ++disagreements;
            if (seq && replay(*seq) != g) ++disagreements;
            if (witness && !validate_witness(g, *witness)) ++disagreements;
        });
        CHECK(disagreements == 0);
    }
}

TEST_CASE("random construction sequences are recognised") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        Graph g = replay(oracle::random_construction_sequence(rng, n));
        auto seq = pruning_sequence(g);
        REQUIRE(seq);
        CHECK(replay(*seq) == g);
        CHECK_FALSE(find_forbidden_induced_subgraph(g));
        CHECK(is_distance_hereditary_bruteforce(g));
    }
}

TEST_CASE("recognition is invariant under relabeling") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = families::random_connected(7, 0.4, rng());
        std::vector<Vertex> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = oracle::relabel(g, perm);
        CHECK(pruning_sequence(g).has_value() == pruning_sequence(h).has_value());
    }
}
