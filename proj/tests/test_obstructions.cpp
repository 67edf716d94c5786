#include <doctest.h>

#include <vector>

#include "strkern/obstructions.hpp"
#include "strkern/oracles.hpp"
#include "support.hpp"

using namespace strkern;
using namespace strkern::testing;

namespace {

GraphInstance star_with_probe(const std::vector<ElementId>& leaves, ElementId n_leaves, Edge probe,
                              std::uint64_t n_vertices) {
    std::vector<Edge> edges = eds_star_stream(leaves, n_leaves);
    edges.push_back(probe);
    return GraphInstance(n_vertices, edges);
}

}  // namespace

TEST_CASE("eds star stream layout") {
    auto stream = eds_star_stream({0, 2, 3}, 5);
    REQUIRE(stream.size() == 3);
    CHECK(eds_star_center(5) == 5);
    CHECK(eds_star_anchor(5) == 6);
    CHECK(stream[0] == Edge(0, 5));
    CHECK(stream[1] == Edge(2, 5));
    CHECK(stream[2] == Edge(3, 5));
    CHECK_THROWS_AS(eds_star_stream({5}, 5), std::invalid_argument);
    CHECK_THROWS_AS(eds_star_stream({2, 1}, 5), std::invalid_argument);
}

TEST_CASE("eds star: probe into the chosen leaves is a YES, outside a NO") {
    const ElementId n = 4;
    const ElementId b = eds_star_anchor(n);
    SUBCASE("probe hits a chosen leaf") {
        auto g = star_with_probe({0, 1}, n, Edge(b, 0), n + 2);
        CHECK(oracle_edge_dominating_set(g, 1));
    }
    SUBCASE("probe hits an unchosen leaf") {
        auto g = star_with_probe({0, 1}, n, Edge(b, 2), n + 2);
        CHECK(!oracle_edge_dominating_set(g, 1));
    }
    SUBCASE("empty choice leaves a single probe edge, trivially YES") {
        auto g = star_with_probe({}, n, Edge(b, 0), n + 2);
        CHECK(oracle_edge_dominating_set(g, 1));
    }
}

TEST_CASE("star probe semantics for every choice and probe") {
    for (ElementId n = 1; n <= 6; ++n) {
        const ElementId b = eds_star_anchor(n);
        const ElementId fresh = n + 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<ElementId> leaves;
            for (ElementId i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) leaves.push_back(i);
            for (ElementId probe_leaf = 0; probe_leaf < n; ++probe_leaf) {
                auto g = star_with_probe(leaves, n, Edge(b, probe_leaf), n + 3);
                bool expected = leaves.empty() ? true : (mask >> probe_leaf) & 1;
                CHECK(oracle_edge_dominating_set(g, 1) == expected);
            }
            auto g_fresh = star_with_probe(leaves, n, Edge(b, fresh), n + 3);
            CHECK(oracle_edge_dominating_set(g_fresh, 1) == leaves.empty());
        }
    }
}

TEST_CASE("cluster editing obstruction layout and the P3 witness") {
    auto spec = make_obstruction(ObstructionProblem::ClusterEditing, 2);
    CHECK(spec.c == 1);
    CHECK(spec.k == 0);
    CHECK(spec.polarity == Polarity::NotInF);
    REQUIRE(spec.base.edges.size() == 2);
    CHECK(spec.base.edges[0] == Edge(0, 1));
    CHECK(spec.base.edges[1] == Edge(2, 3));
    CHECK(spec.remainders[0] == std::vector<Edge>{Edge(1, 4)});

    // keeping e_0 plus its remainder leaves an induced path on 0,1,4
    GraphInstance kept(spec.base.n, {Edge(0, 1), Edge(1, 4)});
    CHECK(!is_cluster_graph(kept));
    GraphInstance dropped(spec.base.n, {Edge(1, 4)});
    CHECK(is_cluster_graph(dropped));
}

TEST_CASE("star packing obstruction produces exactly one full star when kept") {
    auto spec = make_obstruction(ObstructionProblem::StarPacking, 1, 3);
    CHECK(spec.c == 2);
    GraphInstance kept(spec.base.n, {Edge(0, 1), Edge(1, 2), Edge(1, 3)});
    CHECK(has_star(kept, 3));
    GraphInstance dropped(spec.base.n, {Edge(1, 2), Edge(1, 3)});
    CHECK(!has_star(dropped, 3));
}

TEST_CASE("min fill-in obstruction: remainder alone is chordal under both readings") {
    auto spec = make_obstruction(ObstructionProblem::MinFillIn, 1);
    REQUIRE(spec.remainders[0].size() == 3);
    GraphInstance remainder_only(spec.base.n, spec.remainders[0]);
    CHECK(is_chordal(remainder_only, ChordalSemantics::InducedC4Only));
    CHECK(is_chordal(remainder_only, ChordalSemantics::AllInducedCycles));
    // keeping the base edge closes the four-cycle
    std::vector<Edge> kept = spec.remainders[0];
    kept.push_back(spec.base.edges[0]);
    GraphInstance closed(spec.base.n, kept);
    CHECK(!is_chordal(closed, ChordalSemantics::InducedC4Only));
    CHECK(!is_chordal(closed, ChordalSemantics::AllInducedCycles));
}

TEST_CASE("every generated obstruction verifies at small m") {
    for (ObstructionProblem p : {
             ObstructionProblem::EdgeDominatingSet, ObstructionProblem::ClusterEditing,
             ObstructionProblem::ClusterDeletion, ObstructionProblem::ClusterVertexDeletion,
             ObstructionProblem::CographVertexDeletion, ObstructionProblem::MinFillIn,
             ObstructionProblem::EdgeBipartization, ObstructionProblem::FeedbackVertexSet,
             ObstructionProblem::OddCycleTransversal, ObstructionProblem::TriangleEdgeDeletion,
             ObstructionProblem::TriangleVertexDeletion, ObstructionProblem::TrianglePacking,
             ObstructionProblem::BipartiteColorfulNeighborhood,
         }) {
        for (std::size_t m = 1; m <= 4; ++m) {
            auto report = verify_obstruction(make_obstruction(p, m));
            INFO("problem ", obstruction_problem_name(p), " m=", m);
            CHECK(report.ok);
            CHECK(report.checks == (std::uint64_t{1} << m) * m);
        }
    }
    for (unsigned s = 2; s <= 4; ++s)
        for (std::size_t m = 1; m <= 4; ++m) {
            auto report = verify_obstruction(make_obstruction(ObstructionProblem::StarPacking, m, s));
            CHECK(report.ok);
        }
}

TEST_CASE("generated remainders are well formed") {
    // every remainder has exactly c edges, none of which appear in the base
    for (ObstructionProblem p : {
             ObstructionProblem::EdgeDominatingSet, ObstructionProblem::ClusterEditing,
             ObstructionProblem::CographVertexDeletion, ObstructionProblem::MinFillIn,
             ObstructionProblem::TrianglePacking, ObstructionProblem::StarPacking,
             ObstructionProblem::BipartiteColorfulNeighborhood,
         }) {
        unsigned s = p == ObstructionProblem::StarPacking ? 4 : 0;
        for (std::size_t m = 1; m <= 5; ++m) {
            auto spec = make_obstruction(p, m, s);
            REQUIRE(spec.remainders.size() == m);
            for (const auto& r : spec.remainders) {
                CHECK(r.size() == spec.c);
                for (const Edge& e : r) {
                    CHECK(e.v < spec.base.n);
                    for (const Edge& base_edge : spec.base.edges) CHECK(e != base_edge);
                }
            }
        }
    }
}

TEST_CASE("m = 1 verifies with exactly two checks") {
    auto report = verify_obstruction(make_obstruction(ObstructionProblem::ClusterEditing, 1));
    CHECK(report.ok);
    CHECK(report.checks == 2);
}

TEST_CASE("a mutated remainder is caught") {
    auto spec = make_obstruction(ObstructionProblem::ClusterEditing, 2);
    spec.remainders[0] = {Edge(3, 4)};  // touches the wrong base edge
    auto report = verify_obstruction(spec);
    CHECK(!report.ok);
    REQUIRE(report.counterexample.has_value());
    // keeping exactly e_0 with the broken remainder stays a cluster graph,
    // so polarity fails there
    CHECK(report.counterexample->edge_index == 0);
}

TEST_CASE("the eds star family is degenerate exactly at the empty subset") {
    auto spec = make_obstruction(ObstructionProblem::EdgeDominatingSet, 3);
    REQUIRE(spec.empty_subset_answer.has_value());
    CHECK(*spec.empty_subset_answer == true);
    CHECK(verify_obstruction(spec).ok);

    // under the unrestricted reading the verifier reports the empty subset:
    // a lone probe edge is already dominated, so no remainder can make the
    // missing base edge decisive there
    auto literal = spec;
    literal.empty_subset_answer.reset();
    auto report = verify_obstruction(literal);
    CHECK(!report.ok);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->f_mask == 0);
}

TEST_CASE("verifier guard") {
    CHECK_THROWS_AS(verify_obstruction(make_obstruction(ObstructionProblem::ClusterEditing, 13)),
                    OracleGuardError);
}

TEST_CASE("fooling game graphs") {
    SUBCASE("cluster editing, equal singleton inputs form a triangle") {
        auto g = fooling_game_graph(FoolingGame::ClusterEditing, 2, {0}, {0});
        CHECK(g.n == 4);  // ground set {0,1}, u=2, v=3
        CHECK(is_cluster_graph(g));
        REQUIRE(g.edges.size() == 3);
    }
    SUBCASE("cluster editing, crossed singletons form a path") {
        auto g = fooling_game_graph(FoolingGame::ClusterEditing, 2, {1}, {0});
        CHECK(!is_cluster_graph(g));
    }
    SUBCASE("min fill-in, complementary inputs form a tree") {
        auto g = fooling_game_graph(FoolingGame::MinFillIn, 2, {0}, {1});
        CHECK(is_chordal(g, ChordalSemantics::InducedC4Only));
        CHECK(is_chordal(g, ChordalSemantics::AllInducedCycles));
    }
    SUBCASE("min fill-in, overlapping inputs close a four-cycle") {
        auto g = fooling_game_graph(FoolingGame::MinFillIn, 1, {0}, {0});
        CHECK(!is_chordal(g, ChordalSemantics::InducedC4Only));
        CHECK(!is_chordal(g, ChordalSemantics::AllInducedCycles));
    }
}

TEST_CASE("fooling set conditions hold for both games") {
    SUBCASE("cluster editing at n' = 3") {
        auto report = verify_fooling_set(FoolingGame::ClusterEditing, 3);
        CHECK(report.ok);
        CHECK(report.members_checked == 8);
        CHECK(report.pairs_checked == 28);
    }
    SUBCASE("min fill-in at n' = 3, both chordality readings agree") {
        auto report = verify_fooling_set(FoolingGame::MinFillIn, 3);
        CHECK(report.ok);
    }
    SUBCASE("all sizes up to 4") {
        for (unsigned np = 1; np <= 4; ++np) {
            CHECK(verify_fooling_set(FoolingGame::ClusterEditing, np).ok);
            CHECK(verify_fooling_set(FoolingGame::MinFillIn, np).ok);
        }
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(verify_fooling_set(FoolingGame::ClusterEditing, 6), OracleGuardError);
    }
}

TEST_CASE("the complement family is wrong for the cluster editing game") {
    const unsigned np = 3;
    const std::uint64_t full = (1u << np) - 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> wrong;
    for (std::uint64_t w = 0; w <= full; ++w) wrong.emplace_back(w, full & ~w);
    auto report = verify_fooling_family(FoolingGame::ClusterEditing, np, wrong);
    CHECK(!report.ok);
    CHECK(!report.violations.empty());
}

TEST_CASE("bipartite side-annotated input") {
    auto inst = parse_bipartite_instance("p eds 1 5\ne 0 1\ne 0 3\ne 2 3\n");
    CHECK(inst.left_side == std::vector<bool>{true, false, true, false, false});
    CHECK(has_colorful_neighborhood(inst.graph, inst.left_side));
    // vertex 0 claimed for both sides
    CHECK_THROWS_AS(parse_bipartite_instance("p eds 1 4\ne 0 1\ne 2 0\n"), ParseError);
}
