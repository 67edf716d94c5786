#ifndef STRKERN_OBSTRUCTIONS_HPP
#define STRKERN_OBSTRUCTIONS_HPP

// Generators for the lower-bound instance families (critical-edge base graphs
// with per-edge remainders, the edge dominating set star family, and the two
// fooling-set games) together with exhaustive verifiers of their defining
// properties.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strkern/oracles.hpp"
#include "strkern/stream.hpp"

namespace strkern {

// ---------------------------------------------------------------------------
// Edge dominating set star family: leaves 0..n_leaves-1, center a = n_leaves,
// probe anchor b = n_leaves+1. The stream for a chosen leaf subset S consists
// of the edges {a, s} for s in S; callers append a probe edge at b.

inline ElementId eds_star_center(ElementId n_leaves) { return n_leaves; }
inline ElementId eds_star_anchor(ElementId n_leaves) { return n_leaves + 1; }

inline std::vector<Edge> eds_star_stream(const std::vector<ElementId>& chosen_leaves, ElementId n_leaves) {
    std::vector<Edge> stream;
    stream.reserve(chosen_leaves.size());
    ElementId previous = 0;
    bool first = true;
    for (ElementId leaf : chosen_leaves) {
        if (leaf >= n_leaves) throw std::invalid_argument("leaf id out of range");
        if (!first && leaf <= previous) throw std::invalid_argument("leaves must be strictly increasing");
        stream.emplace_back(eds_star_center(n_leaves), leaf);
        previous = leaf;
        first = false;
    }
    return stream;
}

// ---------------------------------------------------------------------------
// Critical-edge base graphs: every base edge e_i has a remainder R_i of fixed
// size c such that keeping any subset F of the base edges, the instance
// G[F u R_i] is in the problem exactly when e_i was kept (polarity InF) or
// exactly when it was dropped (polarity NotInF).

enum class ObstructionProblem {
    EdgeDominatingSet,
    ClusterEditing,
    ClusterDeletion,
    ClusterVertexDeletion,
    CographVertexDeletion,
    MinFillIn,
    EdgeBipartization,
    FeedbackVertexSet,
    OddCycleTransversal,
    TriangleEdgeDeletion,
    TriangleVertexDeletion,
    TrianglePacking,
    StarPacking,
    BipartiteColorfulNeighborhood,
};

inline std::string_view obstruction_problem_name(ObstructionProblem p) {
    switch (p) {
    case ObstructionProblem::EdgeDominatingSet: return "edge-dominating-set";
    case ObstructionProblem::ClusterEditing: return "cluster-editing";
    case ObstructionProblem::ClusterDeletion: return "cluster-deletion";
    case ObstructionProblem::ClusterVertexDeletion: return "cluster-vertex-deletion";
    case ObstructionProblem::CographVertexDeletion: return "cograph-vertex-deletion";
    case ObstructionProblem::MinFillIn: return "min-fill-in";
    case ObstructionProblem::EdgeBipartization: return "edge-bipartization";
    case ObstructionProblem::FeedbackVertexSet: return "feedback-vertex-set";
    case ObstructionProblem::OddCycleTransversal: return "odd-cycle-transversal";
    case ObstructionProblem::TriangleEdgeDeletion: return "triangle-edge-deletion";
    case ObstructionProblem::TriangleVertexDeletion: return "triangle-vertex-deletion";
    case ObstructionProblem::TrianglePacking: return "triangle-packing";
    case ObstructionProblem::StarPacking: return "star-packing";
    case ObstructionProblem::BipartiteColorfulNeighborhood: return "bipartite-colorful-neighborhood";
    }
    return "?";
}

inline std::optional<ObstructionProblem> obstruction_problem_from_name(std::string_view name) {
    for (ObstructionProblem p : {
             ObstructionProblem::EdgeDominatingSet, ObstructionProblem::ClusterEditing,
             ObstructionProblem::ClusterDeletion, ObstructionProblem::ClusterVertexDeletion,
             ObstructionProblem::CographVertexDeletion, ObstructionProblem::MinFillIn,
             ObstructionProblem::EdgeBipartization, ObstructionProblem::FeedbackVertexSet,
             ObstructionProblem::OddCycleTransversal, ObstructionProblem::TriangleEdgeDeletion,
             ObstructionProblem::TriangleVertexDeletion, ObstructionProblem::TrianglePacking,
             ObstructionProblem::StarPacking, ObstructionProblem::BipartiteColorfulNeighborhood,
         })
        if (obstruction_problem_name(p) == name) return p;
    return std::nullopt;
}

enum class Polarity { InF, NotInF };

struct ObstructionSpec {
    ObstructionProblem problem = ObstructionProblem::ClusterEditing;
    GraphInstance base;                        // base edges e_0..e_{m-1}
    std::vector<std::vector<Edge>> remainders; // remainders[i] = R_i, size c, disjoint from the base
    std::uint64_t k = 0;
    std::size_t c = 0;
    Polarity polarity = Polarity::NotInF;
    unsigned star_arms = 0;                    // s for star packing
    std::vector<bool> left_side;               // bipartition for the colorful neighborhood problem

    // Pinned expected decision for F = {}. The edge dominating set family is
    // degenerate there: its remainder alone is a single edge and hence a YES
    // instance, so the critical-edge property can only hold for nonempty F.
    // When set, the verifier checks F = {} against this value instead of the
    // polarity rule.
    std::optional<bool> empty_subset_answer;
};

inline ObstructionSpec make_obstruction(ObstructionProblem problem, std::size_t m, unsigned star_arms = 0) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    ObstructionSpec spec;
    spec.problem = problem;
    spec.star_arms = star_arms;

    auto disjoint_edges = [&](std::uint64_t aux_count) {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            edges.emplace_back(static_cast<ElementId>(2 * i), static_cast<ElementId>(2 * i + 1));
        spec.base = GraphInstance(2 * m + aux_count, edges);
    };

    switch (problem) {
    case ObstructionProblem::ClusterEditing:
    case ObstructionProblem::ClusterDeletion:
    case ObstructionProblem::ClusterVertexDeletion: {
        disjoint_edges(1);
        const ElementId w = static_cast<ElementId>(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(static_cast<ElementId>(2 * i + 1), w)});
        spec.k = 0;
        spec.c = 1;
        spec.polarity = Polarity::NotInF;
        break;
    }
    case ObstructionProblem::CographVertexDeletion: {
        disjoint_edges(2);
        const ElementId p = static_cast<ElementId>(2 * m);
        const ElementId w = static_cast<ElementId>(2 * m + 1);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(p, static_cast<ElementId>(2 * i)),
                                       Edge(static_cast<ElementId>(2 * i + 1), w)});
        spec.k = 0;
        spec.c = 2;
        spec.polarity = Polarity::NotInF;
        break;
    }
    case ObstructionProblem::MinFillIn: {
        disjoint_edges(2);
        const ElementId p = static_cast<ElementId>(2 * m);
        const ElementId w = static_cast<ElementId>(2 * m + 1);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(p, static_cast<ElementId>(2 * i)),
                                       Edge(static_cast<ElementId>(2 * i + 1), w), Edge(p, w)});
        spec.k = 0;
        spec.c = 3;
        spec.polarity = Polarity::NotInF;
        break;
    }
    case ObstructionProblem::EdgeBipartization:
    case ObstructionProblem::FeedbackVertexSet:
    case ObstructionProblem::OddCycleTransversal:
    case ObstructionProblem::TriangleEdgeDeletion:
    case ObstructionProblem::TriangleVertexDeletion:
    case ObstructionProblem::TrianglePacking: {
        disjoint_edges(1);
        const ElementId w = static_cast<ElementId>(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(static_cast<ElementId>(2 * i), w),
                                       Edge(static_cast<ElementId>(2 * i + 1), w)});
        spec.c = 2;
        if (problem == ObstructionProblem::TrianglePacking) {
            spec.k = 1;
            spec.polarity = Polarity::InF;
        } else {
            spec.k = 0;
            spec.polarity = Polarity::NotInF;
        }
        break;
    }
    case ObstructionProblem::StarPacking: {
        if (star_arms < 2) throw std::invalid_argument("star packing needs s >= 2");
        disjoint_edges(star_arms - 1);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Edge> r;
            for (unsigned j = 0; j + 1 < star_arms; ++j)
                r.emplace_back(static_cast<ElementId>(2 * i + 1), static_cast<ElementId>(2 * m + j));
            spec.remainders.push_back(std::move(r));
        }
        spec.k = 1;
        spec.c = star_arms - 1;
        spec.polarity = Polarity::InF;
        break;
    }
    case ObstructionProblem::BipartiteColorfulNeighborhood: {
        disjoint_edges(1);
        const ElementId v = static_cast<ElementId>(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(static_cast<ElementId>(2 * i), v)});
        spec.k = 1;
        spec.c = 1;
        spec.polarity = Polarity::InF;
        spec.left_side.assign(2 * m + 1, false);
        for (std::size_t i = 0; i < m; ++i) spec.left_side[2 * i] = true;  // first endpoints form U
        break;
    }
    case ObstructionProblem::EdgeDominatingSet: {
        const ElementId a = static_cast<ElementId>(m);
        const ElementId b = static_cast<ElementId>(m + 1);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < m; ++i) edges.emplace_back(static_cast<ElementId>(i), a);
        spec.base = GraphInstance(m + 2, edges);
        for (std::size_t i = 0; i < m; ++i)
            spec.remainders.push_back({Edge(static_cast<ElementId>(i), b)});
        spec.k = 1;
        spec.c = 1;
        spec.polarity = Polarity::InF;
        spec.empty_subset_answer = true;  // a lone probe edge is already dominated
        break;
    }
    }
    return spec;
}

struct ObstructionCounterexample {
    std::uint64_t f_mask = 0;     // kept base edges, bit i = e_i
    std::size_t edge_index = 0;   // the i whose remainder was applied
    std::string message;
};

struct ObstructionReport {
    bool ok = true;
    std::uint64_t checks = 0;
    std::optional<ObstructionCounterexample> counterexample;
};

namespace detail {

struct ObstructionDecision {
    bool value = false;
    bool semantics_agree = true;  // min fill-in runs under both chordality readings
};

inline ObstructionDecision decide_obstruction(const ObstructionSpec& spec, const GraphInstance& g) {
    switch (spec.problem) {
    case ObstructionProblem::ClusterEditing:
    case ObstructionProblem::ClusterDeletion:
    case ObstructionProblem::ClusterVertexDeletion:
        return {is_cluster_graph(g), true};
    case ObstructionProblem::CographVertexDeletion:
        return {is_p4_free(g), true};
    case ObstructionProblem::MinFillIn: {
        bool literal = is_chordal(g, ChordalSemantics::InducedC4Only);
        bool standard = is_chordal(g, ChordalSemantics::AllInducedCycles);
        return {literal, literal == standard};
    }
    case ObstructionProblem::EdgeBipartization:
    case ObstructionProblem::OddCycleTransversal:
        return {is_bipartite(g), true};
    case ObstructionProblem::FeedbackVertexSet:
        return {is_forest(g), true};
    case ObstructionProblem::TriangleEdgeDeletion:
    case ObstructionProblem::TriangleVertexDeletion:
        return {is_triangle_free(g), true};
    case ObstructionProblem::TrianglePacking:
        return {has_triangle(g), true};
    case ObstructionProblem::StarPacking:
        return {has_star(g, spec.star_arms), true};
    case ObstructionProblem::BipartiteColorfulNeighborhood:
        return {has_colorful_neighborhood(g, spec.left_side), true};
    case ObstructionProblem::EdgeDominatingSet:
        return {oracle_edge_dominating_set(g, spec.k), true};
    }
    throw std::logic_error("unknown obstruction problem");
}

}  // namespace detail

/// Exhaustively checks the critical-edge property over all subsets F of the
/// base edges and all remainder indices i; reports the first violation.
inline ObstructionReport verify_obstruction(const ObstructionSpec& spec) {
    const std::size_t m = spec.base.edges.size();
    if (m > 12) throw OracleGuardError("obstruction verifier guard: m <= 12");
    if (spec.remainders.size() != m) throw std::invalid_argument("one remainder per base edge required");

    ObstructionReport report;
    std::vector<Edge> edges;
    for (std::uint64_t f_mask = 0; f_mask < (std::uint64_t{1} << m); ++f_mask) {
        for (std::size_t i = 0; i < m; ++i) {
            edges.clear();
            for (std::size_t j = 0; j < m; ++j)
                if (f_mask & (std::uint64_t{1} << j)) edges.push_back(spec.base.edges[j]);
            edges.insert(edges.end(), spec.remainders[i].begin(), spec.remainders[i].end());
            GraphInstance g(spec.base.n, edges);

            auto decision = detail::decide_obstruction(spec, g);
            ++report.checks;
            const bool kept = (f_mask & (std::uint64_t{1} << i)) != 0;
            bool expected = spec.polarity == Polarity::InF ? kept : !kept;
            if (f_mask == 0 && spec.empty_subset_answer) expected = *spec.empty_subset_answer;

            if (!decision.semantics_agree) {
                report.ok = false;
                report.counterexample = {f_mask, i, "chordality semantics disagree"};
                return report;
            }
            if (decision.value != expected) {
                report.ok = false;
                report.counterexample = {f_mask, i,
                                         "decision " + std::string(decision.value ? "true" : "false") +
                                             ", expected " + (expected ? "true" : "false")};
                return report;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Fooling-set games. Vertex subsets of the shared ground set [0, n') are
// passed as bitmasks.

enum class FoolingGame { ClusterEditing, MinFillIn };

namespace detail {

inline std::vector<ElementId> mask_to_ids(std::uint64_t mask) {
    std::vector<ElementId> ids;
    for (ElementId i = 0; mask >> i; ++i)
        if (mask & (std::uint64_t{1} << i)) ids.push_back(i);
    return ids;
}

}  // namespace detail

/// Builds the game graph for one pair of player inputs.
///  - cluster editing: clique on V1 u {u} plus a star at v with leaves V2 u {u}
///  - min fill-in: stars at u and v with leaf sets V1 u {p} and V2 u {p}
inline GraphInstance fooling_game_graph(FoolingGame game, unsigned n_prime,
                                        const std::vector<ElementId>& v1,
                                        const std::vector<ElementId>& v2) {
    for (ElementId x : v1)
        if (x >= n_prime) throw std::invalid_argument("V1 id out of range");
    for (ElementId x : v2)
        if (x >= n_prime) throw std::invalid_argument("V2 id out of range");

    std::vector<Edge> edges;
    if (game == FoolingGame::ClusterEditing) {
        const ElementId u = n_prime;
        const ElementId v = n_prime + 1;
        std::vector<ElementId> clique = v1;
        clique.push_back(u);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
        edges.emplace_back(v, u);
        for (ElementId x : v2) edges.emplace_back(v, x);
        return GraphInstance(n_prime + 2, edges);
    }
    const ElementId p = n_prime;
    const ElementId u = n_prime + 1;
    const ElementId v = n_prime + 2;
    edges.emplace_back(u, p);
    for (ElementId x : v1) edges.emplace_back(u, x);
    edges.emplace_back(v, p);
    for (ElementId x : v2) edges.emplace_back(v, x);
    return GraphInstance(n_prime + 3, edges);
}

struct FoolingViolation {
    enum class Kind { MemberValue, CrossPair, SemanticsDisagree };
    Kind kind = Kind::MemberValue;
    std::uint64_t x = 0, y = 0;    // offending member
    std::uint64_t x2 = 0, y2 = 0;  // second member for cross-pair violations
};

struct FoolingReport {
    bool ok = true;
    std::uint64_t members_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<FoolingViolation> violations;
};

namespace detail {

struct FoolingEval {
    bool value = false;
    bool semantics_agree = true;
};

inline FoolingEval eval_fooling(FoolingGame game, unsigned n_prime, std::uint64_t x, std::uint64_t y) {
    GraphInstance g = fooling_game_graph(game, n_prime, mask_to_ids(x), mask_to_ids(y));
    if (game == FoolingGame::ClusterEditing) return {is_cluster_graph(g), true};
    bool literal = is_chordal(g, ChordalSemantics::InducedC4Only);
    bool standard = is_chordal(g, ChordalSemantics::AllInducedCycles);
    return {literal, literal == standard};
}

}  // namespace detail

/// Checks the two fooling-set conditions (all members map to the value 1, and
/// for every distinct pair at least one crossed input maps elsewhere) for an
/// explicit family of input pairs.
inline FoolingReport verify_fooling_family(FoolingGame game, unsigned n_prime,
                                           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& family,
                                           std::size_t max_violations = 8) {
    if (n_prime > 5) throw OracleGuardError("fooling verifier guard: n' <= 5");
    FoolingReport report;
    auto note = [&](FoolingViolation v) {
        report.ok = false;
        if (report.violations.size() < max_violations) report.violations.push_back(v);
    };

    auto eval = [&](std::uint64_t x, std::uint64_t y, std::uint64_t ox, std::uint64_t oy,
                    FoolingViolation::Kind kind) {
        auto r = detail::eval_fooling(game, n_prime, x, y);
        if (!r.semantics_agree)
            note({FoolingViolation::Kind::SemanticsDisagree, x, y, ox, oy});
        if (!r.value) note({kind, x, y, ox, oy});
        return r.value;
    };

    for (const auto& [x, y] : family) {
        ++report.members_checked;
        eval(x, y, x, y, FoolingViolation::Kind::MemberValue);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            ++report.pairs_checked;
            const auto& [x1, y1] = family[i];
            const auto& [x2, y2] = family[j];
            auto a = detail::eval_fooling(game, n_prime, x1, y2);
            auto b = detail::eval_fooling(game, n_prime, x2, y1);
            if (!a.semantics_agree || !b.semantics_agree)
                note({FoolingViolation::Kind::SemanticsDisagree, x1, y2, x2, y1});
            if (a.value && b.value) note({FoolingViolation::Kind::CrossPair, x1, y1, x2, y2});
        }
    return report;
}

/// The designated family per game: all (W, W) for cluster editing, all
/// (W, complement of W) for min fill-in.
inline FoolingReport verify_fooling_set(FoolingGame game, unsigned n_prime, std::size_t max_violations = 8) {
    if (n_prime > 5) throw OracleGuardError("fooling verifier guard: n' <= 5");
    const std::uint64_t full = (std::uint64_t{1} << n_prime) - 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> family;
    for (std::uint64_t w = 0; w <= full; ++w)
        family.emplace_back(w, game == FoolingGame::ClusterEditing ? w : (full & ~w));
    return verify_fooling_family(game, n_prime, family, max_violations);
}

// ---------------------------------------------------------------------------
// Side-annotated graph input for the bipartite colorful neighborhood problem:
// `e u w` lines are read order sensitive, the first endpoint belongs to U.

struct BipartiteInstance {
    GraphInstance graph;
    std::vector<bool> left_side;
};

inline BipartiteInstance parse_bipartite_instance(std::string_view text) {
    ParsedInstance raw = parse_instance(text);  // validates header, ids, self-loops
    if (raw.header.problem != Problem::EdgeDominatingSet)
        throw ParseError(1, "bipartite input uses the graph header");

    std::vector<int> side(static_cast<std::size_t>(raw.header.n), -1);  // -1 unknown, 1 = U, 0 = W
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.size() != 3 || tokens[0] != "e") continue;
        auto u = static_cast<std::size_t>(detail::parse_u64(tokens[1], line_no, "vertex id"));
        auto w = static_cast<std::size_t>(detail::parse_u64(tokens[2], line_no, "vertex id"));
        if (side[u] == 0 || side[w] == 1)
            throw ParseError(line_no, "inconsistent bipartition annotation");
        side[u] = 1;
        side[w] = 0;
    }
    BipartiteInstance out{to_graph_instance(raw), {}};
    out.left_side.assign(static_cast<std::size_t>(raw.header.n), false);
    for (std::size_t v = 0; v < out.left_side.size(); ++v) out.left_side[v] = side[v] == 1;
    return out;
}

}  // namespace strkern

#endif  // STRKERN_OBSTRUCTIONS_HPP
