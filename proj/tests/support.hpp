#ifndef STRKERN_TESTS_SUPPORT_HPP
#define STRKERN_TESTS_SUPPORT_HPP

// Test-only brute-force mirrors. Each one recomputes a quantity from first
// principles, independent of the library structure it is used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "strkern/oracles.hpp"
#include "strkern/stream.hpp"

namespace strkern::testing {

inline bool subset_of(const std::vector<ElementId>& inner, const std::vector<ElementId>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

/// Stores the family as a plain list; answers superset counts by scanning.
struct NaiveSubsetCounter {
    std::vector<HyperEdge> stored;

    void insert(const HyperEdge& f) { stored.push_back(f); }

    std::uint64_t count(const std::vector<ElementId>& c) const {
        std::uint64_t total = 0;
        for (const HyperEdge& f : stored)
            if (subset_of(c, f.elements)) ++total;
        return total;
    }
};

/// Reference scan for the saturated-subset search: collects every subset of f,
/// orders by (size descending, lexicographic), returns the first at threshold.
template <class ThresholdFn>
inline std::optional<HyperEdge> naive_find_saturated(const NaiveSubsetCounter& counter, const HyperEdge& f,
                                                     ThresholdFn&& threshold) {
    std::vector<std::vector<ElementId>> subsets;
    const auto& ids = f.elements;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
        std::vector<ElementId> c;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) c.push_back(ids[i]);
        subsets.push_back(std::move(c));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    for (const auto& c : subsets)
        if (counter.count(c) >= threshold(c.size())) {
            HyperEdge witness;
            witness.elements = c;
            return witness;
        }
    return std::nullopt;
}

inline FamilyInstance kernel_family(const KernelResult& result) {
    return {result.instance->header.n, result.instance->header.d, result.instance->sets};
}

inline GraphInstance kernel_graph(const KernelResult& result) {
    return GraphInstance(result.instance->header.n, result.instance->edges);
}

inline bool covers(const std::vector<Edge>& edges, const std::vector<ElementId>& vertex_set) {
    for (const Edge& e : edges) {
        bool hit = std::binary_search(vertex_set.begin(), vertex_set.end(), e.u) ||
                   std::binary_search(vertex_set.begin(), vertex_set.end(), e.v);
        if (!hit) return false;
    }
    return true;
}

/// All sorted vertex subsets of size at most bound over [0, n).
inline std::vector<std::vector<ElementId>> vertex_subsets_up_to(std::size_t n, std::size_t bound) {
    std::vector<std::vector<ElementId>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > bound) continue;
        std::vector<ElementId> ids;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) ids.push_back(static_cast<ElementId>(i));
        out.push_back(std::move(ids));
    }
    return out;
}

inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            out.emplace_back(static_cast<ElementId>(u), static_cast<ElementId>(v));
    return out;
}

/// Calls fn for every labeled graph on exactly n vertices.
template <class Fn>
inline void for_each_graph(std::size_t n, Fn&& fn) {
    const std::vector<Edge> pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
        fn(GraphInstance(n, edges));
    }
}

/// Cluster test by components: breadth-first components, each must be complete.
inline bool cluster_by_components(const GraphInstance& g) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> component(n, -1);
    int components = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (component[start] != -1) continue;
        std::vector<std::size_t> queue{start};
        component[start] = components;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (std::size_t w : adj[queue[qi]])
                if (component[w] == -1) {
                    component[w] = components;
                    queue.push_back(w);
                }
        // completeness: every member must be adjacent to all the others
        for (std::size_t v : queue)
            if (adj[v].size() + 1 < queue.size()) return false;
        ++components;
    }
    return true;
}

/// Chordality by exhaustion: no vertex subset of size >= 4 may induce a cycle.
inline bool chordal_by_cycle_enumeration(const GraphInstance& g) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = true;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) sub.push_back(i);
        if (sub.size() < 4) continue;
        // induced subgraph is a cycle iff it is connected and 2-regular
        bool two_regular = true;
        std::size_t edges = 0;
        for (std::size_t i = 0; i < sub.size() && two_regular; ++i) {
            std::size_t deg = 0;
            for (std::size_t j = 0; j < sub.size(); ++j)
                if (i != j && adj[sub[i]][sub[j]]) ++deg;
            two_regular = deg == 2;
            edges += deg;
        }
        if (!two_regular || edges != 2 * sub.size()) continue;
        std::vector<bool> seen(sub.size(), false);
        std::vector<std::size_t> queue{0};
        seen[0] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (std::size_t j = 0; j < sub.size(); ++j)
                if (!seen[j] && adj[sub[queue[qi]]][sub[j]]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        if (queue.size() == sub.size()) return false;  // induced cycle found
    }
    return true;
}

}  // namespace strkern::testing

#endif  // STRKERN_TESTS_SUPPORT_HPP
