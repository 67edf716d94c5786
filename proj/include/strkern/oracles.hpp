#ifndef STRKERN_ORACLES_HPP
#define STRKERN_ORACLES_HPP

// Exact brute-force deciders and structural graph predicates. These are the
// ground truth for every kernelizer and construction verifier. Deliberately
// exponential and guarded to desk scale; no branching tricks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "strkern/stream.hpp"

namespace strkern {

class OracleGuardError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct FamilyInstance {
    std::uint64_t n = 1;
    unsigned d = 1;
    std::vector<HyperEdge> family;
};

/// Simple graph: edges deduplicated and canonical, ids below n.
struct GraphInstance {
    std::uint64_t n = 1;
    std::vector<Edge> edges;

    GraphInstance() = default;
    GraphInstance(std::uint64_t vertices, std::vector<Edge> raw) : n(vertices), edges(std::move(raw)) {
        for (const Edge& e : edges)
            if (e.v >= n) throw std::invalid_argument("vertex id out of range");
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
};

inline FamilyInstance to_family_instance(const ParsedInstance& inst) {
    return {inst.header.n, inst.header.d, inst.sets};
}

inline GraphInstance to_graph_instance(const ParsedInstance& inst) {
    return GraphInstance(inst.header.n, inst.edges);
}

namespace detail {

// Enumeration work cap on top of the stated guards; keeps degenerate
// parameter combinations from running away.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 26;

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n - std::min(n, k));
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > kEnumerationCap) return kEnumerationCap + 1;
        result = result * (n - k + i) / i;
    }
    return result;
}

/// All index combinations of sizes 0..max_size out of [0, n), smallest first.
/// Visitor returns true to stop.
template <class Visitor>
bool for_each_combination(std::size_t n, std::size_t max_size, Visitor&& visit) {
    std::vector<std::size_t> idx;
    for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (visit(idx)) return true;
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (size == n) break;
    }
    return false;
}

inline bool sorted_ranges_intersect(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

}  // namespace detail

/// True iff some S with |S| <= k intersects every family member. A family
/// containing the empty set is unhittable.
inline bool oracle_hitting_set(const FamilyInstance& inst, std::uint64_t k) {
    if (!(inst.n <= 24 || k <= 4)) throw OracleGuardError("hitting set oracle guard: n <= 24 or k <= 4");
    for (const HyperEdge& f : inst.family)
        if (f.empty()) return false;
    if (inst.family.empty()) return true;
    if (detail::binomial_capped(inst.n, std::min(k, inst.n)) > detail::kEnumerationCap)
        throw OracleGuardError("hitting set oracle: enumeration too large");

    std::vector<ElementId> candidate;
    return detail::for_each_combination(
        static_cast<std::size_t>(inst.n), static_cast<std::size_t>(std::min<std::uint64_t>(k, inst.n)),
        [&](const std::vector<std::size_t>& idx) {
            candidate.assign(idx.begin(), idx.end());
            for (const HyperEdge& f : inst.family)
                if (!detail::sorted_ranges_intersect(candidate, f.elements)) return false;
            return true;
        });
}

/// True iff at least k pairwise disjoint family members exist.
inline bool oracle_set_matching(const FamilyInstance& inst, std::uint64_t k) {
    if (!(inst.family.size() <= 24 || k <= 4))
        throw OracleGuardError("set matching oracle guard: m <= 24 or k <= 4");
    if (k == 0) return true;
    if (k > inst.family.size()) return false;

    std::uint64_t nodes = 0;
    std::vector<ElementId> used;
    auto search = [&](auto&& self, std::size_t index, std::uint64_t chosen) -> bool {
        if (chosen == k) return true;
        if (index == inst.family.size()) return false;
        if (inst.family.size() - index < k - chosen) return false;
        if (++nodes > detail::kEnumerationCap)
            throw OracleGuardError("set matching oracle: enumeration too large");
        const HyperEdge& f = inst.family[index];
        if (!detail::sorted_ranges_intersect(used, f.elements)) {
            std::vector<ElementId> merged;
            merged.reserve(used.size() + f.size());
            std::merge(used.begin(), used.end(), f.elements.begin(), f.elements.end(),
                       std::back_inserter(merged));
            std::swap(used, merged);
            if (self(self, index + 1, chosen + 1)) return true;
            std::swap(used, merged);
        }
        return self(self, index + 1, chosen);
    };
    return search(search, 0, 0);
}

/// True iff some edge set S with |S| <= k is such that every edge shares an
/// endpoint with an edge of S (edges of S dominate themselves).
inline bool oracle_edge_dominating_set(const GraphInstance& inst, std::uint64_t k) {
    if (inst.edges.size() > 24 || k > 4)
        throw OracleGuardError("edge dominating set oracle guard: |E| <= 24 and k <= 4");
    if (inst.edges.empty()) return true;

    std::vector<ElementId> covered;
    return detail::for_each_combination(
        inst.edges.size(), static_cast<std::size_t>(std::min<std::uint64_t>(k, inst.edges.size())),
        [&](const std::vector<std::size_t>& idx) {
            covered.clear();
            for (std::size_t i : idx) {
                covered.push_back(inst.edges[i].u);
                covered.push_back(inst.edges[i].v);
            }
            std::sort(covered.begin(), covered.end());
            for (const Edge& e : inst.edges) {
                bool hit = std::binary_search(covered.begin(), covered.end(), e.u) ||
                           std::binary_search(covered.begin(), covered.end(), e.v);
                if (!hit) return false;
            }
            return true;
        });
}

// ---------------------------------------------------------------------------
// Structural predicates.

namespace detail {

class AdjacencyView {
public:
    explicit AdjacencyView(const GraphInstance& g) : n_(static_cast<std::size_t>(g.n)) {
        if (g.n > 65536) throw OracleGuardError("predicate guard: n <= 65536");
        bits_.assign(n_ * n_, false);
        degree_.assign(n_, 0);
        for (const Edge& e : g.edges) {
            bits_[e.u * n_ + e.v] = true;
            bits_[e.v * n_ + e.u] = true;
            ++degree_[e.u];
            ++degree_[e.v];
        }
    }

    std::size_t n() const { return n_; }
    bool at(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }
    std::size_t degree(std::size_t v) const { return degree_[v]; }

private:
    std::size_t n_;
    std::vector<bool> bits_;
    std::vector<std::size_t> degree_;
};

}  // namespace detail

/// No induced path on three vertices, i.e. a disjoint union of cliques.
inline bool is_cluster_graph(const GraphInstance& g) {
    detail::AdjacencyView adj(g);
    for (std::size_t v = 0; v < adj.n(); ++v)
        for (std::size_t a = 0; a < adj.n(); ++a) {
            if (a == v || !adj.at(v, a)) continue;
            for (std::size_t b = a + 1; b < adj.n(); ++b)
                if (b != v && adj.at(v, b) && !adj.at(a, b)) return false;
        }
    return true;
}

/// No induced path on four vertices.
inline bool is_p4_free(const GraphInstance& g) {
    detail::AdjacencyView adj(g);
    const std::size_t n = adj.n();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::size_t sub[4] = {a, b, c, d};
                    unsigned edges = 0;
                    unsigned deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (adj.at(sub[i], sub[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    unsigned ones = 0, twos = 0;
                    for (unsigned x : deg) {
                        if (x == 1) ++ones;
                        if (x == 2) ++twos;
                    }
                    if (ones == 2 && twos == 2) return false;  // induced P4
                }
    return true;
}

inline bool has_triangle(const GraphInstance& g) {
    detail::AdjacencyView adj(g);
    const std::size_t n = adj.n();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj.at(a, b)) continue;
            for (std::size_t c = b + 1; c < n; ++c)
                if (adj.at(a, c) && adj.at(b, c)) return true;
        }
    return false;
}

inline bool is_triangle_free(const GraphInstance& g) { return !has_triangle(g); }

inline bool is_forest(const GraphInstance& g) {
    std::vector<std::size_t> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges) {
        std::size_t a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

inline bool is_bipartite(const GraphInstance& g) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> color(n, -1);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Two chordality readings: forbid only induced 4-cycles, or (the standard
/// definition) forbid every induced cycle of length at least 4.
enum class ChordalSemantics { InducedC4Only, AllInducedCycles };

namespace detail {

inline bool has_induced_c4(const AdjacencyView& adj) {
    const std::size_t n = adj.n();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::size_t sub[4] = {a, b, c, d};
                    unsigned deg[4] = {0, 0, 0, 0};
                    unsigned edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (adj.at(sub[i], sub[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    // a 2-regular graph on four vertices is exactly a 4-cycle
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        return true;
                }
    return false;
}

/// Maximum cardinality search followed by the perfect elimination check.
inline bool is_chordal_mcs(const AdjacencyView& adj) {
    const std::size_t n = adj.n();
    std::vector<std::size_t> order(n), pos(n);
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    for (std::size_t slot = n; slot-- > 0;) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        order[slot] = best;
        pos[best] = slot;
        for (std::size_t w = 0; w < n; ++w)
            if (!numbered[w] && adj.at(best, w)) ++weight[w];
    }
    std::vector<std::size_t> later;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = order[i];
        later.clear();
        for (std::size_t w = 0; w < n; ++w)
            if (adj.at(v, w) && pos[w] > i) later.push_back(w);
        if (later.size() < 2) continue;
        std::size_t anchor = later[0];
        for (std::size_t w : later)
            if (pos[w] < pos[anchor]) anchor = w;
        for (std::size_t w : later)
            if (w != anchor && !adj.at(anchor, w)) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_chordal(const GraphInstance& g, ChordalSemantics semantics) {
    detail::AdjacencyView adj(g);
    if (semantics == ChordalSemantics::InducedC4Only) return !detail::has_induced_c4(adj);
    return detail::is_chordal_mcs(adj);
}

/// K_{1,s} subgraph, i.e. some vertex of degree at least s.
inline bool has_star(const GraphInstance& g, unsigned s) {
    detail::AdjacencyView adj(g);
    for (std::size_t v = 0; v < adj.n(); ++v)
        if (adj.degree(v) >= s) return true;
    return false;
}

/// Bipartite instances carry an explicit side annotation: left_side[v] is true
/// for vertices of the U side. True iff some U vertex has two or more
/// neighbors (a neighborhood that can be two-colored).
inline bool has_colorful_neighborhood(const GraphInstance& g, const std::vector<bool>& left_side) {
    if (left_side.size() != g.n) throw std::invalid_argument("bipartition annotation missing");
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : g.edges) {
        if (left_side[e.u] == left_side[e.v])
            throw std::invalid_argument("edge does not cross the bipartition");
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (left_side[v] && degree[v] >= 2) return true;
    return false;
}

}  // namespace strkern

#endif  // STRKERN_ORACLES_HPP
