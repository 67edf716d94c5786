#ifndef STRKERN_SUBSET_TRIE_HPP
#define STRKERN_SUBSET_TRIE_HPP

// Counting trie over sorted element sets: for every subset C of every stored
// set (including C = the set itself and C = {}), the node reached by walking
// C's elements from the root holds the number of stored sets containing C.
// Children are kept in ordered dictionaries, so identifiers strictly increase
// along any root-to-node path. Sets are never removed.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strkern/stream.hpp"

namespace strkern {

namespace detail {

/// Visits subsets of the sorted sequence `f` ordered by decreasing size and
/// lexicographically within one size. Stops early when the visitor returns
/// true; the return value says whether that happened.
template <class Visitor>
bool for_each_subset_by_decreasing_size(std::span<const ElementId> f, Visitor&& visit) {
    const std::size_t n = f.size();
    std::vector<ElementId> buffer(n);
    std::vector<std::size_t> idx(n);
    for (std::size_t size = n + 1; size-- > 0;) {
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < size; ++i) buffer[i] = f[idx[i]];
            if (visit(std::span<const ElementId>(buffer.data(), size))) return true;
            // advance to the next index combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (size == 0) break;
    }
    return false;
}

}  // namespace detail

class SubsetTrie {
public:
    /// Number of stored sets that contain C as a subset.
    std::uint64_t count_supersets(std::span<const ElementId> c) const {
        const Node* node = &root_;
        for (ElementId id : c) {
            dict_probes_.fetch_add(1, std::memory_order_relaxed);
            auto it = node->children.find(id);
            if (it == node->children.end()) return 0;
            node = it->second.get();
        }
        return node->superset_count;
    }

    std::uint64_t count_supersets(const HyperEdge& c) const { return count_supersets(std::span(c.elements)); }

    /// Increments the count of every subset C of f, creating nodes on demand.
    void insert(const HyperEdge& f) {
        const auto& ids = f.elements;
        const std::size_t n = ids.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Node* node = &root_;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (std::uint64_t{1} << i))) continue;
                dict_probes_.fetch_add(1, std::memory_order_relaxed);
                auto [it, created] = node->children.try_emplace(ids[i]);
                if (created) {
                    it->second = std::make_unique<Node>();
                    ++node_count_;
                }
                node = it->second.get();
            }
            ++node->superset_count;
        }
    }

    /// First C subseteq f, scanning sizes |f| down to 0 (lexicographic within a
    /// size), whose superset count has reached threshold(|C|).
    template <class ThresholdFn>
    std::optional<HyperEdge> find_saturated_subset(const HyperEdge& f, ThresholdFn&& threshold) const {
        std::optional<HyperEdge> found;
        detail::for_each_subset_by_decreasing_size(std::span(f.elements), [&](std::span<const ElementId> c) {
            if (count_supersets(c) >= threshold(c.size())) {
                HyperEdge witness;
                witness.elements.assign(c.begin(), c.end());
                found = std::move(witness);
                return true;
            }
            return false;
        });
        return found;
    }

    /// Total stored sets (the count at the root, which represents C = {}).
    std::uint64_t stored_sets() const { return root_.superset_count; }

    /// Node count including the root.
    std::size_t node_count() const { return node_count_; }

    /// Dictionary probes performed so far (lookups and insertions). Counted
    /// relaxed so concurrent read-only queries stay safe after inserts end.
    std::uint64_t dictionary_probes() const { return dict_probes_.load(std::memory_order_relaxed); }
    void reset_dictionary_probes() { dict_probes_.store(0, std::memory_order_relaxed); }

    /// Calls fn(path, count) for every node in preorder; used by the CLI dump.
    void visit_nodes(const std::function<void(std::span<const ElementId>, std::uint64_t)>& fn) const {
        std::vector<ElementId> path;
        visit_rec(root_, path, fn);
    }

private:
    struct Node {
        std::map<ElementId, std::unique_ptr<Node>> children;
        std::uint64_t superset_count = 0;
    };

    static void visit_rec(const Node& node, std::vector<ElementId>& path,
                          const std::function<void(std::span<const ElementId>, std::uint64_t)>& fn) {
        fn(std::span<const ElementId>(path.data(), path.size()), node.superset_count);
        for (const auto& [id, child] : node.children) {
            path.push_back(id);
            visit_rec(*child, path, fn);
            path.pop_back();
        }
    }

    Node root_;
    std::size_t node_count_ = 1;
    mutable std::atomic<std::uint64_t> dict_probes_ = 0;
};

}  // namespace strkern

#endif  // STRKERN_SUBSET_TRIE_HPP
