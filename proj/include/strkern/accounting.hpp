#ifndef STRKERN_ACCOUNTING_HPP
#define STRKERN_ACCOUNTING_HPP

// Model-level memory accounting: identifiers cost ceil(log2 n) bits each and
// a stored set costs d such identifiers. These are the quantities the space
// bounds are stated in, not process RSS.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "strkern/eds.hpp"
#include "strkern/hitting_set.hpp"
#include "strkern/set_matching.hpp"
#include "strkern/stream.hpp"

namespace strkern {

struct MemoryReport {
    Problem problem = Problem::HittingSet;
    std::uint64_t stored_sets = 0;
    std::uint64_t declared_bits = 0;
    std::uint64_t bound_sets = 0;
    std::uint64_t trie_nodes = 0;
    std::uint64_t peak_stored_sets = 0;
    std::uint64_t peak_declared_bits = 0;
    std::uint64_t peak_trie_nodes = 0;

    std::vector<std::pair<std::string, std::uint64_t>> fields() const {
        return {{"stored_sets", stored_sets},       {"declared_bits", declared_bits},
                {"bound_sets", bound_sets},         {"trie_nodes", trie_nodes},
                {"peak_stored_sets", peak_stored_sets}, {"peak_declared_bits", peak_declared_bits},
                {"peak_trie_nodes", peak_trie_nodes}};
    }
};

namespace detail {

inline std::uint64_t declared_bits(std::uint64_t stored, unsigned d, std::uint64_t n) {
    return stored * d * ceil_log2(std::max<std::uint64_t>(n, 2));
}

}  // namespace detail

inline MemoryReport snapshot(const HittingSetKernelizer& kernelizer) {
    const auto& h = kernelizer.header();
    MemoryReport report;
    report.problem = Problem::HittingSet;
    report.stored_sets = kernelizer.family().size();
    report.declared_bits = detail::declared_bits(report.stored_sets, h.d, h.n);
    report.bound_sets = kernelizer.family_bound();
    report.trie_nodes = kernelizer.trie().node_count();
    // sets are never removed, so current values are the peaks
    report.peak_stored_sets = report.stored_sets;
    report.peak_declared_bits = report.declared_bits;
    report.peak_trie_nodes = report.trie_nodes;
    return report;
}

inline MemoryReport snapshot(const SetMatchingKernelizer& kernelizer) {
    const auto& h = kernelizer.header();
    MemoryReport report;
    report.problem = Problem::SetMatching;
    report.stored_sets = kernelizer.family().size();
    report.declared_bits = detail::declared_bits(report.stored_sets, h.d, h.n);
    report.bound_sets = kernelizer.family_bound();
    report.trie_nodes = kernelizer.trie() ? kernelizer.trie()->node_count() : 0;
    report.peak_stored_sets = report.stored_sets;
    report.peak_declared_bits = report.declared_bits;
    report.peak_trie_nodes = report.trie_nodes;
    return report;
}

inline MemoryReport snapshot(const EdsKernelizer& kernelizer) {
    const auto& h = kernelizer.header();
    MemoryReport report;
    report.problem = Problem::EdgeDominatingSet;
    report.stored_sets = kernelizer.pass1_edges().size() + kernelizer.pass2_edges().size();
    report.declared_bits = detail::declared_bits(report.stored_sets, 2, h.n);
    if (kernelizer.phase() == EdsKernelizer::Phase::Pass1 || kernelizer.no_verdict()) {
        report.bound_sets = kernelizer.edge_budget();
    } else {
        // after the pass boundary the kept subgraph lives on V(A'), so the
        // simple-graph edge count over those vertices caps the storage
        const std::uint64_t va = kernelizer.pass1_vertex_count();
        report.bound_sets = std::max(kernelizer.edge_budget(), va * (va > 0 ? va - 1 : 0) / 2);
    }
    report.trie_nodes = 0;
    report.peak_stored_sets = kernelizer.peak_stored_edges();
    report.peak_declared_bits = detail::declared_bits(report.peak_stored_sets, 2, h.n);
    report.peak_trie_nodes = 0;
    return report;
}

inline std::string stats_comment_lines(const MemoryReport& report) {
    std::string out = "c stats problem=" + std::string(problem_tag(report.problem)) + '\n';
    for (const auto& [key, value] : report.fields())
        out += "c stats " + key + "=" + std::to_string(value) + '\n';
    return out;
}

}  // namespace strkern

#endif  // STRKERN_ACCOUNTING_HPP
