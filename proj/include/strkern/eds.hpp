#ifndef STRKERN_EDS_HPP
#define STRKERN_EDS_HPP

// Two-pass streaming kernelizer for edge dominating set.
//
// Pass 1 keeps an edge only while both endpoints have fewer than 2k+1 kept
// incident edges; the kept set doubles as a sketch that preserves vertex
// covers of size at most 2k. Growing past 4k^2+2k kept edges is an immediate
// NO. Between the passes, more than 2k vertices at the degree cap is also a
// NO. Pass 2 adds back every edge whose endpoints both touch the pass-1 set.
// The stream is treated as an edge set: a replayed duplicate of a kept edge
// changes nothing.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strkern/stream.hpp"

namespace strkern {

class StreamMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EdsKernelizer {
public:
    enum class Phase { Pass1, Pass2, Finished };
    enum class Pass1Decision { Stored, Skipped, EarlyNo };
    enum class BetweenDecision { Proceed, EarlyNo };
    enum class Pass2Decision { Stored, Skipped };

    explicit EdsKernelizer(const InstanceHeader& header) : header_(header), k_(header.k) {
        if (header.problem != Problem::EdgeDominatingSet)
            throw std::invalid_argument("header is not an edge dominating set instance");
        if (k_ > (std::uint64_t{1} << 30)) throw std::domain_error("k too large");
        degree_cap_ = 2 * k_ + 1;
        edge_budget_ = 4 * k_ * k_ + 2 * k_;
    }

    Pass1Decision pass1_step(Edge e) {
        if (phase_ != Phase::Pass1) throw std::logic_error("pass1_step outside pass 1");
        note_element(pass1_count_, pass1_hash_, e);
        if (verdict_no_) return Pass1Decision::Skipped;
        if (pass1_set_.count(e)) return Pass1Decision::Skipped;  // replayed duplicate, set semantics
        if (degree_of(e.u) >= degree_cap_ || degree_of(e.v) >= degree_cap_) return Pass1Decision::Skipped;
        pass1_edges_.push_back(e);
        pass1_set_.insert(e);
        ++degree_[e.u];
        ++degree_[e.v];
        peak_stored_ = std::max<std::uint64_t>(peak_stored_, pass1_edges_.size());
        if (pass1_edges_.size() > edge_budget_) {
            declare_no();
            return Pass1Decision::EarlyNo;
        }
        return Pass1Decision::Stored;
    }

    BetweenDecision between_passes() {
        if (phase_ != Phase::Pass1) throw std::logic_error("between_passes outside pass boundary");
        if (verdict_no_) return BetweenDecision::EarlyNo;
        std::uint64_t at_cap = 0;
        for (const auto& [vertex, degree] : degree_)
            if (degree == degree_cap_) ++at_cap;
        if (at_cap > 2 * k_) {
            declare_no();
            return BetweenDecision::EarlyNo;
        }
        // Sorted indexes over the pass-1 edges answer the pass-2 membership
        // tests within the per-step budget. A counting trie over the kept
        // edges (as in the set-family kernelizers) would bring each step to
        // logarithmic time; the indexes are the designated extension point.
        pass1_vertices_.clear();
        for (const Edge& e : pass1_edges_) {
            pass1_vertices_.insert(e.u);
            pass1_vertices_.insert(e.v);
        }
        phase_ = Phase::Pass2;
        return BetweenDecision::Proceed;
    }

    Pass2Decision pass2_step(Edge e) {
        if (phase_ != Phase::Pass2) throw std::logic_error("pass2_step outside pass 2");
        note_element(pass2_count_, pass2_hash_, e);
        if (pass2_count_ > pass1_count_)
            throw StreamMismatchError("second pass is longer than the first");
        if (!pass1_vertices_.count(e.u) || !pass1_vertices_.count(e.v)) return Pass2Decision::Skipped;
        if (pass1_set_.count(e) || pass2_set_.count(e)) return Pass2Decision::Skipped;
        pass2_edges_.push_back(e);
        pass2_set_.insert(e);
        peak_stored_ = std::max<std::uint64_t>(peak_stored_, pass1_edges_.size() + pass2_edges_.size());
        return Pass2Decision::Stored;
    }

    KernelResult finalize() {
        if (verdict_no_) {
            phase_ = Phase::Finished;
            return make_verdict_result(Verdict::TrivialNo);
        }
        if (phase_ != Phase::Pass2) throw std::logic_error("finalize before the second pass");
        if (pass2_count_ != pass1_count_ || pass2_hash_ != pass1_hash_)
            throw StreamMismatchError("second pass does not match the first");
        phase_ = Phase::Finished;
        std::vector<Edge> kept = pass1_edges_;
        kept.insert(kept.end(), pass2_edges_.begin(), pass2_edges_.end());
        return make_reduced_result(reduce_edge_set(header_, kept));
    }

    const InstanceHeader& header() const { return header_; }
    Phase phase() const { return phase_; }
    bool no_verdict() const { return verdict_no_; }
    std::uint64_t degree_cap() const { return degree_cap_; }
    std::uint64_t edge_budget() const { return edge_budget_; }
    const std::vector<Edge>& pass1_edges() const { return pass1_edges_; }
    const std::vector<Edge>& pass2_edges() const { return pass2_edges_; }
    std::uint32_t degree_of(ElementId v) const {
        auto it = degree_.find(v);
        return it == degree_.end() ? 0 : it->second;
    }
    std::size_t pass1_vertex_count() const { return pass1_vertices_.size(); }
    std::uint64_t peak_stored_edges() const { return peak_stored_; }

private:
    friend struct EdsKernelizerTestAccess;

    void declare_no() {
        verdict_no_ = true;
        pass1_edges_.clear();
        pass2_edges_.clear();
        pass1_set_.clear();
        pass2_set_.clear();
        pass1_vertices_.clear();
        degree_.clear();
    }

    static void note_element(std::uint64_t& count, std::uint64_t& hash, Edge e) {
        ++count;
        constexpr std::uint64_t kPrime = 0x100000001b3ull;
        hash = (hash ^ e.u) * kPrime;
        hash = (hash ^ e.v) * kPrime;
    }

    InstanceHeader header_;
    std::uint64_t k_;
    std::uint64_t degree_cap_ = 1;
    std::uint64_t edge_budget_ = 0;
    Phase phase_ = Phase::Pass1;
    bool verdict_no_ = false;
    std::vector<Edge> pass1_edges_;
    std::vector<Edge> pass2_edges_;
    std::set<Edge> pass1_set_;
    std::set<Edge> pass2_set_;
    std::set<ElementId> pass1_vertices_;
    std::map<ElementId, std::uint32_t> degree_;
    std::uint64_t pass1_count_ = 0;
    std::uint64_t pass2_count_ = 0;
    std::uint64_t pass1_hash_ = 0xcbf29ce484222325ull;
    std::uint64_t pass2_hash_ = 0xcbf29ce484222325ull;
    std::uint64_t peak_stored_ = 0;
};

/// Drives both passes over a replayable source. The second pass is skipped
/// once the verdict is already NO.
inline KernelResult kernelize_edge_dominating_set(StreamSource<Edge>& source) {
    EdsKernelizer kernelizer(source.header());
    source.open_pass();
    while (auto e = source.next()) {
        if (kernelizer.pass1_step(*e) == EdsKernelizer::Pass1Decision::EarlyNo) break;
    }
    if (!kernelizer.no_verdict() &&
        kernelizer.between_passes() == EdsKernelizer::BetweenDecision::Proceed) {
        source.open_pass();
        while (auto e = source.next()) kernelizer.pass2_step(*e);
    }
    return kernelizer.finalize();
}

}  // namespace strkern

#endif  // STRKERN_EDS_HPP
