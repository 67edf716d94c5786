#ifndef STRKERN_SET_MATCHING_HPP
#define STRKERN_SET_MATCHING_HPP

// Single-pass streaming kernelizer for set matching (k pairwise disjoint
// family members). Control flow matches the hitting set kernelizer; only the
// threshold differs. k = 0 is answered TrivialYes up front because the empty
// matching always exists and the threshold formula degenerates there.

#include <cstdint>
#include <optional>
#include <vector>

#include "strkern/family_kernelizer.hpp"
#include "strkern/stream.hpp"

namespace strkern {

class SetMatchingKernelizer {
public:
    explicit SetMatchingKernelizer(const InstanceHeader& header) : header_(header) {
        if (header.k >= 1) inner_.emplace(header);
    }

    StepDecision step(const HyperEdge& f) {
        if (!inner_) {
            ++steps_;
            return {false, std::nullopt};  // verdict already fixed, nothing is stored
        }
        ++steps_;
        return inner_->step(f);
    }

    KernelResult finalize() const {
        if (!inner_) return make_verdict_result(Verdict::TrivialYes);
        return inner_->finalize();
    }

    bool trivial_yes() const { return !inner_.has_value(); }
    const InstanceHeader& header() const { return header_; }
    const std::vector<HyperEdge>& family() const {
        static const std::vector<HyperEdge> kEmpty;
        return inner_ ? inner_->family() : kEmpty;
    }
    const SubsetTrie* trie() const { return inner_ ? &inner_->trie() : nullptr; }
    std::uint64_t family_bound() const { return inner_ ? inner_->family_bound() : 0; }
    std::uint64_t steps() const { return steps_; }

private:
    InstanceHeader header_;
    std::optional<FamilyKernelizer<SetMatchingThresholds>> inner_;
    std::uint64_t steps_ = 0;
};

inline KernelResult kernelize_set_matching(StreamSource<HyperEdge>& source) {
    SetMatchingKernelizer kernelizer(source.header());
    source.open_pass();
    while (auto f = source.next()) kernelizer.step(*f);
    return kernelizer.finalize();
}

}  // namespace strkern

#endif  // STRKERN_SET_MATCHING_HPP
