#ifndef STRKERN_FAMILY_KERNELIZER_HPP
#define STRKERN_FAMILY_KERNELIZER_HPP

// Shared single-pass kernelizer core for the two set-family problems. A new
// set F is discarded as soon as some subset C of F is already contained in
// threshold(|C|) stored sets; otherwise F is stored. The two problems differ
// only in the threshold formula.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strkern/stream.hpp"
#include "strkern/subset_trie.hpp"

namespace strkern {

class ThresholdOverflowError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

// Thresholds must stay representable; combinations of d and k whose threshold
// exceeds 2^62 are a configuration error.
inline constexpr std::uint64_t kThresholdLimit = std::uint64_t{1} << 62;

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kThresholdLimit / a)
        throw ThresholdOverflowError("threshold exceeds 2^62");
    return a * b;
}

inline std::uint64_t checked_power(std::uint64_t base, unsigned exponent) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
    return result;
}

inline std::uint64_t checked_factorial(unsigned x) {
    std::uint64_t result = 1;
    for (unsigned i = 2; i <= x; ++i) result = checked_mul(result, i);
    return result;
}

}  // namespace detail

/// (d-|C|)! * (k+1)^(d-|C|): cap on stored supersets of a core C for hitting set.
inline std::uint64_t hitting_set_threshold(unsigned d, std::size_t subset_size, std::uint64_t k) {
    if (subset_size > d) throw std::invalid_argument("subset larger than d");
    const unsigned rest = d - static_cast<unsigned>(subset_size);
    if (k >= detail::kThresholdLimit) throw ThresholdOverflowError("k too large");
    return detail::checked_mul(detail::checked_factorial(rest), detail::checked_power(k + 1, rest));
}

/// (d-|C|)! * (d(k-1)+1)^(d-|C|): the set matching variant; requires k >= 1.
inline std::uint64_t set_matching_threshold(unsigned d, std::size_t subset_size, std::uint64_t k) {
    if (subset_size > d) throw std::invalid_argument("subset larger than d");
    if (k < 1) throw std::domain_error("set matching threshold requires k >= 1");
    const unsigned rest = d - static_cast<unsigned>(subset_size);
    const std::uint64_t base = detail::checked_mul(d, k - 1) + 1;
    return detail::checked_mul(detail::checked_factorial(rest), detail::checked_power(base, rest));
}

struct HittingSetThresholds {
    static std::uint64_t threshold(unsigned d, std::size_t subset_size, std::uint64_t k) {
        return hitting_set_threshold(d, subset_size, k);
    }
    static std::uint64_t family_bound(unsigned d, std::uint64_t k) { return hitting_set_threshold(d, 0, k); }
};

struct SetMatchingThresholds {
    static std::uint64_t threshold(unsigned d, std::size_t subset_size, std::uint64_t k) {
        return set_matching_threshold(d, subset_size, k);
    }
    static std::uint64_t family_bound(unsigned d, std::uint64_t k) { return set_matching_threshold(d, 0, k); }
};

/// Outcome of one stream step: either the set was stored, or the saturated
/// subset that licensed discarding it.
struct StepDecision {
    bool stored = false;
    std::optional<HyperEdge> witness;
};

template <class Thresholds>
class FamilyKernelizer {
public:
    explicit FamilyKernelizer(const InstanceHeader& header) : header_(header) {
        if (header.d < 1) throw std::invalid_argument("d must be at least 1");
        bound_ = Thresholds::family_bound(header_.d, header_.k);  // rejects d,k overflow up front
    }

    StepDecision step(const HyperEdge& f) {
        if (f.size() > header_.d) throw std::invalid_argument("set larger than d");
        ++steps_;
        auto witness = trie_.find_saturated_subset(
            f, [&](std::size_t c) { return Thresholds::threshold(header_.d, c, header_.k); });
        if (witness) return {false, std::move(witness)};
        family_.push_back(f);
        trie_.insert(f);
        return {true, std::nullopt};
    }

    KernelResult finalize() const { return make_reduced_result(reduce_family(header_, family_)); }

    const InstanceHeader& header() const { return header_; }
    const std::vector<HyperEdge>& family() const { return family_; }
    const SubsetTrie& trie() const { return trie_; }
    SubsetTrie& trie() { return trie_; }
    std::uint64_t family_bound() const { return bound_; }
    std::uint64_t steps() const { return steps_; }

private:
    InstanceHeader header_;
    std::uint64_t bound_ = 0;
    std::vector<HyperEdge> family_;
    SubsetTrie trie_;
    std::uint64_t steps_ = 0;
};

}  // namespace strkern

#endif  // STRKERN_FAMILY_KERNELIZER_HPP
