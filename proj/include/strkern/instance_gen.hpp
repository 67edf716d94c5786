#ifndef STRKERN_INSTANCE_GEN_HPP
#define STRKERN_INSTANCE_GEN_HPP

// Seeded random instance generation for the verification drivers. The
// distribution is fixed and documented: sizes are uniform on 1..d, identifiers
// uniform on the universe, graph edges uniform over all vertex pairs with
// repetition allowed. Reproducibility matters more than statistical polish,
// so sampling uses a self-contained splitmix64 generator.

#include <cstdint>
#include <vector>

#include "strkern/oracles.hpp"
#include "strkern/stream.hpp"

namespace strkern {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct FamilyStreamParams {
    std::uint64_t n_max = 10;
    unsigned d_max = 3;
    std::uint64_t k_max = 3;
    std::size_t m_max = 25;
};

struct GeneratedFamily {
    InstanceHeader header;
    std::vector<HyperEdge> stream;  // stream order = generation order
};

inline GeneratedFamily random_family_stream(SplitMix64& rng, Problem problem,
                                            const FamilyStreamParams& params = {}) {
    GeneratedFamily out;
    out.header.problem = problem;
    out.header.n = 1 + rng.below(params.n_max);
    out.header.d = 1 + static_cast<unsigned>(rng.below(params.d_max));
    out.header.k = rng.below(params.k_max + 1);
    const std::size_t m = static_cast<std::size_t>(rng.below(params.m_max + 1));
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t max_size = std::min<std::uint64_t>(out.header.d, out.header.n);
        const std::size_t size = static_cast<std::size_t>(1 + rng.below(max_size));
        std::vector<ElementId> ids;
        while (ids.size() < size) {
            ElementId candidate = static_cast<ElementId>(rng.below(out.header.n));
            bool fresh = true;
            for (ElementId seen : ids) fresh &= seen != candidate;
            if (fresh) ids.push_back(candidate);
        }
        out.stream.push_back(HyperEdge(std::move(ids)));
    }
    return out;
}

struct GraphStreamParams {
    std::uint64_t n_max = 9;
    std::size_t m_max = 20;
    std::uint64_t k_max = 2;
};

struct GeneratedGraph {
    InstanceHeader header;
    std::vector<Edge> stream;  // may contain duplicates; that is legal input
};

inline GeneratedGraph random_graph_stream(SplitMix64& rng, const GraphStreamParams& params = {}) {
    GeneratedGraph out;
    out.header.problem = Problem::EdgeDominatingSet;
    out.header.d = 2;
    out.header.n = 1 + rng.below(params.n_max);
    out.header.k = rng.below(params.k_max + 1);
    if (out.header.n >= 2) {
        const std::size_t m = static_cast<std::size_t>(rng.below(params.m_max + 1));
        for (std::size_t i = 0; i < m; ++i) {
            ElementId u = static_cast<ElementId>(rng.below(out.header.n));
            ElementId v = static_cast<ElementId>(rng.below(out.header.n - 1));
            if (v >= u) ++v;
            out.stream.emplace_back(u, v);
        }
    }
    return out;
}

inline FamilyInstance family_instance_of(const GeneratedFamily& g) {
    return {g.header.n, g.header.d, g.stream};
}

inline GraphInstance graph_instance_of(const GeneratedGraph& g) {
    return GraphInstance(g.header.n, g.stream);
}

/// Fisher-Yates shuffle driven by the same generator, for permutation tests.
template <class T>
inline void shuffle_stream(SplitMix64& rng, std::vector<T>& elements) {
    for (std::size_t i = elements.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(elements[i - 1], elements[j]);
    }
}

}  // namespace strkern

#endif  // STRKERN_INSTANCE_GEN_HPP
