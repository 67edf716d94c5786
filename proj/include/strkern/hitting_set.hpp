#ifndef STRKERN_HITTING_SET_HPP
#define STRKERN_HITTING_SET_HPP

// Single-pass streaming kernelizer for hitting set on families of sets of
// size at most d. The retained family never exceeds d!(k+1)^d sets and is
// equivalent to the full stream for every hitting set of size at most k.

#include "strkern/family_kernelizer.hpp"
#include "strkern/stream.hpp"

namespace strkern {

using HittingSetKernelizer = FamilyKernelizer<HittingSetThresholds>;

inline KernelResult kernelize_hitting_set(StreamSource<HyperEdge>& source) {
    HittingSetKernelizer kernelizer(source.header());
    source.open_pass();
    while (auto f = source.next()) kernelizer.step(*f);
    return kernelizer.finalize();
}

}  // namespace strkern

#endif  // STRKERN_HITTING_SET_HPP
