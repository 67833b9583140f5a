#ifndef INTQUANT_RNG_HPP
#define INTQUANT_RNG_HPP

#include <cstdint>

namespace intquant {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stable sub-seed for replication r of a study seeded with `seed`.  This
// mapping is part of the output contract: changing it changes every seeded
// result, so it is fixed here once and for all.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t r) {
    return mix64(mix64(seed + kGolden) + r);
}

// Counter-based uniform generator.  Draw i of stream (seed, stream) is a pure
// function of the triple, so parallel replications can share one seed without
// any coordination and reproduce bit-identically at any thread count.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix64(mix64(seed + kGolden) + stream)) {}

    std::uint64_t bits(std::uint64_t i) const { return mix64(base_ + (i + 1) * kGolden); }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform(std::uint64_t i) const {
        return (static_cast<double>(bits(i) >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t base_;
};

}  // namespace intquant

#endif
