#pragma once

#include <cstdint>

#include "graphcert/graph.hpp"

namespace graphcert {

// SplitMix64: tiny, splittable, identical output on every platform — the
// standard-library distributions make no such promise.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform in [0, bound), rejection-sampled (unbiased).
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

// Per-instance stream: state = root XOR index; SplitMix64's output function
// decorrelates nearby states, so instances are independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return root ^ index;
}

enum class RandomModel { gnp, bipartite_gnp };

inline constexpr int kGenerationRetryCap = 100;

// Independent edges with probability p, then a repair pass adding random
// missing edges at each vertex below delta_min (within the bipartition for
// the bipartite model); resamples when disconnected or unrepairable, up to
// kGenerationRetryCap attempts.  Fully determined by (params, seed).
Graph random_graph(int n, int delta_min, RandomModel model, double p,
                   std::uint64_t seed);

}  // namespace graphcert
