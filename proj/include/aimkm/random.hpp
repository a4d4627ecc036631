#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace aimkm {

/// SplitMix64 finalizer. Used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for sub-stream `stream` of `base`. Pure function of its arguments, so
/// per-trial or per-phase randomness does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Seeded pseudorandom source with platform-stable output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard library distributions are not, so the transforms
/// below are implemented here:
///   - uniform_index: rejection sampling on the raw 64-bit output;
///   - uniform01: top 53 bits scaled into [0, 1);
///   - normal: Marsaglia polar method, caching the second deviate.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::size_t uniform_index(std::size_t bound);

    double uniform01();

    /// Standard normal deviate.
    double normal();

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = uniform_index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace aimkm
