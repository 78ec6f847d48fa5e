#pragma once

#include <cstdint>

namespace tachyon {

/// Name advertised in every stochastic output.
inline constexpr const char* kRngAlgorithm = "splitmix64-per-trial";

/// splitmix64 (Vigna's fixed-increment SplittableRandom variant). Trials
/// get independent streams keyed by (seed, trial index):
///   state0 = mix64(seed + GOLDEN * (trial + 1))
/// so a trial's draws depend only on the seed and its own index -- parallel
/// and serial runs produce identical streams by construction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) noexcept {
        return SplitMix64(mix64(seed + kGolden * (trial_index + 1)));
    }

    std::uint64_t next() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace tachyon
