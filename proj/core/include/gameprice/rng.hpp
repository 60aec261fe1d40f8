#ifndef GAMEPRICE_RNG_HPP
#define GAMEPRICE_RNG_HPP

#include <cstdint>

namespace gameprice {

/// SplitMix64 (Steele, Lea & Flood 2014). The full recurrence is
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// and uniform doubles take the top 53 bits: (z >> 11) * 2^-53.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1).
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

    /// Independent stream for one simulation path.
    static constexpr SplitMix64 for_path(std::uint64_t seed, std::uint64_t path) noexcept {
        SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (path + 1)));
        return SplitMix64(mixer());
    }

private:
    std::uint64_t state_;
};

}  // namespace gameprice

#endif  // GAMEPRICE_RNG_HPP
