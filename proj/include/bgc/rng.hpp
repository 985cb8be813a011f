#ifndef BGC_RNG_HPP
#define BGC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace bgc {

// Counter-based generator (SplitMix64 finalizer over key + counter).
// Output depends only on (key, call index), so results are reproducible
// across platforms and independent of the standard library's
// distribution implementations. fork() derives an independent stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x2545F4914F6CDD1DULL)) {}

    std::uint64_t next_u64() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return mix(key_ ^ counter_);
    }

    Rng fork(std::uint64_t stream) const {
        return Rng(mix(key_ + 0x632BE59BD9B4E019ULL * (stream + 1)));
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; two fresh uniforms per call, no cached state.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace bgc

#endif
