#pragma once

#include <cstdint>

namespace lmisyn {

/// Splittable counter-based generator (splitmix64 core). Every consumer of
/// randomness derives its own stream with split(), so results depend only on
/// the root seed and the split labels, never on evaluation order elsewhere.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Derive an independent child stream identified by a label.
    Rng split(std::uint64_t label) const {
        Rng child(0);
        child.state_ = mix(state_ ^ mix(label + 0x632be59bd9b4e019ull));
        return child;
    }

 private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace lmisyn
