#pragma once

#include <cstdint>
#include <vector>

namespace lexikit::rng {

// splitmix64 step; used both as a generator and as a seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic derived seed for an independent stream (fold index, ART
// round, pipeline stage). Mixing keeps nearby stream ids uncorrelated.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x632be59bd9b4e019ULL * (stream + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

// Small fixed-algorithm generator (xoshiro256**) so sequences are identical
// across standard libraries and platforms.
class Generator {
  public:
    explicit Generator(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, n). Modulo bias is negligible at the scales used here.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Fair coin.
    bool coin() { return (next() >> 63) != 0; }

    // Uniform double in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  private:
    std::uint64_t state_[4];
};

// Fisher-Yates shuffle driven by Generator::index.
template <typename T>
void shuffle(std::vector<T>& items, Generator& gen) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
        std::size_t j = gen.index(i + 1);
        if (i != j) std::swap(items[i], items[j]);
    }
}

} // namespace lexikit::rng
