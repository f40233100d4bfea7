#ifndef COVERCOUNT_RNG_HPP
#define COVERCOUNT_RNG_HPP

#include <cstdint>
#include <vector>

namespace covercount {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the whole algorithm
// fits in a dozen lines, so every platform and thread count reproduces the
// same stream from the same seed. Independent streams for parallel tasks are
// derived by hashing (seed, task index) through the same finalizer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (next() >> 63) != 0; }

    // Seeded Fisher-Yates shuffle of 0..k-1.
    std::vector<int> permutation(int k) {
        std::vector<int> p(k);
        for (int i = 0; i < k; ++i) p[i] = i;
        for (int i = k - 1; i > 0; --i) {
            int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(p[i], p[j]);
        }
        return p;
    }

private:
    std::uint64_t state_;
};

// Derived stream for task `index` of a run seeded with `seed`. Mixing the
// index through the finalizer keeps streams decorrelated regardless of how
// tasks are scheduled.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 h(seed ^ (0x100000001b3ULL * (index + 1)));
    return SplitMix64(h.next());
}

} // namespace covercount

#endif
