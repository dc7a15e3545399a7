#pragma once

#include <cstdint>

namespace nbldpc {

// SplitMix64. Used everywhere randomness is needed so that results are
// bit-reproducible across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = n * ((~uint64_t{0}) / n);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(T& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Derives an independent stream for (master seed, epsilon index, trial index).
// Streams are a pure function of the triple, so parallel workers can draw the
// same trial pattern no matter how trials are scheduled.
inline uint64_t derive_stream_seed(uint64_t master, uint64_t a, uint64_t b) {
    SplitMix64 m(master ^ 0x6a09e667f3bcc909ULL);
    uint64_t s = m.next();
    SplitMix64 m2(s + 0x9e3779b97f4a7c15ULL * (a + 1));
    s = m2.next();
    SplitMix64 m3(s + 0x9e3779b97f4a7c15ULL * (b + 1));
    return m3.next();
}

} // namespace nbldpc
