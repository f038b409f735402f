#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cyseg {

// Deterministic draws on top of std::mt19937. The engine's output sequence is
// pinned by the standard; std::*_distribution is not, so the transforms are
// hand-rolled to keep results byte-stable across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : eng_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

    std::uint32_t next_u32() { return eng_(); }

    // [0, 1)
    float uniform() { return static_cast<float>(next_u32() >> 8) * (1.0f / 16777216.0f); }
    float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

    // [0, n), rejection-sampled to stay unbiased
    std::uint32_t below(std::uint32_t n) {
        if (n <= 1) return 0;
        const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
        std::uint32_t r;
        do {
            r = next_u32();
        } while (r >= limit);
        return r % n;
    }

    // inclusive range
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1))); }

    // Box-Muller
    float normal(float sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * sigma;
        }
        float u1 = uniform();
        float u2 = uniform();
        if (u1 < 1e-12f) u1 = 1e-12f;
        const float r = std::sqrt(-2.0f * std::log(u1));
        const float a = 6.28318530717958648f * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a) * sigma;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937 eng_;
    bool have_spare_ = false;
    float spare_ = 0.0f;
};

// splitmix64 mix; used to derive independent streams from one master seed
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cyseg
