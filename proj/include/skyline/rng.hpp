#pragma once

// Seeded random draws with pinned algorithms. std::shuffle and the standard
// <random> distributions are implementation-defined, which would break
// byte-reproducibility of seeded runs across standard libraries; the engine
// and the generators draw through this wrapper instead.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace skyline {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform01_pos() {
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    // Box-Muller transform.
    double normal(double mean, double stddev) {
        const double u1 = uniform01_pos();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::mt19937_64 eng_;
};

// Fisher-Yates shuffle driven by Rng::below.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace skyline
