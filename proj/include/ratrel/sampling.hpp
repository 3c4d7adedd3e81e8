#pragma once

#include <cstdint>
#include <vector>

#include "ratrel/linalg.hpp"
#include "ratrel/rational.hpp"

namespace ratrel {

/// splitmix64: tiny, portable, deterministic. All sampling in the harness
/// and the seeded test suites goes through this so that identical seeds
/// give identical runs on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) { return next() % bound; }

  private:
    uint64_t state_;
};

/// Independent per-sample stream: results do not depend on evaluation order.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    SplitMix64 g(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    g.next();
    return g.next();
}

/// Random rational with numerator uniform in [-2^16, 2^16] and denominator
/// uniform in [1, 2^16]: exercises non-integer coordinates while keeping
/// exact-arithmetic cost bounded.
inline Rational sample_rational(SplitMix64& g) {
    long num = static_cast<long>(g.below(2 * 65536 + 1)) - 65536;
    long den = static_cast<long>(g.below(65536)) + 1;
    return Rational(num, den);
}

inline Rational sample_nonzero_rational(SplitMix64& g) {
    for (;;) {
        Rational r = sample_rational(g);
        if (!r.is_zero()) return r;
    }
}

inline Vec sample_point(SplitMix64& g, int dim) {
    std::vector<Rational> c(static_cast<size_t>(dim));
    for (auto& x : c) x = sample_rational(g);
    return Vec(std::move(c));
}

/// Spatial velocity with |v| < 1 exactly: raw samples scaled by
/// 1 / (1 + sum |raw_i|), so the squared norm stays strictly below 1.
inline std::vector<Rational> sample_sublight_velocity(SplitMix64& g, int dim) {
    std::vector<Rational> v(static_cast<size_t>(dim - 1));
    Rational abs_sum;
    for (auto& x : v) {
        x = sample_rational(g);
        abs_sum += abs(x);
    }
    Rational scale = Rational(1) / (Rational(1) + abs_sum);
    for (auto& x : v) x *= scale;
    return v;
}

}  // namespace ratrel
