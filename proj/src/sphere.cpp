#include "ratrel/sphere.hpp"

#include <stdexcept>

#include "ratrel/linalg.hpp"

namespace ratrel {

SpherePoint::SpherePoint(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("SpherePoint: empty coordinates");
    if (norm_sq(c_) != Rational(1))
        throw std::invalid_argument("SpherePoint: coordinates do not have exact unit norm");
}

SpherePoint stereographic(const std::vector<Rational>& params) {
    Rational s = norm_sq(params);
    Rational denom = Rational(1) + s;
    std::vector<Rational> c;
    c.reserve(params.size() + 1);
    c.push_back((Rational(1) - s) / denom);
    for (const auto& t : params) c.push_back(Rational(2) * t / denom);
    return SpherePoint(std::move(c));
}

DirectionApprox nearest_rational_direction(const std::vector<Rational>& target,
                                           const Rational& eps) {
    if (eps.sign() <= 0)
        throw std::invalid_argument("nearest_rational_direction: eps must be positive");
    size_t n = target.size();
    if (n == 0) throw std::invalid_argument("nearest_rational_direction: empty target");
    Rational nsq = norm_sq(target);
    if (nsq.is_zero()) throw std::domain_error("nearest_rational_direction: zero target");

    if (auto r = rational_sqrt(nsq)) {
        // Rational length: normalize exactly. Also covers the chart's
        // excluded point (-1, 0, ..., 0).
        std::vector<Rational> c(n);
        for (size_t i = 0; i < n; ++i) c[i] = target[i] / *r;
        return DirectionApprox{SpherePoint(std::move(c)), Rational(0)};
    }

    // |target| irrational, so n >= 2 and the true direction misses both
    // chart poles. Chase the stereographic preimage t* = spatial/(r + t0)
    // through shrinking enclosures of r = |target|.
    const Rational eps_sq = sq(eps);
    Rational r_width = min(eps, Rational(1)) / 8;
    int k = dyadic_bits_for(eps);
    for (int round = 0; round < 72; ++round) {
        Interval r_enc = sqrt_enclosure(nsq, r_width);
        Interval denom = r_enc + Interval(target[0]);
        if (denom.lo().sign() > 0) {
            std::vector<Rational> params(n - 1);
            for (size_t i = 1; i < n; ++i) {
                Interval t_enc = Interval(target[i]) / denom;
                params[i - 1] = dyadic_round(t_enc.mid(), k);
            }
            SpherePoint p = stereographic(params);

            // Both p and the true direction are unit vectors, so
            // |p - u/r|^2 = 2 - 2 <p, u>/r with <p, u> exact.
            Rational dot;
            for (size_t i = 0; i < n; ++i) dot += p[i] * target[i];
            Interval err_sq = Interval(Rational(2)) - Interval(Rational(2) * dot) / r_enc;
            if (err_sq.hi() < eps_sq) {
                Rational hi_arg = max(err_sq.hi(), Rational(0));
                Rational w = eps / 16;
                Rational bound = sqrt_upper_bound(hi_arg, w);
                while (bound >= eps) {
                    w /= 4;
                    bound = sqrt_upper_bound(hi_arg, w);
                }
                return DirectionApprox{std::move(p), std::move(bound)};
            }
        }
        r_width /= 16;
        if (k < 64) ++k;  // denominator bound doubles per round, capped at 2^64
    }
    throw SearchExhausted(
        "nearest_rational_direction: denominator bound 2^64 reached without certification");
}

}  // namespace ratrel
