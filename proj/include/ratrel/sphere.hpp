#pragma once

#include <vector>

#include "ratrel/interval.hpp"
#include "ratrel/rational.hpp"

namespace ratrel {

/// Point on the unit sphere of Q^n: sum of squared coordinates equals 1
/// with exact rational equality, checked at construction.
class SpherePoint {
  public:
    explicit SpherePoint(std::vector<Rational> coords);

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return c_; }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) { return !(a == b); }

  private:
    std::vector<Rational> c_;
};

/// Stereographic chart of the unit sphere of Q^n from n-1 rational
/// parameters: with s = |t|^2,
///   t -> ( (1-s)/(1+s), 2 t_1/(1+s), ..., 2 t_{n-1}/(1+s) ).
/// Lands exactly on the sphere and hits every rational sphere point except
/// (-1, 0, ..., 0). Injective.
SpherePoint stereographic(const std::vector<Rational>& params);

struct DirectionApprox {
    SpherePoint point;
    /// Certified rational upper bound on |point - target/|target||, produced
    /// by interval arithmetic (zero when the target direction is exactly
    /// rational).
    Rational error_bound;
};

/// Rational unit vector within eps of the direction of `target`.
///
/// The possibly irrational |target| is carried as a shrinking interval
/// enclosure; candidate chart parameters are taken from nested dyadic grids
/// around the enclosed stereographic preimage, doubling the denominator
/// bound per round until the certificate clears eps. Denominators are
/// capped at 2^64; exceeding the cap raises SearchExhausted rather than
/// returning an uncertified answer.
///
/// Throws std::domain_error for a zero target and std::invalid_argument for
/// eps <= 0.
DirectionApprox nearest_rational_direction(const std::vector<Rational>& target,
                                           const Rational& eps);

}  // namespace ratrel
