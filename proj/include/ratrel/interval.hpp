#pragma once

#include <stdexcept>
#include <string>

#include "ratrel/rational.hpp"

namespace ratrel {

/// Thrown when a certified search hits its configured depth limit without
/// meeting the requested bound. Never a silent wrong answer.
class SearchExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// This is the certification plumbing: every irrational quantity in the
/// pipeline (square roots from norms) is carried as an enclosure. Endpoint
/// arithmetic over Q is exact, so +, -, *, / enclose the true real result
/// with no rounding step; only sqrt introduces width.
class Interval {
  public:
    Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    /// Text form "[lo, hi]" with canonical fraction endpoints.
    std::string str() const;

    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Division; b must not contain zero.
    friend Interval operator/(const Interval& a, const Interval& b);

  private:
    Rational lo_, hi_;
};

/// Tight enclosure of {x^2 : x in a}; sharper than a * a when a straddles 0.
Interval square(const Interval& a);

/// Interval containing sqrt(x) with hi - lo <= width_bound. Degenerate
/// [r, r] when x is a perfect rational square. Refinement is bisection
/// seeded from an integer-square-root bracket; every comparison is an exact
/// rational one, so lo^2 <= x <= hi^2 holds literally.
///
/// Throws std::domain_error for x < 0 and std::invalid_argument for
/// width_bound <= 0.
Interval sqrt_enclosure(const Rational& x, const Rational& width_bound);

/// Enclosure of sqrt over an interval of nonnegative values. A lo endpoint
/// below zero is clamped to zero: enclosures of nonnegative reals can dip
/// negative after subtraction. Throws std::domain_error when hi < 0.
Interval sqrt_interval(const Interval& x, const Rational& width_bound);

/// Certified rational upper bound on sqrt(x), strictly tighter than
/// sqrt(x) + width_bound.
Rational sqrt_upper_bound(const Rational& x, const Rational& width_bound);

}  // namespace ratrel
