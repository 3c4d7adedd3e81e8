#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ratrel {

/// Exact arbitrary-precision rational, always in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) == 1.
///
/// Arithmetic is exact and closed; division by zero throws
/// std::domain_error. Values are immutable in spirit: every operation
/// returns a fresh canonical value, so instances can be shared across
/// threads freely.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, 3 == Rational(3)
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);

    /// Parses "p/q" or "p" with an optional leading sign, e.g. "-3/5".
    /// Throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_), canonical_tag{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_), canonical_tag{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_), canonical_tag{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_), canonical_tag{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_), canonical_tag{});
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  private:
    struct canonical_tag {};
    Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline Rational sq(const Rational& x) { return x * x; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Exact square root in Q: returns r with r*r == x when such a rational
/// exists, empty otherwise. Detection runs integer square-root tests on the
/// canonical numerator and denominator separately; no factorization.
/// Throws std::domain_error for x < 0.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Nearest multiple of 2^-bits (ties round up).
Rational dyadic_round(const Rational& x, int bits);

/// Smallest grid exponent k with 2^-k <= tol/4, clamped to [2, 64]. Used to
/// match dyadic search grids to a working tolerance.
int dyadic_bits_for(const Rational& tol);

}  // namespace ratrel
