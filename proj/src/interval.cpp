#include "ratrel/interval.hpp"

namespace ratrel {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational c1 = a.lo_ * b.lo_;
    Rational c2 = a.lo_ * b.hi_;
    Rational c3 = a.hi_ * b.lo_;
    Rational c4 = a.hi_ * b.hi_;
    Rational lo = min(min(c1, c2), min(c3, c4));
    Rational hi = max(max(c1, c2), max(c3, c4));
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
        throw std::domain_error("Interval: division by interval containing zero");
    Interval recip(Rational(1) / b.hi_, Rational(1) / b.lo_);
    return a * recip;
}

Interval square(const Interval& a) {
    Rational l2 = sq(a.lo()), h2 = sq(a.hi());
    if (a.lo().sign() <= 0 && a.hi().sign() >= 0) return Interval(Rational(0), max(l2, h2));
    return Interval(min(l2, h2), max(l2, h2));
}

Interval sqrt_enclosure(const Rational& x, const Rational& width_bound) {
    if (x.sign() < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    if (width_bound.sign() <= 0)
        throw std::invalid_argument("sqrt_enclosure: width bound must be positive");
    if (auto exact = rational_sqrt(x)) return Interval(*exact, *exact);

    // Not a perfect square: sqrt(p/q) = sqrt(p*q)/q. The integer square root
    // of p*q gives a bracket of width 1/q to seed bisection from.
    mpz_class p = x.num(), q = x.den();
    mpz_class n = p * q, s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    Rational lo(s, q), hi(s + 1, q);

    while (hi - lo > width_bound) {
        Rational mid = (lo + hi) / 2;
        if (sq(mid) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt_interval(const Interval& x, const Rational& width_bound) {
    if (x.hi().sign() < 0) throw std::domain_error("sqrt_interval: entirely negative interval");
    Rational lo_arg = x.lo().sign() < 0 ? Rational(0) : x.lo();
    Rational lo = sqrt_enclosure(lo_arg, width_bound).lo();
    Rational hi = sqrt_enclosure(x.hi(), width_bound).hi();
    return Interval(std::move(lo), std::move(hi));
}

Rational sqrt_upper_bound(const Rational& x, const Rational& width_bound) {
    return sqrt_enclosure(x, width_bound).hi();
}

}  // namespace ratrel
