#include "ratrel/rational.hpp"

#include <cctype>
#include <ostream>

namespace ratrel {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string num_part = s, den_part = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part))
        throw std::invalid_argument("Rational: malformed fraction \"" + text + "\"");
    mpz_class n(num_part), d(den_part);
    if (sgn(d) == 0)
        throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string s = q_.get_num().get_str();
    if (!is_integer()) s += "/" + q_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational dyadic_round(const Rational& x, int bits) {
    mpz_class grid = mpz_class(1) << static_cast<unsigned>(bits);
    Rational scaled = x * Rational(grid, 1) + Rational(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
    return Rational(fl, grid);
}

int dyadic_bits_for(const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("dyadic_bits_for: tolerance must be positive");
    // 2^k >= 4/tol, i.e. k >= log2(4 den / num).
    mpz_class q;
    mpz_class four_den = 4 * tol.den();
    mpz_cdiv_q(q.get_mpz_t(), four_den.get_mpz_t(), tol.num().get_mpz_t());
    if (q <= 1) return 2;
    int k = static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2));
    return k < 2 ? 2 : (k > 64 ? 64 : k);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("rational_sqrt: negative argument");
    // Canonical p/q is a rational square iff p and q are integer squares.
    const mpq_class& q = x.raw();
    if (mpz_perfect_square_p(mpq_numref(q.get_mpq_t())) == 0) return std::nullopt;
    if (mpz_perfect_square_p(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), mpq_numref(q.get_mpq_t()));
    mpz_sqrt(rd.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    return Rational(rn, rd);
}

}  // namespace ratrel
