#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratrel/interval.hpp"
#include "ratrel/minkowski.hpp"
#include "test_helpers.hpp"

using namespace ratrel;
using namespace ratrel::testing;

namespace {

Vec v4(long a, long b, long c, long d) {
    return Vec({Rational(a), Rational(b), Rational(c), Rational(d)});
}

Mat boost35_2d() {
    return Mat::from_rows({{Rational(5, 4), Rational(-3, 4)}, {Rational(-3, 4), Rational(5, 4)}});
}

}  // namespace

TEST_CASE("minkowski_form on canonical triples") {
    Vec o = Vec::zero(4);
    CHECK(minkowski_form(v4(1, 0, 0, 0), o) == Rational(1));
    CHECK(minkowski_form(v4(5, 3, 4, 0), o) == Rational(0));  // 25 - (9 + 16), lightlike
    CHECK(minkowski_form(v4(0, 1, 0, 0), o) == Rational(-1));
    CHECK(minkowski_form(o, v4(5, 3, 4, 0)) == minkowski_form(v4(5, 3, 4, 0), o));
    CHECK_THROWS_AS(minkowski_form(Vec::zero(3), o), std::invalid_argument);
}

TEST_CASE("is_lorentz") {
    CHECK(is_lorentz(Mat::identity(4)));
    CHECK(is_lorentz(boost35_2d()));
    Mat scaled = Mat::identity(4);
    scaled.at(1, 1) = 2;
    CHECK(!is_lorentz(scaled));
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(Mat::identity(4)) == Rational(4));
    CHECK(frobenius_norm_sq(Mat(3)) == Rational(0));
    CHECK(frobenius_norm_sq(boost35_2d() - Mat::identity(2)) == Rational(5, 4));
}

TEST_CASE("apply, compose, inverse") {
    PoincareMap id = PoincareMap::identity(4);
    CHECK(id.apply(v4(1, 2, 3, 4)) == v4(1, 2, 3, 4));

    PoincareMap shift = PoincareMap::pure_translation(v4(1, -2, 3, 0));
    CHECK(inverse(shift).translation() == v4(-1, 2, -3, 0));
    CHECK(compose(inverse(shift), shift) == id);

    PoincareMap boost(LorentzMatrix(boost35_2d()), Vec::zero(2));
    CHECK(compose(boost, inverse(boost)) == PoincareMap::identity(2));
}

TEST_CASE("LorentzMatrix validates eagerly, unchecked bypasses") {
    Mat bad = Mat::identity(4);
    bad.at(2, 2) = Rational(3);
    CHECK_THROWS_AS(LorentzMatrix{bad}, std::invalid_argument);
    LorentzMatrix fake = LorentzMatrix::unchecked(bad);
    CHECK(fake.mat() == bad);
}

TEST_CASE("Poincare maps preserve the Minkowski form exactly") {
    for (int dim : {2, 3, 4}) {
        SplitMix64 g(static_cast<uint64_t>(100 + dim));
        for (int i = 0; i < 40; ++i) {
            PoincareMap p = random_poincare(g, dim);
            Vec x = sample_point(g, dim);
            Vec y = sample_point(g, dim);
            CHECK(minkowski_form(p.apply(x), p.apply(y)) == minkowski_form(x, y));
        }
    }
}

TEST_CASE("group closure: compositions and inverses stay exactly Lorentz") {
    SplitMix64 g(104);
    for (int i = 0; i < 60; ++i) {
        PoincareMap p = random_poincare(g, 4);
        PoincareMap q = random_poincare(g, 4);
        CHECK(is_lorentz(compose(p, q).linear().mat()));
        CHECK(is_lorentz(inverse(p).linear().mat()));
        CHECK(compose(inverse(p), p) == PoincareMap::identity(4));
    }
}

TEST_CASE("frobenius submultiplicativity (squared form)") {
    SplitMix64 g(105);
    for (int i = 0; i < 100; ++i) {
        Mat a = random_matrix(g, 3);
        Mat b = random_matrix(g, 3);
        CHECK(frobenius_norm_sq(a * b) <= frobenius_norm_sq(a) * frobenius_norm_sq(b));
    }
}

TEST_CASE("triangle inequality certified via intervals") {
    SplitMix64 g(106);
    Rational w(1, 1000000);
    for (int i = 0; i < 50; ++i) {
        Mat a = random_matrix(g, 3);
        Mat b = random_matrix(g, 3);
        Interval na = sqrt_enclosure(frobenius_norm_sq(a), w);
        Interval nb = sqrt_enclosure(frobenius_norm_sq(b), w);
        Interval nsum = sqrt_enclosure(frobenius_norm_sq(a + b), w);
        CHECK(nsum.lo() <= na.hi() + nb.hi());
    }
}
