#pragma once

// Shared generators for the seeded suites: exact Pythagorean data, random
// Poincare maps, random matrices.

#include "ratrel/approx.hpp"
#include "ratrel/minkowski.hpp"
#include "ratrel/sampling.hpp"
#include "ratrel/sphere.hpp"

namespace ratrel::testing {

// Chart parameter in [0, 1) with a small dyadic denominator.
inline Rational random_chart_param(SplitMix64& g) {
    return Rational(static_cast<long>(g.below(255)), 256);
}

inline PythagoreanSpeed random_pythagorean(SplitMix64& g) {
    return PythagoreanSpeed::from_chart(random_chart_param(g));
}

// Exact rational rotation of the (a, b) spatial plane, embedded in dim.
inline LorentzMatrix random_rotation_observer(SplitMix64& g, int dim) {
    int n = dim - 1;
    if (n < 2) {
        Mat flip = Mat::identity(dim);
        if (g.below(2) == 0) flip.at(1, 1) = Rational(-1);
        return LorentzMatrix(flip);
    }
    int a = static_cast<int>(g.below(static_cast<uint64_t>(n)));
    int b = static_cast<int>(g.below(static_cast<uint64_t>(n)));
    if (a == b) b = (b + 1) % n;
    SpherePoint dir = stereographic({random_chart_param(g) - Rational(1, 2)});
    return LorentzMatrix(embed_spatial(
        Mat::plane_block(n, a, b, dir[0], -dir[1], dir[1], dir[0])));
}

// Composition of a few exact boosts, rotations and a translation.
inline PoincareMap random_poincare(SplitMix64& g, int dim) {
    PoincareMap p = PoincareMap::identity(dim);
    int pieces = 1 + static_cast<int>(g.below(3));
    for (int i = 0; i < pieces; ++i) {
        switch (g.below(3)) {
            case 0: {
                int axis = 1 + static_cast<int>(g.below(static_cast<uint64_t>(dim - 1)));
                p = compose(PoincareMap(boost_matrix_axis(random_pythagorean(g), dim, axis),
                                        Vec::zero(dim)),
                            p);
                break;
            }
            case 1:
                p = compose(PoincareMap(random_rotation_observer(g, dim), Vec::zero(dim)), p);
                break;
            default:
                p = compose(PoincareMap::pure_translation(sample_point(g, dim)), p);
                break;
        }
    }
    return p;
}

inline Mat random_matrix(SplitMix64& g, int dim) {
    Mat m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = sample_rational(g);
    return m;
}

// Exact rational rotation matrix (useful as an exactly-known target).
inline Mat random_rotation_matrix(SplitMix64& g, int n) {
    if (n < 2) return Mat::identity(n);
    int a = static_cast<int>(g.below(static_cast<uint64_t>(n)));
    int b = static_cast<int>(g.below(static_cast<uint64_t>(n)));
    if (a == b) b = (b + 1) % n;
    SpherePoint dir = stereographic({random_chart_param(g) - Rational(1, 2)});
    return Mat::plane_block(n, a, b, dir[0], -dir[1], dir[1], dir[0]);
}

}  // namespace ratrel::testing
