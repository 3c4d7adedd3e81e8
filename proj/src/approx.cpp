#include "ratrel/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratrel {

namespace {

// Rational upper bound on sqrt(x_sq) strictly below `cap` (requires
// x_sq < cap^2, which every caller has already certified).
Rational norm_upper_bound_below(const Rational& x_sq, const Rational& cap) {
    Rational arg = max(x_sq, Rational(0));
    Rational w = cap / 16;
    Rational bound = sqrt_upper_bound(arg, w);
    while (bound >= cap) {
        w /= 4;
        bound = sqrt_upper_bound(arg, w);
    }
    return bound;
}

Rational clamp_chart_param(Rational t, int bits) {
    if (t.sign() < 0) return Rational(0);
    if (t >= Rational(1)) return Rational(1) - Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(bits));
    return t;
}

}  // namespace

PythagoreanSpeed::PythagoreanSpeed(Rational w, Rational r) : w_(std::move(w)), r_(std::move(r)) {
    if (sq(w_) + sq(r_) != Rational(1))
        throw std::invalid_argument("PythagoreanSpeed: w^2 + r^2 != 1");
    if (w_.sign() < 0 || w_ >= Rational(1))
        throw std::invalid_argument("PythagoreanSpeed: w must lie in [0, 1)");
    if (r_.sign() <= 0) throw std::invalid_argument("PythagoreanSpeed: r must be positive");
}

std::optional<PythagoreanSpeed> PythagoreanSpeed::from_speed(const Rational& v) {
    if (v.sign() < 0 || v >= Rational(1))
        throw std::domain_error("PythagoreanSpeed: speed must satisfy 0 <= v < 1");
    auto r = rational_sqrt(Rational(1) - sq(v));
    if (!r) return std::nullopt;
    return PythagoreanSpeed(v, *r);
}

PythagoreanSpeed PythagoreanSpeed::from_chart(const Rational& t) {
    if (t.sign() < 0 || t >= Rational(1))
        throw std::invalid_argument("PythagoreanSpeed::from_chart: t must lie in [0, 1)");
    Rational denom = Rational(1) + sq(t);
    return PythagoreanSpeed(Rational(2) * t / denom, (Rational(1) - sq(t)) / denom);
}

LorentzMatrix boost_matrix(const PythagoreanSpeed& s, int dim) {
    return boost_matrix_axis(s, dim, 1);
}

LorentzMatrix boost_matrix_axis(const PythagoreanSpeed& s, int dim, int space_axis) {
    if (dim < 2) throw std::invalid_argument("boost_matrix: dimension must be at least 2");
    if (space_axis < 1 || space_axis >= dim)
        throw std::invalid_argument("boost_matrix: space axis out of range");
    Rational g = s.gamma();
    Rational wg = s.w() * g;
    return LorentzMatrix(Mat::plane_block(dim, 0, space_axis, g, -wg, -wg, g));
}

std::pair<PythagoreanSpeed, Certificate> approx_boost(const Rational& v, const Rational& eps,
                                                      int dim) {
    if (v.sign() < 0 || v >= Rational(1))
        throw std::domain_error("approx_boost: speed must satisfy 0 <= v < 1");
    if (eps.sign() <= 0) throw std::invalid_argument("approx_boost: eps must be positive");
    if (dim < 2) throw std::invalid_argument("approx_boost: dimension must be at least 2");

    if (auto exact = PythagoreanSpeed::from_speed(v)) {
        Certificate cert{boost_matrix(*exact, dim).mat(), BoostSpec{v}, Rational(0), Rational(0)};
        return {*exact, std::move(cert)};
    }

    // gamma(v) is irrational. Walk the circle chart toward the preimage
    // t* = v / (1 + sqrt(1 - v^2)), halving delta until the certificate
    // from the norm formula
    //   ||B_v - B_w||_F^2 = 2 (g_v - g_w)^2 + 2 (v g_v - w g_w)^2
    // clears eps. Every quantity involving g_v is an interval enclosure.
    const Rational one_minus_vsq = Rational(1) - sq(v);
    const Rational eps_sq = sq(eps);
    Rational delta = min(eps, Rational(1)) / 2;
    Rational width = delta / 8;
    for (int round = 0; round < 96; ++round) {
        int bits = dyadic_bits_for(delta);
        Interval defect = sqrt_enclosure(one_minus_vsq, width);
        Interval t_enc = Interval(v) / (Interval(Rational(1)) + defect);
        Rational t = clamp_chart_param(dyadic_round(t_enc.mid(), bits), bits);
        PythagoreanSpeed cand = PythagoreanSpeed::from_chart(t);

        if (abs(v - cand.w()) < delta) {
            Interval g_v = Interval(Rational(1)) / defect;
            Interval d_gamma = g_v - Interval(cand.gamma());
            Interval d_mixed = Interval(v) * g_v - Interval(cand.w() * cand.gamma());
            Interval f_sq = Interval(Rational(2)) * square(d_gamma) +
                            Interval(Rational(2)) * square(d_mixed);
            if (f_sq.hi() < eps_sq && abs(v - cand.w()) < eps) {
                Rational bound = norm_upper_bound_below(f_sq.hi(), eps);
                Certificate cert{boost_matrix(cand, dim).mat(), BoostSpec{v}, delta,
                                 std::move(bound)};
                return {cand, std::move(cert)};
            }
        }
        delta /= 2;
        width /= 16;
    }
    throw SearchExhausted("approx_boost: certificate did not clear eps within depth limit");
}

std::pair<Mat, Rational> compose_with_bound(const std::vector<BoundedFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("compose_with_bound: no factors");
    for (const auto& f : factors)
        if (f.error_bound.sign() < 0 || f.target_norm_bound.sign() < 0)
            throw std::invalid_argument("compose_with_bound: bounds must be nonnegative");

    Mat product = factors[0].matrix;
    Rational err = factors[0].error_bound;
    Rational norm = factors[0].target_norm_bound;
    for (size_t i = 1; i < factors.size(); ++i) {
        const auto& f = factors[i];
        require_same_dim(product, f.matrix, "compose_with_bound");
        // State so far is B (error err, target norm <= norm); the incoming
        // factor is A. ||B_t A_t - B A|| <= eA ||B_t|| + eA eB + eB ||A_t||.
        err = f.error_bound * norm + f.error_bound * err + err * f.target_norm_bound;
        norm = norm * f.target_norm_bound;
        product = product * f.matrix;
    }
    return {std::move(product), std::move(err)};
}

namespace {

struct RotationFactor {
    Mat matrix;
    Rational error_bound;  // Frobenius, certified; zero for exact targets
};

// Planar rotation toward (a, b): exact when |(a, b)| is rational, otherwise
// certified through nearest_rational_direction with budget eps_f.
RotationFactor build_rotation(const PlanarRotation& rot, const Rational& eps_f, int n) {
    if (rot.axis_a == rot.axis_b || rot.axis_a < 0 || rot.axis_b < 0 || rot.axis_a >= n ||
        rot.axis_b >= n)
        throw std::invalid_argument("approx_orthogonal: bad rotation axis pair");
    if (rot.toward_x.is_zero() && rot.toward_y.is_zero())
        throw std::invalid_argument("approx_orthogonal: rotation target direction is zero");

    DirectionApprox dir = nearest_rational_direction({rot.toward_x, rot.toward_y}, eps_f / 2);
    const Rational& c = dir.point[0];
    const Rational& s = dir.point[1];
    Mat m = Mat::plane_block(n, rot.axis_a, rot.axis_b, c, -s, s, c);
    if (dir.error_bound.is_zero()) return {std::move(m), Rational(0)};
    // The matrices differ only in the 2x2 block, so the Frobenius gap is
    // sqrt(2) times the direction gap.
    Rational fb = norm_upper_bound_below(Rational(2) * sq(dir.error_bound), eps_f);
    return {std::move(m), std::move(fb)};
}

Mat flip_matrix(const std::vector<int>& axes, int n) {
    Mat m = Mat::identity(n);
    for (int a : axes) {
        if (a < 0 || a >= n) throw std::invalid_argument("approx_orthogonal: flip axis out of range");
        m.at(a, a) = Rational(-1);
    }
    return m;
}

}  // namespace

bool is_orthogonal(const Mat& m) { return m.transpose() * m == Mat::identity(m.dim()); }

std::pair<Mat, Certificate> approx_orthogonal(const OrthogonalSpec& spec, const Rational& eps,
                                              int n) {
    if (n < 1) throw std::invalid_argument("approx_orthogonal: dimension must be positive");
    if (eps.sign() <= 0) throw std::invalid_argument("approx_orthogonal: eps must be positive");

    size_t inexact = 0;
    for (const auto& rot : spec.rotations) {
        Rational nsq = sq(rot.toward_x) + sq(rot.toward_y);
        if (nsq.is_zero())
            throw std::invalid_argument("approx_orthogonal: rotation target direction is zero");
        if (!rational_sqrt(nsq)) ++inexact;
    }

    Rational eps_f =
        min(eps, Rational(1)) / Rational(2 * static_cast<long>(std::max<size_t>(1, inexact)));
    for (int round = 0; round < 64; ++round) {
        // Factors in product order: flips leftmost, then rotations with the
        // first-listed one applied first (rightmost).
        std::vector<BoundedFactor> factors;
        if (!spec.flip_axes.empty())
            factors.push_back({flip_matrix(spec.flip_axes, n), Rational(0), Rational(1)});
        for (auto it = spec.rotations.rbegin(); it != spec.rotations.rend(); ++it) {
            RotationFactor rf = build_rotation(*it, eps_f, n);
            factors.push_back({std::move(rf.matrix), std::move(rf.error_bound), Rational(1)});
        }
        if (factors.empty()) {
            Mat id = Mat::identity(n);
            return {id, Certificate{id, spec, Rational(0), Rational(0)}};
        }

        auto [product, total] = compose_with_bound(factors);
        if (total < eps) {
            if (!is_orthogonal(product))
                throw std::logic_error("approx_orthogonal: product lost orthogonality");
            Certificate cert{product, spec, eps_f, std::move(total)};
            return {std::move(product), std::move(cert)};
        }
        eps_f /= 2;
    }
    throw SearchExhausted("approx_orthogonal: certificate did not clear eps within depth limit");
}

Mat embed_spatial(const Mat& s) {
    Mat m = Mat::identity(s.dim() + 1);
    for (int r = 0; r < s.dim(); ++r)
        for (int c = 0; c < s.dim(); ++c) m.at(r + 1, c + 1) = s.at(r, c);
    return m;
}

std::pair<PoincareMap, Certificate> approx_poincare(const PoincareSpec& spec, const Rational& eps,
                                                    int dim) {
    if (dim < 2) throw std::invalid_argument("approx_poincare: dimension must be at least 2");
    if (eps.sign() <= 0) throw std::invalid_argument("approx_poincare: eps must be positive");
    if (spec.translation.dim() != dim)
        throw std::invalid_argument("approx_poincare: translation dimension mismatch");
    if (abs(spec.boost.speed) >= Rational(1))
        throw std::domain_error("approx_poincare: boost speed must satisfy |v| < 1");

    const int n = dim - 1;
    const Rational speed = abs(spec.boost.speed);
    const bool flip_boost = spec.boost.speed.sign() < 0;

    // Operator-norm bound of the boost target: gamma (1 + v), its largest
    // singular value. Rational when the speed is Pythagorean, an interval
    // upper bound otherwise.
    Rational boost_norm_bound(1);
    if (!speed.is_zero()) {
        if (auto exact = PythagoreanSpeed::from_speed(speed)) {
            boost_norm_bound = exact->gamma() * (Rational(1) + speed);
        } else {
            Interval defect = sqrt_enclosure(Rational(1) - sq(speed), Rational(1, 1024));
            boost_norm_bound = ((Interval(Rational(1)) + Interval(speed)) / defect).hi();
        }
    }

    Rational eps_f = min(eps, Rational(1)) / (Rational(6) * max(Rational(1), boost_norm_bound));
    for (int round = 0; round < 64; ++round) {
        auto [pre_m, pre_cert] = approx_orthogonal(spec.pre, eps_f, n);
        auto [boost_ps, boost_cert] = approx_boost(speed, eps_f, dim);
        auto [post_m, post_cert] = approx_orthogonal(spec.post, eps_f, n);

        std::vector<BoundedFactor> factors;
        factors.push_back({embed_spatial(pre_m), pre_cert.error_bound, Rational(1)});
        if (flip_boost) {
            // B_{-v} = F B_v F with F the exact flip of the first spatial
            // axis; contributes no error.
            Mat f = embed_spatial(flip_matrix({0}, n));
            factors.push_back({f, Rational(0), Rational(1)});
            factors.push_back({boost_matrix(boost_ps, dim).mat(), boost_cert.error_bound,
                               boost_norm_bound});
            factors.push_back({std::move(f), Rational(0), Rational(1)});
        } else {
            factors.push_back({boost_matrix(boost_ps, dim).mat(), boost_cert.error_bound,
                               boost_norm_bound});
        }
        factors.push_back({embed_spatial(post_m), post_cert.error_bound, Rational(1)});

        auto [product, total] = compose_with_bound(factors);
        if (total < eps) {
            LorentzMatrix lin(product);  // eager re-validation of the exact invariant
            Certificate cert{std::move(product), spec, eps_f, std::move(total)};
            return {PoincareMap(std::move(lin), spec.translation), std::move(cert)};
        }
        eps_f /= 2;
    }
    throw SearchExhausted("approx_poincare: certificate did not clear eps within depth limit");
}

Mat reflection_to(const SpherePoint& p) {
    int n = p.dim();
    std::vector<Rational> q(static_cast<size_t>(n));
    q[0] = Rational(1) - p[0];
    for (int i = 1; i < n; ++i) q[static_cast<size_t>(i)] = -p[i];
    Rational qq = norm_sq(q);
    if (qq.is_zero()) return Mat::identity(n);  // p == e_1
    Mat m = Mat::identity(n);
    Rational scale = Rational(2) / qq;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) -= scale * q[static_cast<size_t>(r)] * q[static_cast<size_t>(c)];
    return m;
}

ObserverApprox observer_with_velocity(const std::vector<Rational>& velocity, const Rational& eps,
                                      int dim) {
    if (dim < 2) throw std::invalid_argument("observer_with_velocity: dimension must be at least 2");
    if (static_cast<int>(velocity.size()) != dim - 1)
        throw std::invalid_argument("observer_with_velocity: velocity must have d-1 components");
    if (eps.sign() <= 0) throw std::invalid_argument("observer_with_velocity: eps must be positive");
    const Rational speed_sq = norm_sq(velocity);
    if (speed_sq >= Rational(1))
        throw std::domain_error("observer_with_velocity: speed must be below light (|v| < 1)");

    if (speed_sq.is_zero()) {
        PoincareMap id = PoincareMap::identity(dim);
        Certificate cert{Mat::identity(dim), velocity, Rational(0), Rational(0)};
        return {std::move(id), velocity, std::move(cert)};
    }

    // A boost of Pythagorean speed w conjugated by a spatial reflection
    // sending e_1 to p has coordinate velocity exactly -w p, so aim p at
    // the negated target direction and compare achieved vs requested with
    // plain rational arithmetic.
    std::vector<Rational> negated(velocity.size());
    for (size_t i = 0; i < velocity.size(); ++i) negated[i] = -velocity[i];

    const Rational eps_sq = sq(eps);
    const std::optional<Rational> exact_speed = rational_sqrt(speed_sq);
    Rational delta = min(eps, Rational(1)) / 2;
    Rational width = delta / 8;
    for (int round = 0; round < 96; ++round) {
        DirectionApprox dir = nearest_rational_direction(negated, delta);

        std::optional<PythagoreanSpeed> ps;
        if (exact_speed) ps = PythagoreanSpeed::from_speed(*exact_speed);
        if (!ps) {
            int bits = dyadic_bits_for(delta);
            Interval s_enc = exact_speed ? Interval(*exact_speed)
                                         : sqrt_enclosure(speed_sq, width);
            Interval defect = sqrt_enclosure(Rational(1) - speed_sq, width);
            Interval t_enc = s_enc / (Interval(Rational(1)) + defect);
            Rational t = clamp_chart_param(dyadic_round(t_enc.mid(), bits), bits);
            ps = PythagoreanSpeed::from_chart(t);
        }

        Mat h = reflection_to(dir.point);
        Mat conj = embed_spatial(h);
        Mat lin = conj * boost_matrix(*ps, dim).mat() * conj;  // reflection is self-inverse

        Vec image = lin * Vec::unit_time(dim);
        std::vector<Rational> achieved(velocity.size());
        Rational err_sq;
        for (size_t i = 0; i < velocity.size(); ++i) {
            achieved[i] = image[static_cast<int>(i) + 1] / image[0];
            err_sq += sq(achieved[i] - velocity[i]);
        }

        if (err_sq < eps_sq) {
            Rational bound = err_sq.is_zero() ? Rational(0) : norm_upper_bound_below(err_sq, eps);
            LorentzMatrix lorentz(lin);
            Certificate cert{std::move(lin), velocity, delta, std::move(bound)};
            return {PoincareMap(std::move(lorentz), Vec::zero(dim)), std::move(achieved),
                    std::move(cert)};
        }
        delta /= 2;
        width /= 16;
    }
    throw SearchExhausted("observer_with_velocity: velocity bound not met within depth limit");
}

}  // namespace ratrel
