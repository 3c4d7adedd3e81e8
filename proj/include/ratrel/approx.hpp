#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ratrel/interval.hpp"
#include "ratrel/minkowski.hpp"
#include "ratrel/sphere.hpp"

namespace ratrel {

/// Rational speed w in [0, 1) whose defect r = sqrt(1 - w^2) is rational
/// too (r > 0). Boosts built from such speeds take rational points to
/// rational points; gamma = 1/r is rational as well.
class PythagoreanSpeed {
  public:
    PythagoreanSpeed(Rational w, Rational r);

    /// Exact lift of a plain speed: succeeds iff sqrt(1 - v^2) is rational.
    static std::optional<PythagoreanSpeed> from_speed(const Rational& v);

    /// Circle-chart point for parameter t in [0, 1):
    /// w = 2t/(1+t^2), r = (1-t^2)/(1+t^2).
    static PythagoreanSpeed from_chart(const Rational& t);

    const Rational& w() const { return w_; }
    const Rational& r() const { return r_; }
    Rational gamma() const { return Rational(1) / r_; }

  private:
    Rational w_, r_;
};

/// Target boost velocity; |speed| < 1.
struct BoostSpec {
    Rational speed;
};

/// One factored target rotation: in the plane spanned by axes (axis_a,
/// axis_b), rotate e_{axis_a} toward the direction (toward_x, toward_y)
/// (not both zero; normalization may be irrational).
struct PlanarRotation {
    int axis_a = 0;
    int axis_b = 1;
    Rational toward_x;
    Rational toward_y;
};

/// Orthogonal target in factored form: planar rotations applied in list
/// order, then an optional sign flip of the listed axes. Any orthogonal map
/// admits such a factorization.
struct OrthogonalSpec {
    std::vector<PlanarRotation> rotations;
    std::vector<int> flip_axes;
};

/// Factored Poincare target: translation + pre . boost . post, where pre
/// and post act on the spatial axes and the boost mixes time with the first
/// spatial axis.
struct PoincareSpec {
    Vec translation;
    BoostSpec boost;
    OrthogonalSpec pre;
    OrthogonalSpec post;
};

/// Result of a certified approximation. The output matrix satisfies its
/// exact structural identity (Lorentz or orthogonality) independently of
/// eps; error_bound is a rational Frobenius-norm upper bound on
/// ||target - output|| obtained through interval arithmetic only.
struct Certificate {
    Mat output;
    std::variant<std::monostate, BoostSpec, OrthogonalSpec, PoincareSpec, std::vector<Rational>>
        target_spec;
    Rational delta;
    Rational error_bound;
};

/// Boost mixing time with the first spatial axis:
/// 2x2 block [[1/r, -w/r], [-w/r, 1/r]] on coordinates (0, 1), identity
/// elsewhere. Satisfies the Lorentz condition exactly.
LorentzMatrix boost_matrix(const PythagoreanSpeed& s, int dim);

/// Same block placed on coordinates (0, space_axis), 1 <= space_axis < dim.
LorentzMatrix boost_matrix_axis(const PythagoreanSpeed& s, int dim, int space_axis);

/// Pythagorean speed w with certified ||B_v - B_w||_F < eps and
/// |v - w| < eps. Returns v itself with a zero bound when v is already
/// Pythagorean. Pre: 0 <= v < 1.
std::pair<PythagoreanSpeed, Certificate> approx_boost(const Rational& v, const Rational& eps,
                                                      int dim);

struct BoundedFactor {
    Mat matrix;                  // exact output factor
    Rational error_bound;        // certified Frobenius bound ||target_i - matrix||
    Rational target_norm_bound;  // certified upper bound on ||target_i|| (operator norm)
};

/// Exact product factors[0] * factors[1] * ... (leftmost applied last)
/// together with a total error bound folded one factor at a time through
///   ||BA - B'A'|| <= e1 ||B|| + e1 e2 + e2 ||A||.
/// The true composition of the targets lies within the returned bound of
/// the returned product.
std::pair<Mat, Rational> compose_with_bound(const std::vector<BoundedFactor>& factors);

/// Exactly orthogonal rational matrix within eps (Frobenius, certified) of
/// the factored target. Per-factor budgets start at eps/(2k) with all
/// factor norms 1 and halve until the composed certificate clears eps.
std::pair<Mat, Certificate> approx_orthogonal(const OrthogonalSpec& spec, const Rational& eps,
                                              int n);

/// Rational Poincare map with exactly-Lorentz linear part and certified
/// total Frobenius bound < eps against the factored target. The translation
/// is carried exactly and contributes no error.
std::pair<PoincareMap, Certificate> approx_poincare(const PoincareSpec& spec, const Rational& eps,
                                                    int dim);

struct ObserverApprox {
    PoincareMap map;                 // zero translation, exactly Lorentz
    std::vector<Rational> achieved;  // spatial velocity of map at the unit time vector, exact
    Certificate certificate;
};

/// Rational Lorentz map whose coordinate velocity (spatial part of the
/// image of (1,0,...,0) divided by its time part) lies within eps of the
/// requested sub-light velocity, verified by exact arithmetic. Orthochronous
/// by construction.
ObserverApprox observer_with_velocity(const std::vector<Rational>& velocity, const Rational& eps,
                                      int dim);

/// Householder reflection with H e_1 = p; identity when p == e_1. Exact
/// rational, orthogonal, self-inverse.
Mat reflection_to(const SpherePoint& p);

/// diag(1, S): spatial map extended to spacetime fixing time. Lorentz iff S
/// is orthogonal.
Mat embed_spatial(const Mat& s);

bool is_orthogonal(const Mat& m);

}  // namespace ratrel
