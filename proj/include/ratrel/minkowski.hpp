#pragma once

#include "ratrel/linalg.hpp"

namespace ratrel {

/// The Minkowski quadratic form of a point pair:
/// time(x,y)^2 - space^2(x,y), computed exactly. Symmetric in x, y.
Rational minkowski_form(const Vec& x, const Vec& y);

/// eta = diag(1, -1, ..., -1), time-first signature.
Mat minkowski_eta(int dim);

/// True iff M^T eta M == eta holds with exact rational equality entrywise.
bool is_lorentz(const Mat& m);

/// Exact sum of squared entries. The operator norm satisfies
/// ||M||^2 <= frobenius_norm_sq(M), so certified Frobenius bounds dominate
/// the operator-norm statements they stand in for.
Rational frobenius_norm_sq(const Mat& m);

/// Square rational matrix satisfying the Lorentz condition M^T eta M == eta
/// exactly. The public constructor validates eagerly and rejects violations;
/// group operations (product, inverse) preserve the condition exactly and
/// skip re-validation.
class LorentzMatrix {
  public:
    explicit LorentzMatrix(Mat m);

    /// Bypasses validation. For internal group operations and for test
    /// fixtures that need deliberately broken "observers".
    static LorentzMatrix unchecked(Mat m);

    const Mat& mat() const { return m_; }
    int dim() const { return m_.dim(); }

    /// Exact inverse: eta M^T eta.
    LorentzMatrix inverse() const;

    friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);
    friend bool operator==(const LorentzMatrix& a, const LorentzMatrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LorentzMatrix& a, const LorentzMatrix& b) { return !(a == b); }

  private:
    struct unchecked_tag {};
    LorentzMatrix(Mat m, unchecked_tag) : m_(std::move(m)) {}

    Mat m_;
};

/// Affine map x -> L x + t with Lorentz linear part: preserves the Minkowski
/// form of differences, hence a Poincare transformation of Q^d.
class PoincareMap {
  public:
    PoincareMap(LorentzMatrix linear, Vec translation);

    static PoincareMap identity(int dim);
    static PoincareMap pure_translation(Vec t);

    int dim() const { return linear_.dim(); }
    const LorentzMatrix& linear() const { return linear_; }
    const Vec& translation() const { return translation_; }

    Vec apply(const Vec& x) const;

    friend bool operator==(const PoincareMap& a, const PoincareMap& b) {
        return a.linear_ == b.linear_ && a.translation_ == b.translation_;
    }
    friend bool operator!=(const PoincareMap& a, const PoincareMap& b) { return !(a == b); }

  private:
    LorentzMatrix linear_;
    Vec translation_;
};

/// compose(P, Q)(x) = P(Q(x)).
PoincareMap compose(const PoincareMap& p, const PoincareMap& q);
PoincareMap inverse(const PoincareMap& p);

}  // namespace ratrel
