#include "ratrel/minkowski.hpp"

#include <stdexcept>

namespace ratrel {

Rational minkowski_form(const Vec& x, const Vec& y) {
    require_same_dim(x, y, "minkowski_form");
    return sq(time_diff(x, y)) - spatial_dist_sq(x, y);
}

Mat minkowski_eta(int dim) {
    Mat m(dim);
    m.at(0, 0) = 1;
    for (int i = 1; i < dim; ++i) m.at(i, i) = -1;
    return m;
}

bool is_lorentz(const Mat& m) {
    Mat eta = minkowski_eta(m.dim());
    return m.transpose() * eta * m == eta;
}

Rational frobenius_norm_sq(const Mat& m) {
    Rational acc;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) acc += sq(m.at(r, c));
    return acc;
}

LorentzMatrix::LorentzMatrix(Mat m) : m_(std::move(m)) {
    if (!is_lorentz(m_))
        throw std::invalid_argument("LorentzMatrix: M^T eta M != eta");
}

LorentzMatrix LorentzMatrix::unchecked(Mat m) {
    return LorentzMatrix(std::move(m), unchecked_tag{});
}

LorentzMatrix LorentzMatrix::inverse() const {
    Mat eta = minkowski_eta(dim());
    return LorentzMatrix(eta * m_.transpose() * eta, unchecked_tag{});
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix(a.m_ * b.m_, LorentzMatrix::unchecked_tag{});
}

PoincareMap::PoincareMap(LorentzMatrix linear, Vec translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (linear_.dim() != translation_.dim())
        throw std::invalid_argument("PoincareMap: linear/translation dimension mismatch");
}

PoincareMap PoincareMap::identity(int dim) {
    return PoincareMap(LorentzMatrix(Mat::identity(dim)), Vec::zero(dim));
}

PoincareMap PoincareMap::pure_translation(Vec t) {
    int d = t.dim();
    return PoincareMap(LorentzMatrix(Mat::identity(d)), std::move(t));
}

Vec PoincareMap::apply(const Vec& x) const { return linear_.mat() * x + translation_; }

PoincareMap compose(const PoincareMap& p, const PoincareMap& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("compose: dimension mismatch");
    // (p o q)(x) = Lp (Lq x + tq) + tp
    LorentzMatrix lin = p.linear() * q.linear();
    Vec trans = p.linear().mat() * q.translation() + p.translation();
    return PoincareMap(std::move(lin), std::move(trans));
}

PoincareMap inverse(const PoincareMap& p) {
    LorentzMatrix inv = p.linear().inverse();
    Vec trans = -Rational(1) * (inv.mat() * p.translation());
    return PoincareMap(std::move(inv), std::move(trans));
}

}  // namespace ratrel
