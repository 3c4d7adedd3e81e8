#include "ratrel/linalg.hpp"

#include <stdexcept>

namespace ratrel {

Vec::Vec(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw std::invalid_argument("Vec: dimension must be at least 2");
}

Vec Vec::zero(int dim) { return Vec(std::vector<Rational>(static_cast<size_t>(dim))); }

Vec Vec::unit_time(int dim) {
    Vec v = zero(dim);
    v[0] = 1;
    return v;
}

Vec Vec::from_parts(const Rational& t, const std::vector<Rational>& s) {
    std::vector<Rational> c;
    c.reserve(s.size() + 1);
    c.push_back(t);
    c.insert(c.end(), s.begin(), s.end());
    return Vec(std::move(c));
}

std::vector<Rational> Vec::spatial() const {
    return std::vector<Rational>(c_.begin() + 1, c_.end());
}

bool Vec::spatial_is_zero() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "Vec addition");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Vec(std::move(c));
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "Vec subtraction");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return Vec(std::move(c));
}

Vec operator*(const Rational& s, const Vec& v) {
    std::vector<Rational> c(v.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * v.c_[i];
    return Vec(std::move(c));
}

Rational norm_sq(const std::vector<Rational>& v) {
    Rational acc;
    for (const auto& x : v) acc += sq(x);
    return acc;
}

Rational spatial_dist_sq(const Vec& x, const Vec& y) {
    require_same_dim(x, y, "spatial_dist_sq");
    Rational acc;
    for (int i = 1; i < x.dim(); ++i) acc += sq(x[i] - y[i]);
    return acc;
}

Rational time_diff(const Vec& x, const Vec& y) {
    require_same_dim(x, y, "time_diff");
    return x[0] - y[0];
}

Mat::Mat(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    if (dim < 1) throw std::invalid_argument("Mat: dimension must be positive");
}

Mat Mat::identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int d = static_cast<int>(rows.size());
    Mat m(d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != d)
            throw std::invalid_argument("Mat: ragged rows");
        for (int c = 0; c < d; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::plane_block(int dim, int a, int b, const Rational& m00, const Rational& m01,
                     const Rational& m10, const Rational& m11) {
    if (a == b || a < 0 || b < 0 || a >= dim || b >= dim)
        throw std::invalid_argument("Mat::plane_block: bad axis pair");
    Mat m = identity(dim);
    m.at(a, a) = m00;
    m.at(a, b) = m01;
    m.at(b, a) = m10;
    m.at(b, b) = m11;
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    require_same_dim(a, b, "Mat multiplication");
    Mat m(a.dim_);
    for (int r = 0; r < a.dim_; ++r)
        for (int c = 0; c < a.dim_; ++c) {
            Rational acc;
            for (int k = 0; k < a.dim_; ++k) acc += a.at(r, k) * b.at(k, c);
            m.at(r, c) = std::move(acc);
        }
    return m;
}

Vec operator*(const Mat& m, const Vec& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("Mat*Vec: dimension mismatch");
    std::vector<Rational> c(static_cast<size_t>(m.dim()));
    for (int r = 0; r < m.dim(); ++r) {
        Rational acc;
        for (int k = 0; k < m.dim(); ++k) acc += m.at(r, k) * v[k];
        c[static_cast<size_t>(r)] = std::move(acc);
    }
    return Vec(std::move(c));
}

Mat operator+(const Mat& a, const Mat& b) {
    require_same_dim(a, b, "Mat addition");
    Mat m(a.dim_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same_dim(a, b, "Mat subtraction");
    Mat m(a.dim_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void require_same_dim(const Mat& a, const Mat& b, const char* what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace ratrel
