#pragma once

#include <vector>

#include "ratrel/rational.hpp"

namespace ratrel {

/// Spacetime vector over Q. Coordinate 0 is time, coordinates 1..d-1 are
/// space; dimension is at least 2.
class Vec {
  public:
    explicit Vec(std::vector<Rational> coords);

    static Vec zero(int dim);
    /// (1, 0, ..., 0): the unit time vector.
    static Vec unit_time(int dim);
    /// Time component t, spatial part s (d = s.size() + 1).
    static Vec from_parts(const Rational& t, const std::vector<Rational>& s);

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return c_; }

    const Rational& time() const { return c_[0]; }
    std::vector<Rational> spatial() const;
    bool spatial_is_zero() const;

    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    friend Vec operator*(const Rational& s, const Vec& v);
    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  private:
    std::vector<Rational> c_;
};

/// Sum of squares of a rational tuple (exact Euclidean norm squared).
Rational norm_sq(const std::vector<Rational>& v);

/// space^2(x, y): squared Euclidean distance of the spatial parts.
Rational spatial_dist_sq(const Vec& x, const Vec& y);

/// time(x, y) = x_time - y_time.
Rational time_diff(const Vec& x, const Vec& y);

/// Dense square rational matrix.
class Mat {
  public:
    explicit Mat(int dim);
    static Mat identity(int dim);
    /// Row-major entries; throws if the count is not a perfect square.
    static Mat from_rows(const std::vector<std::vector<Rational>>& rows);

    int dim() const { return dim_; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r * dim_ + c)]; }
    Rational& at(int r, int c) { return e_[static_cast<size_t>(r * dim_ + c)]; }

    Mat transpose() const;
    /// Matrix with rows/cols `a` and `b` replaced by the 2x2 block
    /// [[m00, m01], [m10, m11]], identity elsewhere.
    static Mat plane_block(int dim, int a, int b, const Rational& m00, const Rational& m01,
                           const Rational& m10, const Rational& m11);

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& m, const Vec& v);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  private:
    int dim_;
    std::vector<Rational> e_;
};

void require_same_dim(const Vec& a, const Vec& b, const char* what);
void require_same_dim(const Mat& a, const Mat& b, const char* what);

}  // namespace ratrel
