#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ratrel/minkowski.hpp"

namespace ratrel {

/// Rational line in canonical gauge: anchor has time coordinate 0 and the
/// direction has time coordinate 1, so two lines are equal iff their
/// representations compare equal componentwise.
class Line {
  public:
    /// Line through `point` with the given direction; the direction must
    /// have a nonzero time component (every worldline here does).
    static Line through(const Vec& point, const Vec& direction);

    int dim() const { return anchor_.dim(); }
    const Vec& anchor() const { return anchor_; }
    const Vec& dir() const { return dir_; }

    /// Exact membership: x == anchor + x_time * dir.
    bool contains(const Vec& x) const;

    friend bool operator==(const Line& a, const Line& b) {
        return a.anchor_ == b.anchor_ && a.dir_ == b.dir_;
    }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

  private:
    Line(Vec anchor, Vec dir) : anchor_(std::move(anchor)), dir_(std::move(dir)) {}

    Vec anchor_;
    Vec dir_;
};

/// Slope-1 rational line: the spatial part of the canonical direction is an
/// exact rational unit vector, so spatial displacement equals time
/// displacement along the line.
class Photon {
  public:
    explicit Photon(Line l);
    static Photon unchecked(Line l);

    /// The connecting photon of a lightlike-separated pair of distinct
    /// points. Throws std::domain_error when the pair is not lightlike.
    static Photon through(const Vec& a, const Vec& b);

    const Line& line() const { return line_; }
    int dim() const { return line_.dim(); }

    friend bool operator==(const Photon& a, const Photon& b) { return a.line_ == b.line_; }
    friend bool operator!=(const Photon& a, const Photon& b) { return !(a == b); }

  private:
    struct unchecked_tag {};
    Photon(Line l, unchecked_tag) : line_(std::move(l)) {}

    Line line_;
};

/// A body is an inertial observer (a Poincare map of Q^d) or a photon (a
/// slope-1 line).
struct Body {
    std::string name;
    std::variant<PoincareMap, Photon> payload;

    bool is_observer() const { return std::holds_alternative<PoincareMap>(payload); }
    const PoincareMap& observer() const { return std::get<PoincareMap>(payload); }
    const Photon& photon() const { return std::get<Photon>(payload); }
};

/// W(m, b, x): observer m coordinatizes body b at x. Evaluated exactly:
/// for an observer b, m(x) lies on b's worldline through the time axis;
/// for a photon b, m(x) lies on its line.
bool worldview(const PoincareMap& m, const Body& b, const Vec& x);

/// The map identifying k's coordinates of the events m coordinatizes:
/// k^{-1} composed with m, exactly.
PoincareMap worldview_transform(const PoincareMap& m, const PoincareMap& k);

/// The exact rational line of points where m coordinatizes b.
Line worldline(const PoincareMap& m, const Body& b);

/// Finite registry of named bodies over a fixed dimension. Always contains
/// the identity observer "Id". Immutable: extension returns a new value.
class Model {
  public:
    /// Validates every body and names the offender on failure.
    Model(int dim, std::vector<Body> bodies);

    /// Skips validation; for harness self-tests with deliberately broken
    /// bodies.
    static Model unchecked(int dim, std::vector<Body> bodies);

    int dim() const { return dim_; }
    const std::vector<Body>& bodies() const { return bodies_; }
    /// Views valid while this model is alive.
    std::vector<const Body*> observers() const;
    std::vector<const Body*> photons() const;
    const Body* find(const std::string& name) const;

    Model with_body(Body b) const;

    /// ev_m(x) == ev_k(y): every registered body is coordinatized by m at x
    /// exactly when it is coordinatized by k at y, completed over the full
    /// carrier (which separates any two distinct coordinate points by a
    /// photon) by the exact image condition m(x) == k(y).
    bool events_agree(const PoincareMap& m, const Vec& x, const PoincareMap& k,
                      const Vec& y) const;

  private:
    struct unchecked_tag {};
    Model(int dim, std::vector<Body> bodies, unchecked_tag);

    int dim_;
    std::vector<Body> bodies_;
};

}  // namespace ratrel
