#include "ratrel/model.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ratrel {

Line Line::through(const Vec& point, const Vec& direction) {
    require_same_dim(point, direction, "Line::through");
    const Rational& tau = direction[0];
    if (tau.is_zero())
        throw std::invalid_argument("Line::through: direction has zero time component");
    Vec dir = (Rational(1) / tau) * direction;
    Vec anchor = point - point[0] * dir;
    return Line(std::move(anchor), std::move(dir));
}

bool Line::contains(const Vec& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("Line::contains: dimension mismatch");
    return x == anchor_ + x[0] * dir_;
}

Photon::Photon(Line l) : line_(std::move(l)) {
    if (norm_sq(line_.dir().spatial()) != Rational(1))
        throw std::invalid_argument("Photon: line does not have slope 1");
}

Photon Photon::unchecked(Line l) { return Photon(std::move(l), unchecked_tag{}); }

Photon Photon::through(const Vec& a, const Vec& b) {
    if (a == b) throw std::domain_error("Photon::through: points coincide");
    if (!minkowski_form(a, b).is_zero())
        throw std::domain_error("Photon::through: points are not lightlike separated");
    // Lightlike and distinct forces a nonzero time difference.
    return Photon(Line::through(a, b - a));
}

bool worldview(const PoincareMap& m, const Body& b, const Vec& x) {
    Vec z = m.apply(x);
    if (b.is_observer()) return inverse(b.observer()).apply(z).spatial_is_zero();
    return b.photon().line().contains(z);
}

PoincareMap worldview_transform(const PoincareMap& m, const PoincareMap& k) {
    return compose(inverse(k), m);
}

Line worldline(const PoincareMap& m, const Body& b) {
    PoincareMap m_inv = inverse(m);
    if (b.is_observer()) {
        PoincareMap c = compose(m_inv, b.observer());
        int d = c.dim();
        return Line::through(c.apply(Vec::zero(d)), c.linear().mat() * Vec::unit_time(d));
    }
    const Line& l = b.photon().line();
    return Line::through(m_inv.apply(l.anchor()), m_inv.linear().mat() * l.dir());
}

Model::Model(int dim, std::vector<Body> bodies) : Model(dim, std::move(bodies), unchecked_tag{}) {
    for (const Body& b : bodies_) {
        if (b.is_observer()) {
            if (b.observer().dim() != dim_)
                throw std::invalid_argument("Model: observer '" + b.name +
                                            "': dimension mismatch");
            if (!is_lorentz(b.observer().linear().mat()))
                throw std::invalid_argument("Model: observer '" + b.name +
                                            "': matrix is not Lorentz (M^T eta M != eta)");
        } else {
            if (b.photon().dim() != dim_)
                throw std::invalid_argument("Model: photon '" + b.name + "': dimension mismatch");
            if (norm_sq(b.photon().line().dir().spatial()) != Rational(1))
                throw std::invalid_argument("Model: photon '" + b.name +
                                            "': line does not have slope 1");
        }
    }
}

Model Model::unchecked(int dim, std::vector<Body> bodies) {
    return Model(dim, std::move(bodies), unchecked_tag{});
}

Model::Model(int dim, std::vector<Body> bodies, unchecked_tag)
    : dim_(dim), bodies_(std::move(bodies)) {
    if (dim_ < 2) throw std::invalid_argument("Model: dimension must be at least 2");

    bool has_id = false;
    std::unordered_set<std::string> names;
    for (const Body& b : bodies_) {
        if (!names.insert(b.name).second)
            throw std::invalid_argument("Model: duplicate body name '" + b.name + "'");
        if (b.name == "Id") has_id = true;
    }
    if (!has_id)
        bodies_.insert(bodies_.begin(), Body{"Id", PoincareMap::identity(dim_)});
}

std::vector<const Body*> Model::observers() const {
    std::vector<const Body*> out;
    for (const Body& b : bodies_)
        if (b.is_observer()) out.push_back(&b);
    return out;
}

std::vector<const Body*> Model::photons() const {
    std::vector<const Body*> out;
    for (const Body& b : bodies_)
        if (!b.is_observer()) out.push_back(&b);
    return out;
}

const Body* Model::find(const std::string& name) const {
    for (const Body& b : bodies_)
        if (b.name == name) return &b;
    return nullptr;
}

Model Model::with_body(Body b) const {
    std::vector<Body> bodies = bodies_;
    bodies.push_back(std::move(b));
    return Model(dim_, std::move(bodies));
}

bool Model::events_agree(const PoincareMap& m, const Vec& x, const PoincareMap& k,
                         const Vec& y) const {
    for (const Body& b : bodies_)
        if (worldview(m, b, x) != worldview(k, b, y)) return false;
    return m.apply(x) == k.apply(y);
}

}  // namespace ratrel
