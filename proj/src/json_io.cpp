#include "ratrel/json_io.hpp"

#include <stdexcept>

namespace ratrel {

ojson encode(const Rational& x) { return x.str(); }

ojson encode(const std::vector<Rational>& xs) {
    ojson arr = ojson::array();
    for (const auto& x : xs) arr.push_back(x.str());
    return arr;
}

ojson encode(const Vec& v) { return encode(v.coords()); }

ojson encode(const Mat& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.dim(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson encode(const PoincareMap& p) {
    ojson j;
    j["matrix"] = encode(p.linear().mat());
    j["translation"] = encode(p.translation());
    return j;
}

ojson encode(const Line& l) {
    ojson j;
    j["anchor"] = encode(l.anchor());
    j["direction"] = encode(l.dir());
    return j;
}

namespace {

ojson encode_target(const Certificate& c) {
    ojson t;
    if (std::holds_alternative<BoostSpec>(c.target_spec)) {
        t["kind"] = "boost";
        t["speed"] = std::get<BoostSpec>(c.target_spec).speed.str();
    } else if (std::holds_alternative<OrthogonalSpec>(c.target_spec)) {
        const auto& spec = std::get<OrthogonalSpec>(c.target_spec);
        t["kind"] = "orthogonal";
        ojson rots = ojson::array();
        for (const auto& r : spec.rotations) {
            ojson jr;
            jr["plane"] = {r.axis_a, r.axis_b};
            jr["toward"] = {r.toward_x.str(), r.toward_y.str()};
            rots.push_back(std::move(jr));
        }
        t["rotations"] = std::move(rots);
        t["flip_axes"] = spec.flip_axes;
    } else if (std::holds_alternative<PoincareSpec>(c.target_spec)) {
        const auto& spec = std::get<PoincareSpec>(c.target_spec);
        t["kind"] = "poincare";
        t["translation"] = encode(spec.translation);
        t["boost_speed"] = spec.boost.speed.str();
    } else if (std::holds_alternative<std::vector<Rational>>(c.target_spec)) {
        t["kind"] = "velocity";
        t["velocity"] = encode(std::get<std::vector<Rational>>(c.target_spec));
    } else {
        t["kind"] = "none";
    }
    return t;
}

}  // namespace

ojson encode(const Certificate& c) {
    ojson j;
    j["target"] = encode_target(c);
    j["delta"] = c.delta.str();
    j["error_bound"] = c.error_bound.str();
    j["output"] = encode(c.output);
    return j;
}

Rational decode_rational(const ojson& j) {
    if (!j.is_string()) throw std::invalid_argument("expected fraction string");
    return Rational::parse(j.get<std::string>());
}

std::vector<Rational> decode_rational_list(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array of fraction strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(decode_rational(e));
    return out;
}

Vec decode_vec(const ojson& j) { return Vec(decode_rational_list(j)); }

Mat decode_mat(const ojson& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected matrix rows");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(decode_rational_list(r));
    return Mat::from_rows(rows);
}

PoincareMap decode_poincare(const ojson& j) {
    LorentzMatrix lin(decode_mat(j.at("matrix")));
    Vec trans = decode_vec(j.at("translation"));
    return PoincareMap(std::move(lin), std::move(trans));
}

}  // namespace ratrel
