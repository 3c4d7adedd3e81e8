#include "ratrel/scenario.hpp"

#include <fstream>
#include <stdexcept>

#include "ratrel/approx.hpp"

namespace ratrel {

namespace {

Body photon_body(const std::string& name, Vec anchor, const std::vector<Rational>& spatial_dir) {
    Vec dir = Vec::from_parts(Rational(1), spatial_dir);
    return Body{name, Photon(Line::through(anchor, dir))};
}

Vec point(std::vector<Rational> coords) { return Vec(std::move(coords)); }

}  // namespace

Model builtin_scenario(int dim) {
    if (dim < 2) throw std::invalid_argument("builtin_scenario: dimension must be at least 2");
    const int n = dim - 1;

    const PythagoreanSpeed s35(Rational(3, 5), Rational(4, 5));
    const PythagoreanSpeed s513(Rational(5, 13), Rational(12, 13));
    const PythagoreanSpeed s817(Rational(8, 17), Rational(15, 17));

    std::vector<Body> bodies;
    bodies.push_back(Body{"Id", PoincareMap::identity(dim)});
    bodies.push_back(Body{"boost-a", PoincareMap(boost_matrix_axis(s35, dim, 1), Vec::zero(dim))});
    bodies.push_back(Body{"boost-b", PoincareMap(boost_matrix_axis(s513, dim, n >= 2 ? 2 : 1),
                                                 Vec::zero(dim))});
    bodies.push_back(Body{"boost-c", PoincareMap(boost_matrix_axis(s817, dim, n >= 3 ? 3 : 1),
                                                 Vec::zero(dim))});

    if (n >= 2) {
        // Rotation by the 3-4-5 angle in the first spatial plane.
        Mat rot = embed_spatial(Mat::plane_block(n, 0, 1, Rational(4, 5), Rational(-3, 5),
                                                 Rational(3, 5), Rational(4, 5)));
        bodies.push_back(Body{"rot", PoincareMap(LorentzMatrix(rot), Vec::zero(dim))});
    } else {
        // d == 2 has no nontrivial rotations; a spatial flip stands in.
        Mat flip = Mat::identity(dim);
        flip.at(1, 1) = Rational(-1);
        bodies.push_back(Body{"flip", PoincareMap(LorentzMatrix(flip), Vec::zero(dim))});
    }

    auto unit = [&](std::vector<Rational> spatial) {
        spatial.resize(static_cast<size_t>(n));
        return spatial;
    };
    std::vector<std::vector<Rational>> dirs;
    if (n == 1) {
        dirs = {unit({1}), unit({-1}), unit({1}), unit({-1}), unit({1}), unit({-1})};
    } else {
        dirs = {unit({1}),
                unit({-1}),
                unit({Rational(3, 5), Rational(4, 5)}),
                unit({Rational(-5, 13), Rational(12, 13)}),
                unit({Rational(8, 17), Rational(-15, 17)}),
                unit({Rational(-4, 5), Rational(-3, 5)})};
    }
    std::vector<Vec> anchors = {
        Vec::zero(dim),
        point([&] {
            std::vector<Rational> c(static_cast<size_t>(dim));
            c[0] = Rational(1);
            c[1] = Rational(1, 2);
            return c;
        }()),
        point([&] {
            std::vector<Rational> c(static_cast<size_t>(dim));
            c[0] = Rational(-2, 3);
            c[1] = Rational(5);
            return c;
        }()),
        point([&] {
            std::vector<Rational> c(static_cast<size_t>(dim));
            c[0] = Rational(3);
            c[static_cast<size_t>(dim - 1)] = Rational(-7, 4);
            return c;
        }()),
        point([&] {
            std::vector<Rational> c(static_cast<size_t>(dim));
            c[0] = Rational(0);
            c[1] = Rational(-1, 5);
            c[static_cast<size_t>(dim - 1)] = Rational(2);
            return c;
        }()),
        point([&] {
            std::vector<Rational> c(static_cast<size_t>(dim));
            c[0] = Rational(11, 7);
            c[1] = Rational(1, 3);
            return c;
        }()),
    };
    for (size_t i = 0; i < dirs.size(); ++i)
        bodies.push_back(photon_body("photon-" + std::to_string(i), anchors[i], dirs[i]));

    return Model(dim, std::move(bodies));
}

Model scenario_from_json(const ojson& j) {
    if (!j.contains("dimension"))
        throw std::invalid_argument("scenario: missing \"dimension\"");
    int dim = j.at("dimension").get<int>();
    if (dim < 2) throw std::invalid_argument("scenario: dimension must be at least 2");

    std::vector<Body> bodies;
    for (const auto& jo : j.value("observers", ojson::array())) {
        std::string name = jo.value("name", "");
        if (name.empty()) throw std::invalid_argument("scenario: observer without a name");
        try {
            Mat m = decode_mat(jo.at("matrix"));
            if (m.dim() != dim)
                throw std::invalid_argument("matrix dimension != scenario dimension");
            if (!is_lorentz(m))
                throw std::invalid_argument("matrix is not Lorentz (M^T eta M != eta)");
            Vec t = jo.contains("translation") ? decode_vec(jo.at("translation")) : Vec::zero(dim);
            if (t.dim() != dim)
                throw std::invalid_argument("translation dimension != scenario dimension");
            bodies.push_back(Body{name, PoincareMap(LorentzMatrix(std::move(m)), std::move(t))});
        } catch (const std::exception& e) {
            throw std::invalid_argument("scenario: observer '" + name + "': " + e.what());
        }
    }
    for (const auto& jp : j.value("photons", ojson::array())) {
        std::string name = jp.value("name", "");
        if (name.empty()) throw std::invalid_argument("scenario: photon without a name");
        try {
            Vec anchor = decode_vec(jp.at("anchor"));
            std::vector<Rational> sdir = decode_rational_list(jp.at("spatial_direction"));
            if (anchor.dim() != dim || static_cast<int>(sdir.size()) != dim - 1)
                throw std::invalid_argument("anchor/direction dimension != scenario dimension");
            if (norm_sq(sdir) != Rational(1))
                throw std::invalid_argument(
                    "spatial direction is not an exact unit vector (slope-1 violated)");
            bodies.push_back(
                Body{name, Photon(Line::through(anchor, Vec::from_parts(Rational(1), sdir)))});
        } catch (const std::exception& e) {
            throw std::invalid_argument("scenario: photon '" + name + "': " + e.what());
        }
    }
    return Model(dim, std::move(bodies));
}

ojson scenario_to_json(const Model& model) {
    ojson j;
    j["dimension"] = model.dim();
    ojson observers = ojson::array();
    ojson photons = ojson::array();
    for (const Body& b : model.bodies()) {
        if (b.is_observer()) {
            ojson jo;
            jo["name"] = b.name;
            jo["matrix"] = encode(b.observer().linear().mat());
            jo["translation"] = encode(b.observer().translation());
            observers.push_back(std::move(jo));
        } else {
            ojson jp;
            jp["name"] = b.name;
            jp["anchor"] = encode(b.photon().line().anchor());
            jp["spatial_direction"] = encode(b.photon().line().dir().spatial());
            photons.push_back(std::move(jp));
        }
    }
    j["observers"] = std::move(observers);
    j["photons"] = std::move(photons);
    return j;
}

Model load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("scenario: cannot open '" + path + "'");
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("scenario: '" + path + "' is not valid JSON: " + e.what());
    }
    return scenario_from_json(j);
}

}  // namespace ratrel
