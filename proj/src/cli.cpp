#include "ratrel/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ratrel/approx.hpp"
#include "ratrel/axioms.hpp"
#include "ratrel/json_io.hpp"
#include "ratrel/scenario.hpp"

namespace ratrel {

namespace {

// Exit-2 class: bad flags, malformed fractions, dimension mismatches.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Rational flag_fraction(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": malformed fraction \"" + text + "\"");
    }
}

std::vector<Rational> flag_fractions(const std::vector<std::string>& texts, const char* flag) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(flag_fraction(t, flag));
    return out;
}

std::pair<int, int> flag_plane(const std::string& text, const char* flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError(std::string(flag) + ": expected \"i,j\", got \"" + text + "\"");
    int a = 0, b = 0;
    try {
        size_t pa = 0, pb = 0;
        std::string first = text.substr(0, comma), second = text.substr(comma + 1);
        a = std::stoi(first, &pa);
        b = std::stoi(second, &pb);
        if (pa != first.size() || pb != second.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": expected \"i,j\", got \"" + text + "\"");
    }
    if (a < 1 || b < 1 || a == b)
        throw UsageError(std::string(flag) + ": axes must be distinct and 1-based");
    return {a - 1, b - 1};
}

std::string human_mat(const Mat& m, const std::string& indent = "  ") {
    std::ostringstream os;
    for (int r = 0; r < m.dim(); ++r) {
        os << indent << "[";
        for (int c = 0; c < m.dim(); ++c) {
            if (c) os << ", ";
            os << m.at(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

std::string human_list(const std::vector<Rational>& xs) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ", ";
        os << xs[i];
    }
    os << ")";
    return os.str();
}

OrthogonalSpec orthospec_from_json(const ojson& j) {
    OrthogonalSpec spec;
    for (const auto& jr : j.value("rotations", ojson::array())) {
        const auto& plane = jr.at("plane");
        int a = plane.at(0).get<int>(), b = plane.at(1).get<int>();
        if (a < 1 || b < 1 || a == b)
            throw UsageError("spec rotations: plane axes must be distinct and 1-based");
        PlanarRotation rot;
        rot.axis_a = a - 1;
        rot.axis_b = b - 1;
        rot.toward_x = decode_rational(jr.at("toward").at(0));
        rot.toward_y = decode_rational(jr.at("toward").at(1));
        spec.rotations.push_back(std::move(rot));
    }
    for (const auto& ja : j.value("flip_axes", ojson::array())) {
        int a = ja.get<int>();
        if (a < 1) throw UsageError("spec flip_axes: axes are 1-based");
        spec.flip_axes.push_back(a - 1);
    }
    return spec;
}

struct Output {
    bool json = false;
    std::ostream* out = nullptr;

    void emit(const ojson& doc, const std::string& human) const {
        if (json)
            *out << doc.dump(2) << "\n";
        else
            *out << human;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational special-relativity kinematics"};
    app.require_subcommand(1);
    app.fallthrough();

    int dim = 4;
    std::string output_mode = "human";
    std::string eps_text = "1/1000";
    uint64_t seed = 1;
    app.add_option("--dim", dim, "Ambient dimension (spacetime, or n for ortho)")
        ->check(CLI::Range(2, 64));
    app.add_option("--output", output_mode, "Output mode: human or json")
        ->envname("RATREL_OUTPUT")
        ->check(CLI::IsMember({"human", "json"}));

    auto* sphere_cmd =
        app.add_subcommand("sphere", "Rational unit vector within eps of a target direction");
    std::vector<std::string> sphere_target;
    sphere_cmd->add_option("--target", sphere_target, "Target direction (fractions)")
        ->required()
        ->expected(1, 64);
    sphere_cmd->add_option("--eps", eps_text, "Error bound (fraction)");

    auto* boost_cmd =
        app.add_subcommand("boost", "Pythagorean boost within eps of the requested speed");
    std::string boost_speed;
    boost_cmd->add_option("--speed", boost_speed, "Target speed v, 0 <= v < 1 (fraction)")
        ->required();
    boost_cmd->add_option("--eps", eps_text, "Error bound (fraction)");

    auto* ortho_cmd =
        app.add_subcommand("ortho", "Exactly orthogonal rational map within eps of a rotation");
    std::string ortho_plane = "1,2";
    std::vector<std::string> ortho_toward;
    ortho_cmd->add_option("--plane", ortho_plane, "Rotation plane \"i,j\" (1-based axes)");
    ortho_cmd->add_option("--toward", ortho_toward, "Target direction (2 fractions)")
        ->required()
        ->expected(2);
    ortho_cmd->add_option("--eps", eps_text, "Error bound (fraction)");

    auto* poincare_cmd = app.add_subcommand(
        "poincare", "Rational Poincare map within eps of a factored target");
    std::vector<std::string> poi_translation;
    std::string poi_speed = "0";
    std::string poi_pre_plane, poi_post_plane;
    std::vector<std::string> poi_pre_toward, poi_post_toward;
    std::string poi_spec_path;
    poincare_cmd->add_option("--translation", poi_translation, "Translation (d fractions)");
    poincare_cmd->add_option("--boost-speed", poi_speed, "Boost speed, |v| < 1 (fraction)");
    poincare_cmd->add_option("--pre-plane", poi_pre_plane, "Pre-rotation plane \"i,j\"");
    poincare_cmd->add_option("--pre-toward", poi_pre_toward, "Pre-rotation direction")
        ->expected(2);
    poincare_cmd->add_option("--post-plane", poi_post_plane, "Post-rotation plane \"i,j\"");
    poincare_cmd->add_option("--post-toward", poi_post_toward, "Post-rotation direction")
        ->expected(2);
    poincare_cmd->add_option("--spec", poi_spec_path, "Factored target as a JSON file");
    poincare_cmd->add_option("--eps", eps_text, "Error bound (fraction)");

    auto* observer_cmd = app.add_subcommand(
        "observer", "Rational Lorentz observer with near-target coordinate velocity");
    std::vector<std::string> obs_velocity;
    observer_cmd->add_option("--velocity", obs_velocity, "Spatial velocity (d-1 fractions)")
        ->required()
        ->expected(1, 63);
    observer_cmd->add_option("--eps", eps_text, "Error bound (fraction)");

    auto* witness_cmd =
        app.add_subcommand("witness", "Constructive witness that observers move near any speed");
    std::vector<std::string> wit_velocity;
    std::string wit_observer = "Id";
    std::string wit_scenario;
    witness_cmd->add_option("--velocity", wit_velocity, "Spatial velocity (d-1 fractions)")
        ->required()
        ->expected(1, 63);
    witness_cmd->add_option("--eps", eps_text, "Error bound (fraction)");
    witness_cmd->add_option("--observer", wit_observer, "Observer name in the scenario");
    witness_cmd->add_option("--scenario", wit_scenario, "Scenario file (default: built-in)");
    witness_cmd->add_option("--seed", seed, "Witness point seed");

    auto* model_cmd = app.add_subcommand("model", "Model operations");
    model_cmd->require_subcommand(1);
    auto* check_cmd = model_cmd->add_subcommand("check", "Run the axiom checkers");
    long samples = 1000;
    std::string check_scenario;
    std::string only_axiom;
    check_cmd->add_option("--samples", samples, "Samples per axiom")->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", seed, "Master seed");
    check_cmd->add_option("--scenario", check_scenario, "Scenario file (default: built-in)");
    check_cmd->add_option("--axiom", only_axiom, "Run a single axiom checker");

    std::vector<std::string> argv(args);
    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Output o{output_mode == "json", &out};

    try {
        if (sphere_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            std::vector<Rational> target = flag_fractions(sphere_target, "--target");
            if (norm_sq(target).is_zero()) throw UsageError("--target must be nonzero");
            DirectionApprox res = nearest_rational_direction(target, eps);

            ojson doc;
            doc["command"] = "sphere";
            doc["inputs"] = {{"target", encode(target)}, {"eps", eps.str()}};
            doc["point"] = encode(res.point.coords());
            doc["error_bound"] = res.error_bound.str();
            std::ostringstream hs;
            hs << "point = " << human_list(res.point.coords()) << "\n"
               << "error_bound = " << res.error_bound << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (boost_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            Rational v = flag_fraction(boost_speed, "--speed");
            if (abs(v) >= Rational(1)) throw UsageError("--speed must satisfy |v| < 1");
            if (v.sign() < 0) throw UsageError("--speed must be nonnegative (boosts take v in [0, 1))");
            auto [ps, cert] = approx_boost(v, eps, dim);

            ojson doc;
            doc["command"] = "boost";
            doc["inputs"] = {{"speed", v.str()}, {"eps", eps.str()}, {"dim", dim}};
            doc["w"] = ps.w().str();
            doc["r"] = ps.r().str();
            doc["certificate"] = encode(cert);
            std::ostringstream hs;
            hs << "w = " << ps.w() << "\n"
               << "r = " << ps.r() << "\n"
               << "matrix:\n"
               << human_mat(cert.output) << "delta = " << cert.delta << "\n"
               << "error_bound = " << cert.error_bound << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (ortho_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            auto [pa, pb] = flag_plane(ortho_plane, "--plane");
            if (pa >= dim || pb >= dim)
                throw UsageError("--plane: axes exceed --dim");
            OrthogonalSpec spec;
            PlanarRotation rot;
            rot.axis_a = pa;
            rot.axis_b = pb;
            rot.toward_x = flag_fraction(ortho_toward[0], "--toward");
            rot.toward_y = flag_fraction(ortho_toward[1], "--toward");
            if (rot.toward_x.is_zero() && rot.toward_y.is_zero())
                throw UsageError("--toward must be nonzero");
            spec.rotations.push_back(rot);
            auto [mat, cert] = approx_orthogonal(spec, eps, dim);

            ojson doc;
            doc["command"] = "ortho";
            doc["inputs"] = {{"plane", {pa + 1, pb + 1}},
                             {"toward", {rot.toward_x.str(), rot.toward_y.str()}},
                             {"eps", eps.str()},
                             {"dim", dim}};
            doc["certificate"] = encode(cert);
            std::ostringstream hs;
            hs << "matrix:\n"
               << human_mat(mat) << "delta = " << cert.delta << "\n"
               << "error_bound = " << cert.error_bound << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (poincare_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            PoincareSpec spec{Vec::zero(dim), BoostSpec{Rational(0)}, {}, {}};
            if (!poi_spec_path.empty()) {
                std::ifstream in(poi_spec_path);
                if (!in) throw UsageError("--spec: cannot open '" + poi_spec_path + "'");
                ojson j;
                try {
                    in >> j;
                } catch (const std::exception& e) {
                    throw UsageError("--spec: invalid JSON: " + std::string(e.what()));
                }
                if (j.contains("translation")) spec.translation = decode_vec(j.at("translation"));
                if (j.contains("boost_speed"))
                    spec.boost.speed = decode_rational(j.at("boost_speed"));
                if (j.contains("pre")) spec.pre = orthospec_from_json(j.at("pre"));
                if (j.contains("post")) spec.post = orthospec_from_json(j.at("post"));
            } else {
                if (!poi_translation.empty())
                    spec.translation = Vec(flag_fractions(poi_translation, "--translation"));
                spec.boost.speed = flag_fraction(poi_speed, "--boost-speed");
                auto add_rotation = [&](const std::string& plane_text,
                                        const std::vector<std::string>& toward, const char* flag,
                                        OrthogonalSpec& dst) {
                    if (plane_text.empty() && toward.empty()) return;
                    if (plane_text.empty() || toward.empty())
                        throw UsageError(std::string(flag) + ": plane and toward go together");
                    auto [a, b] = flag_plane(plane_text, flag);
                    PlanarRotation rot;
                    rot.axis_a = a;
                    rot.axis_b = b;
                    rot.toward_x = flag_fraction(toward[0], flag);
                    rot.toward_y = flag_fraction(toward[1], flag);
                    dst.rotations.push_back(std::move(rot));
                };
                add_rotation(poi_pre_plane, poi_pre_toward, "--pre-plane/--pre-toward", spec.pre);
                add_rotation(poi_post_plane, poi_post_toward, "--post-plane/--post-toward",
                             spec.post);
            }
            if (spec.translation.dim() != dim)
                throw UsageError("--translation: expected exactly d fractions");
            if (abs(spec.boost.speed) >= Rational(1))
                throw UsageError("--boost-speed must satisfy |v| < 1");
            auto [pmap, cert] = approx_poincare(spec, eps, dim);

            ojson doc;
            doc["command"] = "poincare";
            doc["inputs"] = {{"translation", encode(spec.translation)},
                             {"boost_speed", spec.boost.speed.str()},
                             {"eps", eps.str()},
                             {"dim", dim}};
            doc["map"] = encode(pmap);
            doc["certificate"] = encode(cert);
            std::ostringstream hs;
            hs << "linear part:\n"
               << human_mat(pmap.linear().mat()) << "translation = "
               << human_list(pmap.translation().coords()) << "\n"
               << "delta = " << cert.delta << "\n"
               << "error_bound = " << cert.error_bound << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (observer_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            std::vector<Rational> v = flag_fractions(obs_velocity, "--velocity");
            int d = static_cast<int>(v.size()) + 1;
            if (app.count("--dim") && d != dim)
                throw UsageError("--velocity: expected dim-1 components");
            if (norm_sq(v) >= Rational(1))
                throw UsageError("--velocity: speed must be below light (|v| < 1)");
            ObserverApprox res = observer_with_velocity(v, eps, d);

            ojson doc;
            doc["command"] = "observer";
            doc["inputs"] = {{"velocity", encode(v)}, {"eps", eps.str()}, {"dim", d}};
            doc["map"] = encode(res.map);
            doc["achieved"] = encode(res.achieved);
            doc["certificate"] = encode(res.certificate);
            std::ostringstream hs;
            hs << "matrix:\n"
               << human_mat(res.map.linear().mat()) << "achieved = "
               << human_list(res.achieved) << "\n"
               << "error_bound = " << res.certificate.error_bound << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (witness_cmd->parsed()) {
            Rational eps = flag_fraction(eps_text, "--eps");
            if (eps.sign() <= 0) throw UsageError("--eps must be positive");
            std::vector<Rational> v = flag_fractions(wit_velocity, "--velocity");
            int d = static_cast<int>(v.size()) + 1;
            if (app.count("--dim") && d != dim)
                throw UsageError("--velocity: expected dim-1 components");
            if (norm_sq(v) >= Rational(1))
                throw UsageError("--velocity: speed must be below light (|v| < 1)");
            Model model = wit_scenario.empty() ? builtin_scenario(d) : load_scenario(wit_scenario);
            if (model.dim() != d) throw UsageError("--velocity: dimension differs from scenario");
            const Body* mb = model.find(wit_observer);
            if (!mb || !mb->is_observer())
                throw UsageError("--observer: no observer named '" + wit_observer + "'");
            ThExpWitness wit = witness_axthexp_minus(model, mb->observer(), v, eps, seed);

            ojson doc;
            doc["command"] = "witness";
            doc["inputs"] = {{"velocity", encode(v)},
                             {"eps", eps.str()},
                             {"observer", wit_observer},
                             {"seed", seed},
                             {"dim", d}};
            doc["observer_k"] = encode(wit.observer_k);
            doc["x"] = encode(wit.x);
            doc["y"] = encode(wit.y);
            doc["achieved"] = encode(wit.achieved);
            doc["lambda"] = wit.lambda.str();
            doc["certificate"] = encode(wit.certificate);
            std::ostringstream hs;
            hs << "observer k linear part:\n"
               << human_mat(wit.observer_k.linear().mat()) << "x = "
               << human_list(wit.x.coords()) << "\n"
               << "y = " << human_list(wit.y.coords()) << "\n"
               << "achieved = " << human_list(wit.achieved) << "\n"
               << "lambda = " << wit.lambda << "\n";
            o.emit(doc, hs.str());
            return 0;
        }

        if (check_cmd->parsed()) {
            SuiteConfig config;
            config.samples = samples;
            config.seed = seed;
            if (!only_axiom.empty()) {
                bool known = false;
                for (const auto& name : kAxiomNames) known = known || name == only_axiom;
                if (!known) throw UsageError("--axiom: unknown axiom '" + only_axiom + "'");
                config.only_axiom = only_axiom;
            }
            Model model =
                check_scenario.empty() ? builtin_scenario(dim) : load_scenario(check_scenario);
            std::vector<AxiomReport> reports = run_suite(model, config);
            bool all_passed = true;
            for (const auto& r : reports) all_passed = all_passed && r.passed;

            ojson doc;
            doc["command"] = "model check";
            doc["inputs"] = {{"dim", model.dim()},
                             {"samples", config.samples},
                             {"seed", config.seed},
                             {"scenario", check_scenario.empty() ? "built-in" : check_scenario}};
            ojson jr = ojson::array();
            for (const auto& r : reports) jr.push_back(encode(r));
            doc["reports"] = std::move(jr);
            doc["all_passed"] = all_passed;
            std::ostringstream hs;
            for (const auto& r : reports) {
                hs << r.axiom << ": " << (r.passed ? "pass" : "FAIL") << " (samples=" << r.samples;
                if (r.skipped > 0) hs << ", skipped=" << r.skipped;
                hs << ", seed=" << r.seed << ")\n";
                if (!r.passed) hs << "  witness: " << r.witness.dump() << "\n";
            }
            hs << (all_passed ? "all axioms pass\n" : "AXIOM FAILURE\n");
            o.emit(doc, hs.str());
            return all_passed ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchExhausted& e) {
        err << "certification failure: " << e.what() << "\n";
        return 1;
    } catch (const ojson::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no command\n";
    return 2;
}

}  // namespace ratrel
