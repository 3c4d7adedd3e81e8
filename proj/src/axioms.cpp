#include "ratrel/axioms.hpp"

#include <exception>

#include "ratrel/sampling.hpp"

namespace ratrel {

namespace {

void fail(AxiomReport& rep, ojson witness) {
    if (rep.passed) {
        rep.passed = false;
        rep.witness = std::move(witness);
    }
}

Rational pow10_inverse(unsigned exp) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, exp);
    return Rational(mpz_class(1), p);
}

// Exact rational spatial unit vector, drawn through the sphere chart.
std::vector<Rational> sample_spatial_unit(SplitMix64& g, int dim) {
    if (dim == 2) return {g.below(2) == 0 ? Rational(1) : Rational(-1)};
    std::vector<Rational> params(static_cast<size_t>(dim - 2));
    for (auto& t : params) t = sample_rational(g);
    return stereographic(params).coords();
}

}  // namespace

AxiomReport check_axph(const Model& model, long samples, uint64_t seed) {
    AxiomReport rep{"AxPh", samples, 0, true, seed, Rational(1), {}};
    const int d = model.dim();
    auto observers = model.observers();
    auto photons = model.photons();

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        const Body* mb = observers[g.below(observers.size())];
        const PoincareMap& m = mb->observer();

        int mode = static_cast<int>(i % 3);
        if (mode == 0 && photons.empty()) mode = 1;

        if (mode == 0) {
            // Registered photons must stay slope-1 lines in every worldview;
            // this is where the common light speed c = 1 is pinned.
            const Body* pb = photons[g.below(photons.size())];
            try {
                Line wl = worldline(m, *pb);
                ojson w{{"observer", mb->name}, {"photon", pb->name}};
                if (norm_sq(wl.dir().spatial()) != Rational(1)) {
                    w["violation"] = "photon worldline does not have slope 1";
                    w["worldline"] = encode(wl);
                    fail(rep, std::move(w));
                    continue;
                }
                Rational t1 = sample_rational(g);
                Rational t2 = sample_rational(g);
                if (t2 == t1) t2 += 1;
                Vec p1 = wl.anchor() + t1 * wl.dir();
                Vec p2 = wl.anchor() + t2 * wl.dir();
                if (!worldview(m, *pb, p1) || !worldview(m, *pb, p2)) {
                    w["violation"] = "photon missing from its own worldline";
                    w["x"] = encode(p1);
                    w["y"] = encode(p2);
                    fail(rep, std::move(w));
                    continue;
                }
                if (spatial_dist_sq(p1, p2) != sq(time_diff(p1, p2))) {
                    w["violation"] = "space^2 != time^2 along photon worldline";
                    w["x"] = encode(p1);
                    w["y"] = encode(p2);
                    fail(rep, std::move(w));
                }
            } catch (const std::exception& e) {
                fail(rep, ojson{{"observer", mb->name},
                                {"photon", pb->name},
                                {"violation", std::string("worldline construction failed: ") +
                                                  e.what()}});
            }
        } else if (mode == 1) {
            // Lightlike pair: the connecting photon must exist and be seen
            // at both points.
            Vec x = sample_point(g, d);
            std::vector<Rational> u = sample_spatial_unit(g, d);
            Rational lam = sample_nonzero_rational(g);
            Vec y = x + lam * Vec::from_parts(Rational(1), u);
            try {
                Photon p = Photon::through(m.apply(x), m.apply(y));
                Body pb{"connecting-photon", p};
                if (!worldview(m, pb, x) || !worldview(m, pb, y)) {
                    fail(rep, ojson{{"observer", mb->name},
                                    {"violation", "connecting photon not coordinatized"},
                                    {"x", encode(x)},
                                    {"y", encode(y)}});
                }
            } catch (const std::exception& e) {
                fail(rep, ojson{{"observer", mb->name},
                                {"violation",
                                 std::string("no photon joins a lightlike pair: ") + e.what()},
                                {"x", encode(x)},
                                {"y", encode(y)}});
            }
        } else {
            // Generic pair: a slope-1 line joins x and y in m's worldview
            // iff the images are lightlike separated; AxPh demands that this
            // coincide with space^2 == time^2 at the pair itself (c = 1).
            Vec x = sample_point(g, d);
            Vec y = sample_point(g, d);
            bool pair_lightlike = minkowski_form(x, y).is_zero();
            bool image_lightlike = minkowski_form(m.apply(x), m.apply(y)).is_zero();
            if (pair_lightlike != image_lightlike) {
                fail(rep, ojson{{"observer", mb->name},
                                {"violation", "photon existence disagrees with space^2 = time^2"},
                                {"x", encode(x)},
                                {"y", encode(y)}});
            }
        }
    }
    rep.samples = tested;
    return rep;
}

AxiomReport check_axofield(long samples, uint64_t seed, const LeqFn& leq) {
    AxiomReport rep{"AxOField", samples, 0, true, seed, std::nullopt, {}};
    LeqFn le = leq ? leq : [](const Rational& a, const Rational& b) { return a <= b; };

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        Rational x = sample_rational(g);
        Rational y = sample_rational(g);
        Rational z = sample_rational(g);

        auto law_fail = [&](const char* law) {
            fail(rep, ojson{{"law", law},
                            {"x", x.str()},
                            {"y", y.str()},
                            {"z", z.str()}});
        };

        if ((x + y) + z != x + (y + z)) { law_fail("associativity of +"); continue; }
        if (x + y != y + x) { law_fail("commutativity of +"); continue; }
        if (x + Rational(0) != x) { law_fail("additive identity"); continue; }
        if (x + (-x) != Rational(0)) { law_fail("additive inverse"); continue; }
        if ((x * y) * z != x * (y * z)) { law_fail("associativity of *"); continue; }
        if (x * y != y * x) { law_fail("commutativity of *"); continue; }
        if (x * Rational(1) != x) { law_fail("multiplicative identity"); continue; }
        if (!x.is_zero() && x * (Rational(1) / x) != Rational(1)) {
            law_fail("multiplicative inverse");
            continue;
        }
        if (x * (y + z) != x * y + x * z) { law_fail("distributivity"); continue; }
        if (!le(x, y) && !le(y, x)) { law_fail("totality of <="); continue; }
        if (le(x, y) && le(y, x) && x != y) { law_fail("antisymmetry of <="); continue; }
        if (le(x, y) && le(y, z) && !le(x, z)) { law_fail("transitivity of <="); continue; }
        if (le(x, y) && !le(x + z, y + z)) { law_fail("x <= y -> x+z <= y+z"); continue; }
        if (le(Rational(0), x) && le(Rational(0), y) && !le(Rational(0), x * y)) {
            law_fail("0 <= x and 0 <= y -> 0 <= xy");
            continue;
        }
    }
    rep.samples = tested;
    return rep;
}

AxiomReport check_axev(const Model& model, long samples, uint64_t seed) {
    AxiomReport rep{"AxEv", samples, 0, true, seed, std::nullopt, {}};
    auto observers = model.observers();

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        const Body* mb = observers[g.below(observers.size())];
        const Body* kb = observers[g.below(observers.size())];
        Vec x = sample_point(g, model.dim());
        // The existence claim is realized constructively: y = w_mk(x).
        Vec y = worldview_transform(mb->observer(), kb->observer()).apply(x);
        if (!model.events_agree(mb->observer(), x, kb->observer(), y)) {
            fail(rep, ojson{{"m", mb->name},
                            {"k", kb->name},
                            {"violation", "ev_m(x) != ev_k(w_mk(x))"},
                            {"x", encode(x)},
                            {"y", encode(y)}});
        }
    }
    rep.samples = tested;
    return rep;
}

AxiomReport check_axself(const Model& model, long samples, uint64_t seed) {
    AxiomReport rep{"AxSelf", samples, 0, true, seed, std::nullopt, {}};
    auto observers = model.observers();

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        const Body* mb = observers[g.below(observers.size())];

        Vec on_axis = Vec::zero(model.dim());
        on_axis[0] = sample_rational(g);
        if (!worldview(mb->observer(), *mb, on_axis)) {
            fail(rep, ojson{{"observer", mb->name},
                            {"violation", "time-axis point not on own worldline"},
                            {"x", encode(on_axis)}});
            continue;
        }

        Vec off_axis = sample_point(g, model.dim());
        if (off_axis.spatial_is_zero()) off_axis[1] = 1;
        if (worldview(mb->observer(), *mb, off_axis)) {
            fail(rep, ojson{{"observer", mb->name},
                            {"violation", "off-axis point on own worldline"},
                            {"x", encode(off_axis)}});
        }
    }
    rep.samples = tested;
    return rep;
}

AxiomReport check_axsymd(const Model& model, long samples, uint64_t seed) {
    AxiomReport rep{"AxSymD", samples, 0, true, seed, std::nullopt, {}};
    const int d = model.dim();
    auto observers = model.observers();

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        const Body* mb = observers[g.below(observers.size())];
        const Body* kb = observers[g.below(observers.size())];
        const PoincareMap& m = mb->observer();
        const PoincareMap& k = kb->observer();
        PoincareMap p = worldview_transform(m, k);

        // Simultaneity for both sides: y - x spatial with spatial part
        // orthogonal to a = spatial entries of the transform's time row.
        std::vector<Rational> a(static_cast<size_t>(d - 1));
        bool a_zero = true;
        for (int j = 1; j < d; ++j) {
            a[static_cast<size_t>(j - 1)] = p.linear().mat().at(0, j);
            if (!a[static_cast<size_t>(j - 1)].is_zero()) a_zero = false;
        }

        std::vector<Rational> z(static_cast<size_t>(d - 1));
        bool have_pair = true;
        if (a_zero) {
            for (auto& c : z) c = sample_rational(g);
        } else if (d == 2) {
            // Only the degenerate z = 0 solves both constraints.
            ++rep.skipped;
            have_pair = false;
        } else {
            size_t pivot = 0;
            while (a[pivot].is_zero()) ++pivot;
            for (size_t j = 0; j < z.size(); ++j) {
                if (j == pivot) continue;
                Rational coeff = sample_rational(g);
                z[j] += coeff;
                z[pivot] -= coeff * a[j] / a[pivot];
            }
        }

        if (have_pair) {
            Vec x = sample_point(g, d);
            Vec y = x + Vec::from_parts(Rational(0), z);
            Vec px = p.apply(x);
            Vec py = p.apply(y);
            ojson w{{"m", mb->name}, {"k", kb->name}, {"x", encode(x)}, {"y", encode(y)}};
            if (time_diff(x, y) != Rational(0) || time_diff(px, py) != Rational(0)) {
                w["violation"] = "constructed pair is not simultaneous for both";
                fail(rep, std::move(w));
                continue;
            }
            if (spatial_dist_sq(x, y) != spatial_dist_sq(px, py)) {
                w["violation"] = "simultaneous spatial distance disagrees";
                w["space_sq_m"] = spatial_dist_sq(x, y).str();
                w["space_sq_k"] = spatial_dist_sq(px, py).str();
                fail(rep, std::move(w));
                continue;
            }
        }

        // Second clause: the slope-1 photon through the origin and
        // (1, 1, 0, ..., 0) exists for every observer.
        Vec origin = Vec::zero(d);
        Vec lightpoint = Vec::zero(d);
        lightpoint[0] = 1;
        lightpoint[1] = 1;
        try {
            Photon ph = Photon::through(m.apply(origin), m.apply(lightpoint));
            Body pb{"light-clause-photon", ph};
            if (!worldview(m, pb, origin) || !worldview(m, pb, lightpoint)) {
                fail(rep, ojson{{"m", mb->name},
                                {"violation", "light-speed-1 photon not coordinatized"}});
            }
        } catch (const std::exception& e) {
            fail(rep, ojson{{"m", mb->name},
                            {"violation",
                             std::string("light-speed-1 photon does not exist: ") + e.what()}});
        }
    }
    rep.samples = tested;
    return rep;
}

ThExpWitness witness_axthexp_minus(const Model& model, const PoincareMap& m,
                                   const std::vector<Rational>& velocity, const Rational& eps,
                                   uint64_t seed) {
    const int d = model.dim();
    ObserverApprox oa = observer_with_velocity(velocity, eps, d);

    SplitMix64 g(seed);
    Vec x = sample_point(g, d);
    Rational lambda = sample_nonzero_rational(g);
    Vec y = x + lambda * Vec::from_parts(Rational(1), oa.achieved);

    // w_km = L* + x, so the observer body is m composed with it.
    PoincareMap pstar(oa.map.linear(), x);
    PoincareMap k = compose(m, pstar);
    return ThExpWitness{std::move(k), std::move(x), std::move(y), oa.achieved, lambda,
                        oa.certificate};
}

AxiomReport check_axthexp_minus(const Model& model, long samples, uint64_t seed) {
    AxiomReport rep{"AxThExp-", samples, 0, true, seed, std::nullopt, {}};
    auto observers = model.observers();

    long tested = 0;
    for (long i = 0; i < samples && rep.passed; ++i) {
        ++tested;
        SplitMix64 g(derive_seed(seed, static_cast<uint64_t>(i)));
        const Body* mb = observers[g.below(observers.size())];
        std::vector<Rational> v = sample_sublight_velocity(g, model.dim());
        Rational eps = pow10_inverse(1 + static_cast<unsigned>(i % 6));

        ojson w{{"m", mb->name}, {"velocity", encode(v)}, {"eps", eps.str()}};
        try {
            ThExpWitness wit = witness_axthexp_minus(model, mb->observer(), v, eps,
                                                     derive_seed(seed, static_cast<uint64_t>(i) |
                                                                           (1ULL << 48)));
            Body kb{"thexp-witness", wit.observer_k};
            if (!worldview(mb->observer(), kb, wit.x) || !worldview(mb->observer(), kb, wit.y)) {
                w["violation"] = "witness observer not coordinatized at x and y";
                fail(rep, std::move(w));
                continue;
            }
            if (wit.y - wit.x != wit.lambda * Vec::from_parts(Rational(1), wit.achieved)) {
                w["violation"] = "y - x is not lambda (1, achieved)";
                fail(rep, std::move(w));
                continue;
            }
            Rational err_sq;
            for (size_t j = 0; j < v.size(); ++j) err_sq += sq(v[j] - wit.achieved[j]);
            if (err_sq >= sq(eps)) {
                w["violation"] = "|requested - achieved| >= eps";
                w["achieved"] = encode(wit.achieved);
                fail(rep, std::move(w));
            }
        } catch (const std::exception& e) {
            w["violation"] = std::string("witness construction failed: ") + e.what();
            fail(rep, std::move(w));
        }
    }
    rep.samples = tested;
    return rep;
}

const std::vector<std::string> kAxiomNames = {"AxPh",   "AxOField", "AxEv",
                                              "AxSelf", "AxSymD",   "AxThExp-"};

std::vector<AxiomReport> run_suite(const Model& model, const SuiteConfig& config) {
    auto want = [&](const std::string& name) {
        return !config.only_axiom || *config.only_axiom == name;
    };
    std::vector<AxiomReport> out;
    if (want("AxPh")) out.push_back(check_axph(model, config.samples, derive_seed(config.seed, 1)));
    if (want("AxOField"))
        out.push_back(check_axofield(config.samples, derive_seed(config.seed, 2)));
    if (want("AxEv")) out.push_back(check_axev(model, config.samples, derive_seed(config.seed, 3)));
    if (want("AxSelf"))
        out.push_back(check_axself(model, config.samples, derive_seed(config.seed, 4)));
    if (want("AxSymD"))
        out.push_back(check_axsymd(model, config.samples, derive_seed(config.seed, 5)));
    if (want("AxThExp-"))
        out.push_back(check_axthexp_minus(model, config.samples, derive_seed(config.seed, 6)));
    return out;
}

ojson encode(const AxiomReport& r) {
    ojson j;
    j["axiom"] = r.axiom;
    j["status"] = r.passed ? "pass" : "fail";
    j["samples"] = r.samples;
    j["skipped"] = r.skipped;
    j["seed"] = r.seed;
    if (r.light_speed) j["light_speed"] = r.light_speed->str();
    if (!r.passed) j["witness"] = r.witness;
    return j;
}

}  // namespace ratrel
