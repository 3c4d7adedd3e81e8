#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratrel/approx.hpp"
#include "ratrel/json_io.hpp"
#include "ratrel/model.hpp"

namespace ratrel {

/// Outcome of one axiom checker run. A failing report carries a concrete
/// rational counterexample that replays: feeding the witness values back
/// through the violated predicate reproduces the violation exactly.
struct AxiomReport {
    std::string axiom;
    long samples = 0;
    long skipped = 0;  // degenerate samples counted, not failed (AxSymD in d=2)
    bool passed = true;
    uint64_t seed = 0;
    std::optional<Rational> light_speed;  // AxPh: the common c, always exactly 1 here
    ojson witness;                        // null unless failed
};

/// Constructive witness for "observers can move roughly with any speed":
/// an observer k coordinatized by m at both x and y, with y - x = lambda
/// times (1, achieved) and |achieved - requested| < eps.
struct ThExpWitness {
    PoincareMap observer_k;
    Vec x;
    Vec y;
    std::vector<Rational> achieved;
    Rational lambda;
    Certificate certificate;
};

using LeqFn = std::function<bool(const Rational&, const Rational&)>;

/// Light-cone audit: registered photons stay slope-1 in every observer's
/// worldview (the common light speed is exactly 1), constructed lightlike
/// pairs are joined by a photon that both points' worldviews confirm, and
/// non-lightlike pairs admit no slope-1 line.
AxiomReport check_axph(const Model& model, long samples, uint64_t seed);

/// Ordered-field laws of Q on seeded random triples. The comparator can be
/// overridden so the harness's own refutation path stays testable.
AxiomReport check_axofield(long samples, uint64_t seed, const LeqFn& leq = {});

/// Every observer pair coordinatizes the same events: the witness point is
/// produced constructively through the worldview transform.
AxiomReport check_axev(const Model& model, long samples, uint64_t seed);

/// W(m, m, x) holds exactly for points on the time axis and fails off it.
AxiomReport check_axself(const Model& model, long samples, uint64_t seed);

/// Spatial distance agreement on pairs simultaneous for both observers
/// (the joint constraint system is solved exactly), plus the slope-1 photon
/// through the origin and (1, 1, 0, ..., 0) for every observer.
AxiomReport check_axsymd(const Model& model, long samples, uint64_t seed);

/// Sampled sub-light velocities each get a fully re-verified witness.
AxiomReport check_axthexp_minus(const Model& model, long samples, uint64_t seed);

/// Builds the witness for one requested velocity: a rational observer k
/// with W(m, k, x) and W(m, k, y), y - x parallel to (1, achieved), and
/// |requested - achieved| < eps in exact arithmetic.
ThExpWitness witness_axthexp_minus(const Model& model, const PoincareMap& m,
                                   const std::vector<Rational>& velocity, const Rational& eps,
                                   uint64_t seed);

struct SuiteConfig {
    long samples = 1000;
    uint64_t seed = 1;
    std::optional<std::string> only_axiom;  // run one checker by name
};

extern const std::vector<std::string> kAxiomNames;

/// All six checkers with per-axiom sub-seeds derived from the master seed.
/// Deterministic given (model, config).
std::vector<AxiomReport> run_suite(const Model& model, const SuiteConfig& config);

ojson encode(const AxiomReport& r);

}  // namespace ratrel
