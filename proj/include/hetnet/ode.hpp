#pragma once

#include "hetnet/bowtie.hpp"
#include "hetnet/field.hpp"

#include <string>
#include <vector>

namespace hetnet {

struct StepFailure : std::runtime_error {
    StepFailure() : std::runtime_error("integrator failed to advance within the step budget") {}
};
struct Blowup : std::runtime_error {
    Blowup() : std::runtime_error("trajectory norm exceeded the blow-up bound") {}
};
struct NoEvents : std::runtime_error {
    NoEvents() : std::runtime_error("trajectory never entered an equilibrium neighbourhood") {}
};

struct IntegratorConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double max_step = 1.0;
    double max_time = 5000.0;
    int max_events = 64;
    double blowup_norm = 2.0;
    // hard cap on accepted steps; exceeding it raises StepFailure
    long max_steps = 5'000'000;

    void validate() const;
};

struct TrajectoryPoint {
    double t;
    std::vector<double> x;
};

/// Adaptive dopri5 with dense output. Coordinates starting at exactly zero
/// stay exactly zero (the Runge-Kutta stages vanish there), realizing the
/// flow-invariance of the coordinate subspaces.
std::vector<TrajectoryPoint> integrate(const SimplexField& f, const std::vector<double>& x0,
                                       const IntegratorConfig& cfg);

struct Visit {
    int node = 0;  // 1-based equilibrium index
    double t_entry = 0, t_exit = 0;
    std::vector<double> entry_point;
};

struct Itinerary {
    std::vector<Visit> visits;

    /// L/R visit word: R for each [xi_3 -> xi_1] step, L for each
    /// [xi_4 -> xi_5] step of the visit sequence (Bowtie convention).
    std::string word() const;
    bool follows_edges(const DirectedGraph& g) const;
};

/// Integrate and log entries into the eps-balls around the equilibria, with
/// crossing times localized by bisection on the dense output. Strictly
/// positive initial conditions are integrated in log coordinates so that
/// exponentially small components keep their full relative accuracy.
Itinerary record_itinerary(const SimplexField& f, const std::vector<double>& x0, double eps,
                           const IntegratorConfig& cfg);

struct AgreementReport {
    int longest_prefix = 0;
    bool prefix_at_least_k = false;
    // per-run (maximal constant block) length differences observed - predicted
    std::vector<int> run_deltas;
};

AgreementReport compare(const std::string& predicted, const std::string& observed, int k);

// ---------------------------------------------------------------------------
// Map-vs-ODE ensemble on the Bowtie network
// ---------------------------------------------------------------------------

struct EnsembleConfig {
    int count = 100;
    unsigned seed = 42;
    int prefix_k = 5;
    double eps = 0.3;             // equilibrium neighbourhood radius
    double section_offset = 0.1;  // physical cross-section placement
    // passage times grow geometrically with the turn number, so the ensemble
    // gets a larger time budget than a single integrate() call
    IntegratorConfig integ{1e-12, 1e-10, 1.0, 40000.0, 64, 2.0, 5'000'000};
};

struct RunRecord {
    int index = 0;
    std::vector<Rational> u_log2;  // sampled section point (log2, active order)
    std::string predicted, observed;
    int agree_prefix = 0;
    bool ok = false;
    std::string error;  // nonempty if the run failed; never aborts the ensemble
};

struct EnsembleSummary {
    EnsembleConfig config;
    std::vector<RunRecord> runs;
    int succeeded = 0;
    double agreement_fraction = 0;
};

/// Sample `count` points on the R-cycle entry section, predict their L/R
/// words symbolically, integrate the ODE from matching physical points and
/// compare. Deterministic for a fixed seed.
EnsembleSummary run_ensemble(const BowtieTable& table, const EnsembleConfig& cfg);

}  // namespace hetnet
