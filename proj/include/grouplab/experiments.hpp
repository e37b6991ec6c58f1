#pragma once
// Monte Carlo sweeps over (ell, density) grids.  Trials are distributed over
// a worker pool, each with its own split seed stream and a result slot
// indexed by (row, trial), so the emitted CSV is byte-identical for any job
// count.

#include "grouplab/rational.hpp"
#include "grouplab/sampler.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grouplab {

enum class SweepTarget { Cprime, Cp, B2p, Fillable };

struct SweepSpec {
    int m = 2;
    std::vector<int> ells;
    std::vector<Rational> densities;
    long long trials = 1;
    std::uint64_t master_seed = 0;
    Model model = Model::Bernoulli;
    bool exact_length = false;

    SweepTarget target = SweepTarget::Cprime;
    Rational lambda;          // Cprime bound
    long long p = 0;          // Cp / B2p parameter
    std::string form_spec;    // Fillable: the form to fill (builtin:... or file)
    bool relaxed = false;     // allow short subdivided edges for Fillable
    long long node_budget = 20'000'000; // fill-search budget per trial

    int jobs = 1;
    bool timing = false; // record wall seconds (sacrifices byte-identity)
    std::size_t max_relators = 2'000'000;
};

struct SweepRow {
    int ell = 0;
    Rational d;
    long long trials = 0;
    long long successes = 0;     // predicate hits (violations / fillings found)
    double fraction = 0.0;
    double mean_relators = 0.0;
    long long timeouts = 0;      // trials that exhausted the node budget
    double seconds = 0.0;        // 0 unless timing was requested
};

// Throws std::invalid_argument on an invalid spec.  Row order: ells outer,
// densities inner, both as given.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Schema: ell,d_num,d_den,trials,successes,fraction,mean_relators,timeouts,seconds
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace grouplab
