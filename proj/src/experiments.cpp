#include "grouplab/experiments.hpp"

#include "grouplab/filling.hpp"
#include "grouplab/forms.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/smallcancel.hpp"
#include "grouplab/textio.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace grouplab {

namespace {

struct TrialResult {
    char success = 0;
    char timeout = 0;
    long long relators = 0;
    double seconds = 0.0;
};

struct FillContext {
    SubdividedComplex sub;
    AbstractLabeling lab;
};

void validate_spec(const SweepSpec& spec) {
    if (spec.ells.empty()) throw std::invalid_argument("sweep: no lengths given");
    if (spec.densities.empty()) throw std::invalid_argument("sweep: density grid is empty");
    if (spec.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (spec.jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
    for (const Rational& d : spec.densities) {
        if (d < Rational(0) || d >= Rational(1)) {
            throw std::invalid_argument("sweep: densities must lie in [0,1)");
        }
    }
    switch (spec.target) {
        case SweepTarget::Cprime:
            if (!(Rational(0) < spec.lambda && spec.lambda < Rational(1))) {
                throw std::invalid_argument("sweep: cprime bound must lie in (0,1)");
            }
            break;
        case SweepTarget::Cp:
            if (spec.p < 2) throw std::invalid_argument("sweep: cp parameter must be >= 2");
            break;
        case SweepTarget::B2p:
            if (spec.p < 1) throw std::invalid_argument("sweep: b2p parameter must be >= 1");
            break;
        case SweepTarget::Fillable:
            if (spec.form_spec.empty()) throw std::invalid_argument("sweep: fillable target needs a form");
            break;
    }
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate_spec(spec);

    // Per-ell fill contexts are built once, up front, so a bad form fails
    // fast instead of inside a worker.
    std::vector<FillContext> fill_ctx;
    if (spec.target == SweepTarget::Fillable) {
        GeometricForm form = load_form(spec.form_spec);
        fill_ctx.reserve(spec.ells.size());
        for (int ell : spec.ells) {
            FillContext ctx;
            ctx.sub = subdivide(form, ell, spec.relaxed);
            ctx.lab = distinct_labels(ctx.sub.complex);
            fill_ctx.push_back(std::move(ctx));
        }
    }

    const std::size_t n_rows = spec.ells.size() * spec.densities.size();
    const std::size_t n_tasks = n_rows * (std::size_t)spec.trials;
    std::vector<TrialResult> results(n_tasks);

    auto run_trial = [&](std::size_t task) {
        const std::size_t row = task / (std::size_t)spec.trials;
        const long long trial = (long long)(task % (std::size_t)spec.trials);
        const std::size_t ell_idx = row / spec.densities.size();
        const int ell = spec.ells[ell_idx];
        const Rational d = spec.densities[row % spec.densities.size()];

        auto t0 = std::chrono::steady_clock::now();
        ModelConfig cfg;
        cfg.m = spec.m;
        cfg.ell = ell;
        cfg.d = d;
        cfg.model = spec.model;
        cfg.exact_length = spec.exact_length;
        cfg.max_relators = spec.max_relators;
        cfg.seed = mix_stream(mix_stream(spec.master_seed, (std::uint64_t)ell, (std::uint64_t)d.num()),
                              (std::uint64_t)d.den(), (std::uint64_t)trial);
        Presentation pres = sample_presentation(cfg);

        TrialResult r;
        r.relators = (long long)pres.relators.size();
        switch (spec.target) {
            case SweepTarget::Cprime:
                r.success = !pres.relators.empty() && !check_cprime(pres.relators, spec.lambda).ok;
                break;
            case SweepTarget::Cp:
                r.success = !pres.relators.empty() && !check_cp(pres.relators, spec.p).ok;
                break;
            case SweepTarget::B2p:
                r.success = !pres.relators.empty() && !check_b2p(pres.relators, spec.p).ok;
                break;
            case SweepTarget::Fillable: {
                const FillContext& ctx = fill_ctx[ell_idx];
                FillingReport rep = find_filling(ctx.sub.complex, ctx.lab, pres.relators,
                                                 /*require_reduced=*/true, spec.node_budget);
                r.success = rep.found;
                r.timeout = rep.budget_exhausted;
                break;
            }
        }
        if (spec.timing) {
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        results[task] = r;
    };

    if (spec.jobs == 1) {
        for (std::size_t task = 0; task < n_tasks; ++task) run_trial(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve((std::size_t)spec.jobs);
        for (int w = 0; w < spec.jobs; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t task = next.fetch_add(1);
                    if (task >= n_tasks) return;
                    run_trial(task);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    std::vector<SweepRow> rows(n_rows);
    for (std::size_t row = 0; row < n_rows; ++row) {
        SweepRow& out = rows[row];
        out.ell = spec.ells[row / spec.densities.size()];
        out.d = spec.densities[row % spec.densities.size()];
        out.trials = spec.trials;
        long long rel_sum = 0;
        double sec_sum = 0.0;
        for (long long t = 0; t < spec.trials; ++t) {
            const TrialResult& r = results[row * (std::size_t)spec.trials + (std::size_t)t];
            out.successes += r.success;
            out.timeouts += r.timeout;
            rel_sum += r.relators;
            sec_sum += r.seconds;
        }
        out.fraction = (double)out.successes / (double)out.trials;
        out.mean_relators = (double)rel_sum / (double)out.trials;
        out.seconds = sec_sum;
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "ell,d_num,d_den,trials,successes,fraction,mean_relators,timeouts,seconds\n";
    char buf[256];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%lld,%lld,%.6f,%.6f,%lld,%.6f\n", r.ell,
                      r.d.num(), r.d.den(), r.trials, r.successes, r.fraction, r.mean_relators,
                      r.timeouts, r.seconds);
        out += buf;
    }
    return out;
}

} // namespace grouplab
