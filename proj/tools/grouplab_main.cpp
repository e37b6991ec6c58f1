// grouplab: exact invariants and Monte Carlo experiments for random group
// presentations in the density model.
//
// Exit codes: 0 success, 2 invalid arguments or malformed input, 3 I/O failure.

#include "grouplab/bigint.hpp"
#include "grouplab/complex2.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/experiments.hpp"
#include "grouplab/filling.hpp"
#include "grouplab/forms.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/rational.hpp"
#include "grouplab/sampler.hpp"
#include "grouplab/smallcancel.hpp"
#include "grouplab/textio.hpp"
#include "grouplab/words.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

namespace {

using namespace grouplab;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_file(out_path, text);
    }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string site_str(const OccurrenceSite& s) {
    return std::to_string(s.relator) + ":" + std::to_string(s.pos) + ":" + (s.orient == 1 ? "+" : "-");
}

std::string words_joined(const std::vector<Word>& ws, char sep) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += sep;
        out += render_word(ws[i]);
    }
    return out;
}

std::string form_display_name(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return spec.substr(8);
    return spec;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& in) {
    std::vector<Rational> out;
    out.reserve(in.size());
    for (const std::string& s : in) out.push_back(parse_rational(s));
    return out;
}

Model parse_model(const std::string& s) {
    if (s == "bernoulli") return Model::Bernoulli;
    if (s == "fixedcount") return Model::FixedCount;
    throw std::invalid_argument("unknown model '" + s + "' (expected bernoulli or fixedcount)");
}

// Targets: cprime(<p/q>) | cp(<p>) | b2p(<p>) | fillable(<form>).
void parse_target(const std::string& s, SweepSpec& spec) {
    auto open = s.find('(');
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close != s.size() - 1 ||
        close <= open + 1) {
        throw std::invalid_argument("malformed target '" + s + "'");
    }
    std::string name = s.substr(0, open);
    std::string arg = s.substr(open + 1, close - open - 1);
    if (name == "cprime") {
        spec.target = SweepTarget::Cprime;
        spec.lambda = parse_rational(arg);
    } else if (name == "cp") {
        spec.target = SweepTarget::Cp;
        spec.p = std::stoll(arg);
    } else if (name == "b2p") {
        spec.target = SweepTarget::B2p;
        spec.p = std::stoll(arg);
    } else if (name == "fillable") {
        spec.target = SweepTarget::Fillable;
        spec.form_spec = arg;
    } else {
        throw std::invalid_argument("unknown target '" + name + "'");
    }
}

struct AuditArgs {
    std::vector<std::string> forms;
    std::vector<int> ells;
    std::string d = "0";
    std::string eps = "0";
    std::string subsets = "none";
    bool relaxed = false;
};

std::string audit_row(const std::string& name, int ell, const Complex2& c,
                      const AbstractLabeling& lab, const Rational& d, const Rational& eps) {
    AuditReport rep = isoperimetric_audit(c, lab, d, eps, ell);
    std::string out = name;
    out += "," + std::to_string(ell);
    out += "," + std::to_string(rep.faces);
    out += "," + std::to_string(rep.edges);
    out += "," + std::to_string(rep.red);
    out += "," + std::to_string(rep.boundary);
    out += "," + std::to_string(rep.lhs);
    out += "," + rep.rhs.fraction_string();
    out += "," + bool_str(rep.pass);
    out += "," + std::to_string(rep.boundary);
    out += "," + rep.rhs_boundary.fraction_string();
    out += "," + bool_str(rep.pass_boundary);
    out += "\n";
    return out;
}

std::string run_audit(const AuditArgs& a) {
    if (a.forms.empty()) throw std::invalid_argument("audit: no forms given");
    if (a.ells.empty()) throw std::invalid_argument("audit: no ell values given");
    if (a.subsets != "none" && a.subsets != "witness" && a.subsets != "all") {
        throw std::invalid_argument("audit: --subsets must be none, witness, or all");
    }
    Rational d = parse_rational(a.d);
    Rational eps = parse_rational(a.eps);
    std::string csv = "name,ell,faces,edges,red,boundary,lhs2,rhs2,pass2,lhs1,rhs1,pass1\n";
    for (const std::string& spec : a.forms) {
        GeometricForm form = load_form(spec);
        std::string name = form_display_name(spec);
        std::vector<std::vector<int>> subsets; // face-id lists beyond the full complex
        if (a.subsets == "witness") {
            subsets.push_back(critical_density(form).witness);
        } else if (a.subsets == "all") {
            int n = form.base.num_faces();
            if (n > 20) throw std::length_error("audit: too many faces for subset enumeration");
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> ids;
                for (int b = 0; b < n; ++b) {
                    if (mask >> b & 1u) ids.push_back(form.base.faces()[(std::size_t)b].id);
                }
                subsets.push_back(std::move(ids));
            }
        }
        for (int ell : a.ells) {
            SubdividedComplex sub = subdivide(form, ell, a.relaxed);
            csv += audit_row(name, ell, sub.complex, distinct_labels(sub.complex), d, eps);
            for (const std::vector<int>& ids : subsets) {
                if ((int)ids.size() == form.base.num_faces()) continue; // full row already present
                std::string sub_name = name + "[";
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    if (i) sub_name += "+";
                    sub_name += std::to_string(ids[(std::size_t)i]);
                }
                sub_name += "]";
                Complex2 part = sub.complex.face_subcomplex(ids);
                csv += audit_row(sub_name, ell, part, distinct_labels(part), d, eps);
            }
        }
    }
    return csv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laboratory for random group presentations in the density model"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out_path;
    std::string format = "csv";
    app.add_option("--seed", seed, "Master seed for all randomized commands");
    app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    app.add_option("--format", format, "Output format for tabular commands (csv)");

    // ---- sample ----
    auto* cmd_sample = app.add_subcommand("sample", "Draw a random presentation and print it");
    int s_m = 2, s_ell = 0;
    std::string s_d = "0", s_model = "bernoulli";
    bool s_exact = false;
    std::size_t s_max_relators = 2'000'000;
    cmd_sample->add_option("--m", s_m, "Number of generators")->required();
    cmd_sample->add_option("--ell", s_ell, "Maximum relator length")->required();
    cmd_sample->add_option("--d", s_d, "Density as p/q")->required();
    cmd_sample->add_option("--model", s_model, "bernoulli or fixedcount");
    cmd_sample->add_flag("--exact-length", s_exact, "Draw only words of length exactly ell");
    cmd_sample->add_option("--max-relators", s_max_relators, "Memory guard on the draw count");
    cmd_sample->callback([&] {
        ModelConfig cfg;
        cfg.m = s_m;
        cfg.ell = s_ell;
        cfg.d = parse_rational(s_d);
        cfg.model = parse_model(s_model);
        cfg.seed = seed;
        cfg.exact_length = s_exact;
        cfg.max_relators = s_max_relators;
        emit(out_path, render_presentation(sample_presentation(cfg)));
    });

    // ---- check-sc ----
    auto* cmd_sc = app.add_subcommand("check-sc", "Small-cancellation checks on a presentation");
    std::string sc_pres;
    std::string sc_cprime;
    long long sc_cp = 0, sc_b2p = 0;
    bool sc_reduce = false;
    cmd_sc->add_option("--presentation", sc_pres, "Presentation file")->required();
    cmd_sc->add_option("--cprime", sc_cprime, "Check C'(p/q)");
    cmd_sc->add_option("--cp", sc_cp, "Check C(p)");
    cmd_sc->add_option("--b2p", sc_b2p, "Check B(2p) with parameter p");
    cmd_sc->add_flag("--reduce", sc_reduce, "Cyclically reduce input relators first");
    cmd_sc->callback([&] {
        if (sc_cprime.empty() && sc_cp == 0 && sc_b2p == 0) {
            throw std::invalid_argument("check-sc: no checks requested");
        }
        Presentation p = parse_presentation(read_file(sc_pres), sc_reduce);
        const std::vector<Word>& R = p.relators;
        std::string out;
        if (!sc_cprime.empty()) {
            Rational lam = parse_rational(sc_cprime);
            std::string line = "cprime(" + lam.fraction_string() + ") ";
            if (R.empty()) {
                line += "true witness=-";
            } else {
                CprimeResult res = check_cprime(R, lam);
                line += bool_str(res.ok);
                line += res.ok ? " witness=-"
                               : " witness=piece=" + render_word(res.witness.piece) +
                                     ",relator=" + std::to_string(res.witness.relator) +
                                     ",site1=" + site_str(res.witness.site1) +
                                     ",site2=" + site_str(res.witness.site2);
            }
            out += line + "\n";
        }
        if (sc_cp != 0) {
            std::string line = "cp(" + std::to_string(sc_cp) + ") ";
            if (R.empty()) {
                line += "true witness=-";
            } else {
                CpResult res = check_cp(R, sc_cp);
                line += bool_str(res.ok);
                line += res.ok ? " witness=-"
                               : " witness=relator=" + std::to_string(res.relator) +
                                     ",pieces=" + std::to_string(res.fact.pieces) +
                                     ",start=" + site_str(res.fact.start) +
                                     ",factors=" + words_joined(res.fact.factors, '.');
            }
            out += line + "\n";
        }
        if (sc_b2p != 0) {
            std::string line = "b2p(" + std::to_string(sc_b2p) + ") ";
            if (R.empty()) {
                line += "true witness=-";
            } else {
                B2pResult res = check_b2p(R, sc_b2p);
                line += bool_str(res.ok);
                line += res.ok ? " witness=-"
                               : " witness=relator=" + std::to_string(res.witness.relator) +
                                     ",window=" + site_str(res.witness.start) +
                                     ",half=" + std::to_string(res.witness.half_len) +
                                     ",pieces=" + std::to_string(res.witness.pieces) +
                                     ",factors=" + words_joined(res.witness.factors, '.');
            }
            out += line + "\n";
        }
        emit(out_path, out);
    });

    // ---- fill ----
    auto* cmd_fill = app.add_subcommand("fill", "Search for a filling of a form by a presentation");
    std::string f_form, f_pres;
    int f_ell = 0;
    bool f_require_reduced = false, f_census = false, f_relaxed = false;
    long long f_budget = 20'000'000;
    cmd_fill->add_option("--form,form", f_form, "Form: builtin:name(params) or file")->required();
    cmd_fill->add_option("--ell", f_ell, "Subdivision scale")->required();
    cmd_fill->add_option("--presentation", f_pres, "Presentation file supplying relators")->required();
    cmd_fill->add_flag("--require-reduced", f_require_reduced, "Only accept reduced fillings");
    cmd_fill->add_flag("--census", f_census, "Also print the full filling census of the form");
    cmd_fill->add_flag("--relaxed", f_relaxed, "Allow subdivided edges shorter than 3");
    cmd_fill->add_option("--budget", f_budget, "Search node budget");
    cmd_fill->callback([&] {
        GeometricForm form = load_form(f_form);
        SubdividedComplex sub = subdivide(form, f_ell, f_relaxed);
        AbstractLabeling lab = distinct_labels(sub.complex);
        Presentation p = parse_presentation(read_file(f_pres));
        FillingReport rep = find_filling(sub.complex, lab, p.relators, f_require_reduced, f_budget);
        std::string out = "found=" + bool_str(rep.found);
        out += " relators=" + (rep.found ? words_joined(rep.assignment, ',') : std::string("-"));
        out += " nodes=" + std::to_string(rep.nodes_explored);
        out += " budget_exhausted=" + bool_str(rep.budget_exhausted);
        out += "\n";
        if (f_census) {
            Census c = filling_census(form, f_ell, p.m);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", c.exponent);
            out += "count=" + c.count.str() + " exponent=" + buf;
            for (std::size_t i = 0; i < c.self_intersections.size(); ++i) {
                out += " s" + std::to_string(i) + "=" + c.self_intersections[i].str();
            }
            out += "\n";
        }
        emit(out_path, out);
    });

    // ---- critical-density ----
    auto* cmd_cd = app.add_subcommand("critical-density", "Exact density and critical density of a form");
    std::string cd_form;
    int cd_max_faces = 20;
    cmd_cd->add_option("--form,form", cd_form, "Form: builtin:name(params) or file")->required();
    cmd_cd->add_option("--max-faces", cd_max_faces, "Guard on the subset enumeration");
    cmd_cd->callback([&] {
        GeometricForm form = load_form(cd_form);
        CriticalDensity cd = critical_density(form, cd_max_faces);
        std::string out = "dens=" + density(form).fraction_string();
        out += " dens_c=" + cd.value.fraction_string();
        out += " witness=";
        for (std::size_t i = 0; i < cd.witness.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cd.witness[i]);
        }
        out += " transition_d=" + (Rational(1) - cd.value).fraction_string();
        out += "\n";
        emit(out_path, out);
    });

    // ---- audit ----
    auto* cmd_audit = app.add_subcommand("audit", "Isoperimetric audit rows for subdivided forms");
    AuditArgs audit_args;
    cmd_audit->add_option("--form", audit_args.forms, "Forms to audit (repeatable)")->required();
    cmd_audit->add_option("--ell", audit_args.ells, "Subdivision scales (repeatable)")->required();
    cmd_audit->add_option("--d", audit_args.d, "Density as p/q");
    cmd_audit->add_option("--eps", audit_args.eps, "Epsilon as p/q");
    cmd_audit->add_option("--subsets", audit_args.subsets, "Also audit face subsets: none|witness|all");
    cmd_audit->add_flag("--relaxed", audit_args.relaxed, "Allow subdivided edges shorter than 3");
    cmd_audit->callback([&] { emit(out_path, run_audit(audit_args)); });

    // ---- phase-sweep ----
    auto* cmd_sweep = app.add_subcommand("phase-sweep", "Monte Carlo sweep over an (ell, density) grid");
    std::string sw_target;
    std::vector<int> sw_ells;
    std::vector<std::string> sw_ds;
    long long sw_trials = 1;
    std::string sw_model = "bernoulli";
    bool sw_exact = false, sw_relaxed = false;
    long long sw_budget = 20'000'000;
    std::string sw_timing = "none";
    int sw_m = 2;
    cmd_sweep->add_option("--target", sw_target, "cprime(p/q) | cp(p) | b2p(p) | fillable(form)")->required();
    cmd_sweep->add_option("--m", sw_m, "Number of generators");
    cmd_sweep->add_option("--ell", sw_ells, "Lengths (repeatable)")->required();
    cmd_sweep->add_option("--d", sw_ds, "Densities as p/q (repeatable)")->required();
    cmd_sweep->add_option("--trials", sw_trials, "Trials per grid point");
    cmd_sweep->add_option("--model", sw_model, "bernoulli or fixedcount");
    cmd_sweep->add_flag("--exact-length", sw_exact, "Sample words of length exactly ell");
    cmd_sweep->add_flag("--relaxed", sw_relaxed, "Allow short subdivided edges (fillable target)");
    cmd_sweep->add_option("--budget", sw_budget, "Fill-search node budget per trial");
    cmd_sweep->add_option("--timing", sw_timing, "wall to record per-row seconds (breaks byte-identity)");
    cmd_sweep->callback([&] {
        if (format != "csv") throw std::invalid_argument("phase-sweep: only --format csv is supported");
        if (sw_timing != "none" && sw_timing != "wall") {
            throw std::invalid_argument("phase-sweep: --timing must be none or wall");
        }
        SweepSpec spec;
        parse_target(sw_target, spec);
        spec.m = sw_m;
        spec.ells = sw_ells;
        spec.densities = parse_rational_list(sw_ds);
        spec.trials = sw_trials;
        spec.master_seed = seed;
        spec.model = parse_model(sw_model);
        spec.exact_length = sw_exact;
        spec.relaxed = sw_relaxed;
        spec.node_budget = sw_budget;
        spec.jobs = jobs;
        spec.timing = sw_timing == "wall";
        emit(out_path, sweep_csv(run_sweep(spec)));
    });

    // ---- census ----
    auto* cmd_census = app.add_subcommand("census", "Exhaustive filling census of a form at scale ell");
    std::string cn_form;
    int cn_ell = 0, cn_m = 2;
    cmd_census->add_option("--form,form", cn_form, "Form: builtin:name(params) or file")->required();
    cmd_census->add_option("--ell", cn_ell, "Subdivision scale")->required();
    cmd_census->add_option("--m", cn_m, "Number of generators");
    cmd_census->callback([&] {
        Census c = filling_census(load_form(cn_form), cn_ell, cn_m);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", c.exponent);
        std::string out = "count=" + c.count.str() + " exponent=" + buf;
        for (std::size_t i = 0; i < c.self_intersections.size(); ++i) {
            out += " s" + std::to_string(i) + "=" + c.self_intersections[i].str();
        }
        out += "\n";
        emit(out_path, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IOError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
