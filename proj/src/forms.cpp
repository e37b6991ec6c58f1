#include "grouplab/forms.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace grouplab {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
    return out;
}

} // namespace

std::vector<std::string> validate_form(const Complex2& base,
                                       const std::vector<std::pair<int, Rational>>& lambda) {
    std::vector<std::string> diag;
    std::map<int, Rational> by_edge;
    for (const auto& [eid, lam] : lambda) {
        if (!base.has_edge(eid)) {
            diag.push_back("lambda names unknown edge " + std::to_string(eid));
            continue;
        }
        if (!by_edge.emplace(eid, lam).second)
            diag.push_back("edge " + std::to_string(eid) + " has two lambda values");
        if (lam <= Rational(0) || lam > Rational(1))
            diag.push_back("lambda of edge " + std::to_string(eid) + " = " + lam.fraction_string() +
                           " is outside (0, 1]");
    }
    for (const EdgeRec& e : base.edges())
        if (!by_edge.count(e.id)) diag.push_back("edge " + std::to_string(e.id) + " has no lambda");
    if (!diag.empty()) return diag;

    if (base.num_faces() == 0) diag.push_back("form has no faces");
    if (!base.is_connected()) diag.push_back("form is not connected");
    for (const FaceRec& f : base.faces()) {
        Rational total(0);
        for (int oe : f.boundary) total = total + by_edge.at(oe > 0 ? oe : -oe);
        if (total > Rational(1))
            diag.push_back("face " + std::to_string(f.id) + " boundary length " +
                           total.fraction_string() + " exceeds 1");
    }
    return diag;
}

GeometricForm make_form(Complex2 base, const std::vector<std::pair<int, Rational>>& lambda) {
    std::vector<std::string> diag = validate_form(base, lambda);
    if (!diag.empty()) throw std::invalid_argument("invalid form: " + join(diag));
    GeometricForm f;
    f.lambda.assign((std::size_t)base.num_edges(), Rational(0));
    for (const auto& [eid, lam] : lambda) f.lambda[(std::size_t)base.edge_pos(eid)] = lam;
    f.base = std::move(base);
    return f;
}

Rational density(const GeometricForm& f) {
    Rational total(0);
    for (const Rational& lam : f.lambda) total = total + lam;
    return total / Rational(f.base.num_faces());
}

Rational subset_density(const GeometricForm& f, const std::vector<int>& face_ids) {
    Complex2 sub = f.base.face_subcomplex(face_ids);
    Rational total(0);
    for (const EdgeRec& e : sub.edges()) total = total + f.lambda_of(e.id);
    return total / Rational(sub.num_faces());
}

CriticalDensity critical_density(const GeometricForm& f, int max_faces) {
    int n = f.base.num_faces();
    if (n > max_faces)
        throw std::length_error("critical density enumeration over " + std::to_string(n) +
                                " faces exceeds the limit of " + std::to_string(max_faces));
    // Per-face edge index lists; a stamp array deduplicates edge lambdas
    // within one subset without allocations.
    std::vector<std::vector<int>> face_edges((std::size_t)n);
    for (int fi = 0; fi < n; ++fi)
        for (int oe : f.base.faces()[(std::size_t)fi].boundary)
            face_edges[(std::size_t)fi].push_back(f.base.edge_pos(oe > 0 ? oe : -oe));
    std::vector<unsigned> stamp((std::size_t)f.base.num_edges(), 0);

    CriticalDensity best;
    bool have = false;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Rational total(0);
        int faces = 0;
        for (int fi = 0; fi < n; ++fi) {
            if (!(mask & (1u << fi))) continue;
            ++faces;
            for (int ei : face_edges[(std::size_t)fi]) {
                if (stamp[(std::size_t)ei] == mask) continue;
                stamp[(std::size_t)ei] = mask;
                total = total + f.lambda[(std::size_t)ei];
            }
        }
        Rational dens = total / Rational(faces);
        if (!have || dens < best.value) {
            have = true;
            best.value = dens;
            best.witness.clear();
            for (int fi = 0; fi < n; ++fi)
                if (mask & (1u << fi)) best.witness.push_back(f.base.faces()[(std::size_t)fi].id);
        }
    }
    assert(have);
    return best;
}

Rational transition_density(const GeometricForm& f, int max_faces) {
    return Rational(1) - critical_density(f, max_faces).value;
}

SubdividedComplex subdivide(const GeometricForm& f, int ell, bool relaxed) {
    if (ell < 1) throw std::invalid_argument("subdivision scale must be >= 1");
    long long min_units = relaxed ? 1 : 3;
    for (const EdgeRec& e : f.base.edges()) {
        const Rational& lam = f.lambda_of(e.id);
        long long units = lam.num() * ell / lam.den(); // floor: lambda > 0
        if (units < min_units) {
            long long need = (min_units * lam.den() + lam.num() - 1) / lam.num();
            throw std::invalid_argument(
                "edge " + std::to_string(e.id) + " subdivides into " + std::to_string(units) +
                " unit edges at ell=" + std::to_string(ell) + " (need >= " + std::to_string(min_units) +
                "); minimal admissible ell is " + std::to_string(need));
        }
    }

    SubdividedComplex out;
    out.ell = ell;
    ComplexData d;
    int next_vertex = 0;
    for (int v : f.base.vertices()) {
        d.vertices.push_back(v);
        next_vertex = std::max(next_vertex, v);
    }
    ++next_vertex;
    int next_edge = 1;
    out.arc_map.assign((std::size_t)f.base.num_edges(), {});
    for (const EdgeRec& e : f.base.edges()) {
        const Rational& lam = f.lambda_of(e.id);
        long long units = lam.num() * ell / lam.den();
        int prev = e.from;
        std::vector<int>& path = out.arc_map[(std::size_t)f.base.edge_pos(e.id)];
        for (long long u = 0; u < units; ++u) {
            int nxt = (u + 1 == units) ? e.to : next_vertex++;
            if (nxt != e.to) d.vertices.push_back(nxt);
            d.edges.push_back({next_edge, prev, nxt});
            path.push_back(next_edge);
            ++next_edge;
            prev = nxt;
        }
    }
    for (const FaceRec& bf : f.base.faces()) {
        FaceRec nf;
        nf.id = bf.id;
        for (int oe : bf.boundary) {
            const std::vector<int>& path = out.arc_map[(std::size_t)f.base.edge_pos(oe > 0 ? oe : -oe)];
            if (oe > 0)
                for (int ue : path) nf.boundary.push_back(ue);
            else
                for (auto it = path.rbegin(); it != path.rend(); ++it) nf.boundary.push_back(-*it);
        }
        d.faces.push_back(std::move(nf));
    }
    out.complex = Complex2::from_data(std::move(d));
    return out;
}

namespace {

GeometricForm build_cprime(const Rational& lam) {
    if (lam <= Rational(0) || lam >= Rational(1))
        throw std::invalid_argument("cprime parameter must lie strictly between 0 and 1");
    ComplexData d;
    d.vertices = {1, 2};
    d.edges = {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}; // shared s, privates a and b
    d.faces = {{1, {1, -2}}, {2, {1, -3}}};
    Rational rest = Rational(1) - lam;
    return make_form(Complex2::from_data(std::move(d)), {{1, lam}, {2, rest}, {3, rest}});
}

GeometricForm build_wheel(long long p) {
    if (p < 2) throw std::invalid_argument("wheel parameter must be >= 2");
    ComplexData d;
    std::vector<std::pair<int, Rational>> lambda;
    Rational spoke(1, p), petal = Rational(1) - spoke;
    FaceRec center{1, {}};
    for (long long i = 0; i < p; ++i) {
        d.vertices.push_back((int)(i + 1));
        int ci = (int)(i + 1);                            // v_i -> v_{i+1}
        int ti = (int)(p + 1 + i);                        // v_{i+1} -> v_i
        int vi = (int)(i + 1), vn = (int)((i + 1) % p + 1);
        d.edges.push_back({ci, vi, vn});
        d.edges.push_back({ti, vn, vi});
        lambda.push_back({ci, spoke});
        lambda.push_back({ti, petal});
        center.boundary.push_back(ci);
        d.faces.push_back({(int)(i + 2), {ci, ti}});
    }
    d.faces.push_back(std::move(center));
    return make_form(Complex2::from_data(std::move(d)), lambda);
}

GeometricForm build_halfwheel(long long p) {
    if (p < 1) throw std::invalid_argument("halfwheel parameter must be >= 1");
    ComplexData d;
    std::vector<std::pair<int, Rational>> lambda;
    Rational shared(1, 2 * p), petal = Rational(1) - shared;
    for (long long i = 0; i <= p; ++i) d.vertices.push_back((int)(i + 1));
    FaceRec center{1, {}};
    for (long long i = 0; i < p; ++i) {
        int si = (int)(i + 1);     // w_i -> w_{i+1}
        int ti = (int)(p + 2 + i); // w_{i+1} -> w_i
        d.edges.push_back({si, (int)(i + 1), (int)(i + 2)});
        d.edges.push_back({ti, (int)(i + 2), (int)(i + 1)});
        lambda.push_back({si, shared});
        lambda.push_back({ti, petal});
        center.boundary.push_back(si);
        d.faces.push_back({(int)(i + 2), {si, ti}});
    }
    int h = (int)(p + 1); // the center face's private half, w_p -> w_0
    d.edges.push_back({h, (int)(p + 1), 1});
    lambda.push_back({h, Rational(1, 2)});
    center.boundary.push_back(h);
    d.faces.push_back(std::move(center));
    return make_form(Complex2::from_data(std::move(d)), lambda);
}

GeometricForm build_counterexample() {
    ComplexData d;
    d.vertices = {1, 2};
    d.edges = {{1, 1, 1},  // outer loop o
               {2, 1, 2},  // chord c
               {3, 1, 2},  // upper arc u
               {4, 1, 2}}; // lower arc l
    d.faces = {{1, {1, 3, -4}},  // outer face: o u l^-1
               {2, {2, -3}},     // upper face: c u^-1
               {3, {2, -4}}};    // lower face: c l^-1
    return make_form(Complex2::from_data(std::move(d)),
                     {{1, Rational(4, 5)}, {2, Rational(9, 10)}, {3, Rational(1, 10)}, {4, Rational(1, 10)}});
}

} // namespace

GeometricForm builtin_form(const std::string& spec) {
    std::string name = spec;
    std::string arg;
    auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')')
            throw std::invalid_argument("malformed form spec \"" + spec + "\"");
        name = spec.substr(0, open);
        arg = spec.substr(open + 1, spec.size() - open - 2);
    }
    auto int_arg = [&]() -> long long {
        try {
            std::size_t used = 0;
            long long v = std::stoll(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("form \"" + name + "\" needs an integer parameter, got \"" + arg +
                                        "\"");
        }
    };
    if (name == "cprime") return build_cprime(parse_rational(arg));
    if (name == "wheel") return build_wheel(int_arg());
    if (name == "halfwheel") return build_halfwheel(int_arg());
    if (name == "counterexample") {
        if (!arg.empty()) throw std::invalid_argument("counterexample takes no parameters");
        return build_counterexample();
    }
    throw std::invalid_argument("unknown builtin form \"" + name + "\"");
}

} // namespace grouplab
