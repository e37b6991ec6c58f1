#include "grouplab/labeling.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <tuple>

namespace grouplab {

int AbstractLabeling::label_of(int face_id) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), face_id,
                               [](const std::pair<int, int>& p, int id) { return p.first < id; });
    if (it == labels.end() || it->first != face_id)
        throw std::invalid_argument("no label for face " + std::to_string(face_id));
    return it->second;
}

std::vector<std::string> validate_labeling(const Complex2& c,
                                           const std::vector<std::pair<int, int>>& labels) {
    std::vector<std::string> diag;
    std::map<int, int> by_face;
    for (auto [fid, lab] : labels) {
        if (!c.has_face(fid)) {
            diag.push_back("label names unknown face " + std::to_string(fid));
            continue;
        }
        if (lab == 0) diag.push_back("face " + std::to_string(fid) + " carries label 0");
        if (!by_face.emplace(fid, lab).second)
            diag.push_back("face " + std::to_string(fid) + " labeled twice");
    }
    for (const FaceRec& f : c.faces())
        if (!by_face.count(f.id)) diag.push_back("face " + std::to_string(f.id) + " is unlabeled");
    if (!diag.empty()) return diag;

    int k = 0;
    for (auto [fid, lab] : by_face) k = std::max(k, std::abs(lab));
    std::vector<long long> lengths((std::size_t)k, -1);
    std::vector<bool> used((std::size_t)k, false);
    for (auto [fid, lab] : by_face) {
        int i = std::abs(lab);
        long long len = (long long)c.face_by_id(fid).boundary.size();
        used[(std::size_t)(i - 1)] = true;
        long long& want = lengths[(std::size_t)(i - 1)];
        if (want < 0)
            want = len;
        else if (want != len)
            diag.push_back("faces labeled with index " + std::to_string(i) +
                           " have differing boundary lengths " + std::to_string(want) + " and " +
                           std::to_string(len));
    }
    for (int i = 1; i <= k; ++i)
        if (!used[(std::size_t)(i - 1)])
            diag.push_back("relator index " + std::to_string(i) + " is unused");
    return diag;
}

AbstractLabeling make_labeling(const Complex2& c, std::vector<std::pair<int, int>> labels) {
    std::vector<std::string> diag = validate_labeling(c, labels);
    if (!diag.empty()) {
        std::string msg = "invalid labeling: ";
        for (std::size_t i = 0; i < diag.size(); ++i) msg += (i ? "; " : "") + diag[i];
        throw std::invalid_argument(msg);
    }
    AbstractLabeling lab;
    std::sort(labels.begin(), labels.end());
    lab.labels = std::move(labels);
    for (auto [fid, l] : lab.labels) lab.k = std::max(lab.k, std::abs(l));
    lab.lengths.assign((std::size_t)lab.k, 0);
    for (auto [fid, l] : lab.labels)
        lab.lengths[(std::size_t)(std::abs(l) - 1)] = (long long)c.face_by_id(fid).boundary.size();
    return lab;
}

AbstractLabeling distinct_labels(const Complex2& c) {
    std::vector<std::pair<int, int>> labels;
    int next = 1;
    for (const FaceRec& f : c.faces()) labels.emplace_back(f.id, next++);
    return make_labeling(c, std::move(labels));
}

int effective_boundary_edge(const FaceRec& f, int label_sign, long long j) {
    long long n = (long long)f.boundary.size();
    assert(j >= 1 && j <= n);
    if (label_sign > 0) return f.boundary[(std::size_t)(j - 1)];
    return -f.boundary[(std::size_t)(n - j)];
}

std::vector<std::vector<Decoration>> decorations_by_edge(const Complex2& c,
                                                         const AbstractLabeling& lab) {
    std::vector<std::vector<Decoration>> out((std::size_t)c.num_edges());
    for (auto [fid, l] : lab.labels) {
        const FaceRec& f = c.face_by_id(fid);
        int i = std::abs(l);
        long long n = (long long)f.boundary.size();
        for (long long j = 1; j <= n; ++j) {
            int oe = effective_boundary_edge(f, l, j);
            int gid = oe > 0 ? oe : -oe;
            out[(std::size_t)c.edge_pos(gid)].push_back({i, j, fid, oe > 0});
        }
    }
    return out;
}

long long reduction_degree(const Complex2& c, const AbstractLabeling& lab, RedConvention conv) {
    auto decs = decorations_by_edge(c, lab);
    long long red = 0;
    for (const auto& edge_decs : decs) {
        // Group by letter (i,j) — and by direction in the oriented variant.
        std::map<std::tuple<int, long long, bool>, long long> counts;
        for (const Decoration& d : edge_decs) {
            bool dir = conv == RedConvention::Oriented ? d.forward : false;
            counts[{d.i, d.j, dir}] += 1;
        }
        for (auto& [key, count] : counts) red += count - 1;
    }
    return red;
}

FillStats free_to_fill_stats(const Complex2& c, const AbstractLabeling& lab) {
    FillStats s;
    s.alpha.assign((std::size_t)lab.k, 0);
    s.eta.assign((std::size_t)lab.k, 0);
    for (auto [fid, l] : lab.labels) s.alpha[(std::size_t)(std::abs(l) - 1)] += 1;

    auto decs = decorations_by_edge(c, lab);
    // not_free[(i,j)] marks letters beaten by a smaller decoration somewhere.
    std::map<std::pair<int, long long>, bool> not_free;
    for (const auto& edge_decs : decs) {
        if (edge_decs.empty()) continue;
        std::pair<int, long long> min_key{edge_decs[0].i, edge_decs[0].j};
        for (const Decoration& d : edge_decs) min_key = std::min(min_key, {d.i, d.j});
        for (const Decoration& d : edge_decs)
            if (std::pair<int, long long>{d.i, d.j} != min_key) not_free[{d.i, d.j}] = true;
    }
    for (int i = 1; i <= lab.k; ++i) {
        long long eta = 0;
        for (long long j = 1; j <= lab.lengths[(std::size_t)(i - 1)]; ++j)
            if (!not_free.count({i, j})) ++eta;
        s.eta[(std::size_t)(i - 1)] = eta;
    }
    return s;
}

long long fill_freedom(const FillStats& s) {
    long long total = 0;
    for (std::size_t i = 0; i < s.alpha.size(); ++i) total += s.alpha[i] * s.eta[i];
    return total;
}

} // namespace grouplab
