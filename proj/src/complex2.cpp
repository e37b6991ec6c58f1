#include "grouplab/complex2.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace grouplab {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

std::vector<std::string> validate(const ComplexData& d) {
    std::vector<std::string> diag;
    std::set<int> vset;
    for (int v : d.vertices)
        if (!vset.insert(v).second) diag.push_back("duplicate vertex id " + std::to_string(v));

    std::set<int> eset;
    for (const EdgeRec& e : d.edges) {
        if (e.id <= 0) diag.push_back("edge id " + std::to_string(e.id) + " must be positive");
        if (!eset.insert(e.id).second) diag.push_back("duplicate edge id " + std::to_string(e.id));
        for (int v : {e.from, e.to})
            if (!vset.count(v))
                diag.push_back("edge " + std::to_string(e.id) + " endpoint " + std::to_string(v) +
                               " is not a declared vertex");
    }

    // Endpoint lookup for the loop checks below; skip faces touching unknown
    // edges (already reported).
    auto endpoints = [&](int oe, int& a, int& o) -> bool {
        int id = oe > 0 ? oe : -oe;
        for (const EdgeRec& e : d.edges)
            if (e.id == id) {
                a = oe > 0 ? e.from : e.to;
                o = oe > 0 ? e.to : e.from;
                return true;
            }
        return false;
    };

    std::set<int> fset;
    std::set<int> used_edges;
    for (const FaceRec& f : d.faces) {
        if (f.id <= 0) diag.push_back("face id " + std::to_string(f.id) + " must be positive");
        if (!fset.insert(f.id).second) diag.push_back("duplicate face id " + std::to_string(f.id));
        if (f.boundary.empty()) {
            diag.push_back("face " + std::to_string(f.id) + " has an empty boundary");
            continue;
        }
        bool refs_ok = true;
        for (int oe : f.boundary) {
            int id = oe > 0 ? oe : -oe;
            if (oe == 0 || !eset.count(id)) {
                diag.push_back("face " + std::to_string(f.id) + " references unknown edge " +
                               std::to_string(oe));
                refs_ok = false;
            } else {
                used_edges.insert(id);
            }
        }
        if (!refs_ok) continue;
        std::size_t n = f.boundary.size();
        for (std::size_t j = 0; j < n; ++j) {
            int cur = f.boundary[j];
            int nxt = f.boundary[(j + 1) % n];
            int a1 = 0, o1 = 0, a2 = 0, o2 = 0;
            endpoints(cur, a1, o1);
            endpoints(nxt, a2, o2);
            (void)a1;
            (void)o2;
            if (o1 != a2)
                diag.push_back("face " + std::to_string(f.id) + " boundary is not a loop after position " +
                               std::to_string(j + 1));
            if (n >= 2 && nxt == -cur)
                diag.push_back("face " + std::to_string(f.id) +
                               " boundary is not cyclically reduced at position " + std::to_string(j + 1));
        }
    }

    for (const EdgeRec& e : d.edges)
        if (!used_edges.count(e.id)) diag.push_back("isolated edge " + std::to_string(e.id));

    return diag;
}

Complex2 Complex2::from_data(ComplexData d) {
    std::vector<std::string> diag = validate(d);
    if (!diag.empty()) throw std::invalid_argument("invalid complex: " + join(diag, "; "));

    Complex2 c;
    c.d_ = std::move(d);
    std::sort(c.d_.vertices.begin(), c.d_.vertices.end());
    std::sort(c.d_.edges.begin(), c.d_.edges.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
    std::sort(c.d_.faces.begin(), c.d_.faces.end(), [](const FaceRec& a, const FaceRec& b) { return a.id < b.id; });

    for (std::size_t i = 0; i < c.d_.edges.size(); ++i) c.edge_index_[c.d_.edges[i].id] = i;
    for (std::size_t i = 0; i < c.d_.faces.size(); ++i) c.face_index_[c.d_.faces[i].id] = i;

    for (int v : c.d_.vertices) c.degree_[v] = 0;
    for (const EdgeRec& e : c.d_.edges) {
        c.degree_[e.from] += 1;
        c.degree_[e.to] += 1;
    }

    c.incidence_.assign(c.d_.edges.size(), 0);
    for (const FaceRec& f : c.d_.faces)
        for (int oe : f.boundary) c.incidence_[c.edge_index_.at(oe > 0 ? oe : -oe)] += 1;

    return c;
}

int Complex2::alpha(int oedge) const {
    const EdgeRec& e = edge_by_id(oedge > 0 ? oedge : -oedge);
    return oedge > 0 ? e.from : e.to;
}

int Complex2::omega(int oedge) const {
    const EdgeRec& e = edge_by_id(oedge > 0 ? oedge : -oedge);
    return oedge > 0 ? e.to : e.from;
}

bool Complex2::is_connected() const {
    if (d_.vertices.empty()) return true;
    std::unordered_map<int, std::vector<int>> adj;
    for (const EdgeRec& e : d_.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::set<int> seen{d_.vertices.front()};
    std::vector<int> stack{d_.vertices.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == d_.vertices.size();
}

std::vector<Complex2::Arc> Complex2::maximal_arcs() const {
    std::vector<Arc> arcs;
    std::set<int> visited; // geometric edge ids

    // The unique continuation of oriented edge `oe` through a degree-2
    // vertex, or 0 when the far endpoint is a branch vertex.
    auto continuation = [&](int oe) -> int {
        int v = omega(oe);
        if (degree_.at(v) != 2) return 0;
        for (const EdgeRec& e : d_.edges) {
            for (int cand : {e.id, -e.id}) {
                if (alpha(cand) == v && cand != -oe) return cand;
            }
        }
        return 0; // the only half-edge back is -oe: dead end (degree-2 via a loop)
    };

    // Open arcs: walk forward from every oriented edge that starts at a
    // branch vertex.
    for (const EdgeRec& e : d_.edges) {
        for (int start : {e.id, -e.id}) {
            if (degree_.at(alpha(start)) == 2) continue;
            int gid = start > 0 ? start : -start;
            if (visited.count(gid)) continue;
            Arc arc;
            int cur = start;
            for (;;) {
                int g = cur > 0 ? cur : -cur;
                if (visited.count(g)) break; // other direction already traced this arc
                visited.insert(g);
                arc.oedges.push_back(cur);
                int nxt = continuation(cur);
                if (nxt == 0) break;
                cur = nxt;
            }
            if (!arc.oedges.empty()) arcs.push_back(std::move(arc));
        }
    }

    // Remaining edges lie on pure degree-2 cycles: each yields one closed arc.
    for (const EdgeRec& e : d_.edges) {
        if (visited.count(e.id)) continue;
        Arc arc;
        arc.closed = true;
        int cur = e.id;
        for (;;) {
            int g = cur > 0 ? cur : -cur;
            if (visited.count(g)) break;
            visited.insert(g);
            arc.oedges.push_back(cur);
            int nxt = continuation(cur);
            assert(nxt != 0);
            cur = nxt;
        }
        arcs.push_back(std::move(arc));
    }

    return arcs;
}

long long Complex2::boundary_arc_traversals(int face_id) const {
    const FaceRec& f = face_by_id(face_id);
    long long breaks = 0;
    for (int oe : f.boundary)
        if (degree_.at(omega(oe)) != 2) ++breaks;
    if (breaks > 0) return breaks;
    // Pure-cycle boundary: winding number over the closed arc it wraps.
    std::set<int> distinct;
    for (int oe : f.boundary) distinct.insert(oe > 0 ? oe : -oe);
    assert(f.boundary.size() % distinct.size() == 0);
    return (long long)(f.boundary.size() / distinct.size());
}

bool Complex2::satisfies_complexity(long long K) const {
    return complexity_value() <= K;
}

long long Complex2::complexity_value() const {
    long long k = num_faces();
    k = std::max(k, (long long)maximal_arcs().size());
    for (const FaceRec& f : d_.faces) k = std::max(k, boundary_arc_traversals(f.id));
    return k;
}

bool Complex2::is_contractible() const {
    for (int inc : incidence_)
        if (inc == 1) return true;
    return false;
}

Complex2 Complex2::face_subcomplex(const std::vector<int>& face_ids) const {
    if (face_ids.empty()) throw std::invalid_argument("face subset must be nonempty");
    std::set<int> keep;
    for (int id : face_ids) {
        if (!has_face(id)) throw std::invalid_argument("unknown face id " + std::to_string(id));
        keep.insert(id);
    }
    ComplexData out;
    std::set<int> edge_ids, vertex_ids;
    for (const FaceRec& f : d_.faces)
        if (keep.count(f.id)) {
            out.faces.push_back(f);
            for (int oe : f.boundary) edge_ids.insert(oe > 0 ? oe : -oe);
        }
    for (const EdgeRec& e : d_.edges)
        if (edge_ids.count(e.id)) {
            out.edges.push_back(e);
            vertex_ids.insert(e.from);
            vertex_ids.insert(e.to);
        }
    out.vertices.assign(vertex_ids.begin(), vertex_ids.end());
    return from_data(std::move(out));
}

long long Complex2::boundary_length() const {
    long long total = 0;
    for (int inc : incidence_) total += std::max(2 - inc, 0);
    return total;
}

} // namespace grouplab
