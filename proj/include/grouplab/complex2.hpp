#pragma once
// Oriented combinatorial 2-complexes.  Geometric edges are stored once with a
// forward orientation; the oriented edge "+id" runs from `from` to `to` and
// "-id" is its inverse.  Geometric faces are stored once with a fixed start
// position and orientation; inverse faces are implicit.

#include <string>
#include <unordered_map>
#include <vector>

namespace grouplab {

struct EdgeRec {
    int id;   // positive
    int from; // start vertex of the forward orientation
    int to;   // end vertex of the forward orientation
};

struct FaceRec {
    int id;                    // positive
    std::vector<int> boundary; // signed edge ids; negative = reversed edge
};

struct ComplexData {
    std::vector<int> vertices;
    std::vector<EdgeRec> edges;
    std::vector<FaceRec> faces;
};

// Structural diagnostics: dangling references, non-loop or non-cyclically-
// reduced boundaries, isolated edges.  Empty result iff the data is valid.
std::vector<std::string> validate(const ComplexData& d);

class Complex2 {
public:
    // The empty complex; useful as a placeholder before from_data.
    Complex2() = default;

    // Validates and indexes; throws std::invalid_argument listing every
    // diagnostic if the data is not a valid complex.
    static Complex2 from_data(ComplexData d);

    int num_vertices() const { return (int)d_.vertices.size(); }
    int num_edges() const { return (int)d_.edges.size(); }  // geometric: |Y^(1)|
    int num_faces() const { return (int)d_.faces.size(); }  // geometric: |Y|

    const std::vector<int>& vertices() const { return d_.vertices; }
    const std::vector<EdgeRec>& edges() const { return d_.edges; }
    const std::vector<FaceRec>& faces() const { return d_.faces; }

    bool has_edge(int id) const { return edge_index_.count(id) != 0; }
    bool has_face(int id) const { return face_index_.count(id) != 0; }
    const EdgeRec& edge_by_id(int id) const { return d_.edges[edge_index_.at(id)]; }
    const FaceRec& face_by_id(int id) const { return d_.faces[face_index_.at(id)]; }
    int edge_pos(int id) const { return (int)edge_index_.at(id); } // dense index
    int face_pos(int id) const { return (int)face_index_.at(id); }

    // Endpoints of an oriented (signed) edge id.
    int alpha(int oedge) const;
    int omega(int oedge) const;

    // Number of oriented-edge incidences at v; a loop contributes 2.
    int vertex_degree(int v) const { return degree_.at(v); }

    // Total number of times +-edge appears across all face boundaries.
    int edge_face_incidence(int edge_id) const { return incidence_[edge_index_.at(edge_id)]; }

    // Connectivity of the 1-skeleton (vertices joined by edges).
    bool is_connected() const;

    // Maximal arc: a reduced edge path whose interior vertices have degree 2
    // and whose endpoints do not; a component that is a pure degree-2 cycle
    // forms one closed arc.  The arcs partition the geometric edges.
    struct Arc {
        std::vector<int> oedges; // oriented edges tracing the arc in order
        bool closed = false;
    };
    std::vector<Arc> maximal_arcs() const;

    // How many maximal-arc segments the face boundary traverses, counted with
    // multiplicity.  A boundary passing only degree-2 vertices wraps a closed
    // arc; the traversal count is then its winding number.
    long long boundary_arc_traversals(int face_id) const;

    // Face count, arc count, and every per-face traversal count all <= K.
    bool satisfies_complexity(long long K) const;
    // Smallest K accepted by satisfies_complexity.
    long long complexity_value() const;

    // True iff some geometric edge lies on exactly one face boundary
    // occurrence; such an edge lets the complex collapse toward a graph.
    bool is_contractible() const;

    // The given faces plus exactly the edges and vertices they touch.
    Complex2 face_subcomplex(const std::vector<int>& face_ids) const;

    // |dD| = sum over geometric edges of max(2 - incidence, 0).
    long long boundary_length() const;

    const ComplexData& data() const { return d_; }

private:
    ComplexData d_;
    std::unordered_map<int, std::size_t> edge_index_;
    std::unordered_map<int, std::size_t> face_index_;
    std::unordered_map<int, int> degree_;
    std::vector<int> incidence_; // by edge index
};

} // namespace grouplab
