#pragma once
// Abstract van Kampen labelings: faces carry signed abstract relator indices,
// edges inherit per-position decorations, and the reduction degree and
// free-to-fill statistics are computed from those decorations.

#include "grouplab/complex2.hpp"

#include <utility>
#include <vector>

namespace grouplab {

struct AbstractLabeling {
    // (face id, signed label) sorted by face id; label in +-{1..k}.
    std::vector<std::pair<int, int>> labels;
    int k = 0;                      // number of abstract relators
    std::vector<long long> lengths; // lengths[i-1] = boundary length of label i

    int label_of(int face_id) const;
};

// Diagnostics: unlabeled/unknown faces, zero labels, unused relator indices,
// length mismatches between faces sharing an index.  Empty iff valid.
std::vector<std::string> validate_labeling(const Complex2& c,
                                           const std::vector<std::pair<int, int>>& labels);

// Derives k and the per-index lengths; throws std::invalid_argument with the
// diagnostics when invalid.
AbstractLabeling make_labeling(const Complex2& c, std::vector<std::pair<int, int>> labels);

// Every face its own abstract relator (+1, +2, ... in face-id order).
AbstractLabeling distinct_labels(const Complex2& c);

// The j-th (1-based) oriented edge of the face's boundary as read under the
// label sign: a negative label reads the inverse face from the same base
// vertex, whose j-th edge is the inverse of the (n+1-j)-th stored edge.
int effective_boundary_edge(const FaceRec& f, int label_sign, long long j);

// "e carries the abstract letter (i,j) from face f": the j-th effective edge
// of a face labeled +-i, with the traversal direction recorded.
struct Decoration {
    int i;
    long long j;
    int face_id;
    bool forward; // true when the face traverses the geometric edge forward
};

// Decorations grouped by geometric edge, indexed like Complex2::edges().
std::vector<std::vector<Decoration>> decorations_by_edge(const Complex2& c,
                                                         const AbstractLabeling& lab);

enum class RedConvention {
    Geometric, // canonical: per geometric edge, direction ignored
    Oriented,  // variant: per oriented edge, direction distinguished
};

// Sum over (edge, relator index i, position j) of (count - 1)+ where count is
// the number of faces placing abstract letter (i,j) on that edge.  Zero iff
// the labeled complex is reduced.
long long reduction_degree(const Complex2& c, const AbstractLabeling& lab,
                           RedConvention conv = RedConvention::Geometric);

struct FillStats {
    std::vector<long long> alpha; // alpha[i-1] = number of faces labeled +-i
    std::vector<long long> eta;   // eta[i-1] = number of free letters of index i
};

// A letter (i,j) is free when it is the lexicographic minimum decoration on
// every geometric edge it decorates (ties count as minimal).
FillStats free_to_fill_stats(const Complex2& c, const AbstractLabeling& lab);

// Sum of alpha_i * eta_i: the free-to-fill count bounded by
// num_edges + reduction_degree.
long long fill_freedom(const FillStats& s);

} // namespace grouplab
