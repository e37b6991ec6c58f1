#pragma once
// Fillings of labeled 2-complexes by relator tuples: label induction,
// reducedness, backtracking search over a relator set, fillability by the
// full universe of cyclically reduced words, the filling census, and the
// isoperimetric audit.

#include "grouplab/bigint.hpp"
#include "grouplab/complex2.hpp"
#include "grouplab/forms.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/rational.hpp"
#include "grouplab/words.hpp"

#include <string>
#include <vector>

namespace grouplab {

struct InducedLabels {
    bool ok = false;
    // Letter carried by the forward orientation of each geometric edge,
    // indexed like Complex2::edges(); meaningful when ok.
    std::vector<Letter> by_edge;
    std::string conflict; // first contradiction found when not ok
};

// Propagate relator letters around every face boundary.  Requires
// |relators[i-1]| = lengths[i-1] and cyclically reduced relators (throws
// std::invalid_argument otherwise); a labeling contradiction is a result.
InducedLabels induce_labels(const Complex2& c, const AbstractLabeling& lab,
                            const std::vector<Word>& relators);

struct VanKampenComplex {
    Complex2 complex;
    AbstractLabeling labeling;
    std::vector<Word> relators;     // relators[i-1] fills abstract index i
    std::vector<Letter> edge_labels; // forward-orientation letters by edge index
};

// Builds and validates; throws std::invalid_argument on any inconsistency
// (length mismatch, duplicate relators, label conflict).
VanKampenComplex make_van_kampen(Complex2 c, AbstractLabeling lab, std::vector<Word> relators);

// No two faces carrying the same relator share a geometric edge at the same
// effective boundary position; with pairwise distinct relators this equals
// reduction_degree(labeling) == 0.
bool is_reduced_vk(const VanKampenComplex& v);

struct FillingReport {
    bool found = false;
    std::vector<Word> assignment; // size k when found
    long long nodes_explored = 0;
    bool reduced = false;          // reducedness of the found filling
    bool budget_exhausted = false; // search aborted: absence NOT proven
};

// Backtracking search for k pairwise distinct relators from R (lengths
// matching the labeling) with a consistent induced labeling, reduced when
// require_reduced.  Deterministic given R's order: abstract indices filled
// most-shared-edges-first, candidates tried in R order.  One node = one
// candidate attempt; the budget bounds worst-case blowup near the
// transition.
FillingReport find_filling(const Complex2& c, const AbstractLabeling& lab,
                           const std::vector<Word>& R, bool require_reduced,
                           long long node_budget = 20'000'000);

struct UniverseFill {
    bool fillable = false;
    BigInt count = 0;             // number of fillings (when counting)
    std::vector<Word> witness;    // one filling when fillable
};

// Decides (or counts) fillings by the full universe: edge labelings over m
// generators making every boundary cyclically reduced, same-label faces
// reading one word, relators pairwise distinct, and the complex reduced.
// Enumerate per edge-class rather than per relator tuple.  Throws
// std::length_error past the edge guard.
UniverseFill universe_fillings(const Complex2& c, const AbstractLabeling& lab, int m,
                               bool count_all, int max_edges = 64);

bool fillable_by_universe(const Complex2& c, const AbstractLabeling& lab, int m);

struct Census {
    BigInt count;                      // |Y_ell|: distinct-relator fillings
    double exponent;                   // log(count) / (k * ell * log(2m-1))
    std::vector<BigInt> self_intersections; // S_0..S_k by slot-wise agreement
};

// Full census of the subdivided form with every face its own relator.
// Tiny scale only (k <= 3, ell <= 8, m = 2); guarded.
Census filling_census(const GeometricForm& form, int ell, int m);

struct AuditReport {
    long long faces = 0;
    long long edges = 0;
    long long red = 0;
    long long lhs = 0;        // edges + red
    Rational rhs;             // (1 - d - eps) * faces * ell
    bool pass = false;        // lhs >= rhs
    long long boundary = 0;   // |dD|: edge slots not covered twice by faces
    Rational rhs_boundary;    // (1 - 2d - eps) * faces * ell
    bool pass_boundary = false; // boundary form; meaningful for planar
                                // simply connected inputs
};

AuditReport isoperimetric_audit(const Complex2& c, const AbstractLabeling& lab, const Rational& d,
                                const Rational& eps, long long ell);

} // namespace grouplab
