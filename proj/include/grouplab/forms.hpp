#pragma once
// Geometric forms (Y, lambda): a connected 2-complex with exact rational edge
// lengths in (0,1], face boundaries of total length <= 1.  Provides exact
// density and critical density, scale-ell subdivision, and the built-in
// fixture forms used by the experiments.

#include "grouplab/complex2.hpp"
#include "grouplab/rational.hpp"

#include <utility>
#include <vector>

namespace grouplab {

struct GeometricForm {
    Complex2 base;
    std::vector<Rational> lambda; // by edge index, aligned with base.edges()

    const Rational& lambda_of(int edge_id) const { return lambda[(std::size_t)base.edge_pos(edge_id)]; }
};

// Diagnostics: missing/out-of-range lambdas, face boundary length sums > 1,
// disconnected base, no faces.  Empty iff valid.
std::vector<std::string> validate_form(const Complex2& base,
                                       const std::vector<std::pair<int, Rational>>& lambda);

// Throws std::invalid_argument with the diagnostics when invalid.
GeometricForm make_form(Complex2 base, const std::vector<std::pair<int, Rational>>& lambda);

// dens(Y) = (sum of lambda over geometric edges) / |Y|, exact.
Rational density(const GeometricForm& f);

// Density of the face-generated subcomplex spanned by the given faces.
Rational subset_density(const GeometricForm& f, const std::vector<int>& face_ids);

struct CriticalDensity {
    Rational value;           // min of subset_density over nonempty subsets
    std::vector<int> witness; // face ids of the first minimizer, ascending
};

// Enumerates all 2^|Y|-1 nonempty face subsets in ascending bitmask order
// (bit b = b-th face in id order); the first strict minimizer is the witness.
// Throws std::length_error when |Y| exceeds max_faces.
CriticalDensity critical_density(const GeometricForm& f, int max_faces = 20);

// The fillability/non-fillability threshold 1 - critical density.
Rational transition_density(const GeometricForm& f, int max_faces = 20);

struct SubdividedComplex {
    Complex2 complex;
    int ell = 0;
    // arc_map[i] = the oriented unit-edge path replacing the forward
    // orientation of base edge i (same indexing as the form's base edges).
    std::vector<std::vector<int>> arc_map;
};

// Replace every edge by a path of floor(lambda_e * ell) fresh unit edges.
// Requires floor(lambda_e * ell) >= 3 per edge (>= 1 in relaxed mode);
// violations report the offending edge and the minimal admissible ell.
// Face ids survive, so labelings transfer face-wise.
SubdividedComplex subdivide(const GeometricForm& f, int ell, bool relaxed = false);

// Built-in fixtures, by spec string:
//   cprime(<p/q>)   two faces sharing an edge of length lambda, private
//                   edges of length 1-lambda; lambda in (0,1)
//   wheel(<p>)      center face of p edges (length 1/p), p petals with
//                   private edges of length 1-1/p; p >= 2
//   halfwheel(<p>)  center face: p shared edges of length 1/(2p) plus one
//                   private edge of length 1/2; p petals with private edges
//                   of length 1-1/(2p); p >= 1
//   counterexample  the three-face complex whose full density is 19/30 but
//                   whose inner two-face subcomplex has density 11/20
// Throws std::invalid_argument on unknown names or out-of-range parameters.
GeometricForm builtin_form(const std::string& spec);

} // namespace grouplab
