#pragma once
// Independent brute-force oracles used by both the unit tests and the
// acceptance suite.  Each oracle recomputes a quantity from first principles
// (exhaustive generation, literal pairwise scans) so that the optimized
// library paths are checked against a second, unrelated derivation.

#include "grouplab/complex2.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/rng.hpp"
#include "grouplab/smallcancel.hpp"
#include "grouplab/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace grouplab::oracle {

// All cyclically reduced words of length exactly n, produced by generating
// every string over the 2m-letter alphabet and filtering with the reduction
// predicates.  Exponential in n; keep (2m)^n small.
std::vector<Word> brute_cyclically_reduced(int m, int n);

// Literal double loop over all (site, length) x (site) combinations: for
// every start and length, collect the sites reading the same cyclic string
// and apply the multiple-occurrence rule directly.  O(n^4)-ish.
PieceTable brute_piece_table(const std::vector<Word>& R);

// Minimum number of pieces covering relator t, by trying every cut set of
// every rotation in both orientations against the given table (exponential
// in the relator length).  kInfinitePieces when uncoverable.
long long brute_min_factorization(const PieceTable& pt, const std::vector<Word>& R, int t);

// Exhaustive fill search: every ordered tuple of pairwise distinct words
// from R with matching lengths, consistency checked by a direct edge-walk
// (no shared code with the library's induction).  Returns the first filling
// in lexicographic tuple order, if any.
std::optional<std::vector<Word>> brute_find_filling(const Complex2& c, const AbstractLabeling& lab,
                                                    const std::vector<Word>& R, bool require_reduced);

// Direct pairwise definition of the reduction degree: for every unordered
// pair of face-boundary positions placing the same abstract letter on the
// same geometric edge, count one (grouped per edge/letter as count-1).
long long brute_reduction_degree(const Complex2& c, const AbstractLabeling& lab);

// A random valid labeled complex: a small multigraph, faces as cyclically
// non-backtracking closed walks (each face <= max_boundary edges), unused
// edges dropped, labels grouped among equal-length faces.  Deterministic in
// rng state; retries internally until a valid sample appears.
struct RandomLabeled {
    Complex2 complex;
    AbstractLabeling labeling;
};
RandomLabeled random_labeled_complex(Rng& rng, int max_faces = 6, int max_boundary = 12);

// A uniform random cyclically reduced word of length in [1, max_len].
Word random_reduced_word(Rng& rng, int m, int max_len);

} // namespace grouplab::oracle
