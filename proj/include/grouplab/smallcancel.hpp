#pragma once
// Piece detection over a relator set and the small-cancellation predicates
// C'(lambda), C(p), B(2p).
//
// A piece is a cyclic subword occurring at two distinct sites (relator,
// start, orientation) across the set; occurrences at different positions of
// the same relator and orientation count, except that a full-period read is
// the same occurrence of the whole cyclic word no matter where it starts.
// Occurrence length is capped at the relator's length (no wrapping past one
// period).

#include "grouplab/rational.hpp"
#include "grouplab/words.hpp"

#include <array>
#include <limits>
#include <vector>

namespace grouplab {

struct OccurrenceSite {
    int relator = 0;   // 0-based index into R
    long long pos = 0; // 0-based cyclic start position
    int orient = 1;    // +1 reads the relator forward, -1 reads its inverse
};

// Lexicographic by (relator, pos, orientation) with forward before inverse.
bool site_less(const OccurrenceSite& a, const OccurrenceSite& b);

struct PieceTable {
    // maxpiece[t][0][p] for forward sites, maxpiece[t][1][p] for inverse
    // sites: the length of the longest piece beginning there (0 if none).
    // Prefix-closed: every shorter positive length is a piece too.
    std::vector<std::array<std::vector<long long>, 2>> maxpiece;

    long long at(const OccurrenceSite& s) const {
        return maxpiece[(std::size_t)s.relator][s.orient == 1 ? 0 : 1][(std::size_t)s.pos];
    }
};

// Throws std::invalid_argument on an empty set or relators that are empty or
// not cyclically reduced.
PieceTable piece_table(const std::vector<Word>& R);

inline constexpr long long kInfinitePieces = std::numeric_limits<long long>::max();

struct CprimeWitness {
    Word piece;                  // longest offending piece
    int relator = 0;             // relator whose bound it breaks
    OccurrenceSite site1, site2; // first two occurrence sites, site order
};

struct CprimeResult {
    bool ok = true;
    CprimeWitness witness; // meaningful when !ok
};

// C'(lambda): every piece in every relator r is strictly shorter than
// lambda*|r|.  lambda must lie in (0,1).
CprimeResult check_cprime(const std::vector<Word>& R, const Rational& lambda);

struct Factorization {
    long long pieces = kInfinitePieces; // minimal piece count, or infinity
    OccurrenceSite start;               // optimal start (valid when finite)
    std::vector<Word> factors;          // greedy factors at that start
};

// Minimum s such that some rotation of r or r^-1 factors into s pieces;
// pieces are prefix-closed, so furthest-jump greedy from every start is
// optimal.  Infinity when every start hits a zero-piece position.
Factorization best_factorization(const PieceTable& pt, const std::vector<Word>& R, int t);

// Convenience form: locates r in R (throws std::invalid_argument if absent).
long long min_piece_factorization(const Word& r, const std::vector<Word>& R);

struct CpResult {
    bool ok = true;
    int relator = -1;   // offending relator when !ok
    Factorization fact; // its minimal factorization
};

// C(p): no relator is a product of fewer than p pieces; p >= 2.
CpResult check_cp(const std::vector<Word>& R, long long p);

struct B2pWitness {
    int relator = -1;
    OccurrenceSite start;      // window start
    long long half_len = 0;    // ceil(|r|/2)
    long long pieces = 0;      // its (finite) factorization, < p
    std::vector<Word> factors;
};

struct B2pResult {
    bool ok = true;
    B2pWitness witness;
};

// B(2p): no cyclic subword of length ceil(|r|/2) of any relator (either
// orientation) is a product of fewer than p pieces, factored as a linear
// word; an uncoverable window counts as infinity and passes.  p >= 1.
B2pResult check_b2p(const std::vector<Word>& R, long long p);

} // namespace grouplab
