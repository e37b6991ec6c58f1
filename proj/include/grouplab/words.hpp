#pragma once
// Free-group words over m generators: reduction, cyclic reduction, inversion,
// rotation, and exact enumeration/counting of the cyclically reduced universe.

#include "grouplab/bigint.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grouplab {

// A letter is a signed generator index: +g is the g-th generator (1-based),
// -g its inverse.  Zero is never a letter.
using Letter = std::int8_t;

inline Letter inverse_letter(Letter l) { return static_cast<Letter>(-l); }

using Word = std::vector<Letter>;

// Largest generator count the text rendering (a..z / A..Z) supports.
inline constexpr int kMaxGenerators = 26;

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Unique freely reduced word equal to w in the free group.
Word free_reduce(const Word& w);

// Freely reduces, then strips mutually inverse first/last pairs; the result
// is cyclically reduced and conjugate to w.
Word cyclic_reduce(const Word& w);

// Reverse the order and flip every sign.
Word invert(const Word& w);

// Cyclic shift starting at index k mod |w|; requires w cyclically reduced so
// the result is too.  Empty words rotate to themselves.
Word rotate(const Word& w, long long k);

// Canonical letter order used by enumeration: generators ascending, then
// inverses ascending (a, b, ..., a^-1, b^-1, ...).
int letter_order_index(Letter l, int m);
Letter letter_from_order(int index, int m);

// Visit every cyclically reduced word of length exactly n (n >= 0) over m
// generators, in lexicographic order under the canonical letter order.  The
// buffer passed to fn is reused between calls.
void for_each_cyclically_reduced(int m, int n, const std::function<void(const Word&)>& fn);

// Collecting wrapper; throws std::length_error once the count would exceed
// max_words (memory guard for careless parameter choices).
std::vector<Word> enumerate_cyclically_reduced(int m, int n, std::size_t max_words = 5'000'000);

// Exact count of cyclically reduced words of length n over m generators,
// without enumeration: (2m-1)^n + 1 + (m-1)(1 + (-1)^n) for n >= 1, and 1
// for n = 0 (the empty word, excluded from the universe below).
BigInt count_cyclically_reduced(int m, int n);

// |B_ell| = number of nonempty cyclically reduced words of length <= ell.
BigInt universe_size(int m, int ell);

// Text form: lowercase a..z for generators, uppercase A..Z for inverses.
// The empty word renders as the empty string.
std::string render_word(const Word& w);
char letter_char(Letter l);

// Parse the text form; letters must name generators 1..m.  Throws ParseError
// on malformed input.  The caller decides whether to demand reducedness.
Word parse_word(const std::string& text, int m);

} // namespace grouplab
