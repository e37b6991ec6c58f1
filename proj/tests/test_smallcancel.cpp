#include "grouplab/smallcancel.hpp"

#include "grouplab/rng.hpp"
#include "grouplab/words.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace grouplab;

namespace {

Word w_of(const std::string& text) { return parse_word(text, 3); }

// The cyclic length-L read beginning at a site, under its orientation.
Word site_read(const std::vector<Word>& R, const OccurrenceSite& s, long long L) {
    Word base = s.orient == 1 ? R[(std::size_t)s.relator] : invert(R[(std::size_t)s.relator]);
    Word out;
    for (long long j = 0; j < L; ++j)
        out.push_back(base[(std::size_t)((s.pos + j) % (long long)base.size())]);
    return out;
}

// Literal occurrence test: the length-L read at s appears at two distinct
// sites, counting a same-stream repeat only below the full period.
bool literal_is_piece(const std::vector<Word>& R, const OccurrenceSite& s, long long L) {
    Word u = site_read(R, s, L);
    std::vector<OccurrenceSite> hits;
    for (int t = 0; t < (int)R.size(); ++t) {
        if ((long long)R[(std::size_t)t].size() < L) continue;
        for (int o : {1, -1})
            for (long long p = 0; p < (long long)R[(std::size_t)t].size(); ++p) {
                OccurrenceSite cand{t, p, o};
                if (site_read(R, cand, L) == u) hits.push_back(cand);
            }
    }
    std::set<std::pair<int, int>> streams;
    for (const auto& h : hits) streams.insert({h.relator, h.orient});
    if (streams.size() >= 2) return true;
    if (hits.size() >= 2 && L < (long long)R[(std::size_t)hits[0].relator].size()) return true;
    return false;
}

// All occupied sites of R.
std::vector<OccurrenceSite> all_sites(const std::vector<Word>& R) {
    std::vector<OccurrenceSite> out;
    for (int t = 0; t < (int)R.size(); ++t)
        for (int o : {1, -1})
            for (long long p = 0; p < (long long)R[(std::size_t)t].size(); ++p)
                out.push_back({t, p, o});
    return out;
}

std::multiset<long long> maxpiece_multiset(const PieceTable& pt, const std::vector<Word>& R) {
    std::multiset<long long> out;
    for (const auto& s : all_sites(R)) out.insert(pt.at(s));
    return out;
}

std::vector<Word> random_presentation(Rng& rng, int m, int max_k, int max_len) {
    int k = 1 + (int)rng.below((unsigned long long)max_k);
    std::set<Word> seen;
    std::vector<Word> R;
    while ((int)R.size() < k) {
        Word w = oracle::random_reduced_word(rng, m, max_len);
        if (seen.insert(w).second) R.push_back(w);
    }
    return R;
}

} // namespace

TEST_CASE("piece tables of the two one-relator examples") {
    std::vector<Word> ab = {w_of("ab")};
    PieceTable pt = piece_table(ab);
    for (const auto& s : all_sites(ab)) CHECK(pt.at(s) == 0);

    std::vector<Word> aa = {w_of("aa")};
    PieceTable pt2 = piece_table(aa);
    // "a" occurs at positions 0 and 1 (and "A" likewise on the inverse
    // side); the full period "aa" is a single cyclic occurrence, not two.
    for (const auto& s : all_sites(aa)) CHECK(pt2.at(s) == 1);

    CHECK_THROWS_AS((void)piece_table({}), std::invalid_argument);
    CHECK_THROWS_AS((void)piece_table({Word{}}), std::invalid_argument);
    Word bad = {1, -1};
    CHECK_THROWS_AS((void)piece_table({bad}), std::invalid_argument);
}

TEST_CASE("site ordering puts forward before inverse") {
    CHECK(site_less({0, 0, 1}, {0, 0, -1}));
    CHECK(site_less({0, 0, -1}, {0, 1, 1}));
    CHECK(site_less({0, 5, 1}, {1, 0, 1}));
    CHECK_FALSE(site_less({0, 0, 1}, {0, 0, 1}));
}

TEST_CASE("C'(lambda) on the examples, with witness details") {
    std::vector<Word> ab = {w_of("ab")};
    CHECK(check_cprime(ab, Rational(1, 100)).ok);
    CHECK(check_cprime(ab, Rational(99, 100)).ok);

    std::vector<Word> aa = {w_of("aa")};
    CprimeResult res = check_cprime(aa, Rational(1, 2));
    REQUIRE_FALSE(res.ok); // |"a"| = 1 equals lambda * |"aa"|: strict bound broken
    CHECK(res.witness.piece == Word{1});
    CHECK(res.witness.relator == 0);
    CHECK(res.witness.site1.relator == 0);
    CHECK(res.witness.site1.pos == 0);
    CHECK(res.witness.site1.orient == 1);
    CHECK(res.witness.site2.pos == 1);
    CHECK(res.witness.site2.orient == 1);

    // Monotone in lambda: above the piece ratio it holds.
    CHECK(check_cprime(aa, Rational(3, 4)).ok);

    CHECK_THROWS_AS((void)check_cprime(aa, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS((void)check_cprime(aa, Rational(0)), std::invalid_argument);
}

TEST_CASE("minimal piece factorizations of the examples") {
    std::vector<Word> ab = {w_of("ab")};
    CHECK(min_piece_factorization(w_of("ab"), ab) == kInfinitePieces);

    std::vector<Word> aa = {w_of("aa")};
    CHECK(min_piece_factorization(w_of("aa"), aa) == 2);
    CHECK_THROWS_AS((void)min_piece_factorization(w_of("ab"), aa), std::invalid_argument);

    PieceTable pt = piece_table(aa);
    Factorization f = best_factorization(pt, aa, 0);
    CHECK(f.pieces == 2);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == Word{1});
    CHECK(f.factors[1] == Word{1});
}

TEST_CASE("C(p) on the examples") {
    std::vector<Word> ab = {w_of("ab")};
    CHECK(check_cp(ab, 2).ok);
    CHECK(check_cp(ab, 100).ok);

    std::vector<Word> aa = {w_of("aa")};
    CpResult bad = check_cp(aa, 3);
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.relator == 0);
    CHECK(bad.fact.pieces == 2);
    // Antitone in p: the weaker requirement p = 2 still holds.
    CHECK(check_cp(aa, 2).ok);

    CHECK_THROWS_AS((void)check_cp(aa, 1), std::invalid_argument);
}

TEST_CASE("B(2p) on the examples") {
    std::vector<Word> ab = {w_of("ab")};
    CHECK(check_b2p(ab, 1).ok);
    CHECK(check_b2p(ab, 7).ok);

    std::vector<Word> aa = {w_of("aa")};
    B2pResult bad = check_b2p(aa, 2);
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.witness.relator == 0);
    CHECK(bad.witness.half_len == 1);
    CHECK(bad.witness.pieces == 1);
    REQUIRE(bad.witness.factors.size() == 1);
    CHECK(bad.witness.factors[0] == Word{1});
    CHECK(check_b2p(aa, 1).ok);

    CHECK_THROWS_AS((void)check_b2p(aa, 0), std::invalid_argument);
}

TEST_CASE("designed-overlap table equals the brute-force oracle") {
    std::vector<Word> R = {parse_word("aabb", 2), parse_word("abab", 2)};
    PieceTable fast = piece_table(R);
    PieceTable brute = oracle::brute_piece_table(R);
    for (const auto& s : all_sites(R)) CHECK(fast.at(s) == brute.at(s));
    for (int t = 0; t < 2; ++t)
        CHECK(best_factorization(fast, R, t).pieces == oracle::brute_min_factorization(fast, R, t));
}

TEST_CASE("piece machinery agrees with brute force on random sets") {
    Rng rng(556677);
    for (int it = 0; it < 40; ++it) {
        int m = it % 2 == 0 ? 2 : 3;
        std::vector<Word> R = random_presentation(rng, m, 4, 8);
        PieceTable fast = piece_table(R);
        PieceTable brute = oracle::brute_piece_table(R);
        for (const auto& s : all_sites(R)) {
            CHECK(fast.at(s) == brute.at(s));
            // Prefix-closedness, literally: every length up to maxpiece is a
            // piece and the next one is not.
            long long L = fast.at(s);
            for (long long l = 1; l <= L; ++l) CHECK(literal_is_piece(R, s, l));
            if (L < (long long)R[(std::size_t)s.relator].size())
                CHECK_FALSE(literal_is_piece(R, s, L + 1));
        }
        for (int t = 0; t < (int)R.size(); ++t)
            CHECK(best_factorization(fast, R, t).pieces ==
                  oracle::brute_min_factorization(fast, R, t));
    }
}

TEST_CASE("piece structure is invariant under rotation and inversion") {
    Rng rng(424242);
    for (int it = 0; it < 20; ++it) {
        std::vector<Word> R = random_presentation(rng, 2, 3, 7);
        PieceTable base = piece_table(R);
        auto base_set = maxpiece_multiset(base, R);

        std::vector<Word> rotated = R;
        rotated[0] = rotate(rotated[0], 1 + (long long)rng.below(5));
        if (std::set<Word>(rotated.begin(), rotated.end()).size() == rotated.size()) {
            CHECK(maxpiece_multiset(piece_table(rotated), rotated) == base_set);
            CHECK(check_cprime(rotated, Rational(1, 2)).ok == check_cprime(R, Rational(1, 2)).ok);
        }

        std::vector<Word> inverted = R;
        inverted[0] = invert(inverted[0]);
        if (std::set<Word>(inverted.begin(), inverted.end()).size() == inverted.size()) {
            CHECK(maxpiece_multiset(piece_table(inverted), inverted) == base_set);
            CHECK(check_cprime(inverted, Rational(1, 2)).ok == check_cprime(R, Rational(1, 2)).ok);
        }
    }
}

TEST_CASE("monotone in lambda, antitone in p") {
    Rng rng(31337);
    std::vector<Rational> lambdas = {Rational(1, 8), Rational(1, 4), Rational(1, 2),
                                     Rational(3, 4), Rational(7, 8)};
    for (int it = 0; it < 25; ++it) {
        std::vector<Word> R = random_presentation(rng, 2, 4, 10);
        bool prev = false;
        for (const Rational& lam : lambdas) {
            bool ok = check_cprime(R, lam).ok;
            if (prev) CHECK(ok); // once true, stays true as lambda grows
            prev = ok;
        }
        bool prev_cp = true;
        for (long long p : {2, 3, 4, 6}) {
            bool ok = check_cp(R, p).ok;
            if (!prev_cp) CHECK_FALSE(ok); // once false, stays false as p grows
            prev_cp = ok;
        }
        bool prev_b = true;
        for (long long p : {1, 2, 3, 5}) {
            bool ok = check_b2p(R, p).ok;
            if (!prev_b) CHECK_FALSE(ok);
            prev_b = ok;
        }
    }
}

TEST_CASE("witness factorizations really cover the relator") {
    Rng rng(8080);
    for (int it = 0; it < 30; ++it) {
        std::vector<Word> R = random_presentation(rng, 2, 3, 8);
        CpResult res = check_cp(R, 6);
        if (res.ok) continue;
        REQUIRE(res.relator >= 0);
        REQUIRE(res.fact.pieces < 6);
        // The factors concatenate to the rotation read from the start site.
        Word whole;
        for (const Word& u : res.fact.factors) whole.insert(whole.end(), u.begin(), u.end());
        CHECK(whole == site_read(R, res.fact.start, (long long)R[(std::size_t)res.relator].size()));
        CHECK((long long)res.fact.factors.size() == res.fact.pieces);
        // Every factor is a genuine piece at its position.
        long long off = res.fact.start.pos;
        for (const Word& u : res.fact.factors) {
            OccurrenceSite here{res.fact.start.relator, off % (long long)whole.size(),
                                res.fact.start.orient};
            CHECK(literal_is_piece(R, here, (long long)u.size()));
            off += (long long)u.size();
        }
    }
}
