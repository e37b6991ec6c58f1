#include "grouplab/filling.hpp"

#include "grouplab/complex2.hpp"
#include "grouplab/forms.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/sampler.hpp"
#include "grouplab/words.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace grouplab;

namespace {

Complex2 triangle_disk() {
    ComplexData d;
    d.vertices = {1, 2, 3};
    d.edges = {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}};
    d.faces = {{1, {1, 2, 3}}};
    return Complex2::from_data(d);
}

Complex2 sphere2() {
    ComplexData d;
    d.vertices = {1, 2};
    d.edges = {{1, 1, 2}, {2, 2, 1}};
    d.faces = {{1, {1, 2}}, {2, {1, 2}}};
    return Complex2::from_data(d);
}

// Two length-2 faces whose gluing forces r[2] = r[1]^-1: never fillable by
// a cyclically reduced relator.
Complex2 mirror_trap() {
    ComplexData d;
    d.vertices = {1, 2};
    d.edges = {{1, 1, 2}, {2, 2, 1}};
    d.faces = {{1, {1, 2}}, {2, {-2, -1}}};
    return Complex2::from_data(d);
}

// One face winding twice around a loop edge (projective-plane gluing).
Complex2 double_loop() {
    ComplexData d;
    d.vertices = {1};
    d.edges = {{1, 1, 1}};
    d.faces = {{1, {1, 1}}};
    return Complex2::from_data(d);
}

// Single face around a loop edge of length 1: subdividing at ell gives the
// ell-gon disk.
GeometricForm loop_form() {
    ComplexData d;
    d.vertices = {1};
    d.edges = {{1, 1, 1}};
    d.faces = {{1, {1}}};
    return make_form(Complex2::from_data(d), {{1, Rational(1)}});
}

Word w_of(const std::string& text) { return parse_word(text, 2); }

// Independent consistency walk: assign each geometric edge a letter from the
// face words in id order, first assignment wins, conflicts reject.
bool walk_consistent(const Complex2& c, const std::vector<Word>& by_face) {
    std::map<int, Letter> letters;
    std::size_t fi = 0;
    for (const FaceRec& f : c.faces()) {
        const Word& w = by_face[fi++];
        for (std::size_t j = 0; j < f.boundary.size(); ++j) {
            int oe = f.boundary[j];
            int id = oe > 0 ? oe : -oe;
            Letter need = oe > 0 ? w[j] : inverse_letter(w[j]);
            auto [it, fresh] = letters.emplace(id, need);
            if (!fresh && it->second != need) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("label induction on a disk") {
    Complex2 c = triangle_disk();
    AbstractLabeling lab = distinct_labels(c);
    InducedLabels il = induce_labels(c, lab, {w_of("aba")});
    REQUIRE(il.ok);
    REQUIRE(il.by_edge.size() == 3);
    CHECK(il.by_edge[0] == 1);  // a
    CHECK(il.by_edge[1] == 2);  // b
    CHECK(il.by_edge[2] == 1);  // a
    CHECK(il.conflict.empty());
}

TEST_CASE("label induction reports the first conflict") {
    Complex2 s = sphere2();
    AbstractLabeling lab = distinct_labels(s);
    InducedLabels il = induce_labels(s, lab, {w_of("ab"), w_of("aa")});
    CHECK_FALSE(il.ok);
    CHECK(il.conflict.find("edge 2") != std::string::npos);

    // Matching second relator succeeds.
    InducedLabels ok = induce_labels(s, lab, {w_of("ab"), w_of("ab")});
    CHECK(ok.ok);
}

TEST_CASE("label induction validates relator shape") {
    Complex2 c = triangle_disk();
    AbstractLabeling lab = distinct_labels(c);
    CHECK_THROWS_AS((void)induce_labels(c, lab, {}), std::invalid_argument);
    CHECK_THROWS_AS((void)induce_labels(c, lab, {w_of("ab")}), std::invalid_argument);
    Word not_reduced = {1, -1, 1};
    CHECK_THROWS_AS((void)induce_labels(c, lab, {not_reduced}), std::invalid_argument);
}

TEST_CASE("negative labels read the inverse relator") {
    // Mirrored triangles labeled +1/-1 read the same word consistently.
    ComplexData d;
    d.vertices = {1, 2, 3};
    d.edges = {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}};
    d.faces = {{1, {1, 2, 3}}, {2, {-3, -2, -1}}};
    Complex2 c = Complex2::from_data(d);
    AbstractLabeling lab = make_labeling(c, {{1, 1}, {2, -1}});
    InducedLabels il = induce_labels(c, lab, {w_of("aba")});
    REQUIRE(il.ok);
    CHECK(il.by_edge[0] == 1);
    CHECK(il.by_edge[1] == 2);
    CHECK(il.by_edge[2] == 1);
}

TEST_CASE("van Kampen construction rejects duplicates and conflicts") {
    Complex2 s = sphere2();
    AbstractLabeling lab = distinct_labels(s);
    // Identical relators on distinct abstract indices are rejected.
    CHECK_THROWS_AS((void)make_van_kampen(s, lab, {w_of("ab"), w_of("ab")}),
                    std::invalid_argument);
    // Conflicting relators are rejected.
    CHECK_THROWS_AS((void)make_van_kampen(s, lab, {w_of("ab"), w_of("ba")}),
                    std::invalid_argument);

    // A valid, reduced van Kampen complex on the triangle disk.
    Complex2 c = triangle_disk();
    VanKampenComplex vk = make_van_kampen(c, distinct_labels(c), {w_of("aba")});
    CHECK(is_reduced_vk(vk));
    CHECK(vk.edge_labels.size() == 3);

    // Same-label sphere: consistent but not reduced.
    AbstractLabeling same = make_labeling(s, {{1, 1}, {2, 1}});
    VanKampenComplex glued = make_van_kampen(s, same, {w_of("ab")});
    CHECK_FALSE(is_reduced_vk(glued));
}

TEST_CASE("filling search on small fixtures") {
    Complex2 c = triangle_disk();
    AbstractLabeling lab = distinct_labels(c);
    std::vector<Word> R = {w_of("ab"), w_of("aba"), w_of("bab"), w_of("aa")};
    FillingReport rep = find_filling(c, lab, R, /*require_reduced=*/true);
    REQUIRE(rep.found);
    REQUIRE(rep.assignment.size() == 1);
    CHECK(rep.assignment[0].size() == 3);
    CHECK(rep.reduced);
    CHECK(rep.nodes_explored >= 1);
    CHECK_FALSE(rep.budget_exhausted);
    CHECK(induce_labels(c, lab, rep.assignment).ok);

    // Candidates are tried in R order: "aba" comes before "bab".
    CHECK(rep.assignment[0] == w_of("aba"));

    // No length-3 word at all: not found, and absence is proven.
    FillingReport none = find_filling(c, lab, {w_of("ab"), w_of("abab")}, false);
    CHECK_FALSE(none.found);
    CHECK_FALSE(none.budget_exhausted);
}

TEST_CASE("filling search respects the node budget") {
    Complex2 c = triangle_disk();
    AbstractLabeling lab = distinct_labels(c);
    FillingReport rep = find_filling(c, lab, {w_of("aba")}, false, /*node_budget=*/0);
    CHECK_FALSE(rep.found);
    CHECK(rep.budget_exhausted);
}

TEST_CASE("the mirror trap is never fillable") {
    Complex2 c = mirror_trap();
    AbstractLabeling lab = make_labeling(c, {{1, 1}, {2, 1}});
    CHECK(reduction_degree(c, lab) == 0);

    std::vector<Word> everything;
    for (const Word& w : enumerate_cyclically_reduced(2, 2)) everything.push_back(w);
    FillingReport rep = find_filling(c, lab, everything, false);
    CHECK_FALSE(rep.found);
    CHECK_FALSE(rep.budget_exhausted);

    UniverseFill uf = universe_fillings(c, lab, 2, /*count_all=*/true);
    CHECK_FALSE(uf.fillable);
    CHECK(uf.count == 0);
    CHECK_FALSE(fillable_by_universe(c, lab, 2));
}

TEST_CASE("universe fillings on the double loop") {
    // One face reading the loop twice: w[1] = w[2], so the fillings are
    // exactly the four doubled letters.
    Complex2 c = double_loop();
    AbstractLabeling lab = distinct_labels(c);
    CHECK(reduction_degree(c, lab) == 0);
    UniverseFill uf = universe_fillings(c, lab, 2, true);
    CHECK(uf.fillable);
    CHECK(uf.count == 4);
    REQUIRE(uf.witness.size() == 1);
    CHECK(uf.witness[0].size() == 2);
    CHECK(uf.witness[0][0] == uf.witness[0][1]);
    CHECK(fillable_by_universe(c, lab, 2));

    // With three generators: six doubled letters.
    UniverseFill uf3 = universe_fillings(c, lab, 3, true);
    CHECK(uf3.count == 6);
}

TEST_CASE("universe fillings refuse non-reduced complexes and huge inputs") {
    Complex2 s = sphere2();
    AbstractLabeling same = make_labeling(s, {{1, 1}, {2, 1}});
    UniverseFill uf = universe_fillings(s, same, 2, true);
    CHECK_FALSE(uf.fillable);
    CHECK(uf.count == 0);

    SubdividedComplex big = subdivide(loop_form(), 70);
    CHECK_THROWS_AS((void)universe_fillings(big.complex, distinct_labels(big.complex), 2, false),
                    std::length_error);
}

TEST_CASE("filling search agrees with the exhaustive oracle") {
    Rng rng(90210);
    int found_cases = 0;
    for (int it = 0; it < 60; ++it) {
        auto rl = oracle::random_labeled_complex(rng, /*max_faces=*/4, /*max_boundary=*/8);
        std::vector<Word> R;
        for (int i = 0; i < 10; ++i) R.push_back(oracle::random_reduced_word(rng, 2, 8));
        // Include a word of each needed length so searches have a chance.
        for (long long len : rl.labeling.lengths)
            R.push_back(uniform_cyclically_reduced(2, (int)len, rng));
        for (bool require_reduced : {false, true}) {
            FillingReport rep = find_filling(rl.complex, rl.labeling, R, require_reduced);
            REQUIRE_FALSE(rep.budget_exhausted);
            auto brute =
                oracle::brute_find_filling(rl.complex, rl.labeling, R, require_reduced);
            CHECK(rep.found == brute.has_value());
            if (rep.found) {
                ++found_cases;
                InducedLabels il = induce_labels(rl.complex, rl.labeling, rep.assignment);
                CHECK(il.ok);
                // Pairwise distinct, lengths matching.
                for (std::size_t i = 0; i < rep.assignment.size(); ++i) {
                    CHECK((long long)rep.assignment[i].size() == rl.labeling.lengths[i]);
                    for (std::size_t j = i + 1; j < rep.assignment.size(); ++j)
                        CHECK(rep.assignment[i] != rep.assignment[j]);
                }
                if (require_reduced) CHECK(rep.reduced);
            }
        }
    }
    // The sampler must exercise the found path, not just trivial failures.
    CHECK(found_cases > 10);
}

TEST_CASE("disk census counts every cyclically reduced word once") {
    Census census = filling_census(loop_form(), 4, 2);
    CHECK(census.count == 84); // (2m-1)^4 + 1 + (m-1)(1+1) at m = 2
    REQUIRE(census.self_intersections.size() == 2);
    CHECK(census.self_intersections[1] == 84);
    CHECK(census.self_intersections[0] == BigInt(84) * 84 - 84);
    CHECK(census.exponent == doctest::Approx(std::log(84.0) / (4.0 * std::log(3.0))));
}

TEST_CASE("two-face census matches a literal pairwise recount") {
    GeometricForm f = builtin_form("cprime(1/2)");
    Census census = filling_census(f, 6, 2);
    CHECK(census.count == 14160);

    // Independent recount: try every ordered pair of distinct length-6
    // cyclically reduced words against a direct edge walk.
    SubdividedComplex sub = subdivide(f, 6);
    std::vector<Word> c6 = enumerate_cyclically_reduced(2, 6);
    REQUIRE(c6.size() == 732);
    long long count = 0;
    std::map<Word, long long> mult1, mult2;
    for (const Word& r1 : c6)
        for (const Word& r2 : c6) {
            if (r1 == r2) continue;
            if (!walk_consistent(sub.complex, {r1, r2})) continue;
            ++count;
            mult1[r1]++;
            mult2[r2]++;
        }
    CHECK(census.count == count);

    // Agreement pair counts by explicit inclusion-exclusion at k = 2.
    long long a1 = 0, a2 = 0;
    for (const auto& [w, c2] : mult1) {
        (void)w;
        a1 += c2 * c2;
    }
    for (const auto& [w, c2] : mult2) {
        (void)w;
        a2 += c2 * c2;
    }
    const long long a12 = count; // tuples are pairwise distinct
    REQUIRE(census.self_intersections.size() == 3);
    CHECK(census.self_intersections[2] == a12);
    CHECK(census.self_intersections[1] == a1 + a2 - 2 * a12);
    CHECK(census.self_intersections[0] == BigInt(count) * count - a1 - a2 + a12);

    // Sum rule: the S_i partition all ordered pairs.
    BigInt total = 0;
    for (const BigInt& s : census.self_intersections) total += s;
    CHECK(total == census.count * census.count);
}

TEST_CASE("census guards") {
    // A rose of four lambda=1 loop faces subdivides fine at ell=4 but has
    // one face too many for the census.
    ComplexData d;
    d.vertices = {1};
    d.edges = {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}};
    d.faces = {{1, {1}}, {2, {2}}, {3, {3}}, {4, {4}}};
    GeometricForm rose = make_form(
        Complex2::from_data(d),
        {{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}, {4, Rational(1)}});
    CHECK_THROWS_AS((void)filling_census(rose, 4, 2), std::length_error);
    CHECK_THROWS_AS((void)filling_census(loop_form(), 9, 2), std::length_error);
    CHECK_THROWS_AS((void)filling_census(loop_form(), 4, 3), std::length_error);
}

TEST_CASE("isoperimetric audit on the counterexample") {
    GeometricForm f = builtin_form("counterexample");
    SubdividedComplex sub = subdivide(f, 30);
    Rational d(2, 5);
    Rational eps(0);

    AuditReport full = isoperimetric_audit(sub.complex, distinct_labels(sub.complex), d, eps, 30);
    CHECK(full.faces == 3);
    CHECK(full.edges == 57); // 1.9 * 30
    CHECK(full.red == 0);
    CHECK(full.lhs == 57);
    CHECK(full.rhs == Rational(54));
    CHECK(full.pass);
    CHECK(full.boundary == sub.complex.boundary_length());
    CHECK(full.rhs_boundary == (Rational(1) - d - d) * Rational(90)); // (1 - 4/5) * 90 = 18
    CHECK(full.pass_boundary == (Rational(full.boundary) >= full.rhs_boundary));

    Complex2 inner = sub.complex.face_subcomplex({2, 3});
    AuditReport part = isoperimetric_audit(inner, distinct_labels(inner), d, eps, 30);
    CHECK(part.faces == 2);
    CHECK(part.edges == 33); // 1.1 * 30
    CHECK(part.lhs == 33);
    CHECK(part.rhs == Rational(36));
    CHECK_FALSE(part.pass);

    // A positive eps strengthens the requirement.
    AuditReport tight = isoperimetric_audit(sub.complex, distinct_labels(sub.complex), d,
                                            Rational(1, 10), 30);
    CHECK(tight.rhs == Rational(1, 2) * Rational(90));
    CHECK(tight.pass); // 57 >= 45
}
