#include "grouplab/sampler.hpp"

#include "grouplab/bigint.hpp"
#include "grouplab/rng.hpp"
#include "grouplab/textio.hpp"
#include "grouplab/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace grouplab;

TEST_CASE("universe sizes at the pinned values") {
    CHECK(universe_size(2, 2) == 16);
    CHECK(universe_size(2, 3) == 44);
    CHECK(universe_size(2, 6) == 1104);
    CHECK(universe_size(2, 10) == 88592);
    CHECK(count_cyclically_reduced(2, 0) == 1); // the empty word
    CHECK(count_cyclically_reduced(2, 4) == 84);
}

TEST_CASE("uniform cyclically reduced words are deterministic and valid") {
    Rng a(12345), b(12345), c(54321);
    Word wa = uniform_cyclically_reduced(2, 9, a);
    Word wb = uniform_cyclically_reduced(2, 9, b);
    CHECK(wa == wb);
    CHECK(wa.size() == 9);
    CHECK(is_cyclically_reduced(wa));
    // A different stream almost surely differs somewhere in a short run.
    bool any_diff = false;
    for (int i = 0; i < 16; ++i)
        if (uniform_cyclically_reduced(2, 9, b) != uniform_cyclically_reduced(2, 9, c))
            any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("single letters are uniform within 3 sigma") {
    Rng rng(2024);
    const int draws = 10000;
    std::map<Letter, int> counts;
    for (int i = 0; i < draws; ++i) {
        Word w = uniform_cyclically_reduced(2, 1, rng);
        REQUIRE(w.size() == 1);
        counts[w[0]]++;
    }
    CHECK(counts.size() == 4);
    double expect = draws / 4.0;
    double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (const auto& [l, n] : counts) {
        (void)l;
        CHECK(std::abs(n - expect) <= 3.0 * sigma);
    }
}

TEST_CASE("length-3 words pass a 1 percent chi-square") {
    std::vector<Word> support = enumerate_cyclically_reduced(2, 3);
    REQUIRE(support.size() == 28);
    std::map<Word, long long> counts;
    for (const Word& w : support) counts[w] = 0;
    Rng rng(777);
    const long long draws = 100000;
    for (long long i = 0; i < draws; ++i) {
        Word w = uniform_cyclically_reduced(2, 3, rng);
        auto it = counts.find(w);
        REQUIRE(it != counts.end()); // support is exactly the enumeration
        it->second++;
    }
    double expect = (double)draws / 28.0;
    double chi2 = 0;
    for (const auto& [w, n] : counts) {
        (void)w;
        chi2 += ((double)n - expect) * ((double)n - expect) / expect;
    }
    // 1% critical value of chi-square with 27 degrees of freedom.
    CHECK(chi2 < 46.96);
}

TEST_CASE("fixed-count sampling draws round(|B|^d) distinct words") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 6;
    cfg.d = Rational(1, 3);
    cfg.model = Model::FixedCount;
    cfg.seed = 42;
    Presentation p = sample_presentation(cfg);
    CHECK(p.relators.size() == 10); // round(1104^(1/3)) = round(10.33..)
    std::set<Word> distinct(p.relators.begin(), p.relators.end());
    CHECK(distinct.size() == p.relators.size());
    for (const Word& w : p.relators) {
        CHECK(is_cyclically_reduced(w));
        CHECK(w.size() >= 1);
        CHECK(w.size() <= 6);
    }

    // d = 0: exactly one relator.
    cfg.d = Rational(0);
    CHECK(sample_presentation(cfg).relators.size() == 1);

    // d = 1: the whole universe, as a set.
    cfg.ell = 4;
    cfg.d = Rational(1);
    Presentation full = sample_presentation(cfg);
    std::vector<Word> everything;
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : enumerate_cyclically_reduced(2, n)) everything.push_back(w);
    REQUIRE(full.relators.size() == everything.size()); // 128
    std::vector<Word> got = full.relators;
    std::sort(got.begin(), got.end());
    std::sort(everything.begin(), everything.end());
    CHECK(got == everything);
}

TEST_CASE("exact-length mode pins every relator length") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 7;
    cfg.d = Rational(2, 5);
    cfg.model = Model::FixedCount;
    cfg.exact_length = true;
    cfg.seed = 7;
    Presentation p = sample_presentation(cfg);
    CHECK(!p.relators.empty());
    for (const Word& w : p.relators) CHECK(w.size() == 7);
    CHECK(model_name(cfg) == "fixedcount-exact");
}

TEST_CASE("sampling is deterministic in the config") {
    for (Model model : {Model::FixedCount, Model::Bernoulli}) {
        ModelConfig cfg;
        cfg.m = 2;
        cfg.ell = 10;
        cfg.d = Rational(1, 4);
        cfg.model = model;
        cfg.seed = 99;
        Presentation a = sample_presentation(cfg);
        Presentation b = sample_presentation(cfg);
        CHECK(render_presentation(a) == render_presentation(b));
        cfg.seed = 100;
        Presentation c = sample_presentation(cfg);
        CHECK(render_presentation(a) != render_presentation(c));
    }
}

TEST_CASE("Bernoulli counts concentrate on |B|^d") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 12;
    cfg.d = Rational(3, 10);
    cfg.model = Model::Bernoulli;

    const BigInt universe = universe_size(2, 12);
    CHECK(universe == 797184);
    double p = std::pow((double)797184.0, -0.7);
    double target = 797184.0 * p; // |B|^0.3
    double sigma_one = std::sqrt(797184.0 * p * (1 - p));

    const int seeds = 200;
    double total = 0;
    for (int s = 0; s < seeds; ++s) {
        cfg.seed = 1000 + (std::uint64_t)s;
        Presentation pr = sample_presentation(cfg);
        std::set<Word> distinct(pr.relators.begin(), pr.relators.end());
        CHECK(distinct.size() == pr.relators.size());
        for (const Word& w : pr.relators) CHECK(w.size() <= 12);
        total += (double)pr.relators.size();
    }
    double mean = total / seeds;
    CHECK(std::abs(mean - target) <= 3.0 * sigma_one / std::sqrt((double)seeds));
}

TEST_CASE("binomial draws hit the exact edge cases and the mean") {
    Rng rng(31415);
    CHECK(binomial_draw(1000000, 0.0, rng) == 0);
    CHECK(binomial_draw(1000000, 1.0, rng) == 1000000);
    const int reps = 200;
    double total = 0;
    for (int i = 0; i < reps; ++i) total += (double)binomial_draw(1000000, 0.3, rng);
    double sigma = std::sqrt(1000000.0 * 0.3 * 0.7);
    CHECK(std::abs(total / reps - 300000.0) <= 3.0 * sigma / std::sqrt((double)reps));
}

TEST_CASE("the concentration event is decided exactly") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 10;
    cfg.d = Rational(1, 2);
    cfg.model = Model::FixedCount;
    cfg.seed = 5;
    Presentation p = sample_presentation(cfg);
    CHECK(p.relators.size() == 298); // round(88592^(1/2))

    // Within the wide band, outside the razor-thin one.
    CHECK(q_event(p, Rational(1, 2), Rational(1, 10)));
    CHECK_FALSE(q_event(p, Rational(1, 2), Rational(1, 1000)));

    // Empty presentation at positive density: below the lower bound.
    Presentation empty;
    empty.m = 2;
    empty.ell = 10;
    CHECK_FALSE(q_event(empty, Rational(1, 2), Rational(1, 10)));

    CHECK_THROWS_AS((void)q_event(p, Rational(1, 2), Rational(0)), std::domain_error);
}

TEST_CASE("Bernoulli concentration holds on most seeds") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 16;
    cfg.d = Rational(3, 10);
    cfg.model = Model::Bernoulli;
    int hits = 0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        cfg.seed = 40000 + (std::uint64_t)s;
        Presentation pr = sample_presentation(cfg);
        if (q_event(pr, cfg.d, Rational(1, 5))) ++hits;
    }
    CHECK(hits >= 190); // at least 95 percent
}

TEST_CASE("strata are exchangeable: membership is uniform over the support") {
    // At ell = 2 every relator set is a subset of the 16 length-<=2 words;
    // over many seeds each word must be included equally often.
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 2;
    cfg.d = Rational(1, 2);
    cfg.model = Model::Bernoulli;
    std::map<Word, long long> member;
    for (int n = 1; n <= 2; ++n)
        for (const Word& w : enumerate_cyclically_reduced(2, n)) member[w] = 0;
    REQUIRE(member.size() == 16);
    long long total = 0;
    const int seeds = 4000;
    for (int s = 0; s < seeds; ++s) {
        cfg.seed = 90000 + (std::uint64_t)s;
        Presentation pr = sample_presentation(cfg);
        for (const Word& w : pr.relators) {
            REQUIRE(member.count(w));
            member[w]++;
            ++total;
        }
    }
    // Uniformity within each stratum: chi-square over the 4 length-1 words
    // (df 3, 1% critical 11.34) and the 12 length-2 words (df 11, 24.72).
    auto stratum_chi2 = [&](int len, double crit) {
        std::vector<long long> counts;
        for (const auto& [w, n] : member)
            if ((int)w.size() == len) counts.push_back(n);
        long long sum = 0;
        for (long long n : counts) sum += n;
        double expect = (double)sum / (double)counts.size();
        REQUIRE(expect > 20);
        double chi2 = 0;
        for (long long n : counts) chi2 += ((double)n - expect) * ((double)n - expect) / expect;
        CHECK(chi2 < crit);
    };
    stratum_chi2(1, 11.34);
    stratum_chi2(2, 24.72);
    CHECK(total > 0);
}

TEST_CASE("presentation files round-trip byte-exactly") {
    ModelConfig cfg;
    cfg.m = 2;
    cfg.ell = 8;
    cfg.d = Rational(1, 3);
    cfg.model = Model::Bernoulli;
    cfg.seed = 321;
    Presentation p = sample_presentation(cfg);
    std::string text = render_presentation(p);
    Presentation back = parse_presentation(text);
    CHECK(render_presentation(back) == text);
    CHECK(back.m == p.m);
    CHECK(back.ell == p.ell);
    CHECK(back.d == p.d);
    CHECK(back.seed == p.seed);
    CHECK(back.relators == p.relators);

    // Malformed inputs are rejected; reduce_input repairs words first.
    CHECK_THROWS(parse_presentation("presentation m=2 ell=4 model=manual d=0/1 seed=0\nabA\n"));
    Presentation fixed =
        parse_presentation("presentation m=2 ell=4 model=manual d=0/1 seed=0\nabA\n", true);
    REQUIRE(fixed.relators.size() == 1);
    CHECK(fixed.relators[0] == parse_word("b", 2));
    CHECK_THROWS(parse_presentation("presentation m=2 ell=4 model=manual d=0/1 seed=0\nab\nab\n"));
}
