#include "grouplab/sampler.hpp"

#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

namespace grouplab {

Word uniform_cyclically_reduced(int m, int n, Rng& rng) {
    if (n < 1) throw std::domain_error("word length must be >= 1");
    Word w((std::size_t)n);
    for (;;) {
        w[0] = letter_from_order((int)rng.below((std::uint64_t)(2 * m)), m);
        for (int i = 1; i < n; ++i) {
            int banned = letter_order_index(inverse_letter(w[(std::size_t)(i - 1)]), m);
            int idx = (int)rng.below((std::uint64_t)(2 * m - 1));
            if (idx >= banned) ++idx;
            w[(std::size_t)i] = letter_from_order(idx, m);
        }
        if (n == 1 || w.back() != inverse_letter(w.front())) return w;
    }
}

namespace {

// Inversion sampling with n as a double: exact enough for astronomically
// large strata (relative pmf error ~1e-16) and short loops for np <= ~256.
long long binomial_inversion(double n, double p, Rng& rng) {
    double u = rng.uniform01();
    double pmf = std::exp(n * std::log1p(-p));
    double odds = p / (1.0 - p);
    long long k = 0;
    long long kmax = (long long)(10.0 * n * p) + 200;
    while (u > pmf && (double)k < n && k < kmax) {
        u -= pmf;
        pmf *= (n - (double)k) / (double)(k + 1) * odds;
        ++k;
    }
    return k;
}

} // namespace

BigInt binomial_draw(const BigInt& n, double p, Rng& rng) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    double np = big_to_double(n) * p;
    if (np <= 256.0) return binomial_inversion(big_to_double(n), p, rng);
    // Split into independent chunks with mean ~128 each; the sum of
    // independent binomials with equal p is binomial on the total.
    long long chunks = (long long)std::ceil(np / 128.0);
    BigInt q = n / chunks;
    long long rem = (n % chunks).convert_to<long long>();
    BigInt total = 0;
    for (long long i = 0; i < chunks; ++i) {
        BigInt ni = q + (i < rem ? 1 : 0);
        total += binomial_inversion(big_to_double(ni), p, rng);
    }
    return total;
}

namespace {

struct Strata {
    int lo = 1;              // smallest length sampled
    std::vector<BigInt> cum; // cum[i] = total count of lengths lo..lo+i
    BigInt total;
};

Strata make_strata(const ModelConfig& cfg) {
    Strata s;
    s.lo = cfg.exact_length ? cfg.ell : 1;
    BigInt run = 0;
    for (int n = s.lo; n <= cfg.ell; ++n) {
        run += count_cyclically_reduced(cfg.m, n);
        s.cum.push_back(run);
    }
    s.total = run;
    return s;
}

constexpr long long kDuplicateRetryBudget = 1'000'000;

// Draw `target` distinct words of length n, appending to out.
void draw_distinct(int m, int n, const BigInt& target, Rng& rng, std::set<Word>& seen,
                   std::vector<Word>& out, long long& retries) {
    for (BigInt got = 0; got < target;) {
        Word w = uniform_cyclically_reduced(m, n, rng);
        if (seen.insert(w).second) {
            out.push_back(std::move(w));
            ++got;
        } else if (++retries > kDuplicateRetryBudget) {
            throw std::runtime_error("duplicate rejection exceeded " +
                                     std::to_string(kDuplicateRetryBudget) +
                                     " retries: requested count too close to the universe size");
        }
    }
}

} // namespace

std::string model_name(const ModelConfig& cfg) {
    std::string name = cfg.model == Model::Bernoulli ? "bernoulli" : "fixedcount";
    if (cfg.exact_length) name += "-exact";
    return name;
}

Presentation sample_presentation(const ModelConfig& cfg) {
    if (cfg.m < 1 || cfg.m > kMaxGenerators) throw std::domain_error("generator count out of range");
    if (cfg.ell < 1) throw std::domain_error("maximum relator length must be >= 1");
    if (cfg.d < Rational(0) || cfg.d > Rational(1))
        throw std::domain_error("density must lie in [0, 1]");

    Presentation out;
    out.m = cfg.m;
    out.ell = cfg.ell;
    out.model = model_name(cfg);
    out.d = cfg.d;
    out.seed = cfg.seed;

    Strata strata = make_strata(cfg);
    Rng rng(cfg.seed);
    std::set<Word> seen;
    long long retries = 0;

    if (cfg.model == Model::FixedCount) {
        // N = round(|B|^(a/b)): integer b-th root of |B|^a, ties rounded up.
        long long a = cfg.d.num(), b = cfg.d.den();
        BigInt x = big_pow(strata.total, (unsigned long long)a);
        BigInt root = floor_kth_root(x, (unsigned)b);
        BigInt n_target = root;
        if ((BigInt(1) << (unsigned)b) * x >= big_pow(2 * root + 1, (unsigned long long)b))
            n_target = root + 1;
        if (n_target > BigInt(cfg.max_relators))
            throw std::length_error("requested relator count " + n_target.str() +
                                    " exceeds the limit of " + std::to_string(cfg.max_relators));
        while (BigInt(out.relators.size()) < n_target) {
            // Stratum proportional to its size, then uniform inside: one
            // uniform draw from B.  A duplicate rejects the whole draw, so
            // every accepted word is uniform over the unseen remainder and
            // exhausted strata cannot trap the loop.
            BigInt u = rng.below_big(strata.total);
            int n = strata.lo;
            for (std::size_t i = 0; i < strata.cum.size(); ++i, ++n)
                if (u < strata.cum[i]) break;
            Word w = uniform_cyclically_reduced(cfg.m, n, rng);
            if (seen.insert(w).second) {
                out.relators.push_back(std::move(w));
            } else if (++retries > kDuplicateRetryBudget) {
                throw std::runtime_error("duplicate rejection exceeded " +
                                         std::to_string(kDuplicateRetryBudget) +
                                         " retries: requested count too close to the universe size");
            }
        }
    } else {
        // Bernoulli: membership probability |B|^(d-1), stratum counts are
        // binomial in the stratum size.
        double p = std::exp((cfg.d - Rational(1)).to_double() * big_ln(strata.total));
        BigInt grand_total = 0;
        for (int n = strata.lo; n <= cfg.ell; ++n) {
            BigInt count = binomial_draw(count_cyclically_reduced(cfg.m, n), p, rng);
            grand_total += count;
            if (grand_total > BigInt(cfg.max_relators))
                throw std::length_error("sampled relator count exceeds the limit of " +
                                        std::to_string(cfg.max_relators));
            draw_distinct(cfg.m, n, count, rng, seen, out.relators, retries);
        }
    }
    return out;
}

bool q_event(const Presentation& p, const Rational& d, const Rational& eps) {
    if (eps <= Rational(0)) throw std::domain_error("eps must be positive");
    BigInt count((unsigned long long)p.relators.size());
    BigInt base(2 * p.m - 1);
    // count >= base^(u/v)  <=>  count^v >= base^u (v > 0), with negative u
    // meaning a bound below 1 that any nonempty presentation clears.
    auto at_least = [&](const Rational& expo) {
        long long u = expo.num(), v = expo.den();
        if (u >= 0) return big_pow(count, (unsigned long long)v) >= big_pow(base, (unsigned long long)u);
        return count >= 1;
    };
    auto at_most = [&](const Rational& expo) {
        long long u = expo.num(), v = expo.den();
        if (u >= 0) return big_pow(count, (unsigned long long)v) <= big_pow(base, (unsigned long long)u);
        return count == 0; // bound below 1: only the empty set qualifies
    };
    Rational ell(p.ell);
    return at_least((d - eps / Rational(4)) * ell) && at_most((d + eps / Rational(4)) * ell);
}

} // namespace grouplab
