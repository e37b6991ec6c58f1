#pragma once
// Random presentations in the density model.  Two samplers: FixedCount draws
// exactly round(|B|^d) distinct words; Bernoulli includes each word of the
// universe independently with probability |B|^(d-1), realized per length
// stratum as a binomial count followed by that many distinct uniform draws.

#include "grouplab/bigint.hpp"
#include "grouplab/rational.hpp"
#include "grouplab/rng.hpp"
#include "grouplab/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grouplab {

enum class Model { Bernoulli, FixedCount };

struct ModelConfig {
    int m = 2;
    int ell = 0;
    Rational d{0};
    Model model = Model::Bernoulli;
    std::uint64_t seed = 0;
    bool exact_length = false;            // draw only words of length exactly ell
    std::size_t max_relators = 2'000'000; // memory guard
};

struct Presentation {
    int m = 2;
    int ell = 0;
    std::string model = "manual"; // bernoulli | fixedcount | *-exact | manual
    Rational d{0};
    std::uint64_t seed = 0;
    std::vector<Word> relators;
};

// Exactly uniform over cyclically reduced words of length n: sample a uniform
// freely reduced word (first letter 2m choices, each next 2m-1), reject until
// cyclically reduced.
Word uniform_cyclically_reduced(int m, int n, Rng& rng);

// One draw from Binomial(n, p), exact in distribution for the IEEE double p.
// Large means are split into independent sub-binomials so the inversion loop
// stays short.
BigInt binomial_draw(const BigInt& n, double p, Rng& rng);

// Deterministic in cfg (including seed).  Throws std::length_error when the
// target count exceeds max_relators and std::runtime_error when duplicate
// rejection exceeds its retry budget.
Presentation sample_presentation(const ModelConfig& cfg);

// The concentration event: (2m-1)^((d-eps/4)ell) <= |R| <= (2m-1)^((d+eps/4)ell),
// decided by exact big-integer comparison.
bool q_event(const Presentation& p, const Rational& d, const Rational& eps);

// Header token for the presentation file format.
std::string model_name(const ModelConfig& cfg);

} // namespace grouplab
