#pragma once
// Exact rational arithmetic on 64-bit integers for edge lengths, densities
// and density thresholds.  All quantities handled here are small (numerators
// and denominators bounded by products of a few face/edge counts), so int64
// with overflow-checked intermediates is exact; any overflow is a logic error
// and throws.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grouplab {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.den_ + __int128(o.num_) * den_),
                        checked(__int128(den_) * o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.den_ - __int128(o.num_) * den_),
                        checked(__int128(den_) * o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked(__int128(num_) * o.num_), checked(__int128(den_) * o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked(__int128(num_) * o.den_), checked(__int128(den_) * o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return __int128(num_) * o.den_ < __int128(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const { return double(num_) / double(den_); }

    // Canonical "p/q" rendering (always includes the denominator); used by the
    // file formats, where bit-exact round-trips are required.
    std::string fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Human rendering: omits "/1" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return fraction_string();
    }

private:
    long long num_;
    long long den_;

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return (long long)v;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
};

// Parses "p/q" or "p" (q > 0 after normalization).  Throws std::invalid_argument
// on malformed input.
Rational parse_rational(const std::string& s);

} // namespace grouplab
