#include "grouplab/words.hpp"

#include "grouplab/errors.hpp"

#include <cassert>
#include <stdexcept>

namespace grouplab {

namespace {

void check_generator_count(int m) {
    if (m < 1 || m > kMaxGenerators)
        throw std::domain_error("generator count must be in 1.." + std::to_string(kMaxGenerators));
}

} // namespace

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == inverse_letter(w[i - 1])) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() <= 1) return true;
    return w.back() != inverse_letter(w.front());
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == inverse_letter(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[hi - 1] == inverse_letter(r[lo])) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + (long)lo, r.begin() + (long)hi);
}

Word invert(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
    return out;
}

Word rotate(const Word& w, long long k) {
    if (w.empty()) return w;
    long long n = (long long)w.size();
    long long s = ((k % n) + n) % n;
    Word out;
    out.reserve(w.size());
    for (long long i = 0; i < n; ++i) out.push_back(w[(std::size_t)((s + i) % n)]);
    return out;
}

int letter_order_index(Letter l, int m) {
    assert(l != 0);
    return l > 0 ? (int)l - 1 : m + (-(int)l) - 1;
}

Letter letter_from_order(int index, int m) {
    assert(index >= 0 && index < 2 * m);
    return index < m ? (Letter)(index + 1) : (Letter)(-(index - m + 1));
}

void for_each_cyclically_reduced(int m, int n, const std::function<void(const Word&)>& fn) {
    check_generator_count(m);
    if (n < 0) throw std::domain_error("word length must be >= 0");
    Word buf;
    if (n == 0) {
        fn(buf);
        return;
    }
    buf.reserve((std::size_t)n);
    // Depth-first over letters in canonical order; prune adjacent inverse
    // pairs as we go and check the wrap-around pair at the last position.
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            fn(buf);
            return;
        }
        for (int idx = 0; idx < 2 * m; ++idx) {
            Letter l = letter_from_order(idx, m);
            if (depth > 0 && l == inverse_letter(buf.back())) continue;
            if (depth == n - 1 && n >= 2 && l == inverse_letter(buf.front())) continue;
            buf.push_back(l);
            self(self, depth + 1);
            buf.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Word> enumerate_cyclically_reduced(int m, int n, std::size_t max_words) {
    check_generator_count(m);
    if (n < 0) throw std::domain_error("word length must be >= 0");
    BigInt total = count_cyclically_reduced(m, n);
    if (total > BigInt(max_words))
        throw std::length_error("enumeration of " + total.str() + " words exceeds the limit of " +
                                std::to_string(max_words));
    std::vector<Word> out;
    out.reserve(total.convert_to<std::size_t>());
    for_each_cyclically_reduced(m, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

BigInt count_cyclically_reduced(int m, int n) {
    check_generator_count(m);
    if (n < 0) throw std::domain_error("word length must be >= 0");
    if (n == 0) return 1;
    BigInt c = big_pow(BigInt(2 * m - 1), (unsigned long long)n) + 1;
    if (n % 2 == 0) c += 2 * (m - 1);
    return c;
}

BigInt universe_size(int m, int ell) {
    check_generator_count(m);
    if (ell < 1) throw std::domain_error("maximum length must be >= 1");
    BigInt total = 0;
    for (int n = 1; n <= ell; ++n) total += count_cyclically_reduced(m, n);
    return total;
}

char letter_char(Letter l) {
    assert(l != 0);
    int g = l > 0 ? l : -l;
    assert(g >= 1 && g <= kMaxGenerators);
    return l > 0 ? (char)('a' + g - 1) : (char)('A' + g - 1);
}

std::string render_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(letter_char(l));
    return s;
}

Word parse_word(const std::string& text, int m) {
    check_generator_count(m);
    Word w;
    w.reserve(text.size());
    for (char ch : text) {
        int g;
        bool positive;
        if (ch >= 'a' && ch <= 'z') {
            g = ch - 'a' + 1;
            positive = true;
        } else if (ch >= 'A' && ch <= 'Z') {
            g = ch - 'A' + 1;
            positive = false;
        } else {
            throw ParseError(std::string("invalid character '") + ch + "' in word \"" + text + "\"");
        }
        if (g > m)
            throw ParseError(std::string("letter '") + ch + "' names generator " + std::to_string(g) +
                             " but only " + std::to_string(m) + " generators are declared");
        w.push_back((Letter)(positive ? g : -g));
    }
    return w;
}

} // namespace grouplab
