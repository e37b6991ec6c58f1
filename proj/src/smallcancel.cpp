#include "grouplab/smallcancel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grouplab {

bool site_less(const OccurrenceSite& a, const OccurrenceSite& b) {
    if (a.relator != b.relator) return a.relator < b.relator;
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.orient > b.orient; // +1 before -1
}

namespace {

void check_relators(const std::vector<Word>& R) {
    if (R.empty()) throw std::invalid_argument("piece_table: empty relator set");
    for (std::size_t t = 0; t < R.size(); ++t) {
        if (R[t].empty() || !is_cyclically_reduced(R[t])) {
            throw std::invalid_argument("piece_table: relator " + std::to_string(t + 1) +
                                        " is empty or not cyclically reduced");
        }
    }
}

// The two cyclic strings of relator t: row 0 reads it forward, row 1 reads
// its inverse (with the inverse word's own position indexing).
struct Strings {
    std::vector<std::array<Word, 2>> s;

    explicit Strings(const std::vector<Word>& R) {
        s.reserve(R.size());
        for (const Word& w : R) s.push_back({w, invert(w)});
    }

    Letter letter(int t, int oi, long long pos) const {
        const Word& w = s[(std::size_t)t][(std::size_t)oi];
        return w[(std::size_t)(pos % (long long)w.size())];
    }
    long long len(int t) const { return (long long)s[(std::size_t)t][0].size(); }
};

struct FlatSite {
    int t;
    int oi; // 0 forward, 1 inverse
    long long p;
};

} // namespace

PieceTable piece_table(const std::vector<Word>& R) {
    check_relators(R);
    Strings st(R);

    PieceTable out;
    out.maxpiece.resize(R.size());
    for (std::size_t t = 0; t < R.size(); ++t) {
        out.maxpiece[t][0].assign(R[t].size(), 0);
        out.maxpiece[t][1].assign(R[t].size(), 0);
    }

    std::vector<FlatSite> sites;
    for (int t = 0; t < (int)R.size(); ++t) {
        for (int oi = 0; oi < 2; ++oi) {
            for (long long p = 0; p < st.len(t); ++p) sites.push_back({t, oi, p});
        }
    }

    // Partition refinement over prefix length L: two sites share a group iff
    // their length-L cyclic reads agree.  Groups are refined by the next
    // letter; sites are dropped once L exceeds their relator length.
    std::vector<int> gid(sites.size(), 0);
    std::vector<std::size_t> active(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) active[i] = i;

    long long max_len = 0;
    for (std::size_t t = 0; t < R.size(); ++t) max_len = std::max(max_len, (long long)R[t].size());

    for (long long L = 1; L <= max_len && !active.empty(); ++L) {
        // Keep sites whose relator can still host a length-L read.
        std::vector<std::size_t> kept;
        kept.reserve(active.size());
        for (std::size_t i : active) {
            if (st.len(sites[i].t) >= L) kept.push_back(i);
        }
        // Refine by (previous group, next letter); the site triple breaks
        // ties so group ids are deterministic.
        std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
            const FlatSite& sa = sites[a];
            const FlatSite& sb = sites[b];
            if (gid[a] != gid[b]) return gid[a] < gid[b];
            Letter la = st.letter(sa.t, sa.oi, sa.p + L - 1);
            Letter lb = st.letter(sb.t, sb.oi, sb.p + L - 1);
            if (la != lb) return la < lb;
            if (sa.t != sb.t) return sa.t < sb.t;
            if (sa.p != sb.p) return sa.p < sb.p;
            return sa.oi < sb.oi;
        });

        std::vector<std::size_t> next_active;
        next_active.reserve(kept.size());
        int next_gid = 0;
        std::size_t i = 0;
        while (i < kept.size()) {
            std::size_t j = i;
            Letter li = st.letter(sites[kept[i]].t, sites[kept[i]].oi, sites[kept[i]].p + L - 1);
            while (j < kept.size() && gid[kept[j]] == gid[kept[i]] &&
                   st.letter(sites[kept[j]].t, sites[kept[j]].oi, sites[kept[j]].p + L - 1) == li) {
                ++j;
            }
            // Alive iff the group is a genuine multiple occurrence: two
            // distinct (relator, orientation) streams, or two starts in one
            // stream short of a full period (a full-period read is the same
            // occurrence of the whole cyclic word wherever it starts).
            bool two_streams = false;
            bool repeat_short = false;
            for (std::size_t a = i; a < j && !two_streams; ++a) {
                const FlatSite& sa = sites[kept[a]];
                const FlatSite& s0 = sites[kept[i]];
                if (sa.t != s0.t || sa.oi != s0.oi) two_streams = true;
            }
            if (!two_streams && j - i >= 2 && L < st.len(sites[kept[i]].t)) repeat_short = true;
            if (two_streams || repeat_short) {
                int g = next_gid++;
                for (std::size_t a = i; a < j; ++a) {
                    const FlatSite& sa = sites[kept[a]];
                    out.maxpiece[(std::size_t)sa.t][(std::size_t)sa.oi][(std::size_t)sa.p] = L;
                    gid[kept[a]] = g;
                    next_active.push_back(kept[a]);
                }
            }
            i = j;
        }
        active = std::move(next_active);
    }
    return out;
}

namespace {

Word read_cyclic(const std::vector<Word>& R, const OccurrenceSite& s, long long L) {
    const Word base = s.orient == 1 ? R[(std::size_t)s.relator] : invert(R[(std::size_t)s.relator]);
    Word out;
    out.reserve((std::size_t)L);
    long long n = (long long)base.size();
    for (long long i = 0; i < L; ++i) out.push_back(base[(std::size_t)((s.pos + i) % n)]);
    return out;
}

// All sites whose length-|u| cyclic read equals u, in site order.
std::vector<OccurrenceSite> occurrences(const std::vector<Word>& R, const Word& u) {
    std::vector<OccurrenceSite> out;
    long long L = (long long)u.size();
    for (int t = 0; t < (int)R.size(); ++t) {
        long long n = (long long)R[(std::size_t)t].size();
        if (n < L) continue;
        for (long long p = 0; p < n; ++p) {
            for (int o : {1, -1}) {
                OccurrenceSite s{t, p, o};
                if (read_cyclic(R, s, L) == u) out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), site_less);
    return out;
}

} // namespace

CprimeResult check_cprime(const std::vector<Word>& R, const Rational& lambda) {
    if (!(Rational(0) < lambda && lambda < Rational(1))) {
        throw std::invalid_argument("check_cprime: lambda must lie in (0,1)");
    }
    PieceTable pt = piece_table(R);
    CprimeResult res;
    bool have = false;
    OccurrenceSite best;
    long long best_len = 0;
    for (int t = 0; t < (int)R.size(); ++t) {
        long long n = (long long)R[(std::size_t)t].size();
        for (int o : {1, -1}) {
            for (long long p = 0; p < n; ++p) {
                OccurrenceSite s{t, p, o};
                long long L = pt.at(s);
                // Violation: |u| >= lambda*|r|, i.e. L*den >= num*n.
                if (L * lambda.den() < lambda.num() * n) continue;
                if (!have || L > best_len || (L == best_len && site_less(s, best))) {
                    have = true;
                    best = s;
                    best_len = L;
                }
            }
        }
    }
    if (!have) return res;
    res.ok = false;
    res.witness.piece = read_cyclic(R, best, best_len);
    res.witness.relator = best.relator;
    std::vector<OccurrenceSite> occ = occurrences(R, res.witness.piece);
    res.witness.site1 = occ.size() > 0 ? occ[0] : best;
    res.witness.site2 = occ.size() > 1 ? occ[1] : best;
    return res;
}

Factorization best_factorization(const PieceTable& pt, const std::vector<Word>& R, int t) {
    Factorization best;
    long long n = (long long)R[(std::size_t)t].size();
    for (int o : {1, -1}) {
        for (long long start = 0; start < n; ++start) {
            long long covered = 0;
            long long count = 0;
            while (covered < n) {
                OccurrenceSite cur{t, (start + covered) % n, o};
                long long jump = std::min(pt.at(cur), n - covered);
                if (jump == 0) {
                    count = kInfinitePieces;
                    break;
                }
                covered += jump;
                count++;
            }
            if (count < best.pieces) {
                best.pieces = count;
                best.start = {t, start, o};
                best.factors.clear();
                long long c = 0;
                while (c < n) {
                    OccurrenceSite cur{t, (start + c) % n, o};
                    long long jump = std::min(pt.at(cur), n - c);
                    best.factors.push_back(read_cyclic(R, cur, jump));
                    c += jump;
                }
            }
        }
    }
    return best;
}

long long min_piece_factorization(const Word& r, const std::vector<Word>& R) {
    auto it = std::find(R.begin(), R.end(), r);
    if (it == R.end()) throw std::invalid_argument("min_piece_factorization: relator not in the set");
    PieceTable pt = piece_table(R);
    return best_factorization(pt, R, (int)(it - R.begin())).pieces;
}

CpResult check_cp(const std::vector<Word>& R, long long p) {
    if (p < 2) throw std::invalid_argument("check_cp: p must be >= 2");
    PieceTable pt = piece_table(R);
    CpResult res;
    for (int t = 0; t < (int)R.size(); ++t) {
        Factorization f = best_factorization(pt, R, t);
        if (f.pieces < p) {
            res.ok = false;
            res.relator = t;
            res.fact = std::move(f);
            return res;
        }
    }
    return res;
}

B2pResult check_b2p(const std::vector<Word>& R, long long p) {
    if (p < 1) throw std::invalid_argument("check_b2p: p must be >= 1");
    PieceTable pt = piece_table(R);
    B2pResult res;
    for (int t = 0; t < (int)R.size(); ++t) {
        long long n = (long long)R[(std::size_t)t].size();
        long long h = (n + 1) / 2;
        for (int o : {1, -1}) {
            for (long long start = 0; start < n; ++start) {
                long long covered = 0;
                long long count = 0;
                while (covered < h) {
                    OccurrenceSite cur{t, (start + covered) % n, o};
                    long long jump = std::min(pt.at(cur), h - covered);
                    if (jump == 0) {
                        count = kInfinitePieces;
                        break;
                    }
                    covered += jump;
                    count++;
                }
                if (count < p) {
                    res.ok = false;
                    res.witness.relator = t;
                    res.witness.start = {t, start, o};
                    res.witness.half_len = h;
                    res.witness.pieces = count;
                    long long c = 0;
                    while (c < h) {
                        OccurrenceSite cur{t, (start + c) % n, o};
                        long long jump = std::min(pt.at(cur), h - c);
                        res.witness.factors.push_back(read_cyclic(R, cur, jump));
                        c += jump;
                    }
                    return res;
                }
            }
        }
    }
    return res;
}

} // namespace grouplab
