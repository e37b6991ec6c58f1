#include "grouplab/filling.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <cmath>
#include <functional>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace grouplab {

namespace {

void check_relator_shapes(const AbstractLabeling& lab, const std::vector<Word>& relators) {
    if ((int)relators.size() != lab.k) {
        throw std::invalid_argument("induce_labels: expected " + std::to_string(lab.k) +
                                    " relators, got " + std::to_string(relators.size()));
    }
    for (int i = 1; i <= lab.k; ++i) {
        const Word& w = relators[(std::size_t)i - 1];
        if ((long long)w.size() != lab.lengths[(std::size_t)i - 1]) {
            throw std::invalid_argument("induce_labels: relator " + std::to_string(i) + " has length " +
                                        std::to_string(w.size()) + ", labeling needs " +
                                        std::to_string(lab.lengths[(std::size_t)i - 1]));
        }
        if (w.empty() || !is_cyclically_reduced(w)) {
            throw std::invalid_argument("induce_labels: relator " + std::to_string(i) +
                                        " is empty or not cyclically reduced");
        }
    }
}

} // namespace

InducedLabels induce_labels(const Complex2& c, const AbstractLabeling& lab,
                            const std::vector<Word>& relators) {
    check_relator_shapes(lab, relators);
    InducedLabels out;
    out.by_edge.assign((std::size_t)c.num_edges(), 0);
    std::vector<int> setter((std::size_t)c.num_edges(), 0); // face that fixed each edge
    for (const FaceRec& f : c.faces()) {
        int sl = lab.label_of(f.id);
        int sign = sl > 0 ? 1 : -1;
        const Word& w = relators[(std::size_t)std::abs(sl) - 1];
        long long n = (long long)f.boundary.size();
        for (long long j = 1; j <= n; ++j) {
            int oe = effective_boundary_edge(f, sign, j);
            std::size_t idx = (std::size_t)c.edge_pos(std::abs(oe));
            Letter x = oe > 0 ? w[(std::size_t)j - 1] : inverse_letter(w[(std::size_t)j - 1]);
            if (out.by_edge[idx] == 0) {
                out.by_edge[idx] = x;
                setter[idx] = f.id;
            } else if (out.by_edge[idx] != x) {
                std::ostringstream os;
                os << "edge " << std::abs(oe) << ": face " << f.id << " (position " << j << ") needs '"
                   << letter_char(x) << "' but face " << setter[idx] << " already set '"
                   << letter_char(out.by_edge[idx]) << "'";
                out.conflict = os.str();
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

VanKampenComplex make_van_kampen(Complex2 c, AbstractLabeling lab, std::vector<Word> relators) {
    InducedLabels ind = induce_labels(c, lab, relators);
    if (!ind.ok) throw std::invalid_argument("make_van_kampen: " + ind.conflict);
    for (std::size_t a = 0; a < relators.size(); ++a) {
        for (std::size_t b = a + 1; b < relators.size(); ++b) {
            if (relators[a] == relators[b]) {
                throw std::invalid_argument("make_van_kampen: relators " + std::to_string(a + 1) +
                                            " and " + std::to_string(b + 1) + " coincide");
            }
        }
    }
    return VanKampenComplex{std::move(c), std::move(lab), std::move(relators), std::move(ind.by_edge)};
}

bool is_reduced_vk(const VanKampenComplex& v) {
    // Relators are pairwise distinct by construction, so same-relator face
    // pairs are exactly same-abstract-index pairs.
    return reduction_degree(v.complex, v.labeling) == 0;
}

FillingReport find_filling(const Complex2& c, const AbstractLabeling& lab,
                           const std::vector<Word>& R, bool require_reduced,
                           long long node_budget) {
    FillingReport rep;
    bool abstract_reduced = reduction_degree(c, lab) == 0;
    if (require_reduced && !abstract_reduced) return rep; // none exists; proven

    // Fill the most-constrained abstract relator first: count its boundary
    // letters sitting on edges shared with any other letter.
    std::vector<long long> shared((std::size_t)lab.k, 0);
    for (const auto& decs : decorations_by_edge(c, lab)) {
        if (decs.size() < 2) continue;
        for (const Decoration& d : decs) shared[(std::size_t)d.i - 1]++;
    }
    std::vector<int> order((std::size_t)lab.k);
    for (int i = 0; i < lab.k; ++i) order[(std::size_t)i] = i + 1;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return shared[(std::size_t)a - 1] > shared[(std::size_t)b - 1]; });

    std::vector<std::vector<std::size_t>> candidates((std::size_t)lab.k);
    for (std::size_t t = 0; t < R.size(); ++t) {
        for (int i = 1; i <= lab.k; ++i) {
            if ((long long)R[t].size() == lab.lengths[(std::size_t)i - 1]) {
                candidates[(std::size_t)i - 1].push_back(t);
            }
        }
    }

    std::vector<std::vector<std::pair<const FaceRec*, int>>> faces_of((std::size_t)lab.k);
    for (const FaceRec& f : c.faces()) {
        int sl = lab.label_of(f.id);
        faces_of[(std::size_t)std::abs(sl) - 1].push_back({&f, sl > 0 ? 1 : -1});
    }

    std::vector<Letter> edge_letters((std::size_t)c.num_edges(), 0);
    std::vector<std::size_t> trail;
    trail.reserve((std::size_t)c.num_edges());
    std::vector<std::size_t> chosen((std::size_t)lab.k, 0);
    std::vector<char> used(R.size(), 0);
    bool stop = false;

    auto try_assign = [&](int i, const Word& w) -> bool {
        std::size_t mark = trail.size();
        for (const auto& [fp, sign] : faces_of[(std::size_t)i - 1]) {
            long long n = (long long)fp->boundary.size();
            for (long long j = 1; j <= n; ++j) {
                int oe = effective_boundary_edge(*fp, sign, j);
                std::size_t idx = (std::size_t)c.edge_pos(std::abs(oe));
                Letter x = oe > 0 ? w[(std::size_t)j - 1] : inverse_letter(w[(std::size_t)j - 1]);
                if (edge_letters[idx] == 0) {
                    edge_letters[idx] = x;
                    trail.push_back(idx);
                } else if (edge_letters[idx] != x) {
                    while (trail.size() > mark) {
                        edge_letters[trail.back()] = 0;
                        trail.pop_back();
                    }
                    return false;
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        int i = order[pos];
        for (std::size_t t : candidates[(std::size_t)i - 1]) {
            if (used[t]) continue;
            if (rep.nodes_explored >= node_budget) {
                rep.budget_exhausted = true;
                stop = true;
                return false;
            }
            rep.nodes_explored++;
            std::size_t mark = trail.size();
            if (try_assign(i, R[t])) {
                used[t] = 1;
                chosen[(std::size_t)i - 1] = t;
                if (self(self, pos + 1)) return true;
                if (stop) return false;
                used[t] = 0;
                while (trail.size() > mark) {
                    edge_letters[trail.back()] = 0;
                    trail.pop_back();
                }
            }
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        rep.found = true;
        rep.reduced = abstract_reduced;
        rep.assignment.reserve((std::size_t)lab.k);
        for (int i = 1; i <= lab.k; ++i) rep.assignment.push_back(R[chosen[(std::size_t)i - 1]]);
        InducedLabels check = induce_labels(c, lab, rep.assignment);
        assert(check.ok);
        (void)check;
    }
    return rep;
}

namespace {

// Union-find over abstract letters with a sign toward the parent:
// sign[x] = s means value(x) = value(parent[x])^s.
struct SignedUf {
    std::vector<int> parent;
    std::vector<int> rnk;
    std::vector<int> sign;

    explicit SignedUf(std::size_t n) : parent(n), rnk(n, 0), sign(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = (int)i;
    }

    // Root and the sign from x to it, with path compression.
    std::pair<int, int> find(int x) {
        std::vector<int> path;
        int r = x;
        while (parent[(std::size_t)r] != r) {
            path.push_back(r);
            r = parent[(std::size_t)r];
        }
        int acc = 1; // sign from the current path node's parent to the root
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            acc *= sign[(std::size_t)*it];
            parent[(std::size_t)*it] = r;
            sign[(std::size_t)*it] = acc;
        }
        return {r, acc};
    }

    // Impose value(a) = value(b)^rel; false on contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        // value(ra)^sa = value(rb)^(sb*rel)  =>  value(ra) = value(rb)^t.
        int t = sa * sb * rel;
        if (ra == rb) return t == 1;
        // t is symmetric in ra/rb (it squares to 1), so swapping is free.
        if (rnk[(std::size_t)ra] > rnk[(std::size_t)rb]) std::swap(ra, rb);
        parent[(std::size_t)ra] = rb;
        sign[(std::size_t)ra] = t;
        if (rnk[(std::size_t)ra] == rnk[(std::size_t)rb]) rnk[(std::size_t)rb]++;
        return true;
    }
};

// Shared constraint-model setup for universe fillability, counting, and the
// census: variables are sign-classes of abstract letters, values are the 2m
// letters, and the constraints say every boundary word is cyclically reduced.
struct UniverseModel {
    bool contradiction = false; // no labeling exists at all
    int k = 0;
    std::vector<long long> lengths;
    std::vector<long long> offset;       // letter id of (i,1)
    std::vector<int> roots;              // distinct class roots, in first-appearance order
    std::vector<int> root_slot;          // by letter id: slot of its class in `roots`
    std::vector<int> letter_sign;        // by letter id: sign to its class root
    // forbidden[slot] = (earlier slot e, t): value(slot) == value(e)^t is banned.
    std::vector<std::vector<std::pair<int, int>>> forbidden;

    UniverseModel(const Complex2& c, const AbstractLabeling& lab) {
        k = lab.k;
        lengths = lab.lengths;
        offset.assign((std::size_t)k, 0);
        long long total = 0;
        for (int i = 1; i <= k; ++i) {
            offset[(std::size_t)i - 1] = total;
            total += lengths[(std::size_t)i - 1];
        }
        auto letter_id = [&](int i, long long j) {
            return (int)(offset[(std::size_t)i - 1] + j - 1);
        };

        SignedUf uf((std::size_t)total);
        for (const auto& decs : decorations_by_edge(c, lab)) {
            if (decs.empty()) continue;
            const Decoration& d0 = decs.front();
            int s0 = d0.forward ? 1 : -1;
            for (std::size_t q = 1; q < decs.size(); ++q) {
                const Decoration& d = decs[q];
                int sd = d.forward ? 1 : -1;
                // Both letters read the same geometric edge: value(d)^sd = value(d0)^s0.
                if (!uf.unite(letter_id(d.i, d.j), letter_id(d0.i, d0.j), s0 * sd)) {
                    contradiction = true;
                    return;
                }
            }
        }

        root_slot.assign((std::size_t)total, -1);
        letter_sign.assign((std::size_t)total, 1);
        std::unordered_map<int, int> slot_of;
        for (int x = 0; x < (int)total; ++x) {
            auto [r, s] = uf.find(x);
            auto it = slot_of.find(r);
            if (it == slot_of.end()) {
                it = slot_of.emplace(r, (int)roots.size()).first;
                roots.push_back(r);
            }
            root_slot[(std::size_t)x] = it->second;
            letter_sign[(std::size_t)x] = s;
        }

        forbidden.assign(roots.size(), {});
        std::set<std::tuple<int, int, int>> seen;
        for (int i = 1; i <= k; ++i) {
            long long n = lengths[(std::size_t)i - 1];
            for (long long j = 1; j <= n; ++j) {
                int a = letter_id(i, j);
                int b = letter_id(i, j % n + 1);
                int sa = letter_sign[(std::size_t)a], sb = letter_sign[(std::size_t)b];
                int ra = root_slot[(std::size_t)a], rb = root_slot[(std::size_t)b];
                // Cyclic reducedness: value(b) != value(a)^-1, i.e.
                // value(rb) == value(ra)^t with t = -sa*sb is banned.
                int t = -sa * sb;
                if (ra == rb) {
                    if (t == 1) {
                        contradiction = true; // x != x is unsatisfiable
                        return;
                    }
                    continue; // x != x^-1 always holds for letters
                }
                int lo = std::min(ra, rb), hi = std::max(ra, rb);
                if (!seen.insert({lo, hi, t}).second) continue;
                // The ban is symmetric (t^2 = 1); attach it to the later slot
                // so the check fires as soon as both ends are assigned.
                forbidden[(std::size_t)hi].push_back({lo, t});
            }
        }
    }

    // Enumerate all assignments; cb receives the decoded relators and returns
    // false to stop.  Distinctness of relators is checked before cb.
    void enumerate(int m, const std::function<bool(const std::vector<Word>&)>& cb) const {
        if (contradiction) return;
        std::vector<Letter> value(roots.size(), 0);
        std::vector<Word> rel((std::size_t)k);
        for (int i = 1; i <= k; ++i) rel[(std::size_t)i - 1].resize((std::size_t)lengths[(std::size_t)i - 1]);
        bool stop = false;

        auto decode_and_emit = [&]() {
            long long id = 0;
            for (int i = 1; i <= k; ++i) {
                long long n = lengths[(std::size_t)i - 1];
                for (long long j = 1; j <= n; ++j, ++id) {
                    Letter v = value[(std::size_t)root_slot[(std::size_t)id]];
                    rel[(std::size_t)i - 1][(std::size_t)j - 1] =
                        letter_sign[(std::size_t)id] == 1 ? v : inverse_letter(v);
                }
            }
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    if (rel[(std::size_t)a] == rel[(std::size_t)b]) return; // not a filling
                }
            }
            if (!cb(rel)) stop = true;
        };

        auto dfs = [&](auto&& self, std::size_t slot) -> void {
            if (slot == roots.size()) {
                decode_and_emit();
                return;
            }
            for (int ord = 0; ord < 2 * m && !stop; ++ord) {
                Letter v = letter_from_order(ord, m);
                bool ok = true;
                for (const auto& [e, t] : forbidden[slot]) {
                    Letter banned = t == 1 ? value[(std::size_t)e] : inverse_letter(value[(std::size_t)e]);
                    if (v == banned) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                value[slot] = v;
                self(self, slot + 1);
            }
        };
        dfs(dfs, 0);
    }
};

} // namespace

UniverseFill universe_fillings(const Complex2& c, const AbstractLabeling& lab, int m,
                               bool count_all, int max_edges) {
    if (m < 1 || m > kMaxGenerators) throw std::invalid_argument("universe_fillings: bad generator count");
    if (c.num_edges() > max_edges) {
        throw std::length_error("universe_fillings: " + std::to_string(c.num_edges()) +
                                " edges exceed the guard of " + std::to_string(max_edges));
    }
    UniverseFill out;
    if (reduction_degree(c, lab) != 0) return out; // any filling would be unreduced
    UniverseModel model(c, lab);
    model.enumerate(m, [&](const std::vector<Word>& rel) {
        if (!out.fillable) {
            out.fillable = true;
            out.witness = rel;
        }
        if (!count_all) return false;
        out.count += 1;
        return true;
    });
    return out;
}

bool fillable_by_universe(const Complex2& c, const AbstractLabeling& lab, int m) {
    return universe_fillings(c, lab, m, /*count_all=*/false).fillable;
}

Census filling_census(const GeometricForm& form, int ell, int m) {
    if (m < 1 || m > 2) throw std::length_error("filling_census: guarded to m <= 2");
    if (ell > 8) throw std::length_error("filling_census: guarded to ell <= 8");
    SubdividedComplex sub = subdivide(form, ell);
    AbstractLabeling lab = distinct_labels(sub.complex);
    if (lab.k > 3) throw std::length_error("filling_census: guarded to 3 faces");
    if (reduction_degree(sub.complex, lab) != 0) {
        throw std::invalid_argument("filling_census: the subdivided form is not reduced");
    }

    long long total_len = 0;
    for (long long n : lab.lengths) total_len += n;

    constexpr std::size_t kMaxFillings = 2'000'000;
    std::vector<Letter> flat; // all fillings, concatenated relators
    flat.reserve(1 << 20);
    UniverseModel model(sub.complex, lab);
    bool overflow = false;
    model.enumerate(m, [&](const std::vector<Word>& rel) {
        if (flat.size() / (std::size_t)total_len >= kMaxFillings) {
            overflow = true;
            return false;
        }
        for (const Word& w : rel) flat.insert(flat.end(), w.begin(), w.end());
        return true;
    });
    if (overflow) throw std::length_error("filling_census: more than 2000000 fillings");

    Census out;
    std::size_t count = flat.size() / (std::size_t)total_len;
    out.count = BigInt(count);
    double denom = (double)lab.k * (double)ell * std::log((double)(2 * m - 1));
    out.exponent = count == 0 ? 0.0 : big_ln(out.count) / denom;

    // Slot-wise agreement classes: A[T] = ordered pairs agreeing on every
    // relator slot in T; exact counts by Moebius inversion over subsets.
    int k = lab.k;
    std::vector<long long> slot_off((std::size_t)k, 0);
    for (int i = 1; i < k; ++i) {
        slot_off[(std::size_t)i] = slot_off[(std::size_t)i - 1] + lab.lengths[(std::size_t)i - 1];
    }
    std::vector<unsigned long long> A((std::size_t)1 << k, 0);
    A[0] = (unsigned long long)count * (unsigned long long)count;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::unordered_map<std::string, unsigned long long> mult;
        mult.reserve(count * 2 + 1);
        std::string key;
        for (std::size_t f = 0; f < count; ++f) {
            key.clear();
            const Letter* base = flat.data() + f * (std::size_t)total_len;
            for (int i = 0; i < k; ++i) {
                if (!(mask >> i & 1u)) continue;
                key.append((const char*)(base + slot_off[(std::size_t)i]),
                           (std::size_t)lab.lengths[(std::size_t)i]);
            }
            mult[key]++;
        }
        unsigned long long pairs = 0;
        for (const auto& [kk, c2] : mult) {
            (void)kk;
            pairs += c2 * c2;
        }
        A[mask] = pairs;
    }
    // exact[S] = pairs agreeing on exactly the slots in S.
    std::vector<long long> exact((std::size_t)1 << k, 0);
    for (unsigned s = 0; s < (1u << k); ++s) {
        long long e = 0;
        unsigned rest = (~s) & ((1u << k) - 1);
        // Sum over supersets T of s.
        for (unsigned extra = rest;; extra = (extra - 1) & rest) {
            unsigned t = s | extra;
            int par = __builtin_popcount(t) - __builtin_popcount(s);
            e += (par % 2 == 0 ? 1 : -1) * (long long)A[t];
            if (extra == 0) break;
        }
        exact[s] = e;
    }
    out.self_intersections.assign((std::size_t)k + 1, BigInt(0));
    for (unsigned s = 0; s < (1u << k); ++s) {
        out.self_intersections[(std::size_t)__builtin_popcount(s)] += exact[s];
    }
    return out;
}

AuditReport isoperimetric_audit(const Complex2& c, const AbstractLabeling& lab, const Rational& d,
                                const Rational& eps, long long ell) {
    if (ell < 1) throw std::invalid_argument("isoperimetric_audit: ell must be >= 1");
    AuditReport rep;
    rep.faces = c.num_faces();
    rep.edges = c.num_edges();
    rep.red = reduction_degree(c, lab);
    rep.lhs = rep.edges + rep.red;
    Rational scale = Rational(rep.faces) * Rational(ell);
    rep.rhs = (Rational(1) - d - eps) * scale;
    rep.pass = Rational(rep.lhs) >= rep.rhs;
    rep.boundary = c.boundary_length();
    rep.rhs_boundary = (Rational(1) - d - d - eps) * scale;
    rep.pass_boundary = Rational(rep.boundary) >= rep.rhs_boundary;
    return rep;
}

} // namespace grouplab
