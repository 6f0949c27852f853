#include "sumset/lemma.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "sumset/instance.hpp"

namespace sumset {

namespace {

RatVec coset_key(const Color& c) {
    RatVec key = RatVec::zero(c.dim());
    for (int i = 0; i < c.dim(); ++i) key[i] = c.rep()[i].frac();
    return key;
}

// Valid only for colors in the same coset as the anchor: the difference has
// integer coordinates, each 0 or 1 after canonicalization.
F2Vec into_k(const Color& c, const Color& anchor, int n) {
    const Color diff = color_sub(c, anchor);
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        const Rat& q = diff.rep()[i];
        if (!q.is_integer())
            throw AssertionFailed("folded element is not in K: " + diff.str());
        if (q == Rat(1)) bits |= std::uint64_t{1} << i;
    }
    return {n, bits};
}

bool xor_covers(const std::set<F2Vec>& xs, const std::set<F2Vec>& cs, const F2Vec& d) {
    for (const auto& x : xs)
        if (cs.count(x ^ d)) return true;  // d = x - c  <=>  c = x ^ d over F_2
    return false;
}

}  // namespace

FoldedInstance fold_to_F2(const std::set<Color>& x, const std::set<Color>& c, int n, int u) {
    if (n < 1 || n > 64) throw InvalidParams("fold_to_F2 supports 1 <= n <= 64");
    for (const auto& e : x)
        if (!c.count(e)) throw NotNested("X contains a color outside C");
    if (x.empty() && n >= 2) throw EmptyX("X must be nonempty for n >= 2");

    FoldedInstance f;
    f.n = n;
    f.u = u;
    // X iterates in ascending order, so the first member seen per coset is
    // the lexicographically smallest one.
    for (const auto& e : x) f.anchors.emplace(coset_key(e), e);

    for (const auto& e : x) f.xp.insert(into_k(e, f.anchors.at(coset_key(e)), n));
    for (const auto& e : c) {
        const auto it = f.anchors.find(coset_key(e));
        if (it == f.anchors.end()) continue;  // coset of C not meeting X
        f.cp.insert(into_k(e, it->second, n));
    }

    for (const auto& v : f.xp)
        if (!f.cp.count(v)) throw AssertionFailed("folded X' escaped C'");
    if (f.xp.size() > x.size() || f.cp.size() > c.size())
        throw AssertionFailed("folding increased a set size");

    // Folding preserves the covering: whenever D_n lies in X - C upstream it
    // must still lie in X' - C'. Inputs without the covering fold fine, they
    // just carry no claim.
    for (const auto& dv : d_n(n)) {
        RatVec rep = RatVec::zero(n);
        for (int i = 1; i <= n; ++i)
            if (dv.bit(i)) rep[i - 1] = Rat(1);
        const Color d(rep);
        bool in_input_diff = false;
        for (const auto& xe : x) {
            for (const auto& ce : c) {
                if (color_sub(xe, ce) == d) { in_input_diff = true; break; }
            }
            if (in_input_diff) break;
        }
        if (in_input_diff && !xor_covers(f.xp, f.cp, dv))
            throw AssertionFailed("folding lost the D_n covering at " + dv.str());
    }
    return f;
}

LemmaReport lemma_bound(const FoldedInstance& folded) {
    const int n = folded.n;
    const int u = folded.u;
    if (n < 2) throw HypothesisViolated("counting bound requires n >= 2");
    if (u < 0 || u > n) throw HypothesisViolated("u must satisfy 0 <= u <= n");
    if (folded.xp.empty()) throw EmptyX("X' must be nonempty");

    // Translate so 0 lies in X'. Anchored folds already satisfy this.
    std::set<F2Vec> xs = folded.xp;
    std::set<F2Vec> cs = folded.cp;
    if (!xs.count(F2Vec::zero(n))) {
        const F2Vec shift = *xs.begin();
        std::set<F2Vec> xs2, cs2;
        for (const auto& v : xs) xs2.insert(v ^ shift);
        for (const auto& v : cs) cs2.insert(v ^ shift);
        xs = std::move(xs2);
        cs = std::move(cs2);
    }

    LemmaReport report;
    report.m = static_cast<long>(xs.size());
    if (report.m > n - u)
        throw HypothesisViolated("|X'| = " + std::to_string(report.m) + " exceeds n - u = " +
                                 std::to_string(n - u));

    const F2Span w = f2_span(std::vector<F2Vec>(xs.begin(), xs.end()));
    report.dim_w = w.dim();
    if (report.dim_w > report.m - 1)
        throw AssertionFailed("dim W exceeds m - 1");

    const QuotientMap rho = quotient_data(w, n);
    report.s = rho.s();
    if (report.s != n - report.dim_w)
        throw AssertionFailed("quotient dimension differs from n - dim W");

    std::set<F2Vec> rho_c;
    for (const auto& v : cs) rho_c.insert(rho(v));
    std::set<F2Vec> rho_d;
    for (const auto& d : d_n(n)) {
        const F2Vec image = rho(d);
        if (!rho_c.count(image))
            throw AssertionFailed("rho(D_n) escaped rho(C') at " + d.str());
        rho_d.insert(image);
    }
    report.rho_d_nonzero =
        static_cast<long>(rho_d.size()) - static_cast<long>(rho_d.count(F2Vec::zero(report.s)));

    report.c_size = static_cast<long>(cs.size());
    report.bound = n + binom2(u);

    // Each link of the counting chain is its own check.
    if (report.c_size < report.m + report.rho_d_nonzero)
        throw AssertionFailed("chain link |C'| >= m + |rho(D_n)\\{0}| failed");
    if (report.rho_d_nonzero < binom2(report.s))
        throw AssertionFailed("chain link |rho(D_n)\\{0}| >= C(s,2) failed");
    if (report.m + binom2(report.s) < n + binom2(n - report.m))
        throw AssertionFailed("chain link m + C(s,2) >= n + C(n-m,2) failed");
    if (n + binom2(n - report.m) < report.bound)
        throw AssertionFailed("chain link n + C(n-m,2) >= n + C(u,2) failed");
    if (report.c_size < report.bound)
        throw AssertionFailed("counting bound |C'| >= n + C(u,2) failed");

    report.pass = true;
    return report;
}

namespace {

struct RangeHit {
    std::uint32_t c_mask = 0;
    std::uint32_t x_mask = 0;
    int u = 0;
    bool found = false;

    // Earlier in (C ascending, X by submask enumeration, u ascending) order.
    bool earlier_than(const RangeHit& o) const {
        if (!found || !o.found) return found;
        if (c_mask != o.c_mask) return c_mask < o.c_mask;
        if (x_mask != o.x_mask) return x_mask > o.x_mask;  // submask order descends
        return u < o.u;
    }
};

// Full submask scan of [c_begin, c_end).
RangeHit scan_range(int n, std::uint32_t c_begin, std::uint32_t c_end) {
    const int elements = 1 << n;
    std::uint32_t d_mask = 0;
    for (const auto& d : d_n(n)) d_mask |= std::uint32_t{1} << d.bits();

    std::vector<long> need(static_cast<size_t>(n) + 1);
    for (int u = 0; u <= n; ++u) need[static_cast<size_t>(u)] = n + binom2(u);

    // shifted[x] = {c ^ x : c in C} as a mask, cached per C.
    std::vector<std::uint32_t> shifted(static_cast<size_t>(elements));

    for (std::uint32_t c_mask = c_begin; c_mask < c_end; ++c_mask) {
        if (c_mask == 0) continue;
        const int c_size = std::popcount(c_mask);
        for (std::uint32_t rest = c_mask; rest;) {
            const int x = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t image = 0;
            for (std::uint32_t bits = c_mask; bits;) {
                const int c = std::countr_zero(bits);
                bits &= bits - 1;
                image |= std::uint32_t{1} << (c ^ x);
            }
            shifted[static_cast<size_t>(x)] = image;
        }

        for (std::uint32_t x_mask = c_mask; x_mask; x_mask = (x_mask - 1) & c_mask) {
            std::uint32_t diff = 0;
            for (std::uint32_t rest = x_mask; rest;) {
                const int x = std::countr_zero(rest);
                rest &= rest - 1;
                diff |= shifted[static_cast<size_t>(x)];
            }
            if ((diff & d_mask) != d_mask) continue;

            const int m = std::popcount(x_mask);
            for (int u = 0; u <= n - m; ++u) {
                if (c_size >= need[static_cast<size_t>(u)]) continue;
                return {c_mask, x_mask, u, true};
            }
        }
    }
    return {};
}

LemmaCounterexample materialize(int n, const RangeHit& hit) {
    LemmaCounterexample ce;
    ce.n = n;
    ce.u = hit.u;
    for (int v = 0; v < (1 << n); ++v) {
        if (hit.x_mask & (std::uint32_t{1} << v)) ce.x.insert(F2Vec(n, static_cast<std::uint64_t>(v)));
        if (hit.c_mask & (std::uint32_t{1} << v)) ce.c.insert(F2Vec(n, static_cast<std::uint64_t>(v)));
    }
    ce.c_size = static_cast<long>(ce.c.size());
    ce.required = n + binom2(hit.u);
    return ce;
}

}  // namespace

std::optional<LemmaCounterexample> exhaustive_lemma_check(int n, int workers) {
    if (n > 4) throw TooLarge("exhaustive check supports n <= 4 (3^(2^n) pairs)");
    if (n < 2) throw InvalidParams("exhaustive check requires n >= 2");
    if (workers < 1) throw InvalidParams("workers must be >= 1");

    const std::uint64_t total = std::uint64_t{1} << (1 << n);
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

    std::vector<RangeHit> hits(static_cast<size_t>(workers));
    if (workers == 1) {
        hits[0] = scan_range(n, 0, static_cast<std::uint32_t>(total));
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                                    static_cast<std::uint64_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back([&hits, w, n, begin, end] {
                hits[static_cast<size_t>(w)] =
                    scan_range(n, static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(end));
            });
        }
        for (auto& th : pool) th.join();
    }

    RangeHit best;
    for (const auto& hit : hits)
        if (hit.earlier_than(best)) best = hit;
    if (!best.found) return std::nullopt;
    return materialize(n, best);
}

}  // namespace sumset
