// Acceptance suite. Runs the six release gates end to end and prints one
// PASS/FAIL line per criterion; exits nonzero if any gate fails.
//
//   1  sharpness: construction certifies with final_bound == |B|, n <= 8
//   2  exhaustive counting-bound oracle over F_2^n, n = 2, 3, 4
//   3  1000 random covered instances x 3 seeds: forest + contraction count
//   4  branch-and-bound cross-validation of min |B| and min |A|+|B|
//   5  folding invariants on 10^5 random color-set pairs
//   6  every chain inequality, separately, on every certificate from 1 and 3

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sumset/certificate.hpp"
#include "sumset/lemma.hpp"
#include "sumset/search.hpp"
#include "test_support.hpp"

using namespace sumset;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct ChainSample {
    long size_b = 0;
    Certificate cert;
};

std::vector<ChainSample> chain_samples;

// Criterion 1: for every n in [1,8] and t in [0,n-1], the construction
// certifies with every flag true and final_bound == |B| == n + t(t+1)/2.
void criterion_sharpness() {
    Timer timer;
    int runs = 0;
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8 && ok; ++n) {
        for (int t = 0; t <= n - 1 && ok; ++t) {
            const Instance inst = extremal_construction(n, t);
            const Certificate cert = certify(inst);
            ++runs;
            const long expected = n + static_cast<long>(t) * (t + 1) / 2;
            if (!cert.proved() || cert.final_bound != expected ||
                static_cast<long>(inst.b.size()) != expected) {
                ok = false;
                detail = "failed at n=" + std::to_string(n) + ", t=" + std::to_string(t);
            }
            chain_samples.push_back({static_cast<long>(inst.b.size()), cert});
        }
    }
    if (ok) detail = "sharp bound reproduced on " + std::to_string(runs) + "/36 constructions";
    report(1, ok, detail, timer.seconds());
}

// Criterion 2: no counterexample to the counting bound for n = 2, 3, 4.
void criterion_exhaustive_lemma() {
    Timer timer;
    bool ok = true;
    std::string detail = "no counterexample over 81 + 6561 + 43046721 pairs";
    for (const int n : {2, 3, 4}) {
        const auto ce = exhaustive_lemma_check(n);
        if (ce) {
            ok = false;
            detail = "counterexample found at n=" + std::to_string(n) + ": |C|=" +
                     std::to_string(ce->c_size) + " < " + std::to_string(ce->required);
            break;
        }
    }
    report(2, ok, detail, timer.seconds());
}

// Criterion 3: 1000 random covered instances, 3 random representation seeds
// each; the diagonal forest and the contraction count must hold in all runs.
void criterion_random_instances() {
    Timer timer;
    std::mt19937_64 rng(20260810);
    int clean = 0;
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int t = static_cast<int>(rng() % static_cast<unsigned>(n));
        const Instance inst = testsup::random_covered_instance(rng, n, t);
        for (int run = 0; run < 3 && ok; ++run) {
            const Certificate cert = certify(inst, RepStrategy::SeededRandom, rng());
            if (!cert.flags.forest || cert.v_h != cert.p + cert.q - cert.n || !cert.proved()) {
                ok = false;
                detail = "violation on trial " + std::to_string(trial);
                break;
            }
            ++clean;
            chain_samples.push_back({static_cast<long>(inst.b.size()), cert});
        }
    }
    if (ok) detail = "forest and |V(H)| = p+q-n held in " + std::to_string(clean) + "/3000 runs";
    report(3, ok, detail, timer.seconds());
}

// Criterion 4: the search oracle confirms minB = n + C(t+1,2) on the listed
// (n, t) cases and min |A|+|B| = 2n for n = 1, 2, 3, over the {-1..2} grid.
void criterion_search() {
    Timer timer;
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<int, int>> cases{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
    for (const auto& [n, t] : cases) {
        Universe u;
        u.n = n;
        u.lo = -1;
        u.hi = 2;
        u.denom = 1;
        const SearchResult r = min_B_search(n, t, u);
        const long expected = n + binom2(t + 1);
        if (!r.feasible || r.best != expected) {
            ok = false;
            detail = "minB mismatch at n=" + std::to_string(n) + ", t=" + std::to_string(t);
            break;
        }
    }
    for (int n = 1; ok && n <= 3; ++n) {
        Universe u;
        u.n = n;
        u.lo = -1;
        u.hi = 2;
        u.denom = 1;
        const SearchResult r = min_sum_search(n, u);
        if (!r.feasible || r.best != 2L * n) {
            ok = false;
            detail = "min |A|+|B| mismatch at n=" + std::to_string(n);
        }
    }
    if (ok) detail = "minB matches n + C(t+1,2) on 5 cases; min |A|+|B| = 2n for n = 1..3";
    report(4, ok, detail, timer.seconds());
}

// Criterion 5: folding invariants on 10^5 random valid (X, C) pairs.
void criterion_folding() {
    Timer timer;
    std::mt19937_64 rng(5050);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    const int total = 100000;
    int clean = 0;
    bool ok = true;
    std::string detail;

    for (int trial = 0; trial < total && ok; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto random_color = [&] {
            RatVec v = RatVec::zero(n);
            for (int i = 0; i < n; ++i) v[i] = Rat(num(rng), den(rng));
            return reduce_mod2(v);
        };

        std::set<Color> xs;
        const int x_count = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < x_count; ++k) xs.insert(random_color());
        std::set<Color> cs(xs.begin(), xs.end());
        std::vector<Color> x_list(xs.begin(), xs.end());
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Color d = reduce_mod2(RatVec::unit(i, n) + RatVec::unit(j, n));
                cs.insert(color_sub(x_list[rng() % x_list.size()], d));
            }
        }
        for (int extra = static_cast<int>(rng() % 2); extra > 0; --extra)
            cs.insert(random_color());

        try {
            const FoldedInstance folded = fold_to_F2(xs, cs, n, 0);
            bool good = folded.xp.size() <= xs.size() && folded.cp.size() <= cs.size();
            for (const auto& v : folded.xp) good = good && folded.cp.count(v) > 0;
            for (const auto& d : d_n(n)) {
                bool hit = false;
                for (const auto& x : folded.xp)
                    if (folded.cp.count(x ^ d)) { hit = true; break; }
                good = good && hit;
            }
            if (!good) {
                ok = false;
                detail = "invariant violation on trial " + std::to_string(trial);
            } else {
                ++clean;
            }
        } catch (const Error& e) {
            ok = false;
            detail = std::string("fold threw on trial ") + std::to_string(trial) + ": " + e.what();
        }
    }
    if (ok) detail = std::to_string(clean) + "/" + std::to_string(total) + " folds clean";
    report(5, ok, detail, timer.seconds());
}

// Criterion 6: each inequality of the final chain, asserted separately, on
// every certificate produced by criteria 1 and 3.
void criterion_chain_links() {
    Timer timer;
    long checked = 0;
    bool ok = true;
    std::string detail;
    for (const auto& sample : chain_samples) {
        const Certificate& cert = sample.cert;
        const long x_size = static_cast<long>(cert.colors_x.size());
        const long c_size = static_cast<long>(cert.colors_c.size());
        const bool links =
            x_size <= cert.p && cert.p <= cert.n - cert.t &&            // |X| <= p <= n-t
            c_size <= cert.v_h &&                                       // |C| <= |V(H)|
            c_size >= cert.n + binom2(cert.t) &&                        // |C| >= n + C(t,2)
            cert.q >= 2 * cert.n + binom2(cert.t) - cert.p &&           // q chain link
            sample.size_b >= cert.n + binom2(cert.t + 1);               // |B| >= final bound
        if (!links) {
            ok = false;
            detail = "chain link broke on a certificate with n=" + std::to_string(cert.n) +
                     ", t=" + std::to_string(cert.t);
            break;
        }
        ++checked;
    }
    if (ok)
        detail = "5 inequalities held on all " + std::to_string(checked) + " certificates";
    report(6, ok, detail, timer.seconds());
}

}  // namespace

int main() {
    criterion_sharpness();
    criterion_exhaustive_lemma();
    criterion_random_instances();
    criterion_search();
    criterion_folding();
    criterion_chain_links();

    if (failures == 0) {
        std::printf("acceptance: all 6 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
