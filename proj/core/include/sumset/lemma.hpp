#pragma once

#include <map>
#include <optional>
#include <set>

#include "sumset/f2.hpp"
#include "sumset/linalg.hpp"

namespace sumset {

/// Color sets folded into K = Z^n/2Z^n, identified with F_2^n. Cosets of K
/// are keyed by coordinate-wise fractional parts; each coset meeting X is
/// translated back into K by its anchor.
struct FoldedInstance {
    std::set<F2Vec> xp;  // X'
    std::set<F2Vec> cp;  // C'
    int n = 0;
    int u = 0;
    std::map<RatVec, Color> anchors;  // coset key -> chosen anchor in X
};

struct LemmaReport {
    long m = 0;             // |X'| after translation
    int dim_w = 0;          // dim span(X')
    int s = 0;              // n - dim_w
    long rho_d_nonzero = 0; // |rho(D_n) \ {0}|
    long bound = 0;         // n + C(u, 2)
    long c_size = 0;        // |C'|
    bool pass = false;
};

/// Folds (X, C) into F_2^n. Anchor per coset: the lexicographically smallest
/// member of X in that coset. Cosets of C not meeting X are discarded.
/// Checks X' within C', |X'| <= |X|, |C'| <= |C|, and D_n within X' - C'
/// (vacuous for n < 2). Throws NotNested, EmptyX, AssertionFailed.
FoldedInstance fold_to_F2(const std::set<Color>& x, const std::set<Color>& c, int n, int u = 0);

/// Runs the counting argument on a folded instance: translates so 0 is in
/// X', spans X', passes to the quotient, and checks every link of
/// |C'| >= m + |rho(D_n)\{0}| >= m + C(s,2) >= n + C(n-m,2) >= n + C(u,2).
/// Throws HypothesisViolated (n < 2 or |X'| > n-u) or AssertionFailed naming
/// the first broken link.
LemmaReport lemma_bound(const FoldedInstance& folded);

struct LemmaCounterexample {
    int n = 0;
    int u = 0;
    std::set<F2Vec> x;
    std::set<F2Vec> c;
    long c_size = 0;
    long required = 0;
};

/// Enumerates every pair X within C within F_2^n (3^(2^n) pairs) and every
/// admissible u, checking |C| >= n + C(u,2) whenever D_n lies in X - C.
/// Returns the first violation in (C ascending, X by submask enumeration,
/// u ascending) order, or nothing. Requires 2 <= n <= 4; workers >= 1 split
/// the outer range without changing the result.
std::optional<LemmaCounterexample> exhaustive_lemma_check(int n, int workers = 1);

}  // namespace sumset
