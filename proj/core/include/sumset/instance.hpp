#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sumset/linalg.hpp"

namespace sumset {

/// One problem instance: a basis S of dimension n, finite sets A and B, and
/// the slack parameter t with 0 <= t <= n-1. The covering hypothesis under
/// test is S+S being contained in A+B.
struct Instance {
    int n = 0;
    int t = 0;
    std::vector<RatVec> basis;  // S, exactly n vectors
    std::set<RatVec> a;
    std::set<RatVec> b;
};

/// Outcome of the covering check. `missing` lists uncovered pairs (i, j),
/// i <= j, in lexicographic order; empty iff covered.
struct CoverReport {
    bool covered = false;
    std::vector<std::pair<int, int>> missing;
};

/// A fixed choice of decomposition e_i + e_j = a + b per pair, in standard
/// basis coordinates. Total: one entry for every 1 <= i <= j <= n.
struct Representation {
    int n = 0;
    std::map<std::pair<int, int>, std::pair<RatVec, RatVec>> entries;
};

enum class RepStrategy {
    Lexicographic,  // smallest a, ties by smallest b; deterministic
    SeededRandom,   // uniform among valid pairs, reproducible per seed
};

/// Rewrites the instance in the coordinates where S becomes the standard
/// basis, mapping A and B through basis_inverse(S). Cardinalities and the
/// covering status are unchanged. Throws SingularBasis.
Instance normalize_to_standard(const Instance& inst);

/// Checks the covering hypothesis for every pair. Normalizes internally.
CoverReport verify_cover(const Instance& inst);

/// Picks one decomposition per target pair from the normalized instance.
/// Throws NotCovered with the missing pairs when the hypothesis fails.
Representation choose_representations(const Instance& inst, RepStrategy strategy,
                                      std::uint64_t seed = 0);

/// The sharp instance: A = {s_1..s_{n-t}},
/// B = {s_1..s_n} plus {s_i + s_j - s_1 : n-t < i <= j <= n}.
/// |A| = n-t and |B| = n + t(t+1)/2 exactly. Standard basis when S is null.
Instance extremal_construction(int n, int t, const std::vector<RatVec>* basis = nullptr);

/// n + k(k+1)/2 helper domain: binomial(k, 2) for k >= 0.
long binom2(long k);

}  // namespace sumset
