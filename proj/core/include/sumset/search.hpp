#pragma once

#include <cstdint>
#include <set>

#include "sumset/instance.hpp"

namespace sumset {

/// Finite grid (1/d)Z^n with coordinates in [lo, hi]. Size is
/// ((hi-lo)*d + 1)^n; enumeration refuses anything above `cap`.
struct Universe {
    static constexpr std::uint64_t kDefaultCap = 1'000'000;

    int n = 0;
    long lo = 0;
    long hi = 0;
    long denom = 1;
    std::uint64_t cap = kDefaultCap;

    mpz_class size() const;
    bool contains(const RatVec& v) const;

    /// All elements in lexicographic order. Throws UniverseTooLarge or
    /// InvalidParams.
    std::vector<RatVec> elements() const;
};

struct SearchResult {
    bool feasible = false;
    long best = 0;  // min |B|, or min |A|+|B| for the sum objective
    std::set<RatVec> witness_a;
    std::set<RatVec> witness_b;
    std::uint64_t nodes_explored = 0;
};

/// Exact minimum of |B| over A, B inside the universe with |A| <= n-t and
/// every e_i + e_j (i <= j) in A+B. Branch and bound over targets, branching
/// on the decomposition of the most-constrained uncovered target; the
/// incumbent is seeded from the extremal construction when it fits.
/// Deterministic. Throws InfeasibleUniverse when some target has no
/// decomposition at all; returns feasible = false when the A budget makes
/// covering impossible.
SearchResult min_B_search(int n, int t, const Universe& universe);

/// Exact minimum of |A| + |B| over unconstrained A, B inside the universe
/// covering all targets. Same machinery with both sides in the objective.
SearchResult min_sum_search(int n, const Universe& universe);

}  // namespace sumset
