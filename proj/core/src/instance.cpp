#include "sumset/instance.hpp"

#include <random>
#include <string>

namespace sumset {

long binom2(long k) {
    if (k < 0) throw InvalidParams("binom2 of negative argument");
    return k * (k - 1) / 2;
}

namespace {

bool is_standard_basis(const std::vector<RatVec>& basis) {
    const int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i) {
        if (basis[static_cast<size_t>(i)] != RatVec::unit(i + 1, n)) return false;
    }
    return true;
}

std::vector<RatVec> standard_basis(int n) {
    std::vector<RatVec> s;
    s.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) s.push_back(RatVec::unit(i, n));
    return s;
}

void check_dimensions(const Instance& inst) {
    if (inst.n < 1) throw InvalidParams("instance dimension must be >= 1");
    if (static_cast<int>(inst.basis.size()) != inst.n)
        throw DimensionMismatch("basis must contain exactly n vectors");
    for (const auto& s : inst.basis)
        if (s.dim() != inst.n) throw DimensionMismatch("basis vector of wrong dimension");
    for (const auto& v : inst.a)
        if (v.dim() != inst.n) throw DimensionMismatch("element of A of wrong dimension");
    for (const auto& v : inst.b)
        if (v.dim() != inst.n) throw DimensionMismatch("element of B of wrong dimension");
}

}  // namespace

Instance normalize_to_standard(const Instance& inst) {
    check_dimensions(inst);
    if (is_standard_basis(inst.basis)) return inst;

    const RatMatrix m = basis_inverse(inst.basis);
    Instance out;
    out.n = inst.n;
    out.t = inst.t;
    out.basis = standard_basis(inst.n);
    for (const auto& v : inst.a) out.a.insert(apply_map(m, v));
    for (const auto& v : inst.b) out.b.insert(apply_map(m, v));
    // Invertible maps are injective, so the images must not collapse.
    if (out.a.size() != inst.a.size() || out.b.size() != inst.b.size())
        throw AssertionFailed("normalization changed a set cardinality");
    return out;
}

CoverReport verify_cover(const Instance& inst) {
    const Instance norm = normalize_to_standard(inst);
    CoverReport report;
    for (int i = 1; i <= norm.n; ++i) {
        for (int j = i; j <= norm.n; ++j) {
            const RatVec target = RatVec::unit(i, norm.n) + RatVec::unit(j, norm.n);
            bool hit = false;
            for (const auto& b : norm.b) {
                if (norm.a.count(target - b)) { hit = true; break; }
            }
            if (!hit) report.missing.emplace_back(i, j);
        }
    }
    report.covered = report.missing.empty();
    return report;
}

Representation choose_representations(const Instance& inst, RepStrategy strategy,
                                      std::uint64_t seed) {
    const Instance norm = normalize_to_standard(inst);
    const CoverReport cover = verify_cover(norm);
    if (!cover.covered)
        throw NotCovered("instance does not satisfy the covering hypothesis", cover.missing);

    std::mt19937_64 rng(seed);
    Representation rep;
    rep.n = norm.n;
    for (int i = 1; i <= norm.n; ++i) {
        for (int j = i; j <= norm.n; ++j) {
            const RatVec target = RatVec::unit(i, norm.n) + RatVec::unit(j, norm.n);
            // One candidate per a (b is forced), in ascending a order.
            std::vector<std::pair<RatVec, RatVec>> candidates;
            for (const auto& a : norm.a) {
                const RatVec b = target - a;
                if (norm.b.count(b)) candidates.emplace_back(a, b);
            }
            if (candidates.empty())
                throw AssertionFailed("covered pair lost its decomposition");
            size_t pick = 0;
            if (strategy == RepStrategy::SeededRandom)
                pick = static_cast<size_t>(rng() % candidates.size());
            rep.entries.emplace(std::make_pair(i, j), candidates[pick]);
        }
    }
    return rep;
}

Instance extremal_construction(int n, int t, const std::vector<RatVec>* basis) {
    if (n < 1) throw InvalidParams("construction requires n >= 1");
    if (t < 0 || t > n - 1) throw InvalidParams("construction requires 0 <= t <= n-1");

    std::vector<RatVec> s = basis ? *basis : standard_basis(n);
    if (static_cast<int>(s.size()) != n)
        throw DimensionMismatch("basis must contain exactly n vectors");
    basis_inverse(s);  // rejects dependent input

    Instance inst;
    inst.n = n;
    inst.t = t;
    inst.basis = s;
    for (int i = 1; i <= n - t; ++i) inst.a.insert(s[static_cast<size_t>(i - 1)]);
    for (int i = 1; i <= n; ++i) inst.b.insert(s[static_cast<size_t>(i - 1)]);
    for (int i = n - t + 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            inst.b.insert(s[static_cast<size_t>(i - 1)] + s[static_cast<size_t>(j - 1)] - s[0]);
        }
    }

    if (static_cast<long>(inst.a.size()) != n - t)
        throw AssertionFailed("construction produced |A| != n-t");
    if (static_cast<long>(inst.b.size()) != n + binom2(t + 1))
        throw AssertionFailed("construction produced |B| != n + C(t+1,2)");
    return inst;
}

}  // namespace sumset
