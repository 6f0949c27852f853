#include "sumset/search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace sumset {

mpz_class Universe::size() const {
    if (n < 1) throw InvalidParams("universe dimension must be >= 1");
    if (denom < 1) throw InvalidParams("universe denominator must be >= 1");
    if (hi < lo) throw InvalidParams("universe requires lo <= hi");
    mpz_class per_coord = mpz_class(hi - lo) * denom + 1;
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), per_coord.get_mpz_t(), static_cast<unsigned long>(n));
    return total;
}

bool Universe::contains(const RatVec& v) const {
    if (v.dim() != n) return false;
    for (int i = 0; i < n; ++i) {
        const Rat scaled = v[i] * Rat(denom);
        if (!scaled.is_integer()) return false;
        if (v[i] < Rat(lo) || v[i] > Rat(hi)) return false;
    }
    return true;
}

std::vector<RatVec> Universe::elements() const {
    const mpz_class total = size();
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw UniverseTooLarge("universe has " + total.get_str() + " elements, cap is " +
                               std::to_string(cap));

    const long per_coord = (hi - lo) * denom + 1;
    std::vector<RatVec> out;
    out.reserve(static_cast<size_t>(total.get_ui()));
    RatVec current = RatVec::zero(n);
    // Odometer over coordinates, most significant first.
    std::vector<long> digits(static_cast<size_t>(n), 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            current[i] = Rat(lo) + Rat(digits[static_cast<size_t>(i)], denom);
        out.push_back(current);
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == per_coord - 1) {
            digits[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }
    return out;
}

namespace {

// Shared branch-and-bound engine for both objectives. Universe elements are
// referred to by index; all iteration orders are fixed, so runs are
// reproducible node for node.
class Engine {
public:
    Engine(int n, std::size_t max_a, bool count_a, const Universe& universe)
        : n_(n), max_a_(max_a), count_a_(count_a), elems_(universe.elements()) {
        std::map<RatVec, int> index;
        for (int k = 0; k < static_cast<int>(elems_.size()); ++k) index[elems_[static_cast<size_t>(k)]] = k;

        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                const RatVec target = RatVec::unit(i, n) + RatVec::unit(j, n);
                std::vector<Decomp> list;
                for (int a = 0; a < static_cast<int>(elems_.size()); ++a) {
                    const auto it = index.find(target - elems_[static_cast<size_t>(a)]);
                    if (it != index.end()) list.push_back({a, it->second});
                }
                if (list.empty())
                    throw InfeasibleUniverse("target e_" + std::to_string(i) + " + e_" +
                                             std::to_string(j) + " has no decomposition");
                decomps_.push_back(std::move(list));
            }
        }
        in_a_.assign(elems_.size(), false);
        in_b_.assign(elems_.size(), false);
    }

    void seed_incumbent(const std::set<RatVec>& a, const std::set<RatVec>& b) {
        std::vector<int> ia, ib;
        for (const auto& v : a) {
            const int k = find(v);
            if (k < 0) return;  // does not fit this universe
            ia.push_back(k);
        }
        for (const auto& v : b) {
            const int k = find(v);
            if (k < 0) return;
            ib.push_back(k);
        }
        best_ = static_cast<long>(b.size()) + (count_a_ ? static_cast<long>(a.size()) : 0);
        best_a_ = std::move(ia);
        best_b_ = std::move(ib);
        feasible_ = true;
    }

    SearchResult run() {
        dfs();
        SearchResult result;
        result.feasible = feasible_;
        result.best = feasible_ ? best_ : 0;
        result.nodes_explored = nodes_;
        for (const int k : best_a_) result.witness_a.insert(elems_[static_cast<size_t>(k)]);
        for (const int k : best_b_) result.witness_b.insert(elems_[static_cast<size_t>(k)]);
        return result;
    }

private:
    struct Decomp {
        int a = 0;
        int b = 0;
    };

    int find(const RatVec& v) const {
        const auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
        if (it == elems_.end() || *it != v) return -1;
        return static_cast<int>(it - elems_.begin());
    }

    bool covered(const std::vector<Decomp>& list) const {
        for (const auto& d : list)
            if (in_a_[static_cast<size_t>(d.a)] && in_b_[static_cast<size_t>(d.b)]) return true;
        return false;
    }

    bool branchable(const Decomp& d) const {
        return in_a_[static_cast<size_t>(d.a)] || size_a_ < max_a_;
    }

    long objective() const {
        return static_cast<long>(size_b_) + (count_a_ ? static_cast<long>(size_a_) : 0);
    }

    // Admissible completion bound: greedily count uncovered targets whose
    // sets of possible new additions are pairwise disjoint. Additions are
    // side-tagged (element k as 2k for the A side, 2k+1 for the B side).
    // For the |B| objective only forced new-B targets count.
    long completion_bound(const std::vector<int>& uncovered) const {
        std::set<int> used;
        long need = 0;
        for (const int tgt : uncovered) {
            std::vector<int> cand;
            bool free_cover = false;
            for (const auto& d : decomps_[static_cast<size_t>(tgt)]) {
                const bool a_in = in_a_[static_cast<size_t>(d.a)];
                const bool b_in = in_b_[static_cast<size_t>(d.b)];
                if (count_a_) {
                    if (!a_in) cand.push_back(2 * d.a);
                    if (!b_in) cand.push_back(2 * d.b + 1);
                } else {
                    if (b_in) { free_cover = true; break; }  // new a may be free
                    cand.push_back(2 * d.b + 1);
                }
            }
            if (free_cover) continue;
            bool disjoint = true;
            for (const int c : cand)
                if (used.count(c)) { disjoint = false; break; }
            if (!disjoint) continue;
            ++need;
            used.insert(cand.begin(), cand.end());
        }
        return need;
    }

    void dfs() {
        ++nodes_;

        std::vector<int> uncovered;
        for (int k = 0; k < static_cast<int>(decomps_.size()); ++k)
            if (!covered(decomps_[static_cast<size_t>(k)])) uncovered.push_back(k);

        if (uncovered.empty()) {
            const long obj = objective();
            if (!feasible_ || obj < best_) {
                feasible_ = true;
                best_ = obj;
                best_a_.clear();
                best_b_.clear();
                for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
                    if (in_a_[static_cast<size_t>(k)]) best_a_.push_back(k);
                    if (in_b_[static_cast<size_t>(k)]) best_b_.push_back(k);
                }
            }
            return;
        }

        if (feasible_ && objective() + completion_bound(uncovered) >= best_) return;

        // Most-constrained uncovered target; ties fall to the earlier pair.
        int branch = -1;
        std::size_t branch_width = std::numeric_limits<std::size_t>::max();
        for (const int tgt : uncovered) {
            std::size_t width = 0;
            for (const auto& d : decomps_[static_cast<size_t>(tgt)])
                if (branchable(d)) ++width;
            if (width < branch_width) {
                branch_width = width;
                branch = tgt;
            }
        }
        if (branch_width == 0) return;  // A budget exhausted, dead end

        for (const auto& d : decomps_[static_cast<size_t>(branch)]) {
            if (!branchable(d)) continue;
            const bool add_a = !in_a_[static_cast<size_t>(d.a)];
            const bool add_b = !in_b_[static_cast<size_t>(d.b)];
            if (add_a) { in_a_[static_cast<size_t>(d.a)] = true; ++size_a_; }
            if (add_b) { in_b_[static_cast<size_t>(d.b)] = true; ++size_b_; }
            dfs();
            if (add_a) { in_a_[static_cast<size_t>(d.a)] = false; --size_a_; }
            if (add_b) { in_b_[static_cast<size_t>(d.b)] = false; --size_b_; }
        }
    }

    int n_;
    std::size_t max_a_;
    bool count_a_;
    std::vector<RatVec> elems_;
    std::vector<std::vector<Decomp>> decomps_;  // lexicographic (i, j) target order

    std::vector<char> in_a_, in_b_;
    std::size_t size_a_ = 0, size_b_ = 0;

    bool feasible_ = false;
    long best_ = 0;
    std::vector<int> best_a_, best_b_;
    std::uint64_t nodes_ = 0;
};

void verify_witness(int n, const SearchResult& result) {
    if (!result.feasible) return;
    Instance inst;
    inst.n = n;
    inst.t = 0;
    for (int i = 1; i <= n; ++i) inst.basis.push_back(RatVec::unit(i, n));
    inst.a = result.witness_a;
    inst.b = result.witness_b;
    if (!verify_cover(inst).covered)
        throw AssertionFailed("search witness failed the covering re-check");
}

}  // namespace

SearchResult min_B_search(int n, int t, const Universe& universe) {
    if (n < 1) throw InvalidParams("search requires n >= 1");
    if (t < 0 || t > n - 1) throw InvalidParams("search requires 0 <= t <= n-1");
    if (universe.n != n) throw DimensionMismatch("universe dimension differs from n");

    Engine engine(n, static_cast<std::size_t>(n - t), /*count_a=*/false, universe);
    const Instance construction = extremal_construction(n, t);
    engine.seed_incumbent(construction.a, construction.b);
    SearchResult result = engine.run();
    verify_witness(n, result);
    return result;
}

SearchResult min_sum_search(int n, const Universe& universe) {
    if (n < 1) throw InvalidParams("search requires n >= 1");
    if (universe.n != n) throw DimensionMismatch("universe dimension differs from n");

    Engine engine(n, std::numeric_limits<std::size_t>::max(), /*count_a=*/true, universe);
    const Instance construction = extremal_construction(n, 0);
    engine.seed_incumbent(construction.a, construction.b);
    SearchResult result = engine.run();
    verify_witness(n, result);
    return result;
}

}  // namespace sumset
