#pragma once

#include <optional>

#include "sumset/graph.hpp"
#include "sumset/lemma.hpp"

namespace sumset {

/// Pass/fail per pipeline step. A certificate proves |B| >= n + C(t+1,2)
/// for its instance exactly when every flag is true.
struct StepFlags {
    bool cover = false;              // S+S within A+B
    bool forest = false;             // diagonal edges acyclic
    bool contraction_count = false;  // |V(H)| == p + q - n
    bool color_well_defined = false; // one color per block
    bool x_size = false;             // |X| <= p <= n - t
    bool color_cover = false;        // colors of e_i+e_j, i<j, within X - C
    bool lemma = false;              // |C| >= n + C(t,2) via the counting bound
    bool final_chain = false;        // q >= 2n + C(t,2) - p and |B| >= q >= final bound

    bool all() const {
        return cover && forest && contraction_count && color_well_defined && x_size &&
               color_cover && lemma && final_chain;
    }
};

/// Full audit record of one pipeline run.
struct Certificate {
    int n = 0;
    int t = 0;
    int p = 0;
    int q = 0;
    int v_h = 0;
    long size_a = 0;
    long size_b = 0;
    std::set<Color> colors_x;
    std::set<Color> colors_c;
    std::optional<FoldedInstance> folded;  // absent for n = 1
    std::optional<LemmaReport> lemma;      // absent for n = 1
    long lemma_bound_value = 0;  // n + C(t,2)
    long final_bound = 0;        // n + C(t+1,2)
    StepFlags flags;

    bool proved() const { return flags.all(); }
};

/// Runs the whole pipeline: normalize, fix representations, build the graph,
/// check the forest, contract, color, check the color covering, fold into
/// F_2^n and apply the counting bound with u = t, then assert the final
/// arithmetic chain link by link. n = 1 short-circuits the lemma (D_1 is
/// empty and B nonempty already gives the bound 1).
/// Throws NotCovered and HypothesisViolated on unmet hypotheses; other
/// throws indicate corrupted data.
Certificate certify(const Instance& inst, RepStrategy strategy = RepStrategy::Lexicographic,
                    std::uint64_t seed = 0);

}  // namespace sumset
