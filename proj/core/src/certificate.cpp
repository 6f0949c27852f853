#include "sumset/certificate.hpp"

#include <string>

namespace sumset {

Certificate certify(const Instance& inst, RepStrategy strategy, std::uint64_t seed) {
    if (inst.t < 0 || inst.t > inst.n - 1)
        throw HypothesisViolated("t must satisfy 0 <= t <= n-1");
    if (static_cast<long>(inst.a.size()) > inst.n - inst.t)
        throw HypothesisViolated("|A| = " + std::to_string(inst.a.size()) +
                                 " exceeds n - t = " + std::to_string(inst.n - inst.t));

    const Instance norm = normalize_to_standard(inst);

    Certificate cert;
    cert.n = norm.n;
    cert.t = norm.t;
    cert.size_a = static_cast<long>(norm.a.size());
    cert.size_b = static_cast<long>(norm.b.size());
    cert.lemma_bound_value = norm.n + binom2(norm.t);
    cert.final_bound = norm.n + binom2(norm.t + 1);

    const CoverReport cover = verify_cover(norm);
    cert.flags.cover = cover.covered;
    if (!cover.covered)
        throw NotCovered("instance does not satisfy the covering hypothesis", cover.missing);

    const Representation rep = choose_representations(norm, strategy, seed);
    const RepGraph g = build_graph(rep);
    cert.p = g.p();
    cert.q = g.q();

    cert.flags.forest = check_diagonal_forest(g);
    const ContractedGraph h = contract_diagonals(g);
    cert.v_h = h.block_count;
    cert.flags.contraction_count = (cert.v_h == cert.p + cert.q - cert.n);

    const Coloring coloring = color_components(h, g);
    cert.flags.color_well_defined = true;  // color_components throws otherwise
    cert.colors_x = coloring.colors_x;
    cert.colors_c = coloring.colors_c;

    cert.flags.x_size = static_cast<int>(cert.colors_x.size()) <= cert.p &&
                        cert.p <= cert.n - cert.t;
    cert.flags.color_cover = check_cover_in_colors(cert.colors_x, cert.colors_c, cert.n);

    if (cert.n >= 2) {
        cert.folded = fold_to_F2(cert.colors_x, cert.colors_c, cert.n, cert.t);
        cert.lemma = lemma_bound(*cert.folded);
        // |C| >= |C'| >= n + C(t,2): folding only loses elements.
        cert.flags.lemma = cert.lemma->pass &&
                           static_cast<long>(cert.colors_c.size()) >= cert.lemma->c_size &&
                           static_cast<long>(cert.colors_c.size()) >= cert.lemma_bound_value;
    } else {
        // n = 1: D_1 is empty and the colored graph is nonempty, so
        // |C| >= 1 = n + C(0,2) directly.
        cert.flags.lemma = !cert.colors_c.empty() &&
                           static_cast<long>(cert.colors_c.size()) >= cert.lemma_bound_value;
    }

    const long c_size = static_cast<long>(cert.colors_c.size());
    const bool c_fits_h = c_size <= cert.v_h;
    const bool q_link = cert.q >= 2 * cert.n + binom2(cert.t) - cert.p;
    const bool b_link = cert.size_b >= cert.q && cert.size_b >= cert.final_bound;
    cert.flags.final_chain = c_fits_h && q_link && b_link;

    return cert;
}

}  // namespace sumset
