#pragma once

#include <set>
#include <vector>

#include "sumset/instance.hpp"

namespace sumset {

/// Bipartite multigraph on the distinct chosen a's (left) and b's (right).
/// One edge per pair (i, j). phi is a on the left and -b on the right, so
/// phi(left) - phi(right) = e_i + e_j along every edge.
struct RepGraph {
    struct Edge {
        int i = 0, j = 0;  // 1-based target pair, i <= j
        int left = 0, right = 0;  // vertex indices
    };

    int n = 0;
    std::vector<RatVec> left;   // A0, deduplicated, sorted
    std::vector<RatVec> right;  // B0, deduplicated, sorted
    std::vector<Edge> edges;    // lexicographic (i, j) order

    int p() const { return static_cast<int>(left.size()); }
    int q() const { return static_cast<int>(right.size()); }

    RatVec phi_left(int v) const { return left[static_cast<size_t>(v)]; }
    RatVec phi_right(int v) const {
        return RatVec::zero(n) - right[static_cast<size_t>(v)];
    }
};

/// The graph after the diagonal edges are contracted. Vertices are blocks of
/// the original vertex set; off-diagonal edges are re-attached to blocks.
struct ContractedGraph {
    struct Edge {
        int i = 0, j = 0;  // 1-based, i < j
        int from = 0, to = 0;  // block ids (left endpoint's block, right's)
    };

    int block_count = 0;
    std::vector<int> left_block;   // block id per left vertex
    std::vector<int> right_block;  // block id per right vertex
    std::vector<Edge> edges;
};

/// Block colors of the contracted graph. colors_x is the subset of colors on
/// blocks containing at least one left vertex.
struct Coloring {
    std::set<Color> colors_c;
    std::set<Color> colors_x;
    std::vector<Color> block_color;  // by block id
};

/// Builds the graph from a total representation. Every entry is re-checked
/// against a + b = e_i + e_j; throws InvalidRepresentation otherwise.
RepGraph build_graph(const Representation& rep);

/// True iff the subgraph on the diagonal edges e_11..e_nn is acyclic.
/// Multigraph-aware: two distinct diagonal edges between one vertex pair
/// form a cycle. False never happens for a graph built from a valid
/// representation; it signals corrupted data.
bool check_diagonal_forest(const RepGraph& g);

/// Contracts the diagonal edges (union-find) and re-attaches off-diagonal
/// edges between blocks. Requires check_diagonal_forest; throws
/// ForestViolation otherwise. The block count is checked against p + q - n.
ContractedGraph contract_diagonals(const RepGraph& g);

/// Assigns to every block the common color of its vertices, checking every
/// vertex of every block (throws ColorMismatch on disagreement, which valid
/// input cannot produce). Checks |colors_x| <= p.
Coloring color_components(const ContractedGraph& h, const RepGraph& g);

/// True iff every color of e_i + e_j with i < j lies in the difference set
/// colors_x - colors_c.
bool check_cover_in_colors(const std::set<Color>& colors_x, const std::set<Color>& colors_c,
                           int n);

}  // namespace sumset
