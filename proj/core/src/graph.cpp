#include "sumset/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace sumset {

namespace {

// Union-find with path compression.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    // False when already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace

RepGraph build_graph(const Representation& rep) {
    const int n = rep.n;
    const size_t expected = static_cast<size_t>(n) * (n + 1) / 2;
    if (n < 1 || rep.entries.size() != expected)
        throw InvalidRepresentation("representation is not total");

    std::set<RatVec> lefts, rights;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const auto it = rep.entries.find({i, j});
            if (it == rep.entries.end())
                throw InvalidRepresentation("missing representation entry");
            const auto& [a, b] = it->second;
            if (a + b != RatVec::unit(i, n) + RatVec::unit(j, n))
                throw InvalidRepresentation("entry violates a + b = e_i + e_j at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            lefts.insert(a);
            rights.insert(b);
        }
    }

    RepGraph g;
    g.n = n;
    g.left.assign(lefts.begin(), lefts.end());
    g.right.assign(rights.begin(), rights.end());

    std::map<RatVec, int> left_index, right_index;
    for (int v = 0; v < g.p(); ++v) left_index[g.left[static_cast<size_t>(v)]] = v;
    for (int v = 0; v < g.q(); ++v) right_index[g.right[static_cast<size_t>(v)]] = v;

    for (const auto& [pair, ab] : rep.entries) {
        RepGraph::Edge e;
        e.i = pair.first;
        e.j = pair.second;
        e.left = left_index.at(ab.first);
        e.right = right_index.at(ab.second);
        g.edges.push_back(e);
    }
    return g;
}

bool check_diagonal_forest(const RepGraph& g) {
    // Left vertices are 0..p-1, right vertices p..p+q-1.
    DisjointSets ds(g.p() + g.q());
    for (const auto& e : g.edges) {
        if (e.i != e.j) continue;
        if (!ds.unite(e.left, g.p() + e.right)) return false;
    }
    return true;
}

ContractedGraph contract_diagonals(const RepGraph& g) {
    if (!check_diagonal_forest(g))
        throw ForestViolation("diagonal edges contain a cycle");

    const int total = g.p() + g.q();
    DisjointSets ds(total);
    for (const auto& e : g.edges) {
        if (e.i == e.j) ds.unite(e.left, g.p() + e.right);
    }

    // Number blocks by first occurrence of their root.
    std::vector<int> block_of_root(static_cast<size_t>(total), -1);
    ContractedGraph h;
    auto block_of = [&](int vertex) {
        const int root = ds.find(vertex);
        if (block_of_root[static_cast<size_t>(root)] < 0)
            block_of_root[static_cast<size_t>(root)] = h.block_count++;
        return block_of_root[static_cast<size_t>(root)];
    };
    for (int v = 0; v < g.p(); ++v) h.left_block.push_back(block_of(v));
    for (int v = 0; v < g.q(); ++v) h.right_block.push_back(block_of(g.p() + v));

    // The n diagonal edges form a forest, so the count is forced.
    if (h.block_count != g.p() + g.q() - g.n)
        throw AssertionFailed("contracted vertex count differs from p + q - n");

    for (const auto& e : g.edges) {
        if (e.i == e.j) continue;
        ContractedGraph::Edge he;
        he.i = e.i;
        he.j = e.j;
        he.from = h.left_block[static_cast<size_t>(e.left)];
        he.to = h.right_block[static_cast<size_t>(e.right)];
        h.edges.push_back(he);
    }
    return h;
}

Coloring color_components(const ContractedGraph& h, const RepGraph& g) {
    // Color every vertex; well-definedness is checked exhaustively, not sampled.
    std::map<int, Color> by_block;
    for (int v = 0; v < g.p(); ++v) {
        const int blk = h.left_block[static_cast<size_t>(v)];
        const Color c = reduce_mod2(g.phi_left(v));
        auto [it, fresh] = by_block.emplace(blk, c);
        if (!fresh && it->second != c)
            throw ColorMismatch("left vertex disagrees with its block color");
    }
    for (int v = 0; v < g.q(); ++v) {
        const int blk = h.right_block[static_cast<size_t>(v)];
        const Color c = reduce_mod2(g.phi_right(v));
        auto [it, fresh] = by_block.emplace(blk, c);
        if (!fresh && it->second != c)
            throw ColorMismatch("right vertex disagrees with its block color");
    }

    Coloring out;
    for (int blk = 0; blk < h.block_count; ++blk) out.block_color.push_back(by_block.at(blk));
    for (const auto& c : out.block_color) out.colors_c.insert(c);
    for (int v = 0; v < g.p(); ++v)
        out.colors_x.insert(out.block_color[static_cast<size_t>(h.left_block[static_cast<size_t>(v)])]);

    if (static_cast<int>(out.colors_x.size()) > g.p())
        throw AssertionFailed("|X| exceeds p");
    return out;
}

bool check_cover_in_colors(const std::set<Color>& colors_x, const std::set<Color>& colors_c,
                           int n) {
    std::set<Color> differences;
    for (const auto& x : colors_x)
        for (const auto& c : colors_c) differences.insert(color_sub(x, c));

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Color target = reduce_mod2(RatVec::unit(i, n) + RatVec::unit(j, n));
            if (!differences.count(target)) return false;
        }
    }
    return true;
}

}  // namespace sumset
