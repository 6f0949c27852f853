#include "sumset/linalg.hpp"

#include <utility>

namespace sumset {

RatVec RatVec::unit(int i, int n) {
    RatVec e = zero(n);
    e[i - 1] = Rat(1);
    return e;
}

RatVec RatVec::operator+(const RatVec& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector addition of unequal dimensions");
    RatVec r = *this;
    for (int i = 0; i < dim(); ++i) r[i] += o[i];
    return r;
}

RatVec RatVec::operator-(const RatVec& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector subtraction of unequal dimensions");
    RatVec r = *this;
    for (int i = 0; i < dim(); ++i) r[i] -= o[i];
    return r;
}

std::string RatVec::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ", ";
        s += c[static_cast<size_t>(i)].str();
    }
    return s + ")";
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatVec apply_map(const RatMatrix& m, const RatVec& v) {
    if (m.dim() != v.dim()) throw DimensionMismatch("matrix-vector dimensions disagree");
    RatVec out = RatVec::zero(m.dim());
    for (int r = 0; r < m.dim(); ++r) {
        Rat acc;
        for (int c = 0; c < m.dim(); ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

void swap_rows(RatMatrix& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.dim(); ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

}  // namespace

RatMatrix basis_inverse(const std::vector<RatVec>& basis) {
    const int n = static_cast<int>(basis.size());
    if (n == 0) throw InvalidParams("empty basis");
    for (const auto& s : basis) {
        if (s.dim() != n) throw DimensionMismatch("basis vector dimension differs from count");
    }

    // Gauss-Jordan on [P | I] where column i of P is s_i.
    RatMatrix p(n);
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) p.at(row, col) = basis[static_cast<size_t>(col)][row];
    RatMatrix inv = RatMatrix::identity(n);

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (p.at(row, col).sign() != 0) { pivot = row; break; }
        }
        if (pivot < 0) throw SingularBasis("basis vectors are linearly dependent");
        swap_rows(p, col, pivot);
        swap_rows(inv, col, pivot);

        const Rat lead = p.at(col, col);
        for (int c = 0; c < n; ++c) {
            p.at(col, c) = p.at(col, c) / lead;
            inv.at(col, c) = inv.at(col, c) / lead;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || p.at(row, col).sign() == 0) continue;
            const Rat f = p.at(row, col);
            for (int c = 0; c < n; ++c) {
                p.at(row, c) -= f * p.at(col, c);
                inv.at(row, c) -= f * inv.at(col, c);
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (apply_map(inv, basis[static_cast<size_t>(i)]) != RatVec::unit(i + 1, n))
            throw AssertionFailed("basis inverse failed re-multiplication check");
    }
    return inv;
}

Color::Color(RatVec canonical_rep) : rep_(std::move(canonical_rep)) {
    for (int i = 0; i < rep_.dim(); ++i) {
        const Rat& q = rep_[i];
        if (q.sign() < 0 || q >= Rat(2))
            throw InvalidParams("color coordinate outside [0,2): " + q.str());
    }
}

Color reduce_mod2(const RatVec& v) {
    RatVec r = v;
    for (int i = 0; i < r.dim(); ++i) r[i] = r[i].mod2();
    return Color(std::move(r));
}

Color color_sub(const Color& a, const Color& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("color subtraction of unequal dimensions");
    return reduce_mod2(a.rep() - b.rep());
}

}  // namespace sumset
