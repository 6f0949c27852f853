#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sumset/rational.hpp"

namespace sumset {

/// Exact rational vector. Ordering is coordinate-lexicographic (first
/// differing coordinate decides), so sets of RatVec deduplicate exactly and
/// iterate in a canonical order.
struct RatVec {
    std::vector<Rat> c;

    RatVec() = default;
    explicit RatVec(std::vector<Rat> coords) : c(std::move(coords)) {}

    static RatVec zero(int n) { return RatVec(std::vector<Rat>(static_cast<size_t>(n))); }

    /// Standard basis vector e_i, 1-based.
    static RatVec unit(int i, int n);

    int dim() const { return static_cast<int>(c.size()); }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

    RatVec operator+(const RatVec& o) const;
    RatVec operator-(const RatVec& o) const;

    bool operator==(const RatVec&) const = default;
    auto operator<=>(const RatVec&) const = default;

    std::string str() const;
};

/// Square exact rational matrix, row-major.
class RatMatrix {
public:
    explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

    static RatMatrix identity(int n);

    int dim() const { return n_; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }

    bool operator==(const RatMatrix&) const = default;

private:
    int n_;
    std::vector<Rat> a_;
};

/// Exact matrix-vector product. Throws DimensionMismatch.
RatVec apply_map(const RatMatrix& m, const RatVec& v);

/// Inverse of the matrix whose columns are the given vectors, i.e. the unique
/// linear map sending s_i to e_i. Gauss-Jordan with exact rational pivots,
/// pivoting on the first nonzero entry. The result is re-multiplied against
/// every s_i before returning. Throws SingularBasis on dependent input.
RatMatrix basis_inverse(const std::vector<RatVec>& basis);

/// Element of R^n / 2Z^n, held as the canonical representative with every
/// coordinate in [0, 2). Equality of Colors is equality in the quotient.
class Color {
public:
    explicit Color(RatVec canonical_rep);

    const RatVec& rep() const { return rep_; }
    int dim() const { return rep_.dim(); }

    bool operator==(const Color&) const = default;
    auto operator<=>(const Color&) const = default;

    std::string str() const { return rep_.str(); }

private:
    RatVec rep_;
};

/// Quotient map R^n -> R^n / 2Z^n, coordinate-wise q - 2*floor(q/2).
Color reduce_mod2(const RatVec& v);

/// Canonical representative of a - b in the quotient.
Color color_sub(const Color& a, const Color& b);

}  // namespace sumset
