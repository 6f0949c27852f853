#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sumset/errors.hpp"

namespace sumset {

/// Element of F_2^n, n <= 64. Coordinate i (1-based) sits at bit i-1.
/// Over exponent 2, subtraction equals addition equals XOR. Width 0 is the
/// trivial group (quotients by the full space land there).
class F2Vec {
public:
    F2Vec() = default;

    F2Vec(int width, std::uint64_t bits) : width_(width), bits_(bits) {
        if (width < 0 || width > 64) throw InvalidParams("F2Vec width must be in [0, 64]");
        if (width < 64 && (bits >> width) != 0)
            throw InvalidParams("F2Vec bits exceed the stated width");
    }

    static F2Vec zero(int n) { return {n, 0}; }
    static F2Vec unit(int i, int n) { return {n, std::uint64_t{1} << (i - 1)}; }

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }
    bool bit(int i) const { return (bits_ >> (i - 1)) & 1; }
    int popcount() const { return std::popcount(bits_); }
    bool is_zero() const { return bits_ == 0; }

    F2Vec operator^(const F2Vec& o) const {
        if (width_ != o.width_) throw DimensionMismatch("xor of F2Vec of unequal widths");
        return {width_, bits_ ^ o.bits_};
    }

    bool operator==(const F2Vec&) const = default;
    auto operator<=>(const F2Vec&) const = default;

    /// Bit string with coordinate 1 leftmost, e.g. "0110".
    std::string str() const;
    static F2Vec parse(const std::string& s);

private:
    int width_ = 0;
    std::uint64_t bits_ = 0;
};

/// D_n = {e_i + e_j : 1 <= i < j <= n}, in lexicographic (i, j) order.
std::vector<F2Vec> d_n(int n);

/// Row-reduced span over F_2. Rows are in reduced echelon form with pivots
/// on ascending coordinates; dim == rows.size().
struct F2Span {
    std::vector<F2Vec> rows;
    std::vector<int> pivots;  // 1-based pivot coordinates, ascending
    int dim() const { return static_cast<int>(rows.size()); }
};

F2Span f2_span(const std::vector<F2Vec>& vectors);

/// The quotient map F_2^n -> F_2^n / W in coordinates: reduce by the
/// echelon basis of W, then read off the non-pivot coordinates. Sends every
/// element of W to zero and the selected standard basis vectors e_{i_1} <
/// ... < e_{i_s} to the standard basis of F_2^s.
struct QuotientMap {
    F2Span span;
    std::vector<int> indices;  // 1-based free coordinates, ascending; size s
    int n = 0;

    int s() const { return static_cast<int>(indices.size()); }
    F2Vec operator()(const F2Vec& v) const;
};

QuotientMap quotient_data(const F2Span& w, int n);

}  // namespace sumset
