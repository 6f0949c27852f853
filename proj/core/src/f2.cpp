#include "sumset/f2.hpp"

#include <algorithm>

namespace sumset {

std::string F2Vec::str() const {
    std::string s(static_cast<size_t>(width_), '0');
    for (int i = 1; i <= width_; ++i)
        if (bit(i)) s[static_cast<size_t>(i - 1)] = '1';
    return s;
}

F2Vec F2Vec::parse(const std::string& s) {
    if (s.size() > 64) throw BadInput("bit string longer than 64");
    std::uint64_t bits = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '1') bits |= std::uint64_t{1} << k;
        else if (s[k] != '0') throw BadInput("bit string may contain only '0' and '1'");
    }
    return {static_cast<int>(s.size()), bits};
}

std::vector<F2Vec> d_n(int n) {
    std::vector<F2Vec> d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.push_back(F2Vec::unit(i, n) ^ F2Vec::unit(j, n));
    return d;
}

namespace {

int lowest_set(std::uint64_t bits) { return std::countr_zero(bits) + 1; }

}  // namespace

F2Span f2_span(const std::vector<F2Vec>& vectors) {
    F2Span span;
    for (F2Vec v : vectors) {
        for (size_t r = 0; r < span.rows.size(); ++r)
            if (v.bit(span.pivots[r])) v = v ^ span.rows[r];
        if (v.is_zero()) continue;
        const int pivot = lowest_set(v.bits());
        // Clear the new pivot from existing rows, keep rows sorted by pivot.
        for (auto& row : span.rows)
            if (row.bit(pivot)) row = row ^ v;
        const auto pos = std::lower_bound(span.pivots.begin(), span.pivots.end(), pivot);
        const auto idx = static_cast<size_t>(pos - span.pivots.begin());
        span.pivots.insert(pos, pivot);
        span.rows.insert(span.rows.begin() + static_cast<long>(idx), v);
    }
    return span;
}

F2Vec QuotientMap::operator()(const F2Vec& v) const {
    F2Vec r = v;
    for (size_t k = 0; k < span.rows.size(); ++k)
        if (r.bit(span.pivots[k])) r = r ^ span.rows[k];
    std::uint64_t out = 0;
    for (size_t k = 0; k < indices.size(); ++k)
        if (r.bit(indices[k])) out |= std::uint64_t{1} << k;
    return {static_cast<int>(indices.size()), out};
}

QuotientMap quotient_data(const F2Span& w, int n) {
    QuotientMap q;
    q.span = w;
    q.n = n;
    size_t k = 0;
    for (int i = 1; i <= n; ++i) {
        if (k < w.pivots.size() && w.pivots[k] == i) { ++k; continue; }
        q.indices.push_back(i);
    }
    return q;
}

}  // namespace sumset
