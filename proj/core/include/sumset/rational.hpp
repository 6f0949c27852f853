#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "sumset/errors.hpp"

namespace sumset {

/// Exact rational scalar. Always stored reduced with a positive denominator,
/// so equality and ordering are structural. Backed by GMP, hence immune to
/// coefficient blow-up during elimination.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor) integers embed naturally
    Rat(long n, long d) : Rat(mpz_class(n), mpz_class(d)) {}
    explicit Rat(mpz_class n) : v_(std::move(n)) {}

    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw InvalidParams("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Parses "p", "p/q" or "-p/q" in base 10.
    static Rat parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }

    Rat operator/(const Rat& o) const {
        if (o.v_ == 0) throw InvalidParams("rational division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }

    std::strong_ordering operator<=>(const Rat& o) const {
        const int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// floor(p/q) as an integer.
    mpz_class floor() const;

    /// Canonical representative in [0, 2): this - 2*floor(this/2).
    Rat mod2() const;

    /// Fractional part in [0, 1): this - floor(this).
    Rat frac() const;

    /// "p" when integral, else "p/q".
    std::string str() const;

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

}  // namespace sumset
