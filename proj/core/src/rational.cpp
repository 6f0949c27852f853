#include "sumset/rational.hpp"

namespace sumset {

Rat Rat::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(s, 10));
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw BadInput("rational '" + s + "' has zero denominator");
        return {num, den};
    } catch (const std::invalid_argument&) {
        throw BadInput("malformed rational '" + s + "'");
    }
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

Rat Rat::mod2() const {
    // floor(this/2) = fdiv(p, 2q), exact.
    mpz_class twice_den = den() * 2;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), num().get_mpz_t(), twice_den.get_mpz_t());
    return *this - Rat(mpz_class(k * 2));
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace sumset
