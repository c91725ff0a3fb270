#include "polytrope/rational.hpp"

#include "polytrope/errors.hpp"

namespace polytrope {

Integer factorial(int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw DomainError("cannot parse rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace polytrope
