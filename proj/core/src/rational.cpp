#include "weylgp/rational.hpp"

namespace weylgp {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational content(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Rational& c : coeffs) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    Rational result(num_gcd, den_lcm);
    result.canonicalize();
    return result;
}

}  // namespace weylgp
