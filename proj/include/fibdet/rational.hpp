#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fibdet {

/// Exact arithmetic everywhere: integers and rationals are GMP-backed,
/// values are always canonical (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// base^e for any integer e. Negative exponents invert; 0^0 = 1.
inline Rational pow_exact(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("pow_exact: 0 raised to a negative exponent");
        return Rational(0);
    }
    const unsigned long mag = e < 0 ? 0UL - static_cast<unsigned long>(e)
                                    : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), mag);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), mag);
    if (e < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    return out;
}

/// (-1)^e by parity.
inline int sign_pow(long e) {
    return e % 2 == 0 ? 1 : -1;
}

/// num/den reduced to canonical form; den must be nonzero.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" (arbitrary precision). Throws on malformed input.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::domain_error("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

/// "n" when the denominator is 1, else "n/d".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace fibdet
