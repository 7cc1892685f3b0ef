#include "fibdet/identities.hpp"

namespace fibdet {

namespace {

void require_shared_coefficients(const RecurrenceParams& w, const RecurrenceParams& y) {
    if (w.c1 != y.c1 || w.c2 != y.c2)
        throw std::invalid_argument("catalan_general: sequences must share (c1, c2)");
}

}  // namespace

IdentityInstance catalan_general(HoradamSequence& w, HoradamSequence& y, HoradamSequence& u,
                                 long s, long i, long j) {
    require_shared_coefficients(w.params(), y.params());
    if (!is_fundamental(u.params()) || u.params().c1 != w.params().c1 ||
        u.params().c2 != w.params().c2)
        throw std::invalid_argument("catalan_general: u must be the shared fundamental sequence");
    Rational lhs = w.term(s + i) * y.term(s + j) - w.term(s) * y.term(s + i + j);
    Rational rhs = pow_exact(-w.params().c2, s) *
                   (w.params().a1 * y.term(j) - w.params().a0 * y.term(j + 1)) * u.term(i);
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

IdentityInstance catalan_general(const RecurrenceParams& w, const RecurrenceParams& y,
                                 long s, long i, long j) {
    require_shared_coefficients(w, y);
    HoradamSequence ws(w);
    HoradamSequence ys(y);
    HoradamSequence us(fundamental_params(w.c1, w.c2));
    return catalan_general(ws, ys, us, s, i, j);
}

IdentityInstance catalan_uu(const RecurrenceParams& params, long s, long i, long j) {
    HoradamSequence u(fundamental_params(params.c1, params.c2));
    Rational lhs = u.term(s + i) * u.term(s + j) - u.term(s) * u.term(s + i + j);
    Rational rhs = pow_exact(-params.c2, s) * u.term(i) * u.term(j);
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

IdentityInstance catalan_wu(const RecurrenceParams& params, long s, long i, long j) {
    HoradamSequence w(params);
    HoradamSequence u(fundamental_params(params.c1, params.c2));
    Rational lhs = u.term(s + i) * w.term(s + j) - u.term(s) * w.term(s + i + j);
    Rational rhs = pow_exact(-params.c2, s) * u.term(i) * w.term(j);
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

IdentityInstance catalan_ww(const RecurrenceParams& params, long s, long i, long j) {
    HoradamSequence w(params);
    HoradamSequence u(fundamental_params(params.c1, params.c2));
    Rational lhs = w.term(s + i) * w.term(s + j) - w.term(s) * w.term(s + i + j);
    Rational rhs = pow_exact(-params.c2, s) * delta(params) * u.term(i) * u.term(j);
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

DecompCoeffs decompose_coeffs(const RecurrenceParams& params, long k, long r, long t) {
    HoradamSequence w(params);
    Rational denom = w.term(-k * r);
    if (denom == 0)
        throw std::domain_error("decompose_coeffs: W_{-kr} = 0, decomposition basis is degenerate");
    HoradamSequence u(fundamental_params(params.c1, params.c2));
    Rational a_t = w.term(k * (t - r)) / denom;
    Rational b_t = -pow_exact(-params.c2, -k * r) * delta(params) * u.term(k * t) / denom;
    return {std::move(a_t), std::move(b_t)};
}

}  // namespace fibdet
