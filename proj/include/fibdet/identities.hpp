#pragma once

#include "fibdet/sequences.hpp"

namespace fibdet {

/// Both sides of one identity evaluation. holds <=> lhs == rhs exactly.
struct IdentityInstance {
    Rational lhs;
    Rational rhs;
    bool holds;
};

/// W_{s+i}*Y_{s+j} - W_s*Y_{s+i+j}  vs  (-c2)^s * (W_1*Y_j - W_0*Y_{j+1}) * U_i,
/// where U is the fundamental sequence for the shared coefficients.
/// W and Y must share (c1, c2); s, i, j are arbitrary integers.
IdentityInstance catalan_general(const RecurrenceParams& w, const RecurrenceParams& y,
                                 long s, long i, long j);

/// Hot-path overload: reuses caller-owned memoized sequences. u must be the
/// fundamental sequence for the coefficients shared by w and y.
IdentityInstance catalan_general(HoradamSequence& w, HoradamSequence& y, HoradamSequence& u,
                                 long s, long i, long j);

/// U_{s+i}U_{s+j} - U_s U_{s+i+j}  vs  (-c2)^s * U_i * U_j.
IdentityInstance catalan_uu(const RecurrenceParams& params, long s, long i, long j);

/// U_{s+i}W_{s+j} - U_s W_{s+i+j}  vs  (-c2)^s * U_i * W_j.
IdentityInstance catalan_wu(const RecurrenceParams& params, long s, long i, long j);

/// W_{s+i}W_{s+j} - W_s W_{s+i+j}  vs  (-c2)^s * delta * U_i * U_j.
IdentityInstance catalan_ww(const RecurrenceParams& params, long s, long i, long j);

/// Coefficients expressing W_{s+k(n+t)} = a_t * W_{s+kn} + b_t * U_{s+k(n+r)}
/// for all s, n.
struct DecompCoeffs {
    Rational a_t;
    Rational b_t;
};

/// a_t = W_{k(t-r)} / W_{-kr},  b_t = -(-c2)^{-kr} * delta * U_{kt} / W_{-kr}.
/// Throws std::domain_error when W_{-kr} = 0 (degenerate basis).
DecompCoeffs decompose_coeffs(const RecurrenceParams& params, long k, long r, long t);

}  // namespace fibdet
