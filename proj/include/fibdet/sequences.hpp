#pragma once

#include <vector>

#include "fibdet/rational.hpp"

namespace fibdet {

/// Defining data of a second-order linear recurrence W:
/// W_0 = a0, W_1 = a1, W_n = c1*W_{n-1} + c2*W_{n-2}.
/// c2 must be nonzero so the recurrence extends to negative indices.
struct RecurrenceParams {
    Rational a0;
    Rational a1;
    Rational c1;
    Rational c2;

    RecurrenceParams(Rational a0_, Rational a1_, Rational c1_, Rational c2_)
        : a0(std::move(a0_)), a1(std::move(a1_)), c1(std::move(c1_)), c2(std::move(c2_)) {
        if (c2 == 0) throw std::domain_error("RecurrenceParams: c2 must be nonzero");
    }

    bool operator==(const RecurrenceParams&) const = default;
};

inline RecurrenceParams fibonacci_params() {
    return RecurrenceParams(0, 1, 1, 1);
}

/// The fundamental sequence U for given coefficients: U_0 = 0, U_1 = 1.
inline RecurrenceParams fundamental_params(Rational c1, Rational c2) {
    return RecurrenceParams(0, 1, std::move(c1), std::move(c2));
}

inline bool is_fundamental(const RecurrenceParams& p) {
    return p.a0 == 0 && p.a1 == 1;
}

/// The invariant a1^2 - c1*a0*a1 - c2*a0^2, i.e. det [[W1, W2], [W0, W1]].
Rational delta(const RecurrenceParams& params);

/// Lazily evaluated sequence W_n for any signed index. Terms are memoized in
/// both directions from the seed pair (W_0, W_1); a cached value is never
/// recomputed. Negative-index terms come from the inverted recurrence
/// W_{n-2} = (W_n - c1*W_{n-1}) / c2 and may be non-integral when |c2| != 1.
///
/// Not thread-safe; copies are cheap and independent, so parallel callers
/// should clone per worker.
class HoradamSequence {
public:
    explicit HoradamSequence(RecurrenceParams params);

    const RecurrenceParams& params() const { return params_; }

    Rational term(long n);

    /// [W_lo, ..., W_hi]; requires lo <= hi.
    std::vector<Rational> terms_range(long lo, long hi);

private:
    RecurrenceParams params_;
    std::vector<Rational> forward_;   // forward_[n] = W_n
    std::vector<Rational> backward_;  // backward_[m] = W_{-(m+1)}
};

/// True iff W_{-n} = (-1)^{n+1} * c2^{-n} * W_n, the reflection law of the
/// fundamental sequence. Requires fundamental params and n >= 1.
bool reflect_check(HoradamSequence& seq, long n);

}  // namespace fibdet
