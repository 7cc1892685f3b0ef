#include "fibdet/sequences.hpp"

namespace fibdet {

Rational delta(const RecurrenceParams& p) {
    return p.a1 * p.a1 - p.c1 * p.a0 * p.a1 - p.c2 * p.a0 * p.a0;
}

HoradamSequence::HoradamSequence(RecurrenceParams params) : params_(std::move(params)) {
    forward_.reserve(16);
    forward_.push_back(params_.a0);
    forward_.push_back(params_.a1);
}

Rational HoradamSequence::term(long n) {
    if (n >= 0) {
        while (static_cast<long>(forward_.size()) <= n) {
            const std::size_t m = forward_.size();
            forward_.push_back(params_.c1 * forward_[m - 1] + params_.c2 * forward_[m - 2]);
        }
        return forward_[static_cast<std::size_t>(n)];
    }
    while (static_cast<long>(backward_.size()) < -n) {
        // next index to fill is -(m+1): W_{-(m+1)} = (W_{-(m-1)} - c1*W_{-m}) / c2
        const std::size_t m = backward_.size();
        const Rational& two_up = m >= 2 ? backward_[m - 2] : forward_[1 - m];
        const Rational& one_up = m >= 1 ? backward_[m - 1] : forward_[0];
        backward_.push_back((two_up - params_.c1 * one_up) / params_.c2);
    }
    return backward_[static_cast<std::size_t>(-n - 1)];
}

std::vector<Rational> HoradamSequence::terms_range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("terms_range: lo > hi");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) out.push_back(term(n));
    return out;
}

bool reflect_check(HoradamSequence& seq, long n) {
    if (!is_fundamental(seq.params()))
        throw std::invalid_argument("reflect_check: sequence must have initial values 0, 1");
    if (n < 1) throw std::invalid_argument("reflect_check: n must be positive");
    const Rational expected =
        Rational(sign_pow(n + 1)) * pow_exact(seq.params().c2, -n) * seq.term(n);
    return seq.term(-n) == expected;
}

}  // namespace fibdet
