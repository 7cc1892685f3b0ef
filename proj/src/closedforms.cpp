#include "fibdet/closedforms.hpp"

namespace fibdet {

namespace {

long choose2(long m) { return m * (m - 1) / 2; }
long choose3(long m) { return m * (m - 1) * (m - 2) / 6; }

Integer binomial_row_product(long r) {
    Integer prod(1);
    for (long i = 0; i <= r; ++i)
        prod *= binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i));
    return prod;
}

std::string u_name(long index, long exponent) {
    return "U[" + std::to_string(index) + "]^" + std::to_string(exponent);
}

Rational finish(ClosedFormResult& out) {
    Rational v(sign_pow(out.sign_exponent));
    for (const Factor& f : out.factors) v *= f.value;
    return v;
}

void require_nonneg_r(long r, const char* who) {
    if (r < 0) throw std::invalid_argument(std::string(who) + ": r must be nonnegative");
}

void require_fundamental_for(const HoradamSequence& u, const RecurrenceParams& params,
                             const char* who) {
    if (!is_fundamental(u.params()) || u.params().c1 != params.c1 || u.params().c2 != params.c2)
        throw std::invalid_argument(std::string(who) +
                                    ": u must be the fundamental sequence for (c1, c2)");
}

}  // namespace

ClosedFormResult power_det_fib_traced(long r, long n) {
    return power_det_fib_general_traced(r, 0, 1, n);
}

Rational power_det_fib(long r, long n) { return power_det_fib_traced(r, n).value; }

ClosedFormResult power_det_fib_general_traced(long r, long s, long k, long n) {
    require_nonneg_r(r, "power_det_fib_general");
    HoradamSequence fib(fibonacci_params());
    ClosedFormResult out;
    out.sign_exponent = (s + k * n + 1) * choose2(r + 1);
    Rational fib_prod(1);
    for (long m = 1; m <= r; ++m) fib_prod *= pow_exact(fib.term(m * k), r + 1 - m);
    out.factors.push_back({"fib_product^2", fib_prod * fib_prod});
    out.factors.push_back({"binomial_product", Rational(binomial_row_product(r))});
    out.value = finish(out);
    return out;
}

Rational power_det_fib_general(long r, long s, long k, long n) {
    return power_det_fib_general_traced(r, s, k, n).value;
}

ClosedFormResult power_det_traced(const PowerMatrixSpec& spec, HoradamSequence& u) {
    require_nonneg_r(spec.r, "power_det");
    require_fundamental_for(u, spec.params, "power_det");
    const long r = spec.r;
    const long shift = spec.s + spec.k * spec.n;
    ClosedFormResult out;
    out.sign_exponent = (shift + 1) * choose2(r + 1);
    out.factors.push_back(
        {"c2_power", pow_exact(spec.params.c2, shift * choose2(r + 1) + 2 * spec.k * choose3(r + 1))});
    out.factors.push_back({"delta_power", pow_exact(delta(spec.params), choose2(r + 1))});
    out.factors.push_back({"binomial_product", Rational(binomial_row_product(r))});
    for (long i = 0; i < r; ++i)  // the i = r factor is U^0 = 1
        out.factors.push_back(
            {u_name((i + 1) * spec.k, 2 * (r - i)), pow_exact(u.term((i + 1) * spec.k), 2 * (r - i))});
    out.value = finish(out);
    return out;
}

ClosedFormResult power_det_traced(const PowerMatrixSpec& spec) {
    HoradamSequence u(fundamental_params(spec.params.c1, spec.params.c2));
    return power_det_traced(spec, u);
}

Rational power_det(const PowerMatrixSpec& spec, HoradamSequence& u) {
    return power_det_traced(spec, u).value;
}

Rational power_det(const PowerMatrixSpec& spec) { return power_det_traced(spec).value; }

ClosedFormResult product_det_traced(const ProductMatrixSpec& spec, HoradamSequence& u) {
    require_nonneg_r(spec.r, "product_det");
    require_fundamental_for(u, spec.params, "product_det");
    const long r = spec.r;
    if (spec.d.size() != static_cast<std::size_t>(r) || spec.e.size() != static_cast<std::size_t>(r))
        throw std::invalid_argument("product_det: d and e must each have r entries");
    const long shift = spec.s + spec.k * spec.n;

    // sum over pairs i <= j of the d_j exponents: each d_j occurs j times
    long pair_d_sum = 0;
    for (long j = 1; j <= r; ++j) pair_d_sum += j * spec.d[static_cast<std::size_t>(j - 1)];

    const long c2_exp = shift * choose2(r + 1) + spec.k * choose3(r + 1) + spec.k * pair_d_sum;
    ClosedFormResult out;
    out.sign_exponent = choose2(r + 1) + c2_exp;  // (-delta)^... and every (-c2)^...
    out.factors.push_back({"c2_power", pow_exact(spec.params.c2, c2_exp)});
    out.factors.push_back({"delta_power", pow_exact(delta(spec.params), choose2(r + 1))});
    for (long l = 1; l <= r; ++l)
        out.factors.push_back({u_name(spec.k * l, r + 1 - l), pow_exact(u.term(spec.k * l), r + 1 - l)});
    for (long j = 1; j <= r; ++j)
        for (long i = 1; i <= j; ++i) {
            const long idx = spec.k * (spec.e[static_cast<std::size_t>(i - 1)] -
                                       spec.d[static_cast<std::size_t>(j - 1)]);
            out.factors.push_back({u_name(idx, 1), u.term(idx)});
        }
    out.value = finish(out);
    return out;
}

ClosedFormResult product_det_traced(const ProductMatrixSpec& spec) {
    HoradamSequence u(fundamental_params(spec.params.c1, spec.params.c2));
    return product_det_traced(spec, u);
}

Rational product_det(const ProductMatrixSpec& spec, HoradamSequence& u) {
    return product_det_traced(spec, u).value;
}

Rational product_det(const ProductMatrixSpec& spec) { return product_det_traced(spec).value; }

ClosedFormResult basic_power_det_traced(long r, long s, long k) {
    require_nonneg_r(r, "basic_power_det");
    HoradamSequence fib(fibonacci_params());
    ClosedFormResult out;
    out.sign_exponent = (s + 1) * choose2(r + 1) + k * choose3(r + 1);
    out.factors.push_back({"F[" + std::to_string(k) + "]^" + std::to_string(choose2(r + 1)),
                           pow_exact(fib.term(k), choose2(r + 1))});
    for (long l = 1; l <= r; ++l)
        out.factors.push_back({"F[" + std::to_string(k * l) + "]^" + std::to_string(r + 1 - l),
                               pow_exact(fib.term(k * l), r + 1 - l)});
    out.value = finish(out);
    return out;
}

Rational basic_power_det(long r, long s, long k) { return basic_power_det_traced(r, s, k).value; }

ClosedFormResult stepped_product_det_traced(const RecurrenceParams& params, long r, long s,
                                            long k, long n, long p) {
    require_nonneg_r(r, "stepped_product_det");
    HoradamSequence u(fundamental_params(params.c1, params.c2));
    const long shift = s + k * n;
    const long c2_exp = shift * choose2(r + 1) + 2 * k * choose3(r + 1);
    ClosedFormResult out;
    out.sign_exponent = c2_exp;  // delta enters unnegated here
    out.factors.push_back({"c2_power", pow_exact(params.c2, c2_exp)});
    out.factors.push_back({"delta_power", pow_exact(delta(params), choose2(r + 1))});
    for (long l = 1; l <= r; ++l)
        out.factors.push_back({u_name(l * k, r + 1 - l), pow_exact(u.term(l * k), r + 1 - l)});
    for (long l = 0; l < r; ++l)
        out.factors.push_back({u_name(k * (p + l), r - l), pow_exact(u.term(k * (p + l)), r - l)});
    out.value = finish(out);
    return out;
}

Rational stepped_product_det(const RecurrenceParams& params, long r, long s, long k, long n,
                             long p) {
    return stepped_product_det_traced(params, r, s, k, n, p).value;
}

ProductMatrixSpec basic_power_spec(long r, long s, long k) {
    require_nonneg_r(r, "basic_power_spec");
    return ProductMatrixSpec{fibonacci_params(), r, s, k, 0,
                             std::vector<long>(static_cast<std::size_t>(r), 0),
                             std::vector<long>(static_cast<std::size_t>(r), 1)};
}

ProductMatrixSpec stepped_product_spec(const RecurrenceParams& params, long r, long s, long k,
                                       long n, long p) {
    require_nonneg_r(r, "stepped_product_spec");
    std::vector<long> d, e;
    for (long j = 1; j <= r; ++j) {
        d.push_back(p - 1 + j);
        e.push_back(j - 1);
    }
    return ProductMatrixSpec{params, r, s, k, n, std::move(d), std::move(e)};
}

}  // namespace fibdet
