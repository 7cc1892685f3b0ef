#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibdet/closedforms.hpp"
#include "fibdet/harness.hpp"
#include "oracle_utils.hpp"

using namespace fibdet;

namespace {
const RecurrenceParams kFib = fibonacci_params();
const RecurrenceParams kLucas(2, 1, 1, 1);

Rational trace_product(const ClosedFormResult& res) {
    Rational v(sign_pow(res.sign_exponent));
    for (const Factor& f : res.factors) v *= f.value;
    return v;
}
}  // namespace

TEST_CASE("fibonacci power determinant, unit step") {
    for (long n = -3; n <= 3; ++n) {
        CHECK(power_det_fib(2, n) == Rational(2) * sign_pow(n + 1));
        CHECK(power_det_fib(0, n) == 1);
        CHECK(power_det_fib(4, n) == 13824);
    }
    // brute check of the 5x5 instance
    CHECK(det_bareiss(build_power_matrix({kFib, 4, 0, 1, 0})) == 13824);
}

TEST_CASE("fibonacci power determinant, general offset and step") {
    for (long n = -2; n <= 2; ++n)
        CHECK(power_det_fib_general(2, 0, 1, n) == power_det_fib(2, n));

    CHECK(power_det_fib_general(2, 1, 2, 0) == 18);
    CHECK(det_bareiss(build_power_matrix({kFib, 2, 1, 2, 0})) == 18);

    CHECK(power_det_fib_general(3, 2, 0, 1) == 0);
    CHECK(power_det_fib_general(0, 2, 0, 1) == 1);
}

TEST_CASE("power determinant for general parameters: frozen instances") {
    // Cassini: F_n F_{n+2} - F_{n+1}^2 = (-1)^{n+1}
    HoradamSequence fib(kFib);
    for (long n = -4; n <= 4; ++n) {
        CHECK(power_det({kFib, 1, 0, 1, n}) == sign_pow(n + 1));
        CHECK(power_det({kFib, 1, 0, 1, n}) ==
              fib.term(n) * fib.term(n + 2) - fib.term(n + 1) * fib.term(n + 1));
    }

    CHECK(power_det({kLucas, 1, 0, 1, 0}) == 5);  // L_0 L_2 - L_1^2 = 6 - 1
    CHECK(power_det({kLucas, 2, 1, 1, 0}) == -250);
    CHECK(det_bareiss(build_power_matrix({kLucas, 2, 1, 1, 0})) == -250);
}

TEST_CASE("power determinant equals the fibonacci closed form") {
    for (long r = 0; r <= 4; ++r)
        for (long s = -2; s <= 2; ++s)
            for (long k = -2; k <= 2; ++k)
                for (long n = -2; n <= 2; ++n)
                    CHECK(power_det({kFib, r, s, k, n}) == power_det_fib_general(r, s, k, n));
}

TEST_CASE("power determinant matches elimination over a parameter grid") {
    for (long a0 = -1; a0 <= 1; ++a0)
        for (long a1 = -1; a1 <= 1; ++a1)
            for (long c1 = -1; c1 <= 1; ++c1)
                for (long c2 : {-2L, -1L, 1L, 2L}) {
                    const RecurrenceParams params(a0, a1, c1, c2);
                    HoradamSequence w(params);
                    HoradamSequence u(fundamental_params(c1, c2));
                    for (long r = 0; r <= 3; ++r)
                        for (long s : {-2L, 0L, 3L})
                            for (long k : {-2L, 0L, 1L, 3L})
                                for (long n : {-1L, 0L, 2L}) {
                                    const PowerMatrixSpec spec{params, r, s, k, n};
                                    CHECK(power_det(spec, u) ==
                                          det_bareiss(build_power_matrix(spec, w)));
                                }
                }
}

TEST_CASE("product determinant: frozen instances") {
    CHECK(product_det({kFib, 1, 0, 1, 0, {0}, {1}}) == -1);
    CHECK(det_bareiss(build_product_matrix({kFib, 1, 0, 1, 0, {0}, {1}})) == -1);

    CHECK(product_det({kLucas, 0, 2, -1, 3, {}, {}}) == 1);

    // identical step patterns repeat a column
    CHECK(product_det({kFib, 2, 1, 1, 0, {1, -2}, {1, -2}}) == 0);
    CHECK(det_bareiss(build_product_matrix({kFib, 2, 1, 1, 0, {1, -2}, {1, -2}})) == 0);

    CHECK(product_det({kLucas, 2, 0, 1, 1, {1, 0}, {2, -1}}) == -125);
    CHECK(det_bareiss(build_product_matrix({kLucas, 2, 0, 1, 1, {1, 0}, {2, -1}})) == -125);
}

TEST_CASE("product determinant matches elimination on sampled specs") {
    SplitMix64 rng(0xfeedULL);
    for (int rep = 0; rep < 400; ++rep) {
        const long a0 = rng.uniform(-2, 2), a1 = rng.uniform(-2, 2);
        const long c1 = rng.uniform(-2, 2);
        long c2 = 0;
        while (c2 == 0) c2 = rng.uniform(-2, 2);
        const long r = rng.uniform(0, 3);
        std::vector<long> d, e;
        for (long t = 0; t < r; ++t) {
            d.push_back(rng.uniform(-2, 3));
            e.push_back(rng.uniform(-2, 3));
        }
        const ProductMatrixSpec spec{RecurrenceParams(a0, a1, c1, c2), r,
                                     rng.uniform(-2, 3),  rng.uniform(-2, 3),
                                     rng.uniform(-2, 3),  d, e};
        CHECK(product_det(spec) == det_bareiss(build_product_matrix(spec)));
    }
}

TEST_CASE("basic power determinant") {
    HoradamSequence fib(kFib);
    for (long s = -3; s <= 3; ++s)
        for (long k = -3; k <= 3; ++k) {
            // r = 1 is the rearranged Catalan identity
            CHECK(basic_power_det(1, s, k) ==
                  fib.term(s) * fib.term(s + 2 * k) - fib.term(s + k) * fib.term(s + k));
            CHECK(basic_power_det(1, s, k) ==
                  Rational(sign_pow(s + 1)) * fib.term(k) * fib.term(k));
        }

    CHECK(basic_power_det(2, 0, 1) == 1);
    CHECK(det_bareiss(build_product_matrix(basic_power_spec(2, 0, 1))) == 1);
    CHECK(basic_power_det(2, 1, 2) == 3);
    CHECK(basic_power_det(3, 2, 0) == 0);

    // agreement with the general product determinant and with elimination
    for (long r = 0; r <= 3; ++r)
        for (long s = -2; s <= 3; ++s)
            for (long k = -2; k <= 3; ++k) {
                const ProductMatrixSpec spec = basic_power_spec(r, s, k);
                const Rational closed = basic_power_det(r, s, k);
                CHECK(closed == product_det(spec));
                CHECK(closed == det_bareiss(build_product_matrix(spec)));
            }
}

TEST_CASE("stepped product determinant") {
    CHECK(stepped_product_det(kFib, 1, 0, 1, 0, 2) == 1);
    CHECK(stepped_product_det(kFib, 3, 1, 2, -1, 0) == 0);
    CHECK(stepped_product_det(RecurrenceParams(3, -2, 1, 4), 0, 1, 2, 3, 1) == 1);

    for (const RecurrenceParams& params :
         {kFib, kLucas, RecurrenceParams(1, 1, 1, 2), RecurrenceParams(-1, 2, -2, 1)})
        for (long r = 0; r <= 3; ++r)
            for (long s : {-2L, 0L, 3L})
                for (long k : {-1L, 1L, 2L})
                    for (long n : {0L, 1L})
                        for (long p = -2; p <= 3; ++p) {
                            const ProductMatrixSpec spec =
                                stepped_product_spec(params, r, s, k, n, p);
                            const Rational closed = stepped_product_det(params, r, s, k, n, p);
                            CHECK(closed == product_det(spec));
                            CHECK(closed == det_bareiss(build_product_matrix(spec)));
                        }
}

TEST_CASE("factor traces multiply out to the value") {
    const auto checks = {
        power_det_fib_traced(3, -2),
        power_det_fib_general_traced(3, 1, -2, 2),
        power_det_traced({kLucas, 2, 1, 1, 0}),
        product_det_traced({kLucas, 2, 0, 1, 1, {1, 0}, {2, -1}}),
        basic_power_det_traced(2, 1, 2),
        stepped_product_det_traced(RecurrenceParams(1, 1, 1, 2), 2, 1, -1, 0, 2),
    };
    for (const ClosedFormResult& res : checks) {
        CHECK(res.value == trace_product(res));
        CHECK(!res.factors.empty());
    }

    // the trace separates the c2 power, the delta power, and each U factor
    const ClosedFormResult traced = power_det_traced({kLucas, 2, 1, 1, 0});
    CHECK(traced.sign_exponent == 6);
    REQUIRE(traced.factors.size() >= 3);
    CHECK(traced.factors[0].name == "c2_power");
    CHECK(traced.factors[1].name == "delta_power");
    CHECK(traced.factors[1].value == -125);
    CHECK(traced.factors[2].name == "binomial_product");
    CHECK(traced.factors[2].value == 2);
}

TEST_CASE("value depends on n only through the sign parity") {
    for (long r = 0; r <= 4; ++r)
        for (long s = -2; s <= 2; ++s)
            for (long k = -2; k <= 2; ++k)
                for (long n1 = -2; n1 <= 2; ++n1)
                    for (long n2 = n1; n2 <= 2; ++n2) {
                        const long e1 = (s + k * n1 + 1) * (r + 1) * r / 2;
                        const long e2 = (s + k * n2 + 1) * (r + 1) * r / 2;
                        if ((e1 - e2) % 2 == 0)
                            CHECK(power_det_fib_general(r, s, k, n1) ==
                                  power_det_fib_general(r, s, k, n2));
                    }
}

TEST_CASE("negative r is rejected") {
    CHECK_THROWS_AS(power_det_fib(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(basic_power_det(-2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(stepped_product_det(kFib, -1, 0, 1, 0, 1), std::invalid_argument);
}
