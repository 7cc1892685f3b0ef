#pragma once

#include <string>
#include <vector>

#include "fibdet/matrices.hpp"

namespace fibdet {

/// One named multiplicand of a closed-form value.
struct Factor {
    std::string name;
    Rational value;
};

/// Audit trail of a closed-form evaluation:
/// value = (-1)^sign_exponent * product of factor values.
struct ClosedFormResult {
    Rational value;
    long sign_exponent = 0;
    std::vector<Factor> factors;
};

/// det of the Fibonacci power matrix with unit step:
/// (-1)^{(n+1) C(r+1,2)} * (F_1^r F_2^{r-1} ... F_r)^2 * prod_i C(r,i).
ClosedFormResult power_det_fib_traced(long r, long n);
Rational power_det_fib(long r, long n);

/// Same with offset s and step k:
/// (-1)^{(s+kn+1) C(r+1,2)} * (F_k^r F_{2k}^{r-1} ... F_{rk})^2 * prod_i C(r,i).
ClosedFormResult power_det_fib_general_traced(long r, long s, long k, long n);
Rational power_det_fib_general(long r, long s, long k, long n);

/// det of the power matrix for arbitrary recurrence parameters:
/// (-1)^{(s+kn+1) C(r+1,2)} * c2^{(s+kn) C(r+1,2) + 2k C(r+1,3)}
///   * delta^{C(r+1,2)} * prod_{i=0..r} C(r,i) U_{(i+1)k}^{2(r-i)}.
ClosedFormResult power_det_traced(const PowerMatrixSpec& spec, HoradamSequence& u);
ClosedFormResult power_det_traced(const PowerMatrixSpec& spec);
Rational power_det(const PowerMatrixSpec& spec, HoradamSequence& u);
Rational power_det(const PowerMatrixSpec& spec);

/// det of the product matrix:
/// (-delta)^{C(r+1,2)} * (-c2)^{(s+kn) C(r+1,2) + k C(r+1,3)}
///   * prod_{l=1..r} U_{kl}^{r+1-l}
///   * prod_{1<=i<=j<=r} (-c2)^{k d_j} U_{k(e_i - d_j)}.
ClosedFormResult product_det_traced(const ProductMatrixSpec& spec, HoradamSequence& u);
ClosedFormResult product_det_traced(const ProductMatrixSpec& spec);
Rational product_det(const ProductMatrixSpec& spec, HoradamSequence& u);
Rational product_det(const ProductMatrixSpec& spec);

/// Basic power determinant over Fibonacci numbers (rows interpolate between
/// F_{s+ik}^r and F_{s+(i+1)k}^r):
/// (-1)^{(s+1) C(r+1,2) + k C(r+1,3)} * F_k^{C(r+1,2)} * prod_{l=1..r} F_{kl}^{r+1-l}.
ClosedFormResult basic_power_det_traced(long r, long s, long k);
Rational basic_power_det(long r, long s, long k);

/// Product determinant with the stepped patterns d_j = p-1+j, e_j = j-1:
/// delta^{C(r+1,2)} * (-c2)^{(s+kn) C(r+1,2) + 2k C(r+1,3)}
///   * prod_{l=1..r} U_{lk}^{r+1-l} * prod_{l=0..r-1} U_{k(p+l)}^{r-l}.
ClosedFormResult stepped_product_det_traced(const RecurrenceParams& params, long r, long s,
                                            long k, long n, long p);
Rational stepped_product_det(const RecurrenceParams& params, long r, long s, long k, long n,
                             long p);

/// The d/e patterns that reduce the product matrix to the basic power
/// determinant (d all 0, e all 1, n = 0) and to the stepped variant.
ProductMatrixSpec basic_power_spec(long r, long s, long k);
ProductMatrixSpec stepped_product_spec(const RecurrenceParams& params, long r, long s, long k,
                                       long n, long p);

}  // namespace fibdet
