#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibdet/rational.hpp"

namespace fibdet {

/// Sparse multivariate polynomial with integer coefficients.
///
/// Variables are identified by name and kept sorted; terms are kept in
/// descending graded-lexicographic order with no zero coefficients, so equal
/// polynomials compare equal structurally. Operations on polynomials with
/// different variable sets align to the union first.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    struct Term {
        Exponents exps;
        Integer coeff;
        bool operator==(const Term&) const = default;
    };

    MultiPoly() = default;  // the zero polynomial

    static MultiPoly constant(Integer c);
    static MultiPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    long total_degree() const;  // -1 for the zero polynomial

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    /// p^e; e must be nonnegative. p^0 = 1.
    MultiPoly pow(long e) const;

    bool operator==(const MultiPoly& other) const;
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    /// Substitutes a value for every variable; all variables must be assigned.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    /// Deterministic rendering in the stored (graded-lex, leading first) order.
    std::string str() const;

private:
    MultiPoly aligned_to(const std::vector<std::string>& target) const;

    std::vector<std::string> vars_;  // sorted, unique
    std::vector<Term> terms_;        // descending graded-lex, nonzero coeffs
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_pow(const MultiPoly& p, long e);

/// Exact determinant in the polynomial ring; cofactor expansion with
/// column-subset memoization. Requires a square matrix of dim <= 5.
MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m);

/// Determinant side and factored side of each certified identity, both in
/// canonical expanded form.
struct IdentitySides {
    MultiPoly det;
    MultiPoly factored;
};

/// Certifies det((c_j*x_i + 1)^r) = prod_{i<j}(x_i-x_j) * prod_{i<j}(c_i-c_j)
/// * prod_i C(r,i) as an exact polynomial identity. Requires 0 <= r <= 4.
IdentitySides linear_power_det_sides(long r);
bool linear_power_det_check(long r);

/// Certifies det((A_j*X_i + B_j*Y_i)^r) = prod_{i<j}(X_i Y_j - X_j Y_i)
/// * prod_{i<j}(A_i B_j - A_j B_i) * prod_i C(r,i), covering the degenerate
/// B_j = 0 / Y_i = 0 cases by exact algebra. Requires 0 <= r <= 3.
IdentitySides bilinear_power_det_sides(long r);
bool bilinear_power_det_check(long r);

/// Certifies det(prod_{l>j}(X_i+D_l) * prod_{m<=j}(X_i+E_m))
/// = prod_{i<j}(X_j-X_i) * prod_{1<=i<=j<=r}(D_j-E_i). Requires 0 <= r <= 4.
IdentitySides shifted_factor_det_sides(long r);
bool shifted_factor_det_check(long r);

/// The bilinear form of the same identity, with entries
/// prod_{l>j}(Ad_l*X_i + Bd_l*Y_i) * prod_{m<=j}(Ae_m*X_i + Be_m*Y_i) and
/// right side prod_{i<j}(X_i Y_j - X_j Y_i) * prod_{i<=j}(Be_i Ad_j - Ae_i Bd_j).
/// Requires 0 <= r <= 3.
IdentitySides bilinear_shifted_factor_det_sides(long r);
bool bilinear_shifted_factor_det_check(long r);

}  // namespace fibdet
