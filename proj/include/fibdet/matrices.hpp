#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fibdet/sequences.hpp"

namespace fibdet {

/// Dense square matrix of exact rationals, row-major.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("ExactMatrix: dimension must be positive");
    }

    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    /// Copy with row `row` and column `col` removed. Requires dim >= 2.
    ExactMatrix erased(std::size_t row, std::size_t col) const;

    /// Contiguous size x size block with top-left corner (row0, col0).
    ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t size) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

ExactMatrix transpose(const ExactMatrix& m);

/// Plain-text format: first line dim, then dim lines of dim rationals.
ExactMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ExactMatrix& m);

/// The (r+1)x(r+1) matrix with entry(i,j) = W_{s+k(n+i+j)}^r.
struct PowerMatrixSpec {
    RecurrenceParams params;
    long r;
    long s;
    long k;
    long n;
};

/// The (r+1)x(r+1) matrix with
/// entry(i,j) = prod_{l=j+1..r} W_{s+k(n+i+d_l)} * prod_{m=1..j} W_{s+k(n+i+e_m)},
/// where d and e hold d_1..d_r and e_1..e_r. Empty products are 1.
struct ProductMatrixSpec {
    RecurrenceParams params;
    long r;
    long s;
    long k;
    long n;
    std::vector<long> d;
    std::vector<long> e;
};

ExactMatrix build_power_matrix(const PowerMatrixSpec& spec);
ExactMatrix build_power_matrix(const PowerMatrixSpec& spec, HoradamSequence& w);
ExactMatrix build_product_matrix(const ProductMatrixSpec& spec);
ExactMatrix build_product_matrix(const ProductMatrixSpec& spec, HoradamSequence& w);

/// Laplace expansion; reference oracle for small matrices. Requires dim <= 6.
Rational det_cofactor(const ExactMatrix& m);

/// Fraction-free elimination. Rational matrices are row-scaled to integers
/// first and the scale divided back out; row swaps flip the sign; a fully
/// zero pivot column short-circuits to 0.
Rational det_bareiss(const ExactMatrix& m);

/// Condensation on the tableau of contiguous-minor determinants. A zero
/// interior minor makes the condensation step undefined; that cell is
/// recomputed with det_bareiss on the corresponding block and the
/// condensation continues, so the routine is total.
Rational det_dodgson(const ExactMatrix& m);

/// det(M) * det(interior) == det(NW) * det(SE) - det(NE) * det(SW), where the
/// interior strips the first and last row/column and the corner minors strip
/// one row and one column each. Requires dim >= 3. All determinants via
/// det_bareiss.
bool desnanot_jacobi_check(const ExactMatrix& m);

}  // namespace fibdet
