#include "fibdet/matrices.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace fibdet {

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::erased(std::size_t row, std::size_t col) const {
    ExactMatrix out(dim_ - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i == row) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j == col) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

ExactMatrix ExactMatrix::block(std::size_t row0, std::size_t col0, std::size_t size) const {
    ExactMatrix out(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) out.at(i, j) = at(row0 + i, col0 + j);
    return out;
}

ExactMatrix transpose(const ExactMatrix& m) {
    ExactMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

ExactMatrix read_matrix(std::istream& in) {
    std::size_t dim = 0;
    if (!(in >> dim) || dim == 0)
        throw std::invalid_argument("read_matrix: expected positive dimension on first line");
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("read_matrix: not enough entries for dimension " +
                                            std::to_string(dim));
            m.at(i, j) = parse_rational(tok);
        }
    return m;
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
    out << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << to_string(m.at(i, j));
        }
        out << '\n';
    }
}

ExactMatrix build_power_matrix(const PowerMatrixSpec& spec, HoradamSequence& w) {
    if (spec.r < 0) throw std::invalid_argument("build_power_matrix: r must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(spec.r) + 1;
    // entry(i,j) depends on i+j only; evaluate each diagonal once
    std::vector<Rational> powers;
    powers.reserve(2 * dim - 1);
    for (long m = 0; m <= 2 * spec.r; ++m)
        powers.push_back(pow_exact(w.term(spec.s + spec.k * (spec.n + m)), spec.r));
    ExactMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = powers[i + j];
    return out;
}

ExactMatrix build_power_matrix(const PowerMatrixSpec& spec) {
    HoradamSequence w(spec.params);
    return build_power_matrix(spec, w);
}

ExactMatrix build_product_matrix(const ProductMatrixSpec& spec, HoradamSequence& w) {
    if (spec.r < 0) throw std::invalid_argument("build_product_matrix: r must be nonnegative");
    const std::size_t r = static_cast<std::size_t>(spec.r);
    if (spec.d.size() != r || spec.e.size() != r)
        throw std::invalid_argument("build_product_matrix: d and e must each have r entries");
    ExactMatrix out(r + 1);
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
            Rational prod(1);
            for (std::size_t l = j; l < r; ++l)  // d_{j+1}..d_r
                prod *= w.term(spec.s + spec.k * (spec.n + static_cast<long>(i) + spec.d[l]));
            for (std::size_t m = 0; m < j; ++m)  // e_1..e_j
                prod *= w.term(spec.s + spec.k * (spec.n + static_cast<long>(i) + spec.e[m]));
            out.at(i, j) = std::move(prod);
        }
    return out;
}

ExactMatrix build_product_matrix(const ProductMatrixSpec& spec) {
    HoradamSequence w(spec.params);
    return build_product_matrix(spec, w);
}

Rational det_cofactor(const ExactMatrix& m) {
    if (m.dim() > 6) throw std::invalid_argument("det_cofactor: dimension capped at 6");
    if (m.dim() == 1) return m.at(0, 0);
    Rational det(0);
    int sign = 1;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        if (m.at(0, j) != 0) det += Rational(sign) * m.at(0, j) * det_cofactor(m.erased(0, j));
        sign = -sign;
    }
    return det;
}

Rational det_bareiss(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    // Row-scale to an integer matrix; det(m) = det(scaled) / prod(row lcms).
    std::vector<Integer> a(n * n);
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Integer f;
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
            a[i * n + j] = m.at(i, j).get_num() * f;
        }
        scale *= l;
    }

    int sign = 1;
    Integer prev(1);
    Integer t1, t2;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[k * n + j], a[swap_row * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), a[i * n + j].get_mpz_t(), a[k * n + k].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a[i * n + k].get_mpz_t(), a[k * n + j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(a[i * n + j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    Integer det = a[n * n - 1];
    if (sign < 0) det = -det;
    return Rational(det) / Rational(scale);
}

Rational det_dodgson(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) return m.at(0, 0);

    // prev[i][j] = det of the (size-2)-block at (i,j), cur likewise for size-1.
    std::vector<Rational> prev((n + 1) * (n + 1), Rational(1));
    std::vector<Rational> cur(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = m.at(i, j);

    for (std::size_t size = 2; size <= n; ++size) {
        const std::size_t side = n - size + 1;   // tableau side for this size
        const std::size_t cside = side + 1;      // side of cur
        std::vector<Rational> next(side * side);
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t j = 0; j < side; ++j) {
                const Rational& interior = prev[(i + 1) * (cside + 1) + (j + 1)];
                if (interior == 0) {
                    next[i * side + j] = det_bareiss(m.block(i, j, size));
                } else {
                    next[i * side + j] = (cur[i * cside + j] * cur[(i + 1) * cside + (j + 1)] -
                                          cur[i * cside + (j + 1)] * cur[(i + 1) * cside + j]) /
                                         interior;
                }
            }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur[0];
}

bool desnanot_jacobi_check(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n < 3) throw std::invalid_argument("desnanot_jacobi_check: dimension must be at least 3");
    const Rational lhs = det_bareiss(m) * det_bareiss(m.block(1, 1, n - 2));
    const Rational nw = det_bareiss(m.block(0, 0, n - 1));
    const Rational se = det_bareiss(m.block(1, 1, n - 1));
    const Rational ne = det_bareiss(m.block(0, 1, n - 1));
    const Rational sw = det_bareiss(m.block(1, 0, n - 1));
    return lhs == nw * se - ne * sw;
}

}  // namespace fibdet
