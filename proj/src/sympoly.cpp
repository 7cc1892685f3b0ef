#include "fibdet/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fibdet {

namespace {

// descending graded-lex: higher total degree first, ties broken by the
// exponent vector itself (larger leading exponent first)
bool monomial_before(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

MultiPoly MultiPoly::constant(Integer c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({{}, std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.push_back({{1}, Integer(1)});
    return p;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.front().exps;
    return std::accumulate(lead.begin(), lead.end(), 0L);
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& target) const {
    // inserting zero slots at matching positions preserves graded-lex order
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const auto it = std::lower_bound(target.begin(), target.end(), vars_[v]);
        slot[v] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly out;
    out.vars_ = target;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Exponents e(target.size(), 0);
        for (std::size_t v = 0; v < vars_.size(); ++v) e[slot[v]] = t.exps[v];
        out.terms_.push_back({std::move(e), t.coeff});
    }
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::vector<std::string> vars = merged_vars(a.vars_, b.vars_);
    MultiPoly stor_a, stor_b;
    const MultiPoly* pa = &a;
    const MultiPoly* pb = &b;
    if (a.vars_ != vars) stor_a = a.aligned_to(vars), pa = &stor_a;
    if (b.vars_ != vars) stor_b = b.aligned_to(vars), pb = &stor_b;
    MultiPoly out;
    out.vars_ = vars;
    out.terms_.reserve(pa->terms_.size() + pb->terms_.size());
    auto ia = pa->terms_.begin(), ib = pb->terms_.begin();
    while (ia != pa->terms_.end() && ib != pb->terms_.end()) {
        if (ia->exps == ib->exps) {
            Integer c = ia->coeff + ib->coeff;
            if (c != 0) out.terms_.push_back({ia->exps, std::move(c)});
            ++ia, ++ib;
        } else if (monomial_before(ia->exps, ib->exps)) {
            out.terms_.push_back(*ia++);
        } else {
            out.terms_.push_back(*ib++);
        }
    }
    out.terms_.insert(out.terms_.end(), ia, pa->terms_.end());
    out.terms_.insert(out.terms_.end(), ib, pb->terms_.end());
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    const std::vector<std::string> vars = merged_vars(a.vars_, b.vars_);
    MultiPoly stor_a, stor_b;
    const MultiPoly* pa = &a;
    const MultiPoly* pb = &b;
    if (a.vars_ != vars) stor_a = a.aligned_to(vars), pa = &stor_a;
    if (b.vars_ != vars) stor_b = b.aligned_to(vars), pb = &stor_b;
    const MultiPoly& small = pa->terms_.size() <= pb->terms_.size() ? *pa : *pb;
    const MultiPoly& large = pa->terms_.size() <= pb->terms_.size() ? *pb : *pa;

    // multiplying a sorted list by one monomial preserves its order, so the
    // product is a merge of |small| shifted copies of the large operand
    std::vector<std::vector<MultiPoly::Term>> pending;
    pending.reserve(small.terms_.size());
    for (const MultiPoly::Term& ts : small.terms_) {
        std::vector<MultiPoly::Term> shifted;
        shifted.reserve(large.terms_.size());
        for (const MultiPoly::Term& tl : large.terms_) {
            MultiPoly::Exponents e(tl.exps);
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += ts.exps[v];
            shifted.push_back({std::move(e), ts.coeff * tl.coeff});
        }
        pending.push_back(std::move(shifted));
    }
    while (pending.size() > 1) {
        std::vector<std::vector<MultiPoly::Term>> next;
        next.reserve(pending.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < pending.size(); i += 2) {
            std::vector<MultiPoly::Term> merged;
            merged.reserve(pending[i].size() + pending[i + 1].size());
            auto ia = pending[i].begin(), ib = pending[i + 1].begin();
            while (ia != pending[i].end() && ib != pending[i + 1].end()) {
                if (ia->exps == ib->exps) {
                    Integer c = ia->coeff + ib->coeff;
                    if (c != 0) merged.push_back({std::move(ia->exps), std::move(c)});
                    ++ia, ++ib;
                } else if (monomial_before(ia->exps, ib->exps)) {
                    merged.push_back(std::move(*ia++));
                } else {
                    merged.push_back(std::move(*ib++));
                }
            }
            merged.insert(merged.end(), std::make_move_iterator(ia),
                          std::make_move_iterator(pending[i].end()));
            merged.insert(merged.end(), std::make_move_iterator(ib),
                          std::make_move_iterator(pending[i + 1].end()));
            next.push_back(std::move(merged));
        }
        if (pending.size() % 2) next.push_back(std::move(pending.back()));
        pending = std::move(next);
    }
    MultiPoly out;
    out.vars_ = vars;
    out.terms_ = std::move(pending.front());
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly result = constant(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    if (vars_ == other.vars_) return terms_ == other.terms_;
    const std::vector<std::string> vars = merged_vars(vars_, other.vars_);
    return aligned_to(vars).terms_ == other.aligned_to(vars).terms_;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<const Rational*> values;
    values.reserve(vars_.size());
    for (const std::string& v : vars_) {
        const auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("MultiPoly::eval: no value for variable " + v);
        values.push_back(&it->second);
    }
    Rational sum(0);
    for (const Term& t : terms_) {
        Rational m(t.coeff);
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (t.exps[v] != 0) m *= pow_exact(*values[v], t.exps[v]);
        sum += m;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Integer mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) os << '-';
            first = false;
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        const bool has_vars =
            std::any_of(t.exps.begin(), t.exps.end(), [](int e) { return e != 0; });
        if (mag != 1 || !has_vars) os << mag.get_str();
        bool star = mag != 1 || !has_vars;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (star) os << '*';
            os << vars_[v];
            if (t.exps[v] != 1) os << '^' << t.exps[v];
            star = true;
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly poly_pow(const MultiPoly& p, long e) { return p.pow(e); }

MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t dim = m.size();
    if (dim == 0 || dim > 5) throw std::invalid_argument("sym_det: dimension must be in [1, 5]");
    for (const auto& row : m)
        if (row.size() != dim) throw std::invalid_argument("sym_det: matrix must be square");

    // dets[mask] = det of the submatrix on the last popcount(mask) rows and
    // the column set mask, filled bottom-up by expansion along its top row
    std::vector<MultiPoly> dets(std::size_t{1} << dim);
    dets[0] = MultiPoly::constant(1);
    for (unsigned mask = 1; mask < (1u << dim); ++mask) {
        const int cols = __builtin_popcount(mask);
        const std::size_t row = dim - static_cast<std::size_t>(cols);
        MultiPoly acc;
        int parity = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (!(mask & (1u << j))) continue;
            const MultiPoly contrib = m[row][j] * dets[mask & ~(1u << j)];
            acc = parity % 2 == 0 ? acc + contrib : acc - contrib;
            ++parity;
        }
        dets[mask] = std::move(acc);
    }
    return dets[(1u << dim) - 1];
}

namespace {

MultiPoly indexed_var(const std::string& stem, long i) {
    return MultiPoly::variable(stem + std::to_string(i));
}

MultiPoly binomial_product_poly(long r) {
    Integer prod(1);
    for (long i = 0; i <= r; ++i)
        prod *= binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i));
    return MultiPoly::constant(prod);
}

void require_r(long r, long max, const char* who) {
    if (r < 0 || r > max)
        throw std::invalid_argument(std::string(who) + ": r must be in [0, " +
                                    std::to_string(max) + "]");
}

}  // namespace

IdentitySides linear_power_det_sides(long r) {
    require_r(r, 4, "linear_power_det_check");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<MultiPoly>> m(dim, std::vector<MultiPoly>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m[i][j] = (indexed_var("c", j) * indexed_var("x", i) + MultiPoly::constant(1)).pow(r);

    MultiPoly rhs = binomial_product_poly(r);
    for (long i = 0; i <= r; ++i)
        for (long j = i + 1; j <= r; ++j) {
            rhs = rhs * (indexed_var("x", i) - indexed_var("x", j));
            rhs = rhs * (indexed_var("c", i) - indexed_var("c", j));
        }
    return {sym_det(m), std::move(rhs)};
}

bool linear_power_det_check(long r) {
    const IdentitySides sides = linear_power_det_sides(r);
    return sides.det == sides.factored;
}

IdentitySides bilinear_power_det_sides(long r) {
    require_r(r, 3, "bilinear_power_det_check");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<MultiPoly>> m(dim, std::vector<MultiPoly>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m[i][j] = (indexed_var("A", j) * indexed_var("X", i) +
                       indexed_var("B", j) * indexed_var("Y", i))
                          .pow(r);

    MultiPoly rhs = binomial_product_poly(r);
    for (long i = 0; i <= r; ++i)
        for (long j = i + 1; j <= r; ++j) {
            rhs = rhs * (indexed_var("X", i) * indexed_var("Y", j) -
                         indexed_var("X", j) * indexed_var("Y", i));
            rhs = rhs * (indexed_var("A", i) * indexed_var("B", j) -
                         indexed_var("A", j) * indexed_var("B", i));
        }
    return {sym_det(m), std::move(rhs)};
}

bool bilinear_power_det_check(long r) {
    const IdentitySides sides = bilinear_power_det_sides(r);
    return sides.det == sides.factored;
}

IdentitySides shifted_factor_det_sides(long r) {
    require_r(r, 4, "shifted_factor_det_check");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<MultiPoly>> m(dim, std::vector<MultiPoly>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (long j = 0; j <= r; ++j) {
            MultiPoly entry = MultiPoly::constant(1);
            for (long l = j + 1; l <= r; ++l)
                entry = entry * (indexed_var("X", static_cast<long>(i)) + indexed_var("D", l));
            for (long mm = 1; mm <= j; ++mm)
                entry = entry * (indexed_var("X", static_cast<long>(i)) + indexed_var("E", mm));
            m[i][static_cast<std::size_t>(j)] = std::move(entry);
        }

    MultiPoly rhs = MultiPoly::constant(1);
    for (long i = 0; i <= r; ++i)
        for (long j = i + 1; j <= r; ++j)
            rhs = rhs * (indexed_var("X", j) - indexed_var("X", i));
    for (long i = 1; i <= r; ++i)
        for (long j = i; j <= r; ++j)
            rhs = rhs * (indexed_var("D", j) - indexed_var("E", i));
    return {sym_det(m), std::move(rhs)};
}

bool shifted_factor_det_check(long r) {
    const IdentitySides sides = shifted_factor_det_sides(r);
    return sides.det == sides.factored;
}

IdentitySides bilinear_shifted_factor_det_sides(long r) {
    require_r(r, 3, "bilinear_shifted_factor_det_check");
    const std::size_t dim = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<MultiPoly>> m(dim, std::vector<MultiPoly>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (long j = 0; j <= r; ++j) {
            const MultiPoly x = indexed_var("X", static_cast<long>(i));
            const MultiPoly y = indexed_var("Y", static_cast<long>(i));
            MultiPoly entry = MultiPoly::constant(1);
            for (long l = j + 1; l <= r; ++l)
                entry = entry * (indexed_var("Ad", l) * x + indexed_var("Bd", l) * y);
            for (long mm = 1; mm <= j; ++mm)
                entry = entry * (indexed_var("Ae", mm) * x + indexed_var("Be", mm) * y);
            m[i][static_cast<std::size_t>(j)] = std::move(entry);
        }

    MultiPoly rhs = MultiPoly::constant(1);
    for (long i = 0; i <= r; ++i)
        for (long j = i + 1; j <= r; ++j)
            rhs = rhs * (indexed_var("X", i) * indexed_var("Y", j) -
                         indexed_var("X", j) * indexed_var("Y", i));
    for (long i = 1; i <= r; ++i)
        for (long j = i; j <= r; ++j)
            rhs = rhs * (indexed_var("Be", i) * indexed_var("Ad", j) -
                         indexed_var("Ae", i) * indexed_var("Bd", j));
    return {sym_det(m), std::move(rhs)};
}

bool bilinear_shifted_factor_det_check(long r) {
    const IdentitySides sides = bilinear_shifted_factor_det_sides(r);
    return sides.det == sides.factored;
}

}  // namespace fibdet
