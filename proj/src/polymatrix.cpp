#include "fourcover/polymatrix.hpp"

namespace fourcover {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, ContextPtr ctx)
    : rows_(rows), cols_(cols), ctx_(std::move(ctx)),
      e_(rows * cols, MultiPoly::zero(ctx_)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, ContextPtr ctx) {
    PolyMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(ctx, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::from_quadratic_form(const MultiPoly& q,
                                           const std::vector<std::size_t>& vars) {
    std::size_t n = vars.size();
    PolyMatrix A(n, n, q.context());
    for (const auto& [m, c] : q.terms()) {
        // locate the (at most two) quadratic variables of this term
        int vi = -1, vj = -1;
        unsigned used = 0;
        Monomial rest = m;
        for (std::size_t k = 0; k < n; ++k) {
            unsigned e = m.e[vars[k]];
            used += e;
            if (e == 1) { (vi < 0 ? vi : vj) = static_cast<int>(k); }
            else if (e == 2) { vi = vj = static_cast<int>(k); }
            else if (e > 2) throw DimensionMismatch("not a quadratic form");
            rest.e[vars[k]] = 0;
        }
        if (used != 2) throw DimensionMismatch("not a quadratic form in the given variables");
        MultiPoly coef = MultiPoly::term(q.context(), rest, c);
        if (vi == vj) {
            A.at(vi, vi) += coef * Rational(2);
        } else {
            A.at(vi, vj) += coef;
            A.at(vj, vi) += coef;
        }
    }
    return A;
}

MultiPoly PolyMatrix::quadratic_form(const std::vector<std::size_t>& vars) const {
    MultiPoly q(ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            MultiPoly xi = MultiPoly::variable(ctx_, vars[i]);
            MultiPoly xj = MultiPoly::variable(ctx_, vars[j]);
            q += at(i, j) * xi * xj;
        }
    return q / Rational(2);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix r(rows_, cols_, ctx_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    PolyMatrix r(rows_, o.cols_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const MultiPoly& s) const {
    PolyMatrix r(rows_, cols_, ctx_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

PolyMatrix PolyMatrix::operator*(const Rational& s) const {
    PolyMatrix r(rows_, cols_, ctx_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// lcm of all coefficient denominators across the matrix
Integer denominator_lcm(const PolyMatrix& M) {
    Integer l(1);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            for (const auto& [m, c] : M.at(i, j).terms())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

MultiPoly det_bareiss_cleared(PolyMatrix M) {
    std::size_t n = M.rows();
    ContextPtr ctx = M.context();
    MultiPoly prev = MultiPoly::constant(ctx, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && M.at(swap, k).is_zero()) ++swap;
            if (swap == n) return MultiPoly::zero(ctx); // singular column
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j);
                M.at(i, j) = num.is_zero() ? num : divide_exact(num, prev);
            }
            M.at(i, k) = MultiPoly::zero(ctx);
        }
        prev = M.at(k, k);
    }
    MultiPoly d = M.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace

MultiPoly det(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("determinant of non-square matrix");
    std::size_t n = M.rows();
    if (n == 0) {
        // by convention (consistent with det_adj on the empty matrix)
        return MultiPoly::constant(M.context() ? M.context() : make_context(""), Rational(1));
    }
    if (n == 1) return M.at(0, 0);
    Integer l = denominator_lcm(M);
    if (l == 1) return det_bareiss_cleared(M);
    Rational scale(l);
    MultiPoly d = det_bareiss_cleared(M * scale);
    Rational back(1);
    for (std::size_t i = 0; i < n; ++i) back *= scale;
    return d / back;
}

std::pair<MultiPoly, PolyMatrix> det_adj(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("det_adj of non-square matrix");
    std::size_t n = M.rows();
    MultiPoly d = det(M);
    PolyMatrix adj(n, n, M.context());
    if (n == 0) return {d, adj};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1, M.context());
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue; // delete row j, column i -> adjugate directly
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = M.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            MultiPoly cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(i, j) = cof;
        }
    return {d, adj};
}

Rational det_rational(const PolyMatrix& M) {
    return det(M).as_constant();
}

} // namespace fourcover
