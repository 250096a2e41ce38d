#ifndef FOURCOVER_POLYMATRIX_HPP
#define FOURCOVER_POLYMATRIX_HPP

#include "fourcover/multipoly.hpp"

#include <vector>

namespace fourcover {

// Dense matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols, ContextPtr ctx);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const ContextPtr& context() const { return ctx_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    static PolyMatrix identity(std::size_t n, ContextPtr ctx);
    // Symmetric matrix A of a quadratic form with the Q = (1/2) x^T A x
    // convention: A_ii = 2 * coeff(x_i^2), A_ij = coeff(x_i x_j).
    static PolyMatrix from_quadratic_form(const MultiPoly& q, const std::vector<std::size_t>& vars);
    // (1/2) x^T A x for this (symmetric) matrix.
    MultiPoly quadratic_form(const std::vector<std::size_t>& vars) const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const MultiPoly& s) const;
    PolyMatrix operator*(const Rational& s) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    std::size_t rows_, cols_;
    ContextPtr ctx_;
    std::vector<MultiPoly> e_;
};

// Determinant by fraction-free (Bareiss) elimination, after clearing
// coefficient denominators.  0x0 matrices have determinant 1.
MultiPoly det(const PolyMatrix& M);

// Determinant and adjugate; M * adj = det * I.
std::pair<MultiPoly, PolyMatrix> det_adj(const PolyMatrix& M);

// Rational-entry determinant convenience (still exact).
Rational det_rational(const PolyMatrix& M);

} // namespace fourcover

#endif
