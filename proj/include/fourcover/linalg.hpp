#ifndef FOURCOVER_LINALG_HPP
#define FOURCOVER_LINALG_HPP

#include "fourcover/multipoly.hpp"

#include <vector>

namespace fourcover {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational field_one(const Rational&) { return Rational(1); }

// Reduced row echelon form over a field; rows are modified in place.
// Returns the pivot column of each non-zero row, in order.
template <class F>
std::vector<std::size_t> rref(std::vector<std::vector<F>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && field_is_zero(rows[sel][col])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        F inv = field_one(rows[r][col]) / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || field_is_zero(rows[i][col])) continue;
            F f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(pivots.size(), std::vector<F>(ncols));
    return pivots;
}

// Canonical basis of the right kernel of A (vectors of length ncols).
// `one` supplies the field's multiplicative identity (fields like Q(t)
// carry a context, so a prototype is required); `one - one` is zero.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows, std::size_t ncols,
                                         const F& one) {
    for (auto& row : rows)
        if (row.size() != ncols) throw DimensionMismatch("kernel_basis row width");
    const F zero = one - one;
    std::vector<std::size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<F> v(ncols, zero);
        v[j] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = zero - rows[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Solve A x = b; returns empty optional when inconsistent.  When the
// solution is not unique the free coordinates are set to zero.
std::optional<QVec> solve_linear(QMat A, QVec b);

// Echelonized Q-span of coefficient vectors indexed by a fixed monomial
// list (grevlex-descending).
struct LinearSpan {
    ContextPtr ctx;
    std::vector<Monomial> monomials; // column labels, grevlex descending
    QMat basis;                      // RREF rows

    std::size_t dim() const { return basis.size(); }
    MultiPoly poly(std::size_t i) const;
    std::vector<MultiPoly> polys() const;
    bool contains(const MultiPoly& p) const;
    bool contains_span(const LinearSpan& other) const;
    bool operator==(const LinearSpan& o) const;
};

// Span of the given polynomials (monomial labels = union of supports).
LinearSpan span_of(const std::vector<MultiPoly>& polys);
// Same, with an explicit monomial index (all polys must be supported on it).
LinearSpan span_of(const std::vector<MultiPoly>& polys, std::vector<Monomial> monomials,
                   ContextPtr ctx);

// All products gen * (monomial of complementary degree), for homogeneous
// ideal membership tests at a fixed degree.
std::vector<MultiPoly> ideal_degree_part(const std::vector<MultiPoly>& gens, unsigned degree);

// All monomials of the given total degree in the context variables
// listed in `vars` (grevlex descending).
std::vector<Monomial> monomials_of_degree(const ContextPtr& ctx,
                                          const std::vector<std::size_t>& vars,
                                          unsigned degree);

// p mod span(gens at p's degree): returns the canonical remainder after
// eliminating with the RREF of the ideal's degree part.
MultiPoly reduce_mod_span(const MultiPoly& p, const LinearSpan& span);

} // namespace fourcover

#endif
