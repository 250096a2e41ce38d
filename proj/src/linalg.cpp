#include "fourcover/linalg.hpp"

#include <algorithm>
#include <set>

namespace fourcover {

std::optional<QVec> solve_linear(QMat A, QVec b) {
    std::size_t nrows = A.size();
    std::size_t ncols = nrows ? A[0].size() : 0;
    for (std::size_t i = 0; i < nrows; ++i) A[i].push_back(b[i]);
    std::vector<std::size_t> pivots = rref(A);
    QVec x(ncols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == ncols) return std::nullopt; // pivot in the rhs column
        x[pivots[i]] = A[i][ncols];
    }
    return x;
}

MultiPoly LinearSpan::poly(std::size_t i) const {
    MultiPoly p(ctx);
    for (std::size_t j = 0; j < monomials.size(); ++j) p.add_term(monomials[j], basis[i][j]);
    return p;
}

std::vector<MultiPoly> LinearSpan::polys() const {
    std::vector<MultiPoly> r;
    for (std::size_t i = 0; i < dim(); ++i) r.push_back(poly(i));
    return r;
}

bool LinearSpan::contains(const MultiPoly& p) const {
    MultiPoly r = reduce_mod_span(p, *this);
    return r.is_zero();
}

bool LinearSpan::contains_span(const LinearSpan& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.poly(i))) return false;
    return true;
}

bool LinearSpan::operator==(const LinearSpan& o) const {
    return contains_span(o) && o.contains_span(*this);
}

LinearSpan span_of(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) throw DimensionMismatch("span_of: empty input");
    ContextPtr ctx = polys[0].context();
    std::set<Monomial, MonoLess> support;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) support.insert(m);
    std::vector<Monomial> mono(support.rbegin(), support.rend()); // grevlex descending
    return span_of(polys, std::move(mono), ctx);
}

LinearSpan span_of(const std::vector<MultiPoly>& polys, std::vector<Monomial> monomials,
                   ContextPtr ctx) {
    QMat rows;
    for (const auto& p : polys) {
        QVec row;
        row.reserve(monomials.size());
        std::size_t seen = 0;
        for (const auto& m : monomials) {
            Rational c = p.coeff(m);
            if (sgn(c) != 0) ++seen;
            row.push_back(std::move(c));
        }
        if (seen != p.num_terms())
            throw DimensionMismatch("span_of: polynomial not supported on monomial list");
        rows.push_back(std::move(row));
    }
    rref(rows);
    return LinearSpan{std::move(ctx), std::move(monomials), std::move(rows)};
}

std::vector<Monomial> monomials_of_degree(const ContextPtr& ctx,
                                          const std::vector<std::size_t>& vars,
                                          unsigned degree) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(ctx->size());
    // enumerate exponent tuples on `vars` summing to `degree`
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == vars.size()) {
            cur.e[vars[i]] = left;
            out.push_back(cur);
            cur.e[vars[i]] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            cur.e[vars[i]] = k;
            self(self, i + 1, left - k);
        }
        cur.e[vars[i]] = 0;
    };
    if (vars.empty()) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_less(b, a); // descending
    });
    return out;
}

std::vector<MultiPoly> ideal_degree_part(const std::vector<MultiPoly>& gens, unsigned degree) {
    std::vector<MultiPoly> out;
    if (gens.empty()) return out;
    ContextPtr ctx = gens[0].context();
    std::vector<std::size_t> allvars(ctx->size());
    for (std::size_t i = 0; i < allvars.size(); ++i) allvars[i] = i;
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw DimensionMismatch("ideal_degree_part: non-homogeneous");
        unsigned d = g.degree();
        if (d > degree) continue;
        for (const auto& m : monomials_of_degree(ctx, allvars, degree - d))
            out.push_back(g * MultiPoly::term(ctx, m, Rational(1)));
    }
    return out;
}

MultiPoly reduce_mod_span(const MultiPoly& p, const LinearSpan& span) {
    MultiPoly r = p;
    // eliminate with RREF rows: each row's pivot monomial cancels once
    for (std::size_t i = 0; i < span.dim(); ++i) {
        std::size_t pc = 0;
        while (pc < span.monomials.size() && sgn(span.basis[i][pc]) == 0) ++pc;
        if (pc == span.monomials.size()) continue;
        Rational c = r.coeff(span.monomials[pc]);
        if (sgn(c) == 0) continue;
        MultiPoly row = span.poly(i);
        r -= row * (c / span.basis[i][pc]);
    }
    return r;
}

} // namespace fourcover
