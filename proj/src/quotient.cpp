#include "fourcover/quotient.hpp"

namespace fourcover {

QuotientRing::QuotientRing(ContextPtr ctx, std::vector<Generator> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
    for (auto& g : gens_) {
        unsigned d = g.modulus.degree(g.var);
        if (d == 0) throw DimensionMismatch("generator modulus is constant");
        MultiPoly lc = g.modulus.coeff_of(g.var, d);
        if (!lc.is_constant())
            throw DimensionMismatch("generator modulus not monic-normalizable");
        g.modulus = g.modulus / lc.as_constant();
        g.degree = d;
    }
    // basis monomials: odometer over generator exponents, first generator fastest
    std::size_t dim = 1;
    for (const auto& g : gens_) dim *= g.degree;
    basis_.reserve(dim);
    std::vector<unsigned> e(gens_.size(), 0);
    for (std::size_t n = 0; n < dim; ++n) {
        Monomial m = Monomial::one(ctx_->size());
        for (std::size_t i = 0; i < gens_.size(); ++i) m.e[gens_[i].var] = e[i];
        basis_.push_back(m);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (++e[i] < gens_[i].degree) break;
            e[i] = 0;
        }
    }
}

MultiPoly QuotientRing::reduce(MultiPoly p) const {
    for (std::size_t gi = gens_.size(); gi-- > 0;) {
        const Generator& g = gens_[gi];
        if (p.degree(g.var) >= g.degree) {
            MultiPoly q, r;
            div_rem_in_var(p, g.modulus, g.var, q, r);
            p = std::move(r);
        }
    }
    return p;
}

MultiPoly QuotientRing::pow(const MultiPoly& a, unsigned k) const {
    MultiPoly r = MultiPoly::constant(ctx_, Rational(1));
    MultiPoly base = reduce(a);
    while (k) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return r;
}

std::vector<MultiPoly> QuotientRing::coords(const MultiPoly& p) const {
    MultiPoly r = reduce(p);
    std::vector<MultiPoly> out(basis_.size(), MultiPoly::zero(ctx_));
    std::vector<std::size_t> gvars;
    for (const auto& g : gens_) gvars.push_back(g.var);
    for (auto& [mono, cof] : r.decompose_by(gvars)) {
        std::size_t idx = basis_.size();
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == mono) { idx = i; break; }
        if (idx == basis_.size()) throw DimensionMismatch("unreduced monomial in coords");
        out[idx] = cof;
    }
    return out;
}

MultiPoly QuotientRing::from_coords(const std::vector<MultiPoly>& c) const {
    MultiPoly r(ctx_);
    for (std::size_t i = 0; i < c.size(); ++i)
        r += c[i] * MultiPoly::term(ctx_, basis_[i], Rational(1));
    return r;
}

QVec QuotientRing::rational_coords(const MultiPoly& p) const {
    QVec out;
    for (const auto& c : coords(p)) out.push_back(c.as_constant());
    return out;
}

QMat QuotientRing::mult_matrix(const MultiPoly& a) const {
    QMat M(basis_.size(), QVec(basis_.size(), Rational(0)));
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        MultiPoly prod = mul(a, MultiPoly::term(ctx_, basis_[j], Rational(1)));
        QVec col = rational_coords(prod);
        for (std::size_t i = 0; i < basis_.size(); ++i) M[i][j] = col[i];
    }
    return M;
}

PolyMatrix QuotientRing::mult_matrix_poly(const MultiPoly& a) const {
    PolyMatrix M(basis_.size(), basis_.size(), ctx_);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        MultiPoly prod = mul(a, MultiPoly::term(ctx_, basis_[j], Rational(1)));
        auto col = coords(prod);
        for (std::size_t i = 0; i < basis_.size(); ++i) M.at(i, j) = col[i];
    }
    return M;
}

MultiPoly QuotientRing::norm(const MultiPoly& a) const { return det(mult_matrix_poly(a)); }

MultiPoly QuotientRing::trace(const MultiPoly& a) const {
    PolyMatrix M = mult_matrix_poly(a);
    MultiPoly t(ctx_);
    for (std::size_t i = 0; i < basis_.size(); ++i) t += M.at(i, i);
    return t;
}

bool QuotientRing::try_inverse(const MultiPoly& a, MultiPoly& out) const {
    QMat M = mult_matrix(a);
    QVec e1(basis_.size(), Rational(0));
    e1[0] = Rational(1);
    auto x = solve_linear(M, e1);
    if (!x) return false;
    std::vector<MultiPoly> c;
    for (const auto& q : *x) c.push_back(MultiPoly::constant(ctx_, q));
    out = from_coords(c);
    return true;
}

bool QuotientRing::is_invertible(const MultiPoly& a) const {
    MultiPoly tmp;
    return try_inverse(a, tmp);
}

MultiPoly QuotientRing::inverse(const MultiPoly& a) const {
    MultiPoly out;
    if (!try_inverse(a, out))
        throw NotInvertible("zero divisor: " + reduce(a).to_string());
    return out;
}

EtaleAlgebra::EtaleAlgebra(ContextPtr ctx, std::size_t var, const MultiPoly& modulus)
    : var_(var),
      degree_(modulus.degree(var)),
      monic_(MultiPoly::zero(ctx)),
      ring_(ctx, {}) {
    if (degree_ == 0) throw DimensionMismatch("modulus must have positive degree");
    for (std::size_t v = 0; v < ctx->size(); ++v)
        if (v != var && modulus.depends_on(v))
            throw DimensionMismatch("modulus must be univariate in its generator");
    MultiPoly lc = modulus.coeff_of(var, degree_);
    monic_ = modulus / lc.as_constant();
    MultiPoly g = gcd_univariate(monic_, monic_.derivative(var), var);
    if (g.degree(var) > 0)
        throw NotSquarefree("modulus has repeated factor, witness gcd = " + g.to_string());
    ring_ = QuotientRing(ctx, {Generator{var, monic_, degree_}});
}

std::pair<MultiPoly, MultiPoly> norm_trace(const QuotientRing& R, const MultiPoly& a) {
    PolyMatrix M = R.mult_matrix_poly(a);
    MultiPoly n = det(M);
    MultiPoly t(R.context());
    for (std::size_t i = 0; i < R.dimension(); ++i) t += M.at(i, i);
    return {n, t};
}

MultiPoly euclid_inverse(const EtaleAlgebra& A, const MultiPoly& a) {
    std::size_t var = A.var();
    const ContextPtr& ctx = A.context();
    MultiPoly r0 = A.modulus();
    MultiPoly r1 = A.ring().reduce(a);
    if (r1.is_zero()) throw NotInvertible("zero element");
    MultiPoly s0 = MultiPoly::zero(ctx);
    MultiPoly s1 = MultiPoly::constant(ctx, Rational(1));
    // invariant: s_i * a = r_i (mod g)
    while (true) {
        if (r1.degree(var) == 0) {
            return A.ring().reduce(s1 / r1.as_constant());
        }
        MultiPoly q, r;
        div_rem_in_var(r0, r1, var, q, r);
        if (r.is_zero()) {
            MultiPoly lc = r1.coeff_of(var, r1.degree(var));
            MultiPoly witness = r1 / lc.as_constant();
            throw NotInvertible("zero divisor, witness gcd = " + witness.to_string());
        }
        MultiPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = A.ring().reduce(s2);
    }
}

} // namespace fourcover
