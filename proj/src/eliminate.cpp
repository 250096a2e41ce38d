#include "fourcover/eliminate.hpp"
#include "fourcover/ratfunc.hpp"

#include <set>

namespace fourcover {

namespace {

bool killed_by(const Monomial& m, const std::vector<Monomial>& kill) {
    for (const auto& k : kill)
        if (m.divisible_by(k)) return true;
    return false;
}

void check_contexts(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs) {
    if (pairs.empty()) throw DimensionMismatch("eliminate: no pairs");
    const ContextPtr& ctx = pairs[0].first.context();
    for (const auto& [t, s] : pairs)
        if (!(*t.context() == *ctx) || !(*s.context() == *ctx))
            throw DimensionMismatch("eliminate: inconsistent contexts");
}

} // namespace

LinearSpan eliminate(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                     const std::vector<Monomial>& kill) {
    check_contexts(pairs);
    const ContextPtr& ctx = pairs[0].first.context();
    // collect killed monomials present in any target
    std::set<Monomial, MonoLess> cols;
    for (const auto& [t, s] : pairs)
        for (const auto& [m, c] : t.terms())
            if (killed_by(m, kill)) cols.insert(m);
    std::vector<Monomial> labels(cols.rbegin(), cols.rend());
    // rows = killed monomials, columns = pairs: kernel vectors are the
    // admissible combination coefficients
    QMat matrix(labels.size(), QVec(pairs.size()));
    for (std::size_t j = 0; j < pairs.size(); ++j)
        for (std::size_t i = 0; i < labels.size(); ++i)
            matrix[i][j] = pairs[j].first.coeff(labels[i]);
    auto lambdas = kernel_basis(std::move(matrix), pairs.size(), Rational(1));
    std::vector<MultiPoly> relations;
    for (const auto& l : lambdas) {
        MultiPoly rel(ctx);
        for (std::size_t i = 0; i < pairs.size(); ++i) rel += pairs[i].second * l[i];
        relations.push_back(rel);
    }
    if (relations.empty())
        return LinearSpan{ctx, {}, {}};
    return span_of(relations);
}

ParamElimination eliminate_param(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                                 const std::vector<Monomial>& kill, std::size_t param_var) {
    check_contexts(pairs);
    const ContextPtr& ctx = pairs[0].first.context();
    for (const auto& k : kill)
        if (k.e[param_var] != 0)
            throw DimensionMismatch("eliminate_param: kill monomial involves the parameter");
    // column labels: killed monomials with the parameter exponent struck out
    std::set<Monomial, MonoLess> cols;
    for (const auto& [t, s] : pairs)
        for (const auto& [m, c] : t.terms()) {
            Monomial base = m;
            base.e[param_var] = 0;
            if (killed_by(base, kill)) cols.insert(base);
        }
    std::vector<Monomial> labels(cols.rbegin(), cols.rend());
    const RatFunc one = RatFunc::from_poly(MultiPoly::constant(ctx, Rational(1)), param_var);
    // rows = killed monomial classes, columns = pairs, entries in Q[param]
    std::vector<std::vector<RatFunc>> matrix(
        labels.size(), std::vector<RatFunc>(pairs.size(), one - one));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            MultiPoly entry(ctx);
            for (const auto& [m, c] : pairs[j].first.terms()) {
                Monomial base = m;
                base.e[param_var] = 0;
                if (base == labels[i]) {
                    Monomial tpow = Monomial::one(ctx->size());
                    tpow.e[param_var] = m.e[param_var];
                    entry.add_term(tpow, c);
                }
            }
            matrix[i][j] = RatFunc::from_poly(entry, param_var);
        }
    }
    auto vecs = kernel_basis(std::move(matrix), pairs.size(), one);
    ParamElimination out;
    const MultiPoly onep = MultiPoly::constant(ctx, Rational(1));
    for (const auto& v : vecs) {
        // clear denominators: multiply by the lcm of the (monic) dens
        MultiPoly l = onep;
        for (const auto& f : v) {
            if (f.is_zero()) continue;
            MultiPoly g = gcd_univariate(l, f.den(), param_var);
            l = divide_exact(l * f.den(), g);
        }
        std::vector<MultiPoly> lambda;
        for (const auto& f : v) {
            MultiPoly cleared = f.is_zero()
                ? MultiPoly::zero(ctx)
                : divide_exact(f.num() * l, f.den());
            lambda.push_back(cleared);
        }
        // divide by the gcd of the rational contents
        Rational c(0);
        for (const auto& p : lambda) {
            Rational pc = p.content();
            if (sgn(pc) == 0) continue;
            if (sgn(c) == 0) c = pc;
            else {
                Integer gn, gl;
                mpz_gcd(gn.get_mpz_t(), c.get_num().get_mpz_t(), pc.get_num().get_mpz_t());
                mpz_lcm(gl.get_mpz_t(), c.get_den().get_mpz_t(), pc.get_den().get_mpz_t());
                c = Rational(gn, gl);
                c.canonicalize();
            }
        }
        if (sgn(c) != 0)
            for (auto& p : lambda) p = p / c;
        MultiPoly rel(ctx);
        for (std::size_t i = 0; i < pairs.size(); ++i) rel += pairs[i].second * lambda[i];
        out.lambdas.push_back(std::move(lambda));
        out.relations.push_back(std::move(rel));
    }
    return out;
}

} // namespace fourcover
