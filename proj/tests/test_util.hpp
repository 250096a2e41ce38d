#ifndef FOURCOVER_TEST_UTIL_HPP
#define FOURCOVER_TEST_UTIL_HPP

#include "fourcover/multipoly.hpp"
#include "fourcover/polymatrix.hpp"

#include <random>

namespace fctest {

using namespace fourcover;

inline Rational random_rational(std::mt19937& rng, int num_range = 9, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    int n = num(rng);
    if (!allow_zero)
        while (n == 0) n = num(rng);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(n, den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, const ContextPtr& ctx, unsigned max_deg,
                             unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    MultiPoly p(ctx);
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        Monomial m = Monomial::one(ctx->size());
        unsigned budget = max_deg;
        for (std::size_t i = 0; i < ctx->size(); ++i) {
            unsigned e = expo(rng) % (budget + 1);
            m.e[i] = e;
            budget -= e;
        }
        p.add_term(m, random_rational(rng));
    }
    return p;
}

// independent oracle: naive cofactor expansion along the first row
inline MultiPoly det_cofactor(const PolyMatrix& M) {
    std::size_t n = M.rows();
    if (n == 0) return MultiPoly::constant(M.context(), Rational(1));
    if (n == 1) return M.at(0, 0);
    MultiPoly total(M.context());
    for (std::size_t j = 0; j < n; ++j) {
        if (M.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, M.context());
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = M.at(r, c);
            }
        MultiPoly term = M.at(0, j) * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

} // namespace fctest

#endif
