#ifndef FOURCOVER_ELIMINATE_HPP
#define FOURCOVER_ELIMINATE_HPP

#include "fourcover/linalg.hpp"

namespace fourcover {

// Each pair asserts target-form = source-form.  A target monomial is
// "killed" when it is divisible by one of the kill monomials.  The
// result is the echelonized span of the source-combinations Sum l_i *
// source_i over all rational l with Sum l_i * target_i vanishing on
// every killed monomial.
LinearSpan eliminate(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                     const std::vector<Monomial>& kill);

// Variant over the field Q(param): kill monomials are given in the
// non-parameter variables and absorb every power of the parameter; the
// combination coefficients live in Q[param] (cleared and coprime).
struct ParamElimination {
    std::vector<std::vector<MultiPoly>> lambdas; // one vector per relation
    std::vector<MultiPoly> relations;            // Sum lambda_i * source_i
};
ParamElimination eliminate_param(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs,
                                 const std::vector<Monomial>& kill, std::size_t param_var);

} // namespace fourcover

#endif
