#ifndef FOURCOVER_QUOTIENT_HPP
#define FOURCOVER_QUOTIENT_HPP

#include "fourcover/linalg.hpp"
#include "fourcover/polymatrix.hpp"

namespace fourcover {

// One generator of a quotient-ring tower: a context variable together
// with its monic (in that variable) minimal polynomial, whose other
// variables may only be earlier generators.
struct Generator {
    std::size_t var;
    MultiPoly modulus;
    unsigned degree;
};

// Q[g1, g2, ...]/(m1(g1), m2(g1,g2), ...): a triangular tower.  Elements
// are MultiPoly values in the shared context; they may also involve free
// (non-generator) variables, in which case coordinates and mult matrices
// have polynomial entries.
class QuotientRing {
public:
    QuotientRing(ContextPtr ctx, std::vector<Generator> gens);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t dimension() const { return basis_.size(); }
    // basis monomials in generator powers; index 0 is the unit monomial
    const std::vector<Monomial>& basis() const { return basis_; }

    MultiPoly reduce(MultiPoly p) const;
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return reduce(a * b); }
    MultiPoly pow(const MultiPoly& a, unsigned k) const;

    // coordinates on the basis; entries are free of generator variables
    std::vector<MultiPoly> coords(const MultiPoly& p) const;
    MultiPoly from_coords(const std::vector<MultiPoly>& c) const;
    QVec rational_coords(const MultiPoly& p) const; // element must have rational coords

    // multiplication-by-a matrix on the basis (rational coordinates)
    QMat mult_matrix(const MultiPoly& a) const;
    // same with polynomial coefficients allowed
    PolyMatrix mult_matrix_poly(const MultiPoly& a) const;

    MultiPoly norm(const MultiPoly& a) const;   // det of mult matrix
    MultiPoly trace(const MultiPoly& a) const;  // trace of mult matrix

    // inverse of an element with rational coordinates; throws
    // NotInvertible carrying a zero-divisor witness description
    MultiPoly inverse(const MultiPoly& a) const;
    bool try_inverse(const MultiPoly& a, MultiPoly& out) const;
    bool is_invertible(const MultiPoly& a) const;

private:
    ContextPtr ctx_;
    std::vector<Generator> gens_;
    std::vector<Monomial> basis_;
};

// Carrier for a single-generator etale algebra Q[x]/(g); g is made monic
// on construction (same roots, same algebra).  Throws NotSquarefree.
class EtaleAlgebra {
public:
    EtaleAlgebra(ContextPtr ctx, std::size_t var, const MultiPoly& modulus);

    const QuotientRing& ring() const { return ring_; }
    const ContextPtr& context() const { return ring_.context(); }
    std::size_t var() const { return var_; }
    unsigned degree() const { return degree_; }
    MultiPoly generator() const { return MultiPoly::variable(context(), var_); }
    const MultiPoly& modulus() const { return monic_; } // monic normal form

private:
    std::size_t var_;
    unsigned degree_;
    MultiPoly monic_;
    QuotientRing ring_;
};

// norm and trace of a (possibly polynomial-coefficient) element
std::pair<MultiPoly, MultiPoly> norm_trace(const QuotientRing& R, const MultiPoly& a);

// extended Euclid inverse in a single-generator algebra; witness = the
// nontrivial gcd on failure
MultiPoly euclid_inverse(const EtaleAlgebra& A, const MultiPoly& a);

} // namespace fourcover

#endif
