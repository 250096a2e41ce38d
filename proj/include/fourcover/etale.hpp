#ifndef FOURCOVER_ETALE_HPP
#define FOURCOVER_ETALE_HPP

#include "fourcover/quotient.hpp"

#include <array>

namespace fourcover {

// Everything attached to the pair of algebras F = Q[th]/(g) and
// LF = F[tt]/(h), h = g/(x - th), for a squarefree quartic g: the
// involution swapping the two roots, the fixed subalgebra M with basis
// m1..m6 (m1 = 1) and multiplication table, the embedded cubic root phi,
// and the norm/trace maps between the layers.
class RelativeAlgebra {
public:
    // quartic = a x^4 + ... + e, given by its coefficients; the context
    // must contain the two generator variables named by th/tt.
    RelativeAlgebra(ContextPtr ctx, std::size_t th, std::size_t tt,
                    const std::array<Rational, 5>& quartic);

    const ContextPtr& context() const { return ctx_; }
    const QuotientRing& LF() const { return lf_; }
    const EtaleAlgebra& F() const { return F_; }
    std::size_t th() const { return th_; }
    std::size_t tt() const { return tt_; }
    const std::array<Rational, 5>& quartic() const { return co_; }

    // invariants of the quartic and the Weierstrass coefficients
    const Rational& I() const { return I_; }
    const Rational& J() const { return J_; }
    const Rational& A() const { return A_; }
    const Rational& B() const { return B_; }

    // involution swapping th and tt (acts on generator part only;
    // other variables pass through)
    MultiPoly sigma(const MultiPoly& z) const;

    // sigma-fixed subalgebra: basis elements as LF values, m1 = 1
    const std::vector<MultiPoly>& m_basis() const { return mbasis_; }
    // z (sigma-fixed, polynomial coefficients allowed) -> 6 coordinates
    std::vector<MultiPoly> m_coords(const MultiPoly& z) const;
    MultiPoly from_m(const std::vector<MultiPoly>& c) const;
    // m_i * m_j expanded on the m-basis
    const std::array<std::array<QVec, 6>, 6>& mult_table() const { return table_; }
    // product of two m-coordinate vectors (entries may be polynomials)
    std::vector<MultiPoly> m_mul(const std::vector<MultiPoly>& u,
                                 const std::vector<MultiPoly>& v) const;

    // phi = -(a th tt - c/3 + e/(th tt))/4, satisfying phi^3 + A phi + B = 0
    const MultiPoly& phi() const { return phi_; }
    // image of an L-element sum c_i phi^i in LF
    MultiPoly embed_L(const QVec& c3) const;
    MultiPoly embed_L_poly(const std::vector<MultiPoly>& c3) const;
    // z in the image of L -> coordinates on 1, phi, phi^2 (asserts consistency)
    std::vector<MultiPoly> L_coords(const MultiPoly& z) const;

    // the involution of M fixing L, as images of the basis elements
    const std::vector<MultiPoly>& tau_images() const { return tau_; }
    MultiPoly tau(const MultiPoly& z) const;

    // norms and traces along the arrows used by the constructions
    MultiPoly norm_LF_M(const MultiPoly& z) const;   // z * sigma(z)
    MultiPoly norm_LF_F(const MultiPoly& z) const;   // det over the F-basis 1, tt, tt^2
    MultiPoly cofactor_LF_F(const MultiPoly& z) const; // norm_LF_F(z)/z
    MultiPoly norm_M_L(const MultiPoly& z) const;    // z * tau(z), lands in L
    std::vector<MultiPoly> norm_M_L_coords(const MultiPoly& z) const;
    MultiPoly trace_LF_k(const MultiPoly& z) const;
    std::vector<MultiPoly> trace_LF_L_coords(const MultiPoly& z) const;
    // norm from L to k of an element given on the basis 1, phi, phi^2
    MultiPoly norm_L_k(const std::vector<MultiPoly>& c3) const;

private:
    ContextPtr ctx_;
    std::size_t th_, tt_;
    std::array<Rational, 5> co_;
    Rational I_, J_, A_, B_;
    EtaleAlgebra F_;
    QuotientRing lf_;
    std::vector<MultiPoly> sigma_images_; // of the 12 basis monomials
    std::vector<MultiPoly> mbasis_;
    QMat m_solver_;  // 6x12: coords(z) -> m-coordinates
    std::array<std::array<QVec, 6>, 6> table_;
    MultiPoly phi_;
    std::vector<MultiPoly> tau_;
    QVec lf_trace_;   // trace functional on the LF basis
    QMat gram_L_inv_; // inverse Gram matrix of Tr_{L/k}(phi^i phi^j)
    QuotientRing Lring_; // Q[phiv]/(x^3 + A x + B) on a private variable? no: stored as 3x3 data

    void build_m();
    void build_phi_tau();
};

// Descriptor of the twisting data attached to a 4-cover: alpha in F with
// N(alpha) = a r^2, and optionally nu in L with N(nu) = s^2.
struct TwistDescriptor {
    MultiPoly alpha;   // element of F (polynomial in th)
    Rational r;
    std::optional<QVec> nu; // coordinates on 1, phi, phi^2
    std::optional<Rational> s;
    bool reverse = false; // right factor carries (th - tt)^2 * Delta
};

} // namespace fourcover

#endif
