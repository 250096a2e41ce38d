#ifndef FOURCOVER_MULTIPOLY_HPP
#define FOURCOVER_MULTIPOLY_HPP

#include "fourcover/rational.hpp"
#include "fourcover/errors.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fourcover {

// Ordered list of variable names.  The order is part of the external
// contract: all canonical output is graded-reverse-lexicographic with
// respect to it (leftmost variable largest).
class Context {
public:
    explicit Context(std::vector<std::string> names);
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& v) const;
    bool operator==(const Context& o) const { return names_ == o.names_; }
private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> names);
// Space-separated shorthand: make_context("X Z t").
ContextPtr make_context(const std::string& names);

// Exponent vector aligned with a Context.  Stored dense; zero exponents
// are simply zero entries.
struct Monomial {
    std::vector<unsigned> e;

    unsigned total_degree() const;
    bool is_one() const;
    static Monomial one(std::size_t nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }
    Monomial operator*(const Monomial& o) const;
    // componentwise divisibility
    bool divisible_by(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// grevlex: higher total degree is larger; ties broken so that the
// monomial with the smaller exponent on the rightmost differing
// variable is the larger one.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

// Sparse multivariate polynomial over Q with a fixed variable context.
// Canonical: no zero coefficients are stored; term iteration follows
// grevlex order (ascending in the map; leading term at rbegin).
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    MultiPoly() = default;
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx)); }
    static MultiPoly constant(ContextPtr ctx, const Rational& c);
    static MultiPoly variable(ContextPtr ctx, const std::string& name);
    static MultiPoly variable(ContextPtr ctx, std::size_t idx);
    static MultiPoly term(ContextPtr ctx, const Monomial& m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (the coefficient of 1)
    Rational constant_term() const;
    // value of a constant polynomial
    Rational as_constant() const;
    std::size_t num_terms() const { return terms_.size(); }

    unsigned degree() const;                 // total degree; 0 for the zero poly
    unsigned degree(std::size_t var) const;  // degree in one variable
    bool is_homogeneous() const;
    bool depends_on(std::size_t var) const;

    Rational coeff(const Monomial& m) const;
    const Monomial& lead_monomial() const;   // grevlex-largest; poly must be nonzero
    const Rational& lead_coeff() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator/(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;
    MultiPoly pow(unsigned k) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly derivative(std::size_t var) const;

    // Substitute images[i] for variable i (identity when images[i] is
    // unset).  Images live in `target` (which may equal this context).
    MultiPoly subst(const ContextPtr& target,
                    const std::vector<std::optional<MultiPoly>>& images) const;
    // Rename this polynomial into a context that contains all variables
    // this polynomial actually uses (matching by name).
    MultiPoly reindex(const ContextPtr& target) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Coefficient of var^k, as a polynomial with var struck out.
    MultiPoly coeff_of(std::size_t var, unsigned k) const;
    // Decompose as a polynomial in the given variables: list of
    // (monomial in those variables, cofactor free of them), grevlex
    // order on the extracted monomials.
    std::vector<std::pair<Monomial, MultiPoly>>
    decompose_by(const std::vector<std::size_t>& vars) const;

    // Positive rational c with (*this)/c having coprime integer
    // coefficients.  Zero polynomial has content 0.
    Rational content() const;

    std::string to_string() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
    void check_ctx(const MultiPoly& o) const;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

// Parse an expression (literals, variables, + - * ^, parentheses) into
// canonical form.  Throws SyntaxError with a byte offset, or
// UnknownVariable naming the offender.
MultiPoly parse_poly(const std::string& text, const ContextPtr& ctx);

// Exact multivariate division; throws NotASquare-adjacent logic errors
// are not used here -- throws error("NotDivisible") if q does not
// divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);
bool try_divide_exact(const MultiPoly& p, const MultiPoly& q, MultiPoly& out);

// Division with remainder in the single variable `var`; the divisor
// must be monic in `var` (leading var-coefficient 1) or have a rational
// leading var-coefficient.
void div_rem_in_var(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                    MultiPoly& quot, MultiPoly& rem);

// gcd of univariate polynomials over Q (both must involve only `var`);
// result is monic (or a constant 1 for coprime inputs).
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, std::size_t var);

// q with q^2 = p, leading (grevlex) coefficient positive.  Throws
// NotASquare.
MultiPoly perfect_square_root(const MultiPoly& p);

// Scale by the unique positive rational making the coefficients coprime
// integers with positive leading coefficient.  Throws ZeroPolynomial.
MultiPoly normalize_form(const MultiPoly& p);

} // namespace fourcover

#endif
