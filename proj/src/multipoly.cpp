#include "fourcover/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace fourcover {

Context::Context(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty() || index_.count(names_[i]))
            throw error("BadContext", "empty or duplicate variable name");
        index_[names_[i]] = i;
    }
}

std::optional<std::size_t> Context::index(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<Context>(std::move(names));
}

ContextPtr make_context(const std::string& names) {
    std::vector<std::string> v;
    std::istringstream in(names);
    std::string w;
    while (in >> w) v.push_back(w);
    return make_context(std::move(v));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < o.e[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(ContextPtr ctx, const Rational& c) {
    MultiPoly p(ctx);
    if (sgn(c) != 0) p.terms_[Monomial::one(ctx->size())] = c;
    return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, const std::string& name) {
    auto idx = ctx->index(name);
    if (!idx) throw UnknownVariable("unknown variable '" + name + "'");
    return variable(std::move(ctx), *idx);
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::size_t idx) {
    Monomial m = Monomial::one(ctx->size());
    m.e[idx] = 1;
    return term(std::move(ctx), m, Rational(1));
}

MultiPoly MultiPoly::term(ContextPtr ctx, const Monomial& m, const Rational& c) {
    MultiPoly p(ctx);
    if (sgn(c) != 0) p.terms_[m] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial::one(ctx_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::as_constant() const {
    if (!is_constant()) throw error("NotConstant", "polynomial is not constant: " + to_string());
    return constant_term();
}

unsigned MultiPoly::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

unsigned MultiPoly::degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

bool MultiPoly::depends_on(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] > 0) return true;
    return false;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MultiPoly::lead_monomial() const {
    if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::lead_coeff() const {
    if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

void MultiPoly::check_ctx(const MultiPoly& o) const {
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
        throw DimensionMismatch("mixed polynomial contexts");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_ctx(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_ctx(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_ctx(o);
    MultiPoly r(ctx_);
    if (terms_.empty() || o.terms_.empty()) return r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(ctx_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, q] : terms_) r.terms_[m] = q * c;
    return r;
}

MultiPoly MultiPoly::operator/(const Rational& c) const {
    if (sgn(c) == 0) throw error("DivisionByZero", "rational division by zero");
    return *this * (Rational(1) / c);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!(*ctx_ == *o.ctx_)) return false;
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(ctx_, Rational(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial n = m;
        n.e[var] -= 1;
        r.add_term(n, c * Rational(static_cast<long>(m.e[var])));
    }
    return r;
}

MultiPoly MultiPoly::subst(const ContextPtr& target,
                           const std::vector<std::optional<MultiPoly>>& images) const {
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            MultiPoly img;
            if (i < images.size() && images[i])
                img = *images[i];
            else
                img = MultiPoly::variable(target, ctx_->name(i));
            t = t * img.pow(m.e[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::reindex(const ContextPtr& target) const {
    MultiPoly r(target);
    std::vector<std::optional<std::size_t>> where(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) where[i] = target->index(ctx_->name(i));
    for (const auto& [m, c] : terms_) {
        Monomial n = Monomial::one(target->size());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!where[i])
                throw UnknownVariable("variable '" + ctx_->name(i) + "' missing from target context");
            n.e[*where[i]] = m.e[i];
        }
        r.add_term(n, c);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != ctx_->size()) throw DimensionMismatch("eval point arity");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, unsigned k) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] != k) continue;
        Monomial n = m;
        n.e[var] = 0;
        r.add_term(n, c);
    }
    return r;
}

std::vector<std::pair<Monomial, MultiPoly>>
MultiPoly::decompose_by(const std::vector<std::size_t>& vars) const {
    std::map<Monomial, MultiPoly, MonoLess> parts;
    for (const auto& [m, c] : terms_) {
        Monomial key = Monomial::one(ctx_->size());
        Monomial rest = m;
        for (std::size_t v : vars) {
            key.e[v] = m.e[v];
            rest.e[v] = 0;
        }
        auto [it, fresh] = parts.emplace(key, MultiPoly(ctx_));
        it->second.add_term(rest, c);
    }
    return {parts.begin(), parts.end()};
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

MultiPoly normalize_form(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("normalize_form of zero polynomial");
    Rational c = p.content();
    if (sgn(p.lead_coeff()) < 0) c = -c;
    return p / c;
}

// ---------------------------------------------------------------------
// division

bool try_divide_exact(const MultiPoly& p, const MultiPoly& q, MultiPoly& out) {
    if (q.is_zero()) return false;
    MultiPoly r = p;
    MultiPoly quot(p.context());
    const Monomial& lq = q.lead_monomial();
    const Rational& cq = q.lead_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.lead_monomial();
        if (!lr.divisible_by(lq)) return false;
        MultiPoly t = MultiPoly::term(p.context(), lr / lq, r.lead_coeff() / cq);
        quot += t;
        r -= t * q;
    }
    out = quot;
    return true;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly out;
    if (!try_divide_exact(p, q, out))
        throw error("NotDivisible", "exact division failed");
    return out;
}

void div_rem_in_var(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                    MultiPoly& quot, MultiPoly& rem) {
    unsigned dq = q.degree(var);
    MultiPoly lc = q.coeff_of(var, dq);
    if (!lc.is_constant())
        throw error("NonScalarLead", "divisor leading coefficient is not rational");
    Rational c = lc.as_constant();
    if (sgn(c) == 0) throw error("DivisionByZero", "zero divisor in div_rem_in_var");
    quot = MultiPoly::zero(p.context());
    rem = p;
    const auto& ctx = p.context();
    // The full var^dr slice cancels each round, so the var-degree of rem
    // strictly drops until it is below dq.
    while (!rem.is_zero()) {
        unsigned dr = rem.degree(var);
        if (dr < dq) break;
        MultiPoly head = rem.coeff_of(var, dr) / c;
        Monomial shift = Monomial::one(ctx->size());
        shift.e[var] = dr - dq;
        MultiPoly t = head * MultiPoly::term(ctx, shift, Rational(1));
        quot += t;
        rem -= t * q;
        if (dq == 0 && rem.is_zero()) break;
    }
}

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    auto monic = [&](const MultiPoly& p) {
        if (p.is_zero()) return p;
        MultiPoly lc = p.coeff_of(var, p.degree(var));
        return p / lc.as_constant();
    };
    MultiPoly f = monic(a), g = monic(b);
    while (!g.is_zero()) {
        MultiPoly q, r;
        div_rem_in_var(f, g, var, q, r);
        f = g;
        g = monic(r);
    }
    if (f.is_zero()) return f;
    return monic(f);
}

// ---------------------------------------------------------------------
// perfect square root

MultiPoly perfect_square_root(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const Monomial& lm = p.lead_monomial();
    Monomial half = lm;
    for (auto& x : half.e) {
        if (x % 2 != 0) throw NotASquare("odd leading exponent");
        x /= 2;
    }
    auto c0 = rational_sqrt(p.lead_coeff());
    if (!c0) throw NotASquare("leading coefficient is not a rational square");
    MultiPoly root = MultiPoly::term(p.context(), half, *c0);
    const Monomial lead_m = half;
    const Rational lead_c2 = *c0 * 2;
    std::optional<Monomial> prev_top;
    while (true) {
        MultiPoly r = p - root * root;
        if (r.is_zero()) break;
        const Monomial& lr = r.lead_monomial();
        if (prev_top && !grevlex_less(lr, *prev_top)) throw NotASquare("stalled");
        prev_top = lr;
        if (!lr.divisible_by(lead_m)) throw NotASquare("remainder not reducible");
        root += MultiPoly::term(p.context(), lr / lead_m, r.lead_coeff() / lead_c2);
    }
    if (sgn(root.lead_coeff()) < 0) root = -root;
    return root;
}

// ---------------------------------------------------------------------
// printing

namespace {

void print_monomial(std::ostream& os, const Context& ctx, const Monomial& m,
                    bool with_leading_star) {
    bool first = !with_leading_star;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << ctx.name(i);
        if (m.e[i] >= 2) os << "^" << m.e[i];
    }
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading (grevlex-largest) term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << a.get_str();
        } else if (a == 1) {
            print_monomial(os, *ctx_, m, false);
        } else {
            os << a.get_str();
            print_monomial(os, *ctx_, m, true);
        }
    }
    return os.str();
}

} // namespace fourcover
