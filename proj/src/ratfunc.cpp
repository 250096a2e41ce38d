#include "fourcover/ratfunc.hpp"

namespace fourcover {

RatFunc::RatFunc(MultiPoly num, MultiPoly den, std::size_t var)
    : num_(std::move(num)), den_(std::move(den)), var_(var) {
    if (den_.is_zero()) throw error("DivisionByZero", "rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::from_poly(const MultiPoly& p, std::size_t var) {
    return RatFunc(p, MultiPoly::constant(p.context(), Rational(1)), var);
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.context(), Rational(1));
        return;
    }
    MultiPoly g = gcd_univariate(num_, den_, var_);
    if (g.degree(var_) > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational lc = den_.coeff_of(var_, den_.degree(var_)).as_constant();
    num_ = num_ / lc;
    den_ = den_ / lc;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_, var_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw error("DivisionByZero", "rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_, var_);
}

RatFunc field_one(const RatFunc& proto) {
    MultiPoly one = MultiPoly::constant(proto.den().context(), Rational(1));
    return RatFunc(one, one, proto.var());
}

} // namespace fourcover
