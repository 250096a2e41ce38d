#ifndef FOURCOVER_RATFUNC_HPP
#define FOURCOVER_RATFUNC_HPP

#include "fourcover/multipoly.hpp"

namespace fourcover {

// Univariate rational function in one designated context variable.
// Normal form: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(MultiPoly num, MultiPoly den, std::size_t var);
    static RatFunc from_poly(const MultiPoly& p, std::size_t var);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    std::size_t var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    MultiPoly num_, den_;
    std::size_t var_ = 0;
    void normalize();
};

inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }
RatFunc field_one(const RatFunc& proto);

} // namespace fourcover

#endif
