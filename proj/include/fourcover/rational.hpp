#ifndef FOURCOVER_RATIONAL_HPP
#define FOURCOVER_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace fourcover {

// Exact rationals are GMP mpq_class values, canonicalized (lowest terms,
// positive denominator) on every construction path we use.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational rat_from_string(const std::string& s);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// sqrt of a rational if it is a perfect square (of a non-negative value).
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_square(const Rational& q) { return rational_sqrt(q).has_value(); }

std::string to_string(const Rational& q);

} // namespace fourcover

#endif
