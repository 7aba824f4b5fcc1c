#ifndef SOLVCO_RATIONAL_HPP
#define SOLVCO_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace solvco {

// Exact rational scalar.  mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rational& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

// Exact square root in Q, or nullopt if q is not a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

std::string to_string(const Rational& q);

} // namespace solvco

#endif
