#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace monocs {

// Exact rational scalar used by the certification backend. gmp keeps values
// canonical (lowest terms, positive denominator) once canonicalize() has run;
// all arithmetic preserves that form.
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a/b" or a plain integer string.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational factorial(long n);

}  // namespace monocs
