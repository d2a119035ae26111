#pragma once

#include <gmpxx.h>

#include <string>

namespace g2v {

// The only scalar type in the engine. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// num/den in lowest terms. The raw two-argument mpq_class constructor does
// not reduce, so every ratio with a non-literal numerator goes through here.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Renders as "num/den", denominator always present ("2" -> "2/1").
std::string rat_to_string(const Rational& r);

// Accepts the grammar [-]<digits>[/<digits>] with nonzero denominator.
// Throws std::invalid_argument otherwise.
Rational rat_from_string(const std::string& s);

bool is_integer(const Rational& r);
bool is_positive_integer(const Rational& r);

// Precondition: is_integer(r) and the value fits in long.
long to_long(const Rational& r);

Rational factorial(long n);

// x (x+1) ... (x+m-1); empty product for m = 0.
Rational rising_factorial(const Rational& x, long m);

}  // namespace g2v
