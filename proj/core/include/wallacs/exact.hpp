#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wallacs {

// Exact arithmetic carriers. Rational is always in lowest terms with a
// positive denominator; Int is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved to the numerator. Throws std::domain_error on
// a zero denominator.
Rational make_rational(const Int& num, const Int& den);

Int numerator_of(const Rational& q);
Int denominator_of(const Rational& q);

// "3", "-14" or "45/7"; lowest terms, denominator > 0.
std::string to_string(const Rational& q);

Int factorial(unsigned t);

// C(t, s); requires 0 <= s <= t, otherwise std::domain_error.
Int binomial(unsigned t, unsigned s);

// Bernoulli numbers in the positive convention used throughout this library:
// bernoulli(m) = |B_{2m}| of the modern signed sequence defined by
// sum_{j=0}^{t} C(t+1, j) B_j = 0, B_0 = 1.
// So bernoulli(1) = 1/6, bernoulli(2) = 1/30, bernoulli(3) = 1/42, ...
// Every value is positive and its denominator is square-free and even
// (von Staudt-Clausen). Requires m >= 1. Memoized; safe to call concurrently.
Rational bernoulli(unsigned m);

// nu_2 of a nonzero rational: nu_2(numerator) - nu_2(denominator).
// Throws std::domain_error on 0.
long two_adic_valuation(const Rational& q);

// q is a 2-adic integer iff q = 0 or nu_2(q) >= 0.
bool is_two_adic_integer(const Rational& q);

// Parity of a 2-adic integer: the reduced denominator is odd, so the value
// mod 2 is the parity of the reduced numerator. Returns 0 or 1.
// Throws std::domain_error when q is not a 2-adic integer.
int mod2_of_2adic_integer(const Rational& q);

bool is_integer(const Rational& q);

// Floor/ceil integer division, denominator must be positive.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// x mod m normalized into [0, m).
Int mod_nonneg(const Int& x, const Int& m);

}  // namespace wallacs
