#include "wallacs/exact.hpp"

#include <mutex>
#include <vector>

namespace wallacs {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Int numerator_of(const Rational& q) { return numerator(q); }
Int denominator_of(const Rational& q) { return denominator(q); }

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Int factorial(unsigned t) {
  Int r = 1;
  for (unsigned i = 2; i <= t; ++i) r *= i;
  return r;
}

Int binomial(unsigned t, unsigned s) {
  if (s > t) throw std::domain_error("binomial: require 0 <= s <= t");
  if (s > t - s) s = t - s;
  Int r = 1;
  for (unsigned i = 1; i <= s; ++i) {
    r *= t - s + i;
    r /= i;  // exact at each step
  }
  return r;
}

namespace {

// Signed sequence B_t with B_1 = -1/2, from the defining recurrence.
Rational signed_bernoulli(std::size_t t) {
  static std::vector<Rational> memo{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= t) {
    const std::size_t s = memo.size();
    Rational acc(0);
    for (std::size_t j = 0; j < s; ++j)
      acc += Rational(binomial(static_cast<unsigned>(s) + 1,
                               static_cast<unsigned>(j))) *
             memo[j];
    memo.push_back(-acc / Rational(Int(s) + 1));
  }
  return memo[t];
}

}  // namespace

Rational bernoulli(unsigned m) {
  if (m == 0) throw std::domain_error("bernoulli: index must be >= 1");
  Rational b = signed_bernoulli(2 * std::size_t(m));
  return b < 0 ? Rational(-b) : b;
}

long two_adic_valuation(const Rational& q) {
  if (q == 0) throw std::domain_error("two_adic_valuation: zero has no finite valuation");
  const Int num = abs(numerator(q));
  const Int den = denominator(q);
  return static_cast<long>(lsb(num)) - static_cast<long>(lsb(den));
}

bool is_two_adic_integer(const Rational& q) {
  return q == 0 || two_adic_valuation(q) >= 0;
}

int mod2_of_2adic_integer(const Rational& q) {
  if (q == 0) return 0;
  if (two_adic_valuation(q) < 0)
    throw std::domain_error("mod2_of_2adic_integer: not a 2-adic integer");
  return numerator(q) % 2 == 0 ? 0 : 1;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::domain_error("floor_div: denominator must be positive");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::domain_error("ceil_div: denominator must be positive");
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Int mod_nonneg(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace wallacs
