#include "wallacs/charnum.hpp"

namespace wallacs {

namespace {

void require_quarter_case(const WallInvariants& w, const char* who) {
  if (w.n % 4 != 0)
    throw std::domain_error(std::string(who) + ": requires n divisible by 4");
  if (!w.chi.has_value() || w.chi->size() != static_cast<std::size_t>(w.k))
    throw std::domain_error(std::string(who) + ": requires chi of length k");
}

Int pow2(unsigned e) {
  Int r = 1;
  return r << e;
}

// n! / (2^n (2^{n-1} - 1) B_{n/2})
Rational tau_coefficient(int n) {
  const unsigned un = static_cast<unsigned>(n);
  const Rational den = Rational(pow2(un) * (pow2(un - 1) - 1)) * bernoulli(un / 2);
  return Rational(factorial(un)) / den;
}

}  // namespace

int a_coefficient(int n) {
  if (n % 4 != 0) throw std::domain_error("a_coefficient: requires n divisible by 4");
  return n % 8 == 0 ? 1 : 2;
}

IntVec pontrjagin_quarter(const WallInvariants& w) {
  require_quarter_case(w, "pontrjagin_quarter");
  const Int scale = Int(a_coefficient(w.n)) * factorial(static_cast<unsigned>(w.n / 2 - 1));
  IntVec out = *w.chi;
  for (Int& c : out) c *= scale;
  return out;
}

Rational pontrjagin_half(const WallInvariants& w) {
  if (w.n % 2 != 0) throw std::domain_error("pontrjagin_half: requires even n");
  const Rational tau_term = tau_coefficient(w.n) * Rational(signature(w.gram));
  if (w.n % 4 != 0) return tau_term;

  require_quarter_case(w, "pontrjagin_half");
  const unsigned un = static_cast<unsigned>(w.n);
  const Int a = a_coefficient(w.n);
  const Int half_fact = factorial(un / 2 - 1);
  const Rational bq = bernoulli(un / 4);
  const Rational bh = bernoulli(un / 2);
  const Rational brace =
      Rational(1) - Rational((pow2(un / 2 - 1) - 1) * (pow2(un / 2 - 1) - 1),
                             pow2(un - 1) - 1) *
                        Rational(binomial(un, un / 2)) * bq * bq / bh;
  const Rational chi_term = Rational(a * a * half_fact * half_fact, 2) * brace *
                            Rational(pair(w, *w.chi, *w.chi));
  return chi_term + tau_term;
}

Rational a_hat(const WallInvariants& w) {
  require_quarter_case(w, "a_hat");
  const unsigned un = static_cast<unsigned>(w.n);
  const Rational bh = bernoulli(un / 2);
  const Rational bq = bernoulli(un / 4);
  const Rational two_nfact = Rational(2) * Rational(factorial(un));
  const IntVec pq = pontrjagin_quarter(w);
  const Rational ipp(pair(w, pq, pq));
  const Int mid_fact = factorial(un / 2);
  return -bh / two_nfact * pontrjagin_half(w) +
         Rational(1, 2) * (bq * bq / Rational(4 * mid_fact * mid_fact) + bh / two_nfact) * ipp;
}

Rational a_hat_C(const WallInvariants& w) {
  require_quarter_case(w, "a_hat_C");
  const unsigned un = static_cast<unsigned>(w.n);
  const Rational bh = bernoulli(un / 2);
  const Rational bq = bernoulli(un / 4);
  const int sign = (w.n / 4) % 2 == 0 ? 1 : -1;
  const Rational s = (Rational(sign) * bh - bq) / (bh * bq);
  const Int square = (pow2(un / 2) - 1) * (pow2(un / 2) - 1);
  const Rational tau_scaled = Rational(Int(w.n) * Int(signature(w.gram)), pow2(un));
  return Rational(2 * w.n) *
             (Rational(1) + Rational(1) / bh + Rational(pow2(un - 1) - 1, square) * s) *
             a_hat(w) +
         Rational(1, square) * s * tau_scaled;
}

CharNumbers compute_char_numbers(const WallInvariants& w) {
  CharNumbers c;
  c.euler = euler_number(w);
  if (w.n % 2 == 0) {
    c.tau = signature(w.gram);
    c.p_half = pontrjagin_half(w);
    if (w.n % 4 == 0) {
      c.a_coeff = a_coefficient(w.n);
      c.p_quarter = pontrjagin_quarter(w);
      c.a_hat = a_hat(w);
      c.a_hat_c = a_hat_C(w);
    }
  }
  return c;
}

}  // namespace wallacs
