#pragma once

#include <optional>

#include "wallacs/wall.hpp"

namespace wallacs {

// Characteristic numbers derived from an invariant system. Which fields are
// populated depends on n mod 4; see compute_char_numbers.
struct CharNumbers {
  std::optional<long long> tau;        // n even
  long long euler = 0;                 // always
  std::optional<int> a_coeff;          // n = 0 mod 4
  std::optional<IntVec> p_quarter;     // n = 0 mod 4
  std::optional<Rational> p_half;      // n even
  std::optional<Rational> a_hat;       // n = 0 mod 4
  std::optional<Rational> a_hat_c;     // n = 0 mod 4
};

// 1 when n = 0 mod 8, 2 when n = 4 mod 8. Requires n = 0 mod 4.
int a_coefficient(int n);

// Middle Pontrjagin class in basis coordinates:
//   p_{n/4} = a_coefficient(n) * (n/2 - 1)! * chi
// (positive sign convention). Requires n = 0 mod 4 and chi present.
IntVec pontrjagin_quarter(const WallInvariants& w);

// Top Pontrjagin number. For n = 2 mod 4:
//   p_{n/2} = n! / (2^n (2^{n-1} - 1) B_{n/2}) * tau.
// For n = 0 mod 4 the I(chi, chi) correction term is added:
//   (a^2/2) ((n/2-1)!)^2 {1 - (2^{n/2-1}-1)^2/(2^{n-1}-1) * C(n, n/2)
//                           * B_{n/4}^2 / B_{n/2}} * I(chi, chi).
// Exact rational; integral for systems realized by manifolds.
Rational pontrjagin_half(const WallInvariants& w);

// A-hat genus in terms of the two Pontrjagin numbers:
//   -B_{n/2}/(2 n!) p_{n/2}
//   + 1/2 {B_{n/4}^2/(4 ((n/2)!)^2) + B_{n/2}/(2 n!)} I(p_{n/4}, p_{n/4}).
// Requires n = 0 mod 4.
Rational a_hat(const WallInvariants& w);

// Complexified A-hat:
//   2n {1 + 1/B_{n/2} + (2^{n-1}-1)/(2^{n/2}-1)^2 * s} a_hat
//   + 1/(2^{n/2}-1)^2 * s * n tau / 2^n,
// where s = ((-1)^{n/4} B_{n/2} - B_{n/4}) / (B_{n/2} B_{n/4}).
// Requires n = 0 mod 4. Its parity matches the stable-structure congruence.
Rational a_hat_C(const WallInvariants& w);

CharNumbers compute_char_numbers(const WallInvariants& w);

}  // namespace wallacs
