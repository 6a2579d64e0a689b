#pragma once

#include "wallacs/quadrep.hpp"
#include "wallacs/wall.hpp"

namespace wallacs {

// Raised when an invariant system makes a quantity that must be a 2-adic
// integer fail nu_2 >= 0; no closed manifold produces such a system.
struct InconsistentInvariants : std::domain_error {
  using std::domain_error::domain_error;
};

// Stable existence criterion, dispatched on n mod 8:
//   2,3,5,6,7: always admits;
//   0: chi = 0 (mod 2) and (B_{n/2}-B_{n/4})/(B_{n/2}B_{n/4}) * n tau / 2^n
//      even as a 2-adic integer;
//   4: (B_{n/2}+B_{n/4})/(B_{n/2}B_{n/4}) * tau / 2^{n-2} even;
//   1: chi = 0.
struct StableVerdict {
  bool admits = false;
  int case_label = 0;  // n mod 8
  std::string detail;
  std::optional<Rational> congruence_quantity;  // residues 0, 4
  std::optional<int> congruence_bit;
  std::optional<bool> chi_even;  // residues 0, 1
};

enum class Admits { Yes, No, Unknown };

// Which unstable condition applies, keyed by the residue of n.
enum class AcsCase {
  ChernEulerIdentity,          // n = 0 mod 4
  QuadraticRepresentationMod2, // n = 2 mod 8
  QuadraticRepresentation,     // n = 6 mod 8
  EulerDivisibilityEven,       // n = 1 mod 4: 2 (n-1)! | 2 - k
  EulerDivisibility            // n = 3 mod 4: (n-1)! | 2 - k
};

const char* to_string(AcsCase c);

struct AcsVerdict {
  Admits admits = Admits::No;
  StableVerdict stable;
  AcsCase case_label = AcsCase::ChernEulerIdentity;
  std::string reason;                  // set when admits != Yes
  std::optional<IntVec> witness;       // representation cases
  std::optional<Int> target;           // representation cases, integral target
  std::optional<Rational> target_exact;  // representation cases, before the
                                         // integrality check
  std::optional<Rational> identity_lhs;  // identity case: 4 p_{n/2} - I(p,p)
  std::optional<Int> identity_rhs;       // identity case: 8 (k + 2)
  std::optional<Int> divisor;            // divisibility cases
  std::optional<RepOutcome> rep;         // raw search outcome
  int bound_used = 0;
};

// Requires a system that passed validate(). Throws InconsistentInvariants
// when the residue-0/4 congruence quantity is not a 2-adic integer.
StableVerdict decide_stable(const WallInvariants& w);

// Stable existence first, then the unstable condition for the residue of n.
// Unknown only when the bounded indefinite search was inconclusive.
AcsVerdict decide_acs(const WallInvariants& w, int search_bound = 32);

}  // namespace wallacs
