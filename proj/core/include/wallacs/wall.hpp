#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallacs/matrix.hpp"

namespace wallacs {

// Coefficient group of the tangential invariant chi, i.e. the reduced real
// K-group of the middle sphere: Z when n = 0 mod 4, Z/2 when n = 1, 2 mod 8,
// trivial otherwise.
enum class ChiGroup { IntegerGroup, OrderTwoGroup, TrivialGroup };

ChiGroup chi_coefficient_group(int n);

// Invariant system of a closed (n-1)-connected 2n-manifold: half-dimension
// n >= 3, middle Betti number k, the k x k intersection form on middle
// cohomology ((-1)^n-symmetric, unimodular), and, when the coefficient group
// is nontrivial, the vector chi of tangential invariants over the chosen
// basis. For an order-two coefficient group the chi entries live in {0, 1}.
struct WallInvariants {
  int n = 3;
  int k = 0;
  IntMatrix gram;
  std::optional<IntVec> chi;
  std::string name;
};

struct Finding {
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Finding> violations;
  std::vector<Finding> warnings;
};

// Structural checks (dimensions, symmetry type, |det| = 1, chi presence and
// length) plus, when n = 0 mod 4, integrality of the derived top Pontrjagin
// number and of the A-hat quantities; a failure there means no closed
// manifold realizes the system. Also warns when an even form has signature
// not divisible by 8.
ValidationReport validate(const WallInvariants& w);

// Signature of the intersection form via exact congruence diagonalization.
// Requires n even; the form must be symmetric and nondegenerate.
int signature(const IntMatrix& symmetric_gram);
int signature(const WallInvariants& w);

// k + 2 for n even, 2 - k for n odd.
long long euler_number(const WallInvariants& w);

// Intersection pairing x^T gram y.
Int pair(const WallInvariants& w, const IntVec& x, const IntVec& y);

}  // namespace wallacs
