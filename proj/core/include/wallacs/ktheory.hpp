#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wallacs {

// One cyclic summand: Z when order is absent, Z/order otherwise.
struct Summand {
  std::string generator;
  std::optional<int> order;
};

// Image of one source generator under realification, as a formal sum of
// target generators. Coefficients are reduced mod the target order; an empty
// image means the generator maps to 0.
struct ReductionTerm {
  int coeff = 0;
  std::string target;
};

struct ReductionRule {
  std::string source;
  std::vector<ReductionTerm> image;
};

struct GroupPresentation {
  std::vector<Summand> summands;
  std::vector<ReductionRule> reduction_rules;
};

// Reduced complex and real K-groups with the realification map encoded as
// reduction rules on the complex side (targets are real generators).
struct KTheoryRow {
  GroupPresentation ku;
  GroupPresentation ko;
};

// Row for a sphere S^m, m >= 1, keyed by m mod 8. Generators omega_C/omega_R.
KTheoryRow sphere_row(int m);

// Row for a closed (n-1)-connected 2n-manifold with middle Betti number k,
// keyed by n mod 8. Generators xi, eta1..etak / gamma, zeta1..zetak.
// manifold_row(n, 0) agrees structurally with sphere_row(2n).
KTheoryRow manifold_row(int n, int k);

std::string render_text(const KTheoryRow& row);

}  // namespace wallacs
