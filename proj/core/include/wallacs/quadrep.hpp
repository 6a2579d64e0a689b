#pragma once

#include <optional>
#include <vector>

#include "wallacs/matrix.hpp"

namespace wallacs {

enum class FormClass { PositiveDefinite, NegativeDefinite, Indefinite };

enum class RepStatus { Found, NoneExhaustive, NoneObstruction, UnknownWithinBound };

enum class Obstruction { Parity, Mod4, Sign };

// Does some integer vector x satisfy x^T gram x = target, optionally with
// x = congruence (mod 2) entrywise? gram must be symmetric and unimodular.
struct RepProblem {
  IntMatrix gram;
  Int target;
  std::optional<std::vector<int>> congruence;  // entries in {0, 1}
  int search_bound = 32;
};

struct RepOutcome {
  RepStatus status = RepStatus::UnknownWithinBound;
  std::optional<IntVec> witness;
  std::optional<Obstruction> obstruction;
  std::optional<int> bound_used;
};

// Sign classification via exact congruence diagonalization. The empty form
// counts as positive definite. Asymmetric input -> std::domain_error.
FormClass classify_form(const IntMatrix& gram);

// Cheap sound impossibility checks, tried in order:
//  Parity: every diagonal entry even but the target odd;
//  Mod4:   a congruence class is fixed and target != v^T gram v (mod 4);
//  Sign:   definite form, nonzero target of the wrong sign.
// Skipped for the empty form (enumeration settles it directly).
std::optional<Obstruction> quick_obstructions(const RepProblem& p);

// Decision procedure. Definite forms are enumerated completely inside the
// ellipsoid x^T gram x = target via exact completed-squares bounds, so a
// miss is a proof (NoneExhaustive). Indefinite forms are scanned over
// max|x_i| <= search_bound and a miss is only UnknownWithinBound. A found
// witness is canonical: smallest max-norm, ties broken entrywise by
// 0 < 1 < -1 < 2 < -2 < ... Every returned witness is re-checked exactly.
RepOutcome solve(const RepProblem& p);

// Reference implementation: plain nested-loop scan of [-box, box]^k
// honoring the congruence; returns the canonical witness or NoneExhaustive
// meaning "nothing in the scanned box". Guards k * (2 box + 1)^k <= 10^7
// and throws std::length_error beyond it.
RepOutcome brute_force_oracle(const RepProblem& p, int box);

// The canonical witness order described above; exposed for tests.
bool canonical_less(const IntVec& a, const IntVec& b);

}  // namespace wallacs
