#include "wallacs/decision.hpp"

#include "wallacs/charnum.hpp"

namespace wallacs {

namespace {

Int pow2(unsigned e) {
  Int r = 1;
  return r << e;
}

bool chi_all_even(const WallInvariants& w) {
  if (!w.chi.has_value()) return true;
  for (const Int& c : *w.chi)
    if (c % 2 != 0) return false;
  return true;
}

// (B_{n/2} -+ B_{n/4}) / (B_{n/2} B_{n/4}) * scale, checked 2-adic.
Rational congruence_quantity(int n, int sign, const Rational& scale) {
  const Rational bh = bernoulli(static_cast<unsigned>(n) / 2);
  const Rational bq = bernoulli(static_cast<unsigned>(n) / 4);
  const Rational q = (bh + Rational(sign) * bq) / (bh * bq) * scale;
  if (!is_two_adic_integer(q))
    throw InconsistentInvariants(
        "inconsistent invariants: stable-structure congruence quantity " +
        to_string(q) + " is not a 2-adic integer");
  return q;
}

}  // namespace

const char* to_string(AcsCase c) {
  switch (c) {
    case AcsCase::ChernEulerIdentity: return "chern-euler-identity";
    case AcsCase::QuadraticRepresentationMod2: return "quadratic-representation-mod2";
    case AcsCase::QuadraticRepresentation: return "quadratic-representation";
    case AcsCase::EulerDivisibilityEven: return "euler-divisibility-even";
    case AcsCase::EulerDivisibility: return "euler-divisibility";
  }
  return "?";
}

StableVerdict decide_stable(const WallInvariants& w) {
  StableVerdict s;
  s.case_label = ((w.n % 8) + 8) % 8;
  switch (s.case_label) {
    case 2:
    case 3:
    case 5:
    case 6:
    case 7:
      s.admits = true;
      s.detail = "always-admits";
      return s;
    case 0: {
      const Rational scale =
          make_rational(Int(w.n) * Int(signature(w.gram)), pow2(static_cast<unsigned>(w.n)));
      const Rational q = congruence_quantity(w.n, -1, scale);
      s.congruence_quantity = q;
      s.congruence_bit = mod2_of_2adic_integer(q);
      s.chi_even = chi_all_even(w);
      s.admits = *s.chi_even && *s.congruence_bit == 0;
      s.detail = !*s.chi_even          ? "chi-odd"
                 : *s.congruence_bit   ? "congruence-value-1"
                                       : "chi-even-congruence-value-0";
      return s;
    }
    case 4: {
      const Rational scale =
          make_rational(Int(signature(w.gram)), pow2(static_cast<unsigned>(w.n) - 2));
      const Rational q = congruence_quantity(w.n, +1, scale);
      s.congruence_quantity = q;
      s.congruence_bit = mod2_of_2adic_integer(q);
      s.admits = *s.congruence_bit == 0;
      s.detail = s.admits ? "congruence-value-0" : "congruence-value-1";
      return s;
    }
    case 1: {
      s.chi_even = chi_all_even(w);
      s.admits = *s.chi_even;
      s.detail = s.admits ? "chi-zero" : "chi-nonzero";
      return s;
    }
  }
  throw std::logic_error("decide_stable: unreachable");
}

AcsVerdict decide_acs(const WallInvariants& w, int search_bound) {
  AcsVerdict v;
  v.bound_used = search_bound;
  v.stable = decide_stable(w);

  const int r8 = ((w.n % 8) + 8) % 8;
  const int r4 = r8 % 4;
  v.case_label = r4 == 0   ? AcsCase::ChernEulerIdentity
                 : r8 == 2 ? AcsCase::QuadraticRepresentationMod2
                 : r8 == 6 ? AcsCase::QuadraticRepresentation
                 : r4 == 1 ? AcsCase::EulerDivisibilityEven
                           : AcsCase::EulerDivisibility;

  // The per-case data is cheap to derive (searches excluded), so it is
  // reported even when the stable obstruction already settles the answer.
  switch (v.case_label) {
    case AcsCase::ChernEulerIdentity: {
      const IntVec pq = pontrjagin_quarter(w);
      v.identity_lhs = Rational(4) * pontrjagin_half(w) - Rational(pair(w, pq, pq));
      v.identity_rhs = Int(8) * (Int(w.k) + 2);
      break;
    }
    case AcsCase::QuadraticRepresentationMod2:
    case AcsCase::QuadraticRepresentation: {
      const Int f = factorial(static_cast<unsigned>(w.n) / 2 - 1);
      v.target_exact = (Rational(2 * (Int(w.k) + 2)) + pontrjagin_half(w)) /
                       Rational(f * f);
      break;
    }
    case AcsCase::EulerDivisibilityEven:
      v.divisor = Int(2) * factorial(static_cast<unsigned>(w.n) - 1);
      break;
    case AcsCase::EulerDivisibility:
      v.divisor = factorial(static_cast<unsigned>(w.n) - 1);
      break;
  }

  if (!v.stable.admits) {
    v.admits = Admits::No;
    v.reason = "stable-fails";
    return v;
  }

  switch (v.case_label) {
    case AcsCase::ChernEulerIdentity: {
      if (*v.identity_lhs == Rational(*v.identity_rhs)) {
        v.admits = Admits::Yes;
      } else {
        v.admits = Admits::No;
        v.reason = "identity-fails";
      }
      return v;
    }
    case AcsCase::QuadraticRepresentationMod2:
    case AcsCase::QuadraticRepresentation: {
      if (!is_integer(*v.target_exact)) {
        v.admits = Admits::No;
        v.reason = "target-not-integral";
        return v;
      }
      v.target = numerator_of(*v.target_exact);
      RepProblem p;
      p.gram = w.gram;
      p.target = *v.target;
      p.search_bound = search_bound;
      if (v.case_label == AcsCase::QuadraticRepresentationMod2) {
        std::vector<int> parity(static_cast<std::size_t>(w.k));
        for (std::size_t i = 0; i < parity.size(); ++i)
          parity[i] = static_cast<int>(mod_nonneg((*w.chi)[i], 2));
        p.congruence = std::move(parity);
      }
      const RepOutcome r = solve(p);
      v.rep = r;
      switch (r.status) {
        case RepStatus::Found:
          v.admits = Admits::Yes;
          v.witness = r.witness;
          break;
        case RepStatus::UnknownWithinBound:
          v.admits = Admits::Unknown;
          v.reason = "search-inconclusive";
          break;
        case RepStatus::NoneObstruction:
          v.admits = Admits::No;
          v.reason = r.obstruction == Obstruction::Parity ? "obstruction-parity"
                     : r.obstruction == Obstruction::Mod4 ? "obstruction-mod4"
                                                          : "obstruction-sign";
          break;
        case RepStatus::NoneExhaustive:
          v.admits = Admits::No;
          v.reason = "not-representable";
          break;
      }
      return v;
    }
    case AcsCase::EulerDivisibilityEven:
    case AcsCase::EulerDivisibility: {
      const Int value = Int(2) - Int(w.k);
      if (value % *v.divisor == 0) {
        v.admits = Admits::Yes;
      } else {
        v.admits = Admits::No;
        v.reason = "divisibility";
      }
      return v;
    }
  }
  throw std::logic_error("decide_acs: unreachable");
}

}  // namespace wallacs
