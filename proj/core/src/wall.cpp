#include "wallacs/wall.hpp"

#include "wallacs/charnum.hpp"

namespace wallacs {

ChiGroup chi_coefficient_group(int n) {
  switch (((n % 8) + 8) % 8) {
    case 0:
    case 4:
      return ChiGroup::IntegerGroup;
    case 1:
    case 2:
      return ChiGroup::OrderTwoGroup;
    default:
      return ChiGroup::TrivialGroup;
  }
}

namespace {

void violation(ValidationReport& r, std::string code, std::string message) {
  r.valid = false;
  r.violations.push_back({std::move(code), std::move(message)});
}

void warning(ValidationReport& r, std::string code, std::string message) {
  r.warnings.push_back({std::move(code), std::move(message)});
}

bool all_diagonal_even(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i) % 2 != 0) return false;
  return true;
}

}  // namespace

ValidationReport validate(const WallInvariants& w) {
  ValidationReport r;
  if (w.n < 3) violation(r, "n-too-small", "n must be at least 3");
  if (w.k < 0) violation(r, "negative-betti", "middle Betti number must be >= 0");
  const auto k = static_cast<std::size_t>(w.k < 0 ? 0 : w.k);
  if (w.gram.rows() != k || w.gram.cols() != k) {
    violation(r, "gram-shape", "intersection form must be k x k");
    return r;
  }

  const bool n_even = w.n % 2 == 0;
  bool shape_ok = true;
  if (n_even) {
    if (!is_symmetric(w.gram)) {
      violation(r, "not-symmetric", "intersection form must be symmetric for even n");
      shape_ok = false;
    }
  } else {
    if (!is_skew_symmetric_zero_diagonal(w.gram)) {
      violation(r, "not-antisymmetric",
                "intersection form must be antisymmetric with zero diagonal for odd n");
      shape_ok = false;
    }
    if (w.k % 2 != 0)
      violation(r, "odd-skew-rank",
                "a unimodular antisymmetric form has even rank");
  }

  const Int det = determinant(w.gram);
  if (det != 1 && det != -1)
    violation(r, "not-unimodular",
              "intersection form must have determinant +1 or -1, got " + det.str());

  const ChiGroup group = chi_coefficient_group(w.n);
  if (group == ChiGroup::TrivialGroup) {
    if (w.chi.has_value())
      violation(r, "chi-forbidden",
                "chi supplied but its coefficient group is trivial for n = " +
                    std::to_string(w.n));
  } else {
    if (!w.chi.has_value()) {
      violation(r, "chi-missing",
                "chi required for n = " + std::to_string(w.n));
    } else if (w.chi->size() != k) {
      violation(r, "chi-length", "chi must have one entry per basis vector");
    } else if (group == ChiGroup::OrderTwoGroup) {
      for (const Int& c : *w.chi)
        if (c != 0 && c != 1) {
          warning(r, "chi-not-normalized",
                  "order-two chi entries are interpreted mod 2");
          break;
        }
    }
  }

  if (!r.valid) return r;

  if (n_even && shape_ok) {
    const int tau = signature(w.gram);
    if (all_diagonal_even(w.gram) && tau % 8 != 0)
      warning(r, "even-form-signature-mod-8",
              "even unimodular forms have signature divisible by 8; got " +
                  std::to_string(tau));
    if (w.n % 4 == 0) {
      const Rational ph = pontrjagin_half(w);
      if (!is_integer(ph))
        violation(r, "p-half-not-integral",
                  "derived top Pontrjagin number " + to_string(ph) +
                      " is not an integer; no closed manifold realizes this system");
      else {
        const Rational ah = a_hat(w);
        if (!is_integer(ah))
          violation(r, "a-hat-not-integral",
                    "derived A-hat value " + to_string(ah) +
                        " is not an integer; no closed manifold realizes this system");
        else {
          const Rational ac = a_hat_C(w);
          if (!is_integer(ac))
            violation(r, "a-hat-c-not-integral",
                      "derived complex A-hat value " + to_string(ac) +
                          " is not an integer; no closed manifold realizes this system");
        }
      }
    }
  }
  return r;
}

int signature(const IntMatrix& symmetric_gram) {
  int sig = 0;
  for (const Rational& d : congruence_diagonal(symmetric_gram))
    sig += d > 0 ? 1 : -1;
  return sig;
}

int signature(const WallInvariants& w) {
  if (w.n % 2 != 0)
    throw std::domain_error("signature: defined only for even n");
  return signature(w.gram);
}

long long euler_number(const WallInvariants& w) {
  return w.n % 2 == 0 ? static_cast<long long>(w.k) + 2
                      : 2 - static_cast<long long>(w.k);
}

Int pair(const WallInvariants& w, const IntVec& x, const IntVec& y) {
  return evaluate_form(w.gram, x, y);
}

}  // namespace wallacs
