#include "wallacs/quadrep.hpp"

#include <cstdlib>

namespace wallacs {

namespace {

bool zigzag_less(const Int& a, const Int& b) {
  const Int aa = abs(a), bb = abs(b);
  if (aa != bb) return aa < bb;
  return a > b;  // equal magnitude: positive before negative
}

Int max_norm(const IntVec& x) {
  Int m = 0;
  for (const Int& v : x)
    if (abs(v) > m) m = abs(v);
  return m;
}

void check_problem(const RepProblem& p) {
  if (!is_symmetric(p.gram))
    throw std::domain_error("quadrep: gram matrix must be symmetric");
  const Int det = determinant(p.gram);
  if (det != 1 && det != -1)
    throw std::domain_error("quadrep: gram matrix must be unimodular");
  if (p.congruence.has_value()) {
    if (p.congruence->size() != p.gram.rows())
      throw std::domain_error("quadrep: congruence length must match rank");
    for (int v : *p.congruence)
      if (v != 0 && v != 1)
        throw std::domain_error("quadrep: congruence entries must be 0 or 1");
  }
  if (p.search_bound < 0)
    throw std::domain_error("quadrep: search bound must be >= 0");
}

void assert_witness(const RepProblem& p, const IntVec& x) {
  if (evaluate_form(p.gram, x, x) != p.target)
    throw std::logic_error("quadrep: witness fails the form equation");
  if (p.congruence.has_value())
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mod_nonneg(x[i], 2) != (*p.congruence)[i])
        throw std::logic_error("quadrep: witness fails the congruence");
}

// All solutions of x^T A x = c for positive definite A, honoring the parity
// constraint, found inside the exact completed-squares ellipsoid bounds.
std::vector<IntVec> enumerate_definite(const IntMatrix& A, const Int& c,
                                       const std::optional<std::vector<int>>& parity) {
  const std::size_t k = A.rows();
  std::vector<IntVec> out;
  if (c < 0) return out;
  if (k == 0) {
    if (c == 0) out.push_back({});
    return out;
  }
  const QuadraticCompletion qc = quadratic_completion(A);
  IntVec x(k);

  // Levels run from k-1 down to 0; the inner sum s_i needs the later x_j.
  auto recurse = [&](auto&& self, std::size_t level, const Rational& budget) -> void {
    const std::size_t i = level - 1;
    Rational s(0);
    for (std::size_t j = i + 1; j < k; ++j)
      if (x[j] != 0) s += qc.u[i][j] * Rational(x[j]);
    // d (t + s)^2 <= budget  <=>  |t q + ps| <= sqrt(N q^2 / D)
    const Rational r = budget / qc.d[i];
    const Int N = numerator(r), D = denominator(r);
    const Int q = denominator(s), ps = numerator(s);
    const Int Y = sqrt(Int(N * q * q / D));
    Int lo = ceil_div(-Y - ps, q);
    Int hi = floor_div(Y - ps, q);
    Int step = 1;
    if (parity.has_value()) {
      const Int want = (*parity)[i];
      if (mod_nonneg(lo, 2) != want) ++lo;
      step = 2;
    }
    for (Int t = lo; t <= hi; t += step) {
      const Rational inner = Rational(t) + s;
      const Rational rest = budget - qc.d[i] * inner * inner;
      if (rest < 0) continue;  // boundary of the integer sqrt estimate
      x[i] = t;
      if (i == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        self(self, i, rest);
      }
    }
    x[i] = 0;
  };
  recurse(recurse, k, Rational(c));
  return out;
}

// Shell-ordered scan of max|x_i| <= bound for the indefinite case. Shells of
// growing max-norm, zigzag order within a shell, so the first hit is the
// canonical witness. Generic over the arithmetic type: int64 when entries
// are small enough to rule out overflow, big integers otherwise.
template <typename T>
struct ShellScan {
  std::vector<std::vector<T>> g;
  T target;
  std::optional<std::vector<int>> parity;
  std::size_t k;
  std::vector<T> x;
  std::vector<T> prune_coeff;  // C_i: |remaining terms| <= m^2 C_i after level i
  IntVec found;
  bool has_found = false;

  void init(const IntMatrix& A, const Int& c,
            const std::optional<std::vector<int>>& cong) {
    k = A.rows();
    g.assign(k, std::vector<T>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) g[i][j] = static_cast<T>(A(i, j));
    target = static_cast<T>(c);
    parity = cong;
    x.assign(k, T(0));
    prune_coeff.assign(k, T(0));
    for (std::size_t i = 0; i < k; ++i) {
      T acc(0);
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = i + 1; b < k; ++b) acc += 2 * abs_of(g[a][b]);
      for (std::size_t a = i + 1; a < k; ++a)
        for (std::size_t b = i + 1; b < k; ++b) acc += abs_of(g[a][b]);
      prune_coeff[i] = acc;
    }
  }

  static T abs_of(const T& v) { return v < 0 ? T(-v) : v; }

  std::vector<std::vector<long>> vals_full, vals_boundary;

  bool parity_ok(std::size_t i, long v) const {
    if (!parity.has_value()) return true;
    return ((v % 2) + 2) % 2 == (*parity)[i];
  }

  // Zigzag values for one coordinate at shell m: 0, 1, -1, ..., m, -m.
  void build_values(long m) {
    vals_full.assign(k, {});
    vals_boundary.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      if (parity_ok(i, 0)) vals_full[i].push_back(0);
      for (long a = 1; a <= m; ++a) {
        if (parity_ok(i, a)) vals_full[i].push_back(a);
        if (parity_ok(i, -a)) vals_full[i].push_back(-a);
      }
      if (parity_ok(i, m)) vals_boundary[i].push_back(m);
      if (m != 0 && parity_ok(i, -m)) vals_boundary[i].push_back(-m);
    }
  }

  bool recurse(std::size_t i, bool attained, const T& partial, long m) {
    if (i == k) {
      if (attained && partial == target) {
        found.assign(x.begin(), x.end());
        has_found = true;
        return true;
      }
      return false;
    }
    const bool boundary_only = (i == k - 1) && !attained;
    const T shell_room = T(m) * T(m) * prune_coeff[i];
    for (long v : boundary_only ? vals_boundary[i] : vals_full[i]) {
      x[i] = T(v);
      T delta = g[i][i] * T(v) * T(v);
      for (std::size_t j = 0; j < i; ++j) delta += 2 * g[j][i] * x[j] * T(v);
      const T next = partial + delta;
      const T gap = next < target ? target - next : next - target;
      if (gap > shell_room) continue;
      if (recurse(i + 1, attained || std::abs(v) == m, next, m)) return true;
    }
    x[i] = T(0);
    return false;
  }

  bool run(long bound) {
    for (long m = 0; m <= bound; ++m) {
      build_values(m);
      if (recurse(0, false, T(0), m)) return true;
    }
    return false;
  }
};

bool fits_small(const IntMatrix& A, const Int& c, int bound) {
  const Int lim = Int(1) << 20;
  if (abs(c) >= (Int(1) << 60) || bound > 1024 || A.rows() > 64) return false;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (abs(A(i, j)) >= lim) return false;
  return true;
}

std::optional<IntVec> shell_scan(const IntMatrix& A, const Int& c,
                                 const std::optional<std::vector<int>>& cong,
                                 int bound) {
  if (fits_small(A, c, bound)) {
    ShellScan<long long> scan;
    scan.init(A, c, cong);
    if (scan.run(bound)) return scan.found;
    return std::nullopt;
  }
  ShellScan<Int> scan;
  scan.init(A, c, cong);
  if (scan.run(bound)) return scan.found;
  return std::nullopt;
}

IntMatrix negate(const IntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = -m(i, j);
  return r;
}

}  // namespace

FormClass classify_form(const IntMatrix& gram) {
  if (!is_symmetric(gram))
    throw std::domain_error("classify_form: matrix is not symmetric");
  bool pos = false, neg = false;
  for (const Rational& d : congruence_diagonal(gram)) (d > 0 ? pos : neg) = true;
  if (pos && neg) return FormClass::Indefinite;
  return neg ? FormClass::NegativeDefinite : FormClass::PositiveDefinite;
}

std::optional<Obstruction> quick_obstructions(const RepProblem& p) {
  const std::size_t k = p.gram.rows();
  if (k == 0) return std::nullopt;

  bool diag_even = true;
  for (std::size_t i = 0; i < k; ++i)
    if (p.gram(i, i) % 2 != 0) diag_even = false;
  if (diag_even && mod_nonneg(p.target, 2) == 1) return Obstruction::Parity;

  if (p.congruence.has_value()) {
    IntVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = (*p.congruence)[i];
    // x = v + 2y  =>  x^T A x = v^T A v + 4 v^T A y + 4 y^T A y = v^T A v (mod 4)
    if (mod_nonneg(p.target, 4) != mod_nonneg(evaluate_form(p.gram, v, v), 4))
      return Obstruction::Mod4;
  }

  if (p.target != 0) {
    const FormClass fc = classify_form(p.gram);
    if ((fc == FormClass::PositiveDefinite && p.target < 0) ||
        (fc == FormClass::NegativeDefinite && p.target > 0))
      return Obstruction::Sign;
  }
  return std::nullopt;
}

RepOutcome solve(const RepProblem& p) {
  check_problem(p);
  RepOutcome out;
  const std::size_t k = p.gram.rows();

  if (k == 0) {
    if (p.target == 0) {
      out.status = RepStatus::Found;
      out.witness = IntVec{};
    } else {
      out.status = RepStatus::NoneExhaustive;
    }
    return out;
  }

  if (auto obs = quick_obstructions(p)) {
    out.status = RepStatus::NoneObstruction;
    out.obstruction = obs;
    return out;
  }

  const FormClass fc = classify_form(p.gram);
  if (fc != FormClass::Indefinite) {
    const bool neg = fc == FormClass::NegativeDefinite;
    const auto sols = enumerate_definite(neg ? negate(p.gram) : p.gram,
                                         neg ? Int(-p.target) : p.target,
                                         p.congruence);
    if (sols.empty()) {
      out.status = RepStatus::NoneExhaustive;
      return out;
    }
    const IntVec* best = &sols.front();
    for (const IntVec& s : sols)
      if (canonical_less(s, *best)) best = &s;
    out.status = RepStatus::Found;
    out.witness = *best;
    assert_witness(p, *out.witness);
    return out;
  }

  out.bound_used = p.search_bound;
  if (auto hit = shell_scan(p.gram, p.target, p.congruence, p.search_bound)) {
    out.status = RepStatus::Found;
    out.witness = *hit;
    assert_witness(p, *out.witness);
  } else {
    out.status = RepStatus::UnknownWithinBound;
  }
  return out;
}

RepOutcome brute_force_oracle(const RepProblem& p, int box) {
  check_problem(p);
  if (box < 0) throw std::domain_error("brute_force_oracle: box must be >= 0");
  RepOutcome out;
  const std::size_t k = p.gram.rows();
  out.bound_used = box;

  if (k == 0) {
    if (p.target == 0) {
      out.status = RepStatus::Found;
      out.witness = IntVec{};
    } else {
      out.status = RepStatus::NoneExhaustive;
    }
    return out;
  }

  Int cells = 1;
  for (std::size_t i = 0; i < k; ++i) cells *= 2 * box + 1;
  if (Int(k) * cells > 10000000)
    throw std::length_error("brute_force_oracle: box too large");

  IntVec x(k, Int(-box)), best;
  bool have = false;
  for (;;) {
    bool ok = true;
    if (p.congruence.has_value())
      for (std::size_t i = 0; i < k && ok; ++i)
        if (mod_nonneg(x[i], 2) != (*p.congruence)[i]) ok = false;
    if (ok && evaluate_form(p.gram, x, x) == p.target &&
        (!have || canonical_less(x, best))) {
      best = x;
      have = true;
    }
    std::size_t i = 0;
    while (i < k && x[i] == box) {
      x[i] = -box;
      ++i;
    }
    if (i == k) break;
    ++x[i];
  }

  if (have) {
    out.status = RepStatus::Found;
    out.witness = best;
    assert_witness(p, best);
  } else {
    out.status = RepStatus::NoneExhaustive;
  }
  return out;
}

bool canonical_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::domain_error("canonical_less: length mismatch");
  const Int ma = max_norm(a), mb = max_norm(b);
  if (ma != mb) return ma < mb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return zigzag_less(a[i], b[i]);
  return false;
}

}  // namespace wallacs
