#include "wallacs/catalog.hpp"

#include <stdexcept>

namespace wallacs {

namespace {

bool chi_present(int n) {
  return chi_coefficient_group(n) != ChiGroup::TrivialGroup;
}

ManifoldDocument sphere_doc(int n) {
  ManifoldDocument d;
  d.name = "sphere" + std::to_string(2 * n);
  d.n = n;
  d.betti = 0;
  if (chi_present(n)) d.chi = IntVec{};
  return d;
}

// S^n x S^n: hyperbolic pairing between the two factor spheres, both with
// stably trivial normal data.
ManifoldDocument product_doc(int n) {
  ManifoldDocument d;
  d.name = "product_spheres" + std::to_string(n);
  d.n = n;
  d.betti = 2;
  d.intersection_form = {{Int(0), Int(1)}, {Int(n % 2 == 0 ? 1 : -1), Int(0)}};
  if (chi_present(n)) d.chi = IntVec{Int(0), Int(0)};
  return d;
}

// HP^2: <u, u> = 1 and p_1 = 2u, so chi = 1 on the generator.
ManifoldDocument hp2_doc() {
  ManifoldDocument d;
  d.name = "hp2";
  d.n = 4;
  d.betti = 1;
  d.intersection_form = {{Int(1)}};
  d.chi = IntVec{Int(1)};
  return d;
}

// Rank-4 indefinite system at n = 4 satisfying the stable congruence and the
// Chern-Euler identity: 4 p_2 - <p_1, p_1> = 48 = 8 (k + 2).
ManifoldDocument synthetic_doc() {
  ManifoldDocument d;
  d.name = "synthetic_n4_yes";
  d.n = 4;
  d.betti = 4;
  d.intersection_form = {{Int(1), Int(0), Int(0), Int(0)},
                         {Int(0), Int(1), Int(0), Int(0)},
                         {Int(0), Int(0), Int(1), Int(0)},
                         {Int(0), Int(0), Int(0), Int(-1)}};
  d.chi = IntVec{Int(1), Int(1), Int(0), Int(0)};
  return d;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (int n = 3; n <= 12; ++n) out.push_back("sphere" + std::to_string(2 * n));
  for (int n = 3; n <= 12; ++n) out.push_back("product_spheres" + std::to_string(n));
  out.push_back("hp2");
  out.push_back("synthetic_n4_yes");
  return out;
}

ManifoldDocument catalog_entry(const std::string& name) {
  for (int n = 3; n <= 12; ++n) {
    if (name == "sphere" + std::to_string(2 * n)) return sphere_doc(n);
    if (name == "product_spheres" + std::to_string(n)) return product_doc(n);
  }
  if (name == "hp2") return hp2_doc();
  if (name == "synthetic_n4_yes") return synthetic_doc();
  throw std::out_of_range("unknown catalog entry: " + name);
}

}  // namespace wallacs
