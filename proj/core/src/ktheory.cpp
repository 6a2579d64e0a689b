#include "wallacs/ktheory.hpp"

#include <sstream>
#include <stdexcept>

namespace wallacs {

namespace {

Summand z(std::string gen) { return {std::move(gen), std::nullopt}; }
Summand z2(std::string gen) { return {std::move(gen), 2}; }

ReductionRule to_zero(std::string src) { return {std::move(src), {}}; }
ReductionRule times(std::string src, int c, std::string dst) {
  return {std::move(src), {{c, std::move(dst)}}};
}

}  // namespace

KTheoryRow sphere_row(int m) {
  if (m < 1) throw std::domain_error("sphere_row: m must be >= 1");
  KTheoryRow row;
  switch (m % 8) {
    case 0:
      row.ku.summands = {z("omega_C")};
      row.ko.summands = {z("omega_R")};
      row.ku.reduction_rules = {times("omega_C", 2, "omega_R")};
      break;
    case 1:
      row.ko.summands = {z2("omega_R")};
      break;
    case 2:
      row.ku.summands = {z("omega_C")};
      row.ko.summands = {z2("omega_R")};
      row.ku.reduction_rules = {times("omega_C", 1, "omega_R")};
      break;
    case 4:
      row.ku.summands = {z("omega_C")};
      row.ko.summands = {z("omega_R")};
      row.ku.reduction_rules = {times("omega_C", 1, "omega_R")};
      break;
    case 6:
      row.ku.summands = {z("omega_C")};
      row.ku.reduction_rules = {to_zero("omega_C")};
      break;
    default:  // 3, 5, 7: both groups vanish
      break;
  }
  return row;
}

KTheoryRow manifold_row(int n, int k) {
  if (n < 3) throw std::domain_error("manifold_row: n must be >= 3");
  if (k < 0) throw std::domain_error("manifold_row: k must be >= 0");
  KTheoryRow row;
  auto eta = [](int j) { return "eta" + std::to_string(j); };
  auto zeta = [](int j) { return "zeta" + std::to_string(j); };

  switch (((n % 8) + 8) % 8) {
    case 0:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z("gamma")};
      row.ku.reduction_rules = {times("xi", 2, "gamma")};
      for (int j = 1; j <= k; ++j) {
        row.ku.summands.push_back(z(eta(j)));
        row.ko.summands.push_back(z(zeta(j)));
        row.ku.reduction_rules.push_back(times(eta(j), 2, zeta(j)));
      }
      break;
    case 1:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z2("gamma")};
      row.ku.reduction_rules = {times("xi", 1, "gamma")};
      for (int j = 1; j <= k; ++j) row.ko.summands.push_back(z2(zeta(j)));
      break;
    case 2:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z("gamma")};
      row.ku.reduction_rules = {times("xi", 1, "gamma")};
      for (int j = 1; j <= k; ++j) {
        row.ku.summands.push_back(z(eta(j)));
        row.ko.summands.push_back(z2(zeta(j)));
        row.ku.reduction_rules.push_back(times(eta(j), 1, zeta(j)));
      }
      break;
    case 4:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z("gamma")};
      row.ku.reduction_rules = {times("xi", 2, "gamma")};
      for (int j = 1; j <= k; ++j) {
        row.ku.summands.push_back(z(eta(j)));
        row.ko.summands.push_back(z(zeta(j)));
        row.ku.reduction_rules.push_back(times(eta(j), 1, zeta(j)));
      }
      break;
    case 5:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z2("gamma")};
      row.ku.reduction_rules = {times("xi", 1, "gamma")};
      break;
    case 6:
      row.ku.summands = {z("xi")};
      row.ko.summands = {z("gamma")};
      row.ku.reduction_rules = {times("xi", 1, "gamma")};
      for (int j = 1; j <= k; ++j) {
        row.ku.summands.push_back(z(eta(j)));
        row.ku.reduction_rules.push_back(to_zero(eta(j)));
      }
      break;
    default:  // 3, 7: real side vanishes
      row.ku.summands = {z("xi")};
      row.ku.reduction_rules = {to_zero("xi")};
      break;
  }
  return row;
}

namespace {

std::string render_group(const GroupPresentation& g) {
  if (g.summands.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < g.summands.size(); ++i) {
    if (i) s += " + ";
    const Summand& t = g.summands[i];
    s += t.order.has_value() ? "Z/" + std::to_string(*t.order) : "Z";
    s += "<" + t.generator + ">";
  }
  return s;
}

std::string render_image(const ReductionRule& r) {
  if (r.image.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < r.image.size(); ++i) {
    if (i) s += " + ";
    if (r.image[i].coeff != 1) s += std::to_string(r.image[i].coeff) + "*";
    s += r.image[i].target;
  }
  return s;
}

}  // namespace

std::string render_text(const KTheoryRow& row) {
  std::ostringstream os;
  os << "K~:  " << render_group(row.ku) << "\n";
  os << "KO~: " << render_group(row.ko) << "\n";
  if (row.ku.reduction_rules.empty()) {
    os << "r~:  0\n";
  } else {
    for (const ReductionRule& r : row.ku.reduction_rules)
      os << "r~:  " << r.source << " -> " << render_image(r) << "\n";
  }
  return os.str();
}

}  // namespace wallacs
