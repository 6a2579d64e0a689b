#include "wallacs/report.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

#include "wallacs/version.hpp"

namespace wallacs {

namespace {

using nlohmann::ordered_json;
using wallacs::to_string;

const char* to_string(RepStatus s) {
  switch (s) {
    case RepStatus::Found: return "found";
    case RepStatus::NoneExhaustive: return "none-exhaustive";
    case RepStatus::NoneObstruction: return "none-obstruction";
    case RepStatus::UnknownWithinBound: return "unknown-within-bound";
  }
  return "";
}

const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::Parity: return "parity";
    case Obstruction::Mod4: return "mod4";
    case Obstruction::Sign: return "sign";
  }
  return "";
}

const char* to_string(Admits a) {
  switch (a) {
    case Admits::Yes: return "yes";
    case Admits::No: return "no";
    case Admits::Unknown: return "unknown";
  }
  return "";
}

ordered_json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

ordered_json vec_json(const IntVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

ordered_json findings_json(const std::vector<Finding>& fs) {
  ordered_json a = ordered_json::array();
  for (const auto& f : fs) {
    ordered_json o;
    o["code"] = f.code;
    o["message"] = f.message;
    a.push_back(std::move(o));
  }
  return a;
}

ordered_json validation_json(const ValidationReport& v) {
  ordered_json o;
  o["valid"] = v.valid;
  o["violations"] = findings_json(v.violations);
  o["warnings"] = findings_json(v.warnings);
  return o;
}

ordered_json derived_json(const CharNumbers& d) {
  ordered_json o;
  o["euler"] = d.euler;
  if (d.tau) o["tau"] = *d.tau;
  if (d.a_coeff) o["a_coeff"] = *d.a_coeff;
  if (d.p_quarter) o["p_quarter"] = vec_json(*d.p_quarter);
  if (d.p_half) o["p_half"] = to_string(*d.p_half);
  if (d.a_hat) o["a_hat"] = to_string(*d.a_hat);
  if (d.a_hat_c) o["a_hat_c"] = to_string(*d.a_hat_c);
  return o;
}

ordered_json stable_json(const StableVerdict& s) {
  ordered_json o;
  o["admits"] = s.admits;
  o["case"] = s.case_label;
  o["detail"] = s.detail;
  if (s.chi_even) o["chi_even"] = *s.chi_even;
  if (s.congruence_quantity) o["congruence_quantity"] = to_string(*s.congruence_quantity);
  if (s.congruence_bit) o["congruence_bit"] = *s.congruence_bit;
  return o;
}

ordered_json acs_json(const AcsVerdict& a) {
  ordered_json o;
  o["admits"] = to_string(a.admits);
  o["case"] = to_string(a.case_label);
  if (!a.reason.empty()) o["reason"] = a.reason;
  if (a.identity_lhs) o["identity_lhs"] = to_string(*a.identity_lhs);
  if (a.identity_rhs) o["identity_rhs"] = int_json(*a.identity_rhs);
  if (a.target_exact) o["target_exact"] = to_string(*a.target_exact);
  if (a.target) o["target"] = int_json(*a.target);
  if (a.divisor) o["divisor"] = int_json(*a.divisor);
  if (a.witness) o["witness"] = vec_json(*a.witness);
  if (a.rep) {
    o["rep_status"] = to_string(a.rep->status);
    if (a.rep->obstruction) o["obstruction"] = to_string(*a.rep->obstruction);
    o["bound_used"] = a.bound_used;
  }
  return o;
}

ordered_json presentation_json(const GroupPresentation& g) {
  ordered_json o;
  ordered_json summands = ordered_json::array();
  for (const auto& s : g.summands) {
    ordered_json e;
    e["generator"] = s.generator;
    if (s.order) e["order"] = *s.order;
    summands.push_back(std::move(e));
  }
  o["summands"] = std::move(summands);
  ordered_json rules = ordered_json::array();
  for (const auto& r : g.reduction_rules) {
    ordered_json e;
    e["source"] = r.source;
    ordered_json image = ordered_json::array();
    for (const auto& t : r.image) {
      ordered_json term;
      term["coeff"] = t.coeff;
      term["target"] = t.target;
      image.push_back(std::move(term));
    }
    e["image"] = std::move(image);
    rules.push_back(std::move(e));
  }
  o["reduction"] = std::move(rules);
  return o;
}

ordered_json ktheory_json(const KTheoryRow& row) {
  ordered_json o;
  o["ku"] = presentation_json(row.ku);
  o["ko"] = presentation_json(row.ko);
  return o;
}

std::string vec_text(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

void findings_text(std::ostringstream& os, const char* label,
                   const std::vector<Finding>& fs) {
  if (fs.empty()) return;
  os << label << ":\n";
  for (const auto& f : fs) os << "  " << f.code << ": " << f.message << "\n";
}

void derived_text(std::ostringstream& os, int n, const CharNumbers& d) {
  os << "derived:\n";
  os << "  euler = " << d.euler << "\n";
  if (d.tau) os << "  tau = " << *d.tau << "\n";
  if (d.p_quarter)
    os << "  p" << n / 4 << " = " << vec_text(*d.p_quarter)
       << "  (coefficient " << *d.a_coeff << " (n/2 - 1)!)\n";
  if (d.p_half) os << "  p" << n / 2 << " = " << to_string(*d.p_half) << "\n";
  if (d.a_hat) os << "  A-hat = " << to_string(*d.a_hat) << "\n";
  if (d.a_hat_c) os << "  A-hat_C = " << to_string(*d.a_hat_c) << "\n";
}

void stable_text(std::ostringstream& os, const StableVerdict& s) {
  os << "stable: " << (s.admits ? "yes" : "no") << "\n";
  if (s.detail == "always-admits") {
    os << "  every system with n mod 8 = " << s.case_label << " admits one\n";
    return;
  }
  if (s.chi_even) {
    if (s.case_label == 1) {
      os << "  chi: " << (*s.chi_even ? "0" : "nonzero (0 required)") << "\n";
    } else {
      os << "  chi parity: " << (*s.chi_even ? "even" : "odd (even required)") << "\n";
    }
  }
  if (s.congruence_quantity) {
    os << "  congruence quantity = " << to_string(*s.congruence_quantity);
    if (s.congruence_bit)
      os << " (" << (*s.congruence_bit ? "odd; even required" : "even") << ")";
    os << "\n";
  }
}

void acs_text(std::ostringstream& os, int n, int k, const AcsVerdict& a) {
  os << "acs: " << to_string(a.admits) << "\n";
  os << "  case: " << to_string(a.case_label) << "\n";
  if (!a.reason.empty()) os << "  reason: " << a.reason << "\n";
  switch (a.case_label) {
    case AcsCase::ChernEulerIdentity:
      if (a.identity_lhs)
        os << "  4 p" << n / 2 << " - <p" << n / 4 << ", p" << n / 4
           << "> = " << to_string(*a.identity_lhs) << "\n";
      if (a.identity_rhs) os << "  8 (k + 2) = " << *a.identity_rhs << "\n";
      break;
    case AcsCase::QuadraticRepresentationMod2:
    case AcsCase::QuadraticRepresentation:
      if (a.target_exact) {
        os << "  target (2 (k + 2) + p" << n / 2 << ") / ((n/2 - 1)!)^2 = "
           << to_string(*a.target_exact);
        if (!a.target) os << ", not an integer";
        os << "\n";
      }
      if (a.case_label == AcsCase::QuadraticRepresentationMod2)
        os << "  congruence: x = chi (mod 2)\n";
      if (a.witness) os << "  witness: " << vec_text(*a.witness) << "\n";
      if (a.rep) {
        os << "  search: " << to_string(a.rep->status);
        if (a.rep->obstruction) os << " (" << to_string(*a.rep->obstruction) << ")";
        if (a.rep->status == RepStatus::UnknownWithinBound)
          os << " (bound " << a.bound_used << ")";
        os << "\n";
      }
      break;
    case AcsCase::EulerDivisibilityEven:
    case AcsCase::EulerDivisibility:
      if (a.divisor) {
        os << "  " << (a.case_label == AcsCase::EulerDivisibilityEven ? "2 (n - 1)!" : "(n - 1)!")
           << " = " << *a.divisor << "\n";
        os << "  2 - k = " << 2 - k << "\n";
      }
      break;
  }
}

ordered_json report_json(const DecisionReport& r) {
  ordered_json o;
  o["name"] = r.input.name;
  o["n"] = r.input.n;
  o["k"] = r.input.betti;
  o["n_mod_8"] = r.n_mod_8;
  o["validation"] = validation_json(r.validation);
  if (r.derived) o["derived"] = derived_json(*r.derived);
  if (r.stable) o["stable"] = stable_json(*r.stable);
  if (r.acs) o["acs"] = acs_json(*r.acs);
  if (r.ktheory) o["ktheory"] = ktheory_json(*r.ktheory);
  if (!r.error.empty()) o["error"] = r.error;
  o["bound"] = r.bound;
  o["version"] = r.version;
  return o;
}

}  // namespace

DecisionReport build_report(const ManifoldDocument& doc, int bound,
                            bool with_ktheory) {
  DecisionReport r;
  r.input = doc;
  r.bound = bound;
  r.version = kVersion;
  r.n_mod_8 = ((doc.n % 8) + 8) % 8;
  WallInvariants w;
  try {
    w = to_wall_invariants(doc);
  } catch (const std::domain_error& e) {
    r.validation.valid = false;
    r.validation.violations.push_back({"gram-shape", e.what()});
    return r;
  }
  r.validation = validate(w);
  if (!r.validation.valid) return r;
  r.derived = compute_char_numbers(w);
  if (with_ktheory) r.ktheory = manifold_row(doc.n, doc.betti);
  try {
    AcsVerdict acs = decide_acs(w, bound);
    r.stable = acs.stable;
    r.acs = std::move(acs);
  } catch (const InconsistentInvariants& e) {
    r.error = e.what();
  }
  return r;
}

std::string report_to_json(const DecisionReport& r, int indent) {
  return report_json(r).dump(indent);
}

std::string report_to_text(const DecisionReport& r) {
  std::ostringstream os;
  os << "name: " << r.input.name << "\n";
  os << "n: " << r.input.n << " (mod 8: " << r.n_mod_8 << ")\n";
  os << "k: " << r.input.betti << "\n";
  os << "validation: " << (r.validation.valid ? "ok" : "invalid") << "\n";
  findings_text(os, "violations", r.validation.violations);
  findings_text(os, "warnings", r.validation.warnings);
  if (r.derived) derived_text(os, r.input.n, *r.derived);
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  if (r.stable) stable_text(os, *r.stable);
  if (r.acs) acs_text(os, r.input.n, r.input.betti, *r.acs);
  if (r.ktheory) os << render_text(*r.ktheory);
  return os.str();
}

std::string validation_to_json(const ManifoldDocument& doc, const ValidationReport& v) {
  ordered_json o;
  o["name"] = doc.name;
  o["n"] = doc.n;
  o["k"] = doc.betti;
  o["validation"] = validation_json(v);
  return o.dump(2);
}

std::string validation_to_text(const ManifoldDocument& doc, const ValidationReport& v) {
  std::ostringstream os;
  os << "name: " << doc.name << "\n";
  os << "valid: " << (v.valid ? "yes" : "no") << "\n";
  findings_text(os, "violations", v.violations);
  findings_text(os, "warnings", v.warnings);
  return os.str();
}

std::string ktheory_to_json(const KTheoryRow& row) {
  return ktheory_json(row).dump(2);
}

}  // namespace wallacs
