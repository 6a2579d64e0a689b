#pragma once

#include "wallacs/charnum.hpp"
#include "wallacs/decision.hpp"
#include "wallacs/document.hpp"
#include "wallacs/ktheory.hpp"

namespace wallacs {

// Everything one decide run produces. Verdict fields are populated exactly
// when validation passes and the congruence quantities are consistent;
// otherwise `error` carries the reason. Pure function of (document, bound,
// library version).
struct DecisionReport {
  ManifoldDocument input;
  int n_mod_8 = 0;
  ValidationReport validation;
  std::optional<CharNumbers> derived;
  std::optional<StableVerdict> stable;
  std::optional<AcsVerdict> acs;
  std::optional<KTheoryRow> ktheory;
  std::string error;
  int bound = 32;
  std::string version;
};

DecisionReport build_report(const ManifoldDocument& doc, int bound,
                            bool with_ktheory = false);

// Deterministic JSON. Rationals are decimal strings, integers follow the
// document rule (number within 64 bits, string beyond). indent < 0 gives the
// compact single-line form used by batch output.
std::string report_to_json(const DecisionReport& r, int indent = 2);

// Readable rendering with every sub-condition and its exact value.
std::string report_to_text(const DecisionReport& r);

std::string validation_to_json(const ManifoldDocument& doc, const ValidationReport& r);
std::string validation_to_text(const ManifoldDocument& doc, const ValidationReport& r);

std::string ktheory_to_json(const KTheoryRow& row);

}  // namespace wallacs
