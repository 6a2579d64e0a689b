#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallacs/wall.hpp"

namespace wallacs {

// On-disk description of an invariant system. Integer fields accept JSON
// numbers in 64-bit range or decimal strings for anything larger; emission
// follows the same rule, so serialize/parse round-trips byte for byte.
struct ManifoldDocument {
  std::string name;
  int n = 3;
  int betti = 0;
  std::vector<IntVec> intersection_form;  // betti rows of betti entries
  std::optional<IntVec> chi;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict parse: unknown structure, wrong shapes, non-integer numbers and
// malformed JSON all raise ParseError with a positioned message.
ManifoldDocument parse_document(const std::string& json_text);

// Deterministic emission: fixed key order, two-space indent, no trailing
// newline.
std::string document_to_json(const ManifoldDocument& doc);

// Ingestion into the validated domain type. Order-two chi entries are
// normalized into {0, 1} here.
WallInvariants to_wall_invariants(const ManifoldDocument& doc);

ManifoldDocument to_document(const WallInvariants& w);

}  // namespace wallacs
