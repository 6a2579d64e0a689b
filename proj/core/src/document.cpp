#include "wallacs/document.hpp"

#include <json.hpp>

namespace wallacs {

namespace {

using Json = nlohmann::ordered_json;

constexpr long long kInt64Max = 9223372036854775807LL;

bool decimal_string(const std::string& s) {
  std::size_t i = s.size() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int read_int(const Json& j, const std::string& where) {
  // order matters: is_number_integer() is also true for unsigned values
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!decimal_string(s))
      throw ParseError(where + ": expected a decimal integer string, got \"" + s + "\"");
    return Int(s);
  }
  throw ParseError(where + ": expected an integer (number within 64 bits or decimal string)");
}

Json write_int(const Int& v) {
  if (v >= -Int(kInt64Max) - 1 && v <= Int(kInt64Max))
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

IntVec read_int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVec out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(read_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

ManifoldDocument parse_document(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "name" && key != "n" && key != "betti" &&
        key != "intersection_form" && key != "chi")
      throw ParseError("document: unknown field \"" + key + "\"");
  }

  ManifoldDocument doc;
  if (!j.contains("name") || !j["name"].is_string())
    throw ParseError("document: \"name\" must be a string");
  doc.name = j["name"].get<std::string>();

  for (const char* field : {"n", "betti"}) {
    if (!j.contains(field))
      throw ParseError(std::string("document: missing field \"") + field + "\"");
    const Int v = read_int(j[field], field);
    if (v < 0 || v > 1024)
      throw ParseError(std::string(field) + ": out of range (0..1024)");
    (field[0] == 'n' ? doc.n : doc.betti) = v.convert_to<int>();
  }

  if (!j.contains("intersection_form") || !j["intersection_form"].is_array())
    throw ParseError("document: \"intersection_form\" must be an array of rows");
  const Json& rows = j["intersection_form"];
  if (rows.size() != static_cast<std::size_t>(doc.betti))
    throw ParseError("intersection_form: expected " + std::to_string(doc.betti) +
                     " rows, got " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    IntVec row = read_int_array(rows[i], "intersection_form[" + std::to_string(i) + "]");
    if (row.size() != static_cast<std::size_t>(doc.betti))
      throw ParseError("intersection_form[" + std::to_string(i) + "]: expected " +
                       std::to_string(doc.betti) + " entries, got " +
                       std::to_string(row.size()));
    doc.intersection_form.push_back(std::move(row));
  }

  if (j.contains("chi")) doc.chi = read_int_array(j["chi"], "chi");
  return doc;
}

std::string document_to_json(const ManifoldDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["n"] = doc.n;
  j["betti"] = doc.betti;
  Json rows = Json::array();
  for (const IntVec& r : doc.intersection_form) {
    Json row = Json::array();
    for (const Int& v : r) row.push_back(write_int(v));
    rows.push_back(std::move(row));
  }
  j["intersection_form"] = std::move(rows);
  if (doc.chi.has_value()) {
    Json chi = Json::array();
    for (const Int& v : *doc.chi) chi.push_back(write_int(v));
    j["chi"] = std::move(chi);
  }
  return j.dump(2);
}

WallInvariants to_wall_invariants(const ManifoldDocument& doc) {
  WallInvariants w;
  w.name = doc.name;
  w.n = doc.n;
  w.k = doc.betti;
  w.gram = IntMatrix::from_rows(doc.intersection_form);
  if (doc.chi.has_value()) {
    w.chi = *doc.chi;
    if (chi_coefficient_group(w.n) == ChiGroup::OrderTwoGroup)
      for (Int& c : *w.chi) c = mod_nonneg(c, 2);
  }
  return w;
}

ManifoldDocument to_document(const WallInvariants& w) {
  ManifoldDocument doc;
  doc.name = w.name;
  doc.n = w.n;
  doc.betti = w.k;
  doc.intersection_form = w.gram.to_rows();
  doc.chi = w.chi;
  return doc;
}

}  // namespace wallacs
