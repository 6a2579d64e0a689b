#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "wallacs/catalog.hpp"
#include "wallacs/document.hpp"

using namespace wallacs;

TEST_CASE("emission is frozen, including key order") {
  CHECK(document_to_json(catalog_entry("hp2")) ==
        "{\n"
        "  \"name\": \"hp2\",\n"
        "  \"n\": 4,\n"
        "  \"betti\": 1,\n"
        "  \"intersection_form\": [\n"
        "    [\n"
        "      1\n"
        "    ]\n"
        "  ],\n"
        "  \"chi\": [\n"
        "    1\n"
        "  ]\n"
        "}");
  CHECK(document_to_json(catalog_entry("sphere6")) ==
        "{\n"
        "  \"name\": \"sphere6\",\n"
        "  \"n\": 3,\n"
        "  \"betti\": 0,\n"
        "  \"intersection_form\": []\n"
        "}");
}

TEST_CASE("emit, parse, emit round-trips byte for byte") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    const ManifoldDocument doc = catalog_entry(name);
    const std::string once = document_to_json(doc);
    const ManifoldDocument back = parse_document(once);
    CHECK(back.name == doc.name);
    CHECK(back.n == doc.n);
    CHECK(back.betti == doc.betti);
    CHECK(back.intersection_form == doc.intersection_form);
    CHECK(back.chi == doc.chi);
    CHECK(document_to_json(back) == once);
  }
}

TEST_CASE("integers beyond 64 bits travel as decimal strings") {
  const Int big("1267650600228229401496703205376");  // 2^100
  ManifoldDocument doc;
  doc.name = "big";
  doc.n = 4;
  doc.betti = 2;
  doc.intersection_form = {{big, Int(1)}, {Int(1), -big}};
  doc.chi = IntVec{Int(0), big + 7};

  const std::string text = document_to_json(doc);
  CHECK(text.find("\"1267650600228229401496703205376\"") != std::string::npos);
  CHECK(text.find("\"-1267650600228229401496703205376\"") != std::string::npos);
  CHECK(text.find("\"1267650600228229401496703205383\"") != std::string::npos);

  const ManifoldDocument back = parse_document(text);
  CHECK(back.intersection_form == doc.intersection_form);
  CHECK(back.chi == doc.chi);
  CHECK(document_to_json(back) == text);
}

TEST_CASE("64-bit boundary values stay numbers") {
  ManifoldDocument doc;
  doc.name = "edge";
  doc.n = 4;
  doc.betti = 1;
  doc.intersection_form = {{Int("9223372036854775807")}};
  const std::string text = document_to_json(doc);
  CHECK(text.find("9223372036854775807") != std::string::npos);
  CHECK(text.find("\"9223372036854775807\"") == std::string::npos);
  CHECK(parse_document(text).intersection_form == doc.intersection_form);

  // one past the boundary flips to a string on the way out
  doc.intersection_form = {{Int("9223372036854775808")}};
  CHECK(document_to_json(doc).find("\"9223372036854775808\"") != std::string::npos);
  // parse still accepts it as a bare JSON number (unsigned 64-bit range)
  const ManifoldDocument u = parse_document(
      "{\"name\":\"u\",\"n\":4,\"betti\":1,"
      "\"intersection_form\":[[9223372036854775808]]}");
  CHECK(u.intersection_form == doc.intersection_form);
}

TEST_CASE("string-encoded small integers are canonicalized to numbers") {
  const ManifoldDocument doc = parse_document(
      "{\"name\":\"s\",\"n\":\"4\",\"betti\":\"1\","
      "\"intersection_form\":[[\"-1\"]],\"chi\":[\"3\"]}");
  CHECK(doc.n == 4);
  CHECK(doc.betti == 1);
  CHECK(doc.intersection_form == std::vector<IntVec>{{Int(-1)}});
  const std::string text = document_to_json(doc);
  CHECK(text.find("\"-1\"") == std::string::npos);
  CHECK(text.find("-1") != std::string::npos);
}

TEST_CASE("parse rejections carry positioned messages") {
  auto rejects = [](const std::string& text, const std::string& needle) {
    try {
      parse_document(text);
      FAIL_CHECK(("no ParseError for " + text));
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  rejects("{", "document:");
  rejects("[1, 2]", "expected a JSON object");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":0,\"intersection_form\":[],\"extra\":1}",
          "unknown field");
  rejects("{\"n\":3,\"betti\":0,\"intersection_form\":[]}", "\"name\"");
  rejects("{\"name\":\"x\",\"betti\":0,\"intersection_form\":[]}", "missing field \"n\"");
  rejects("{\"name\":\"x\",\"n\":3,\"intersection_form\":[]}", "missing field \"betti\"");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":0}", "\"intersection_form\"");
  rejects("{\"name\":\"x\",\"n\":4.5,\"betti\":0,\"intersection_form\":[]}",
          "expected an integer");
  rejects("{\"name\":\"x\",\"n\":true,\"betti\":0,\"intersection_form\":[]}",
          "expected an integer");
  rejects("{\"name\":\"x\",\"n\":-1,\"betti\":0,\"intersection_form\":[]}",
          "out of range");
  rejects("{\"name\":\"x\",\"n\":2000,\"betti\":0,\"intersection_form\":[]}",
          "out of range");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":2,\"intersection_form\":[[0,1]]}",
          "expected 2 rows");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":2,"
          "\"intersection_form\":[[0,1],[1]]}",
          "expected 2 entries");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":1,\"intersection_form\":[[1.5]]}",
          "intersection_form[0]");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":1,\"intersection_form\":[[\"12x\"]]}",
          "decimal integer string");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":0,\"intersection_form\":[],\"chi\":3}",
          "chi: expected an array");
  rejects("{\"name\":\"x\",\"n\":3,\"betti\":0,\"intersection_form\":[],"
          "\"chi\":[null]}",
          "chi[0]");
}

TEST_CASE("ingestion normalizes order-two chi and round-trips otherwise") {
  ManifoldDocument doc;
  doc.name = "norm";
  doc.n = 9;
  doc.betti = 2;
  doc.intersection_form = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  doc.chi = IntVec{Int(3), Int(-4)};
  const WallInvariants w = to_wall_invariants(doc);
  CHECK(w.chi == IntVec{Int(1), Int(0)});

  const ManifoldDocument round = to_document(w);
  CHECK(round.name == doc.name);
  CHECK(round.n == doc.n);
  CHECK(round.betti == doc.betti);
  CHECK(round.intersection_form == doc.intersection_form);
  CHECK(round.chi == IntVec{Int(1), Int(0)});

  // integral coefficient group: chi passes through untouched
  doc.n = 4;
  doc.intersection_form = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK(to_wall_invariants(doc).chi == IntVec{Int(3), Int(-4)});
}
