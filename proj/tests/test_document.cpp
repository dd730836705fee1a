#include <doctest.h>

#include "unfolder/diagnostics.hpp"
#include "unfolder/document.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/report.hpp"
#include "unfolder/unfolding.hpp"

using namespace unfolder;

TEST_CASE("parse an abstract document") {
  auto doc = parse_document(R"({"dim":2,"facets":[["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]]})");
  REQUIRE_FALSE(doc.is_pseudo());
  const auto& k = std::get<AbstractComplex>(doc.complex);
  CHECK(k == boundary_simplex(3));
  CHECK(k.label(3) == "d");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_document(R"({"dim":1,"facets":[["a","b"],["a","b","c"]]})"),
                       doctest::Contains("MixedDimension"), Error);
  CHECK_THROWS_WITH_AS(parse_document(R"({"dim":2,"facets":[["a","a","b"]]})"), doctest::Contains("DegenerateFacet"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_document("{\n  \"dim\": 2,\n  \"facets\": [[\"a\" \"b\"]]\n}"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse_document(R"({"dim":2})"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format_version":2,"facets":[]})"), doctest::Contains("version"), Error);
}

TEST_CASE("labels sort naturally") {
  CHECK(natural_less("v2", "v10"));
  CHECK_FALSE(natural_less("v10", "v2"));
  CHECK(natural_less("a", "b"));
  auto doc = parse_document(R"({"facets":[["10","2","1"]]})");
  const auto& k = std::get<AbstractComplex>(doc.complex);
  CHECK(k.label(0) == "1");
  CHECK(k.label(2) == "10");
}

TEST_CASE("emit is canonical and round-trips") {
  auto text = emit(figure3_complex());
  auto doc = parse_document(text);
  CHECK(std::get<AbstractComplex>(doc.complex) == figure3_complex());
  CHECK(emit(doc) == text);
  auto shuffled = parse_document(R"({"dim":2,"facets":[["d","c","b"],["c","a","d"],["b","a","d"],["a","b","c"]]})");
  CHECK(emit(shuffled) == emit(parse_document(emit(shuffled))));
}

TEST_CASE("pseudo documents") {
  auto p = as_pseudo(boundary_simplex(3));
  auto u = complete_unfolding(p);
  auto text = emit(u.total, u.projection.facet_map);
  CHECK(text.find("\"gluings\"") != std::string::npos);
  auto doc = parse_document(text);
  REQUIRE(doc.is_pseudo());
  const auto& q = std::get<PseudoComplex>(doc.complex);
  CHECK(q.facet_count() == 24);
  CHECK(q.faces().count(0) == 12);
  CHECK(doc.projection == u.projection.facet_map);
  CHECK(emit(doc) == text);

  auto ns = complete_unfolding(as_pseudo(nonsimplicial_unfolding_example())).total;
  auto ns_doc = parse_document(emit(ns));
  CHECK_FALSE(is_simplicial(ns_doc.pseudo()).simplicial);
}

TEST_CASE("pseudo document label consistency") {
  const char* bad = R"({"kind":"pseudo","dim":1,"facets":[["a","b"],["c","d"]],
                        "gluings":[{"facets":[0,1],"locals":[[1],[0]]}]})";
  CHECK_THROWS_WITH_AS(parse_document(bad), doctest::Contains("disagrees"), Error);
  const char* good = R"({"kind":"pseudo","dim":1,"facets":[["a","b"],["b","c"]],
                         "gluings":[{"facets":[0,1],"locals":[[1],[0]]}]})";
  CHECK(parse_document(good).pseudo().faces().count(0) == 3);
}

TEST_CASE("analyze report") {
  Document doc;
  doc.complex = boundary_simplex(3);
  auto report = analyze_report(doc);
  CHECK(report.find("Pi order: 6") != std::string::npos);
  CHECK(report.find("odd faces: 4") != std::string::npos);
  CHECK(report.find("euler characteristic: 2") != std::string::npos);
}
