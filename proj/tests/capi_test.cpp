#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>

#include "ainf/ainf.h"

extern "C" int ainf_header_compiles_as_c(void);

namespace {

struct Text {
  char* s = nullptr;
  ~Text() { ainf_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Alg {
  ainf_algebra* a = nullptr;
  ~Alg() { ainf_algebra_free(a); }
};

struct Cx {
  ainf_complex* c = nullptr;
  ~Cx() { ainf_complex_free(c); }
};

}  // namespace

TEST_CASE("header is valid C") { CHECK(ainf_header_compiles_as_c() == AINF_ERR_INTERNAL); }

TEST_CASE("fixtures round-trip through json") {
  for (const char* name : {"K", "Dual:2", "An:2", "Rand:4", "RandDirected:9"}) {
    Alg a;
    REQUIRE(ainf_algebra_fixture(name, "fp:3", &a.a) == AINF_OK);
    Text json;
    REQUIRE(ainf_algebra_to_json(a.a, &json.s) == AINF_OK);
    Alg b;
    REQUIRE(ainf_algebra_parse(json.s, &b.a) == AINF_OK);
    Text again;
    REQUIRE(ainf_algebra_to_json(b.a, &again.s) == AINF_OK);
    CHECK(json.str() == again.str());
    CHECK(ainf_algebra_size(a.a) == ainf_algebra_size(b.a));
    Text field;
    REQUIRE(ainf_algebra_field(b.a, &field.s) == AINF_OK);
    CHECK(field.str() == "fp:3");
  }
  Text names;
  REQUIRE(ainf_fixture_names(&names.s) == AINF_OK);
  CHECK(names.str().find("RandDirected:<seed>") != std::string::npos);
}

TEST_CASE("status codes") {
  Alg a;
  CHECK(ainf_algebra_parse("{\"field\": ", &a.a) == AINF_ERR_PARSE);
  CHECK(a.a == nullptr);
  CHECK(std::string(ainf_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(ainf_algebra_parse(R"({"field": "q", "objects": 1, "basis": [{"id": "x"}]})", &a.a) == AINF_ERR_INVALID);
  CHECK(ainf_algebra_fixture("Nope", nullptr, &a.a) == AINF_ERR_ARG);
  CHECK(ainf_algebra_fixture("K", "fp:6", &a.a) == AINF_ERR_ARG);
  CHECK(ainf_algebra_fixture(nullptr, nullptr, &a.a) == AINF_ERR_ARG);
  CHECK(ainf_validate(nullptr, nullptr, nullptr) == AINF_ERR_ARG);
  CHECK(ainf_algebra_size(nullptr) == -1);

  Alg k;
  REQUIRE(ainf_algebra_fixture("K", nullptr, &k.a) == AINF_OK);
  CHECK(std::string(ainf_last_error()).empty());
  Text report;
  int passed = -1;
  CHECK(ainf_verify(k.a, "unknown", &report.s, &passed) == AINF_ERR_ARG);
  CHECK(passed == -1);
}

TEST_CASE("the last error is per thread") {
  Alg a;
  REQUIRE(ainf_algebra_parse("nope", &a.a) == AINF_ERR_PARSE);
  std::string seen;
  std::thread([&] { seen = ainf_last_error(); }).join();
  CHECK(seen.empty());
  CHECK(!std::string(ainf_last_error()).empty());
}

TEST_CASE("commands") {
  Alg k;
  REQUIRE(ainf_algebra_fixture("K", nullptr, &k.a) == AINF_OK);
  int passed = 0;
  Text report;
  REQUIRE(ainf_validate(k.a, &report.s, &passed) == AINF_OK);
  CHECK(passed == 1);
  CHECK(report.str().find("\"command\": \"validate\"") != std::string::npos);

  Alg s;
  Text srep;
  REQUIRE(ainf_suspend(k.a, 1, &s.a, &srep.s, &passed) == AINF_OK);
  CHECK(passed == 1);
  CHECK(ainf_algebra_size(s.a) == 3);
  REQUIRE(ainf_suspend(k.a, 2, nullptr, nullptr, &passed) == AINF_OK);
  CHECK(passed == 1);

  Alg dual;
  REQUIRE(ainf_algebra_fixture("Dual:1", nullptr, &dual.a) == AINF_OK);
  Alg dd;
  REQUIRE(ainf_suspend(dual.a, 2, &dd.a, nullptr, &passed) == AINF_OK);
  Text h;
  REQUIRE(ainf_cohomology(dd.a, &h.s, &passed) == AINF_OK);
  CHECK(passed == 1);
  CHECK(h.str().find("\"by_degree\": {\n        \"0\": 1,\n        \"3\": 1\n") != std::string::npos);

  for (const char* lemma : {"trivial-extension", "phi-sigma", "split", "double-suspension", "lemma-alg", "suspension",
                            "tensor", "contractible"}) {
    Text r;
    passed = 0;
    REQUIRE(ainf_verify(dual.a, lemma, &r.s, &passed) == AINF_OK);
    CHECK_MESSAGE(passed == 1, lemma);
  }

  Alg plain;
  REQUIRE(ainf_algebra_parse(R"({"field": "q", "objects": 1,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1}], "mu": []})", &plain.a) == AINF_OK);
  CHECK(ainf_suspend(plain.a, 1, nullptr, nullptr, &passed) == AINF_ERR_ARG);
}

TEST_CASE("complexes") {
  Cx ball;
  REQUIRE(ainf_complex_fixture("Ball:2", &ball.c) == AINF_OK);
  Text text;
  REQUIRE(ainf_complex_to_json(ball.c, &text.s) == AINF_OK);
  Cx back;
  REQUIRE(ainf_complex_parse(text.s, &back.c) == AINF_OK);

  Cx sphere;
  REQUIRE(ainf_complex_double(back.c, &sphere.c) == AINF_OK);
  Alg cochains;
  REQUIRE(ainf_complex_cochains(sphere.c, "fp:2", &cochains.a) == AINF_OK);
  Text h;
  int passed = 0;
  REQUIRE(ainf_cohomology(cochains.a, &h.s, &passed) == AINF_OK);
  CHECK(h.str().find("\"by_degree\": {\n        \"0\": 1,\n        \"2\": 1\n") != std::string::npos);

  Alg pair;
  REQUIRE(ainf_complex_pair(ball.c, nullptr, &pair.a) == AINF_OK);
  Text v;
  REQUIRE(ainf_validate(pair.a, &v.s, &passed) == AINF_OK);
  CHECK(passed == 1);

  for (const char* field : {"q", "fp:2", "fp:3"}) {
    Text r;
    passed = 0;
    REQUIRE(ainf_verify_sandwich(ball.c, field, &r.s, &passed) == AINF_OK);
    CHECK(passed == 1);
  }
  Cx bad;
  CHECK(ainf_complex_parse(R"({"vertices": ["a"], "simplices": [["b"]]})", &bad.c) == AINF_ERR_INVALID);
  CHECK(ainf_complex_fixture("Ball:x", &bad.c) == AINF_ERR_ARG);
}
