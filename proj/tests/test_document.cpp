#include "doctest.h"

#include <regex>

#include "ainf/commands.hpp"
#include "ainf/document.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/simplicial.hpp"

using namespace ainf;

namespace {

std::vector<AlgebraPair> sample_pairs(const Field& f) {
  std::vector<AlgebraPair> out{fixture_k_pair(f), fixture_dual_pair(f, 1), fixture_dual_pair(f, 3),
                               fixture_an_pair(f, 1), fixture_an_pair(f, 2)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    out.push_back(fixture_random_pair(f, seed));
    out.push_back(fixture_random_pair(f, seed, SubalgebraChoice::kDirected));
  }
  return out;
}

void check_same(const AlgebraDocument& a, const AlgebraDocument& b) {
  CHECK(*a.algebra == *b.algebra);
  REQUIRE(a.pair.has_value() == b.pair.has_value());
  if (a.pair) {
    CHECK(*a.pair->sub == *b.pair->sub);
    CHECK(a.pair->inclusion == b.pair->inclusion);
  }
  CHECK(a.tags == b.tags);
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_algebra_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::kArgument;
}

std::string message_of(const std::string& text) {
  try {
    parse_algebra_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const std::string kBasis =
    R"("basis": [{"id": "e", "degree": 0, "source": 1, "target": 1, "unit": true},
                 {"id": "x", "degree": 1, "source": 1, "target": 1}])";

std::string doc_with(const std::string& mu) { return R"({"field": "q", "objects": 1, )" + kBasis + ", " + mu + "}"; }

std::string without_timing(std::string report) {
  return std::regex_replace(report, std::regex(R"("elapsed_ms": [0-9.e+-]+)"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("fnv-1a reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("algebra documents round-trip") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(2)})
    for (const AlgebraPair& p : sample_pairs(f)) {
      const AlgebraDocument doc = document_from_pair(p);
      const std::string text = serialize_algebra_document(doc);
      const AlgebraDocument back = parse_algebra_document(text);
      check_same(doc, back);
      CHECK(serialize_algebra_document(back) == text);

      const AlgebraDocument s = document_from_suspension(suspend(p));
      const std::string stext = serialize_algebra_document(s);
      const AlgebraDocument sback = parse_algebra_document(stext);
      check_same(s, sback);
      CHECK(serialize_algebra_document(sback) == stext);
      CHECK(check_pair(*sback.pair).passed());
    }
}

TEST_CASE("cochain and pair algebras round-trip") {
  for (int n = 1; n <= 2; ++n) {
    const PairAlgebra pa = pair_algebra(simplex_boundary_pair(n), Field::prime(3));
    const AlgebraDocument doc = document_from_pair(pa.pair);
    const std::string text = serialize_algebra_document(doc);
    check_same(doc, parse_algebra_document(text));
    const AlgebraDocument c = document_from_algebra(pa.cochains.algebra);
    CHECK(*parse_algebra_document(serialize_algebra_document(c)).algebra == *c.algebra);
  }
}

TEST_CASE("normalization") {
  const std::string messy = doc_with(R"("arity_bound": 3, "mu": [
      {"inputs": ["x", "e"], "output": [["2/4", "x"], ["1/2", "x"]]},
      {"inputs": ["e", "e"], "output": [["1", "e"], [0, "x"]]},
      {"inputs": ["e", "x"], "output": [[-1, "x"]]},
      {"inputs": ["x", "x"], "output": [["1", "x"], ["-1", "x"]]}])");
  const AlgebraDocument doc = parse_algebra_document(messy);
  CHECK(doc.algebra->arity_bound() == 3);
  CHECK(doc.algebra->mu(2).size() == 3);
  CHECK(check_relations(*doc.algebra).passed());
  CHECK(check_strict_unital(*doc.algebra));
  const std::string once = serialize_algebra_document(doc);
  CHECK(serialize_algebra_document(parse_algebra_document(once)) == once);
  // entries sorted by arity and basis order, e before x
  CHECK(once.find(R"(["e","e"])") < once.find(R"(["e","x"])"));
  CHECK(once.find(R"(["e","x"])") < once.find(R"(["x","e"])"));
  CHECK(once.find(R"([["-1","x"]])") != std::string::npos);
  CHECK(once.find(R"("source":1)") != std::string::npos);

  const std::string f3 = R"({"field": "fp:3", "objects": 1,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1}],
      "mu": [{"inputs": ["e", "e"], "output": [["-2", "e"]]}]})";
  CHECK(serialize_algebra_document(parse_algebra_document(f3)).find(R"([["1","e"]])") != std::string::npos);
  CHECK(parse_algebra_document(f3).algebra->arity_bound() == 2);
}

TEST_CASE("malformed and invalid documents") {
  CHECK(kind_of("{\"field\": ") == ErrorKind::kParse);
  CHECK(kind_of("[1, 2,]") == ErrorKind::kParse);
  CHECK(kind_of("[]") == ErrorKind::kSemantic);
  CHECK(kind_of(R"({"objects": 1, "basis": []})") == ErrorKind::kSemantic);
  CHECK(kind_of(R"({"field": "fp:4", "objects": 1, "basis": []})") == ErrorKind::kSemantic);
  CHECK(kind_of(R"({"field": "q", "objects": 0, "basis": []})") == ErrorKind::kSemantic);

  // degree: mu^2(x, e) must have degree 1
  const std::string degree = doc_with(R"("mu": [{"inputs": ["x", "e"], "output": [["1", "e"]]}])");
  CHECK(kind_of(degree) == ErrorKind::kSemantic);
  CHECK(message_of(degree).find("(x, e)") != std::string::npos);

  const std::string unknown = doc_with(R"("mu": [{"inputs": ["x", "y"], "output": [["1", "x"]]}])");
  CHECK(message_of(unknown).find("mu entry 0") != std::string::npos);
  CHECK(message_of(unknown).find("'y'") != std::string::npos);

  CHECK(kind_of(doc_with(R"("mu": [{"inputs": ["e", "e"], "output": [["1/0", "e"]]}])")) == ErrorKind::kSemantic);
  CHECK(kind_of(doc_with(R"("mu": [{"inputs": ["e", "e"], "output": [[1.5, "e"]]}])")) == ErrorKind::kSemantic);
  CHECK(kind_of(doc_with(R"("arity_bound": 2, "mu": [{"inputs": ["e", "e", "e"], "output": []}])")) ==
        ErrorKind::kSemantic);
  CHECK(kind_of(doc_with(R"("mu": [{"inputs": [], "output": []}])")) == ErrorKind::kSemantic);

  const std::string objects = R"({"field": "q", "objects": 2,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 3}]})";
  CHECK(message_of(objects).find("numbered 1..2") != std::string::npos);
  const std::string partial_units = R"({"field": "q", "objects": 2,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1, "unit": true}]})";
  CHECK(kind_of(partial_units) == ErrorKind::kSemantic);
  const std::string bad_unit = R"({"field": "q", "objects": 1,
      "basis": [{"id": "e", "degree": 1, "source": 1, "target": 1, "unit": true}]})";
  CHECK(kind_of(bad_unit) == ErrorKind::kSemantic);
  const std::string duplicate = R"({"field": "q", "objects": 1,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1}, {"id": "e", "degree": 0, "source": 1, "target": 1}]})";
  CHECK(kind_of(duplicate) == ErrorKind::kSemantic);
}

TEST_CASE("subalgebras in documents") {
  // x * x = e is not closed on {x}; {e} is closed.
  const std::string base = doc_with(R"("mu": [{"inputs": ["e", "e"], "output": [["1", "e"]]},
      {"inputs": ["x", "e"], "output": [["1", "x"]]}, {"inputs": ["e", "x"], "output": [["-1", "x"]]}])");
  auto with_sub = [&](const std::string& sub) { return base.substr(0, base.size() - 1) + ", \"subalgebra\": " + sub + "}"; };
  const AlgebraDocument ok = parse_algebra_document(with_sub(R"(["e"])"));
  REQUIRE(ok.pair);
  CHECK(ok.pair->sub->size() == 1);
  CHECK(ok.pair->sub->units().has_value());
  CHECK(kind_of(with_sub(R"(["nope"])")) == ErrorKind::kSemantic);
  CHECK(kind_of(with_sub(R"(["e", "e"])")) == ErrorKind::kSemantic);

  const AlgebraDocument scaled_e = parse_algebra_document(with_sub(R"([{"id": "u", "terms": [["1", "e"]], "unit": true}])"));
  CHECK(scaled_e.pair->sub->units() == std::optional<std::vector<int>>(std::vector<int>{0}));
  CHECK(kind_of(with_sub(R"([{"id": "u", "terms": []}])")) == ErrorKind::kSemantic);
  CHECK(kind_of(with_sub(R"([{"id": "u", "terms": [["1", "e"], ["1", "x"]]}])")) == ErrorKind::kSemantic);
  CHECK(kind_of(with_sub(R"([{"id": "u", "terms": [["1", "x"]], "unit": true}])")) == ErrorKind::kSemantic);

  const std::string squares = R"({"field": "q", "objects": 1,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1}, {"id": "y", "degree": 0, "source": 1, "target": 1}],
      "mu": [{"inputs": ["y", "y"], "output": [["1", "e"]]}], "subalgebra": ["y"]})";
  CHECK(kind_of(squares) == ErrorKind::kSemantic);
}

TEST_CASE("complex documents") {
  const std::string circle_text = R"({"vertices": ["a", "b", "c"], "simplices": [["a", "b"], ["b", "c"], ["a", "c"]],
                                      "subcomplex": [["a"]]})";
  const SimplicialPair circle = parse_complex_document(circle_text);
  CHECK(circle.complex.size() == 6);
  CHECK(circle.sub.size() == 1);
  const std::string text = serialize_complex_document(circle);
  const SimplicialPair back = parse_complex_document(text);
  CHECK(back.sub == circle.sub);
  CHECK(serialize_complex_document(back) == text);

  for (int n = 0; n <= 3; ++n) {
    const GluedDouble g = glue_double(simplex_boundary_pair(n));
    const SimplicialPair glued{g.complex, {}};
    const std::string gtext = serialize_complex_document(glued);
    const SimplicialPair gback = parse_complex_document(gtext);
    REQUIRE(gback.complex.size() == g.complex.size());
    for (int s = 0; s < g.complex.size(); ++s) {
      CHECK(gback.complex[s].name == g.complex[s].name);
      CHECK(gback.complex[s].vertices == g.complex[s].vertices);
      CHECK(gback.complex[s].faces == g.complex[s].faces);
    }
    CHECK(serialize_complex_document(gback) == gtext);
  }

  const SimplicialPair named = parse_complex_document(
      R"({"vertices": ["0", "1", "2"], "simplices": [["0", "1", "2"]], "subcomplex": ["01", ["1", "2"]]})");
  CHECK(named.sub.size() == 5);

  auto complex_kind = [](const std::string& t) {
    try {
      parse_complex_document(t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kArgument;
  };
  CHECK(complex_kind("{\"vertices\": [") == ErrorKind::kParse);
  CHECK(complex_kind(R"({"vertices": ["a"], "simplices": [["b"]]})") == ErrorKind::kSemantic);
  CHECK(complex_kind(R"({"vertices": ["a"], "simplices": [["a"]], "subcomplex": [["z"]]})") == ErrorKind::kSemantic);
  CHECK(complex_kind(R"({"vertices": ["a", "b"], "simplices": [{"name": "ab", "vertices": ["a", "b"], "faces": []},
      {"name": "a", "vertices": ["a"]}, {"name": "b", "vertices": ["b"]}]})") == ErrorKind::kSemantic);
}

TEST_CASE("validate command") {
  const Field q = Field::rationals();
  CHECK(cmd_validate(document_from_pair(fixture_k_pair(q))).verdict.passed());
  CHECK(cmd_validate(document_from_pair(fixture_by_name("Rand:7", q))).verdict.passed());
  // mu^2(e, e) = 2e keeps the relations and breaks strict unitality
  const Report doubled = cmd_validate(parse_algebra_document(
      R"({"field": "q", "objects": 1, "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1, "unit": true}],
          "mu": [{"inputs": ["e", "e"], "output": [["2", "e"]]}]})"));
  CHECK(!doubled.verdict.passed());
  REQUIRE(doubled.verdict.stages.size() == 2);
  CHECK(doubled.verdict.stages[0].passed);
  CHECK(!doubled.verdict.stages[1].passed);
  // units declared nowhere: the unit check is skipped
  const Report suspended = cmd_validate(document_from_suspension(suspend(fixture_an_pair(q, 2))));
  CHECK(suspended.verdict.passed());
}

TEST_CASE("suspend command") {
  const Field q = Field::rationals();
  const AlgebraDocument k = document_from_pair(fixture_k_pair(q));
  const SuspendOutput once = cmd_suspend(k, 1);
  CHECK(once.report.verdict.passed());
  CHECK(once.document.algebra->size() == 3);
  CHECK(once.document.tags == std::vector<std::string>{"+", "-", "s"});
  const SuspendOutput zero = cmd_suspend(k, 0);
  CHECK(serialize_algebra_document(zero.document) == serialize_algebra_document(k));

  const SuspendOutput twice = cmd_suspend(document_from_pair(fixture_dual_pair(q, 1)), 2);
  const AlgebraDocument reread = parse_algebra_document(serialize_algebra_document(twice.document));
  const Report h = cmd_cohomology(reread);
  REQUIRE(!h.cohomology.empty());
  CHECK(h.cohomology[0].second.dims_by_degree() == std::map<int, int>{{0, 1}, {3, 1}});

  CHECK_THROWS_AS(cmd_suspend(document_from_algebra(fixture_k(q)), 1), Error);
  CHECK_THROWS_AS(cmd_suspend(k, -1), Error);
}

TEST_CASE("a broken pair fails the gate instead of throwing") {
  const Field q = Field::rationals();
  const AlgebraDocument bad = parse_algebra_document(R"({"field": "q", "objects": 1,
      "basis": [{"id": "e", "degree": 0, "source": 1, "target": 1, "unit": true},
                {"id": "x", "degree": 0, "source": 1, "target": 1}],
      "mu": [{"inputs": ["e", "e"], "output": [["1", "e"]]}, {"inputs": ["x", "x"], "output": [["1", "e"]]},
             {"inputs": ["x", "e"], "output": [["2", "x"]]}, {"inputs": ["e", "x"], "output": [["1", "x"]]}],
      "subalgebra": ["e"]})");
  REQUIRE(!check_relations(*bad.algebra).passed());
  CHECK(!cmd_validate(bad).verdict.passed());
  CHECK(!cmd_suspend(bad, 1).report.verdict.passed());
  for (const std::string& lemma : algebra_lemmas()) CHECK(!cmd_verify(lemma, bad).verdict.passed());
}

TEST_CASE("verify command") {
  const Field q = Field::rationals();
  const Report ds = cmd_verify("double-suspension", document_from_pair(fixture_dual_pair(q, 2)));
  CHECK(ds.verdict.passed());
  REQUIRE(ds.cohomology.size() == 2);
  CHECK(ds.cohomology[0].second.dims_by_degree() == ds.cohomology[1].second.dims_by_degree());
  CHECK(cmd_verify("lemma-alg", document_from_pair(fixture_an_pair(q, 2))).verdict.passed());
  CHECK_THROWS_AS(cmd_verify("no-such-lemma", document_from_pair(fixture_k_pair(q))), Error);
  CHECK_THROWS_AS(cmd_verify("split", document_from_algebra(fixture_k(q))), Error);

  const Report sandwich = cmd_verify_sandwich(complex_fixture("Ball:2"), q);
  CHECK(sandwich.verdict.passed());
  REQUIRE(sandwich.cohomology.size() == 2);
  CHECK(sandwich.cohomology[0].second.dims_by_degree() == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(sandwich.cohomology[1].second.dims_by_degree() == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK_THROWS_AS(complex_fixture("Ball:0"), Error);
  CHECK_THROWS_AS(complex_fixture("Torus"), Error);
  CHECK(complex_fixture("Point").sub.size() == 1);
}

TEST_CASE("reports are deterministic apart from timing") {
  const Field f = Field::prime(3);
  const AlgebraDocument doc = document_from_pair(fixture_by_name("Rand:5", f));
  const std::string a = report_to_json(cmd_verify("phi-sigma", doc));
  const std::string b = report_to_json(cmd_verify("phi-sigma", document_from_pair(fixture_by_name("Rand:5", f))));
  CHECK(without_timing(a) == without_timing(b));
  CHECK(a.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(a.find("\"digest\": \"" + fnv1a_hex(serialize_algebra_document(doc)) + "\"") != std::string::npos);
}
