#include "ainf/commands.hpp"

#include <chrono>

#include "json.hpp"

#include "ainf/error.hpp"
#include "ainf/suspension.hpp"
#include "ainf/twisted.hpp"

namespace ainf {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

std::string first_failure(const CheckReport& report, const GradedSpace& space) {
  if (report.passed()) return {};
  return std::to_string(report.failures.size()) + " nonzero residual(s); first " +
         describe_failure(space, space, report.failures.front());
}

void add_relations(Verdict& v, const std::string& name, const AInfAlgebra& alg) {
  const CheckReport r = check_relations(alg);
  v.add(name, r.passed(), first_failure(r, alg.space()));
}

void add_unitality(Verdict& v, const std::string& name, const AInfAlgebra& alg) {
  const std::vector<std::string> bad = strict_unit_violations(alg);
  std::string detail;
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) detail += (i ? "; " : "") + bad[i];
  if (bad.size() > 3) detail += "; ...";
  v.add(name, bad.empty(), detail);
}

const AlgebraPair& require_pair(const AlgebraDocument& doc, const std::string& command) {
  if (!doc.pair) fail(ErrorKind::kArgument, command + " needs a document with a subalgebra");
  return *doc.pair;
}

// Gate for pipelines that assume a valid pair: failures become a failing verdict.
bool pair_gate(Verdict& v, const AlgebraPair& pair) {
  const CheckReport rel = check_relations(*pair.ambient);
  v.add("input relations", rel.passed(), first_failure(rel, pair.ambient->space()));
  const CheckReport inc = check_pair(pair);
  v.add("input inclusion", inc.passed(), inc.passed() ? std::string() : "the inclusion is not a strict homomorphism");
  return rel.passed() && inc.passed();
}

std::string digest_of(const AlgebraDocument& doc) { return fnv1a_hex(serialize_algebra_document(doc)); }

json cohomology_json(const Cohomology& h) {
  json by_degree = json::object();
  for (const auto& [degree, dim] : h.dims_by_degree()) by_degree[std::to_string(degree)] = dim;
  json blocks = json::array();
  for (const auto& [key, block] : h.blocks)
    if (block.dim > 0)
      blocks.push_back(json{{"degree", key.degree}, {"source", key.source + 1}, {"target", key.target + 1},
                            {"dim", block.dim}});
  return json{{"by_degree", std::move(by_degree)}, {"blocks", std::move(blocks)}, {"total", h.total()}};
}

}  // namespace

std::string report_to_json(const Report& report) {
  json checks = json::array();
  for (const StageCheck& s : report.verdict.stages) {
    json c{{"name", s.name}, {"passed", s.passed}};
    if (!s.detail.empty()) c["detail"] = s.detail;
    checks.push_back(std::move(c));
  }
  json out{{"command", report.command},
           {"digest", report.digest},
           {"verdict", report.verdict.passed() ? "pass" : "fail"},
           {"checks", std::move(checks)}};
  if (!report.cohomology.empty()) {
    json tables = json::object();
    for (const auto& [label, h] : report.cohomology) tables[label] = cohomology_json(h);
    out["cohomology"] = std::move(tables);
  }
  out["elapsed_ms"] = report.elapsed_ms;
  return out.dump(2) + "\n";
}

Report cmd_validate(const AlgebraDocument& doc) {
  const Timer timer;
  Report r{"validate", digest_of(doc), {}, {}, 0};
  add_relations(r.verdict, "relations", *doc.algebra);
  if (doc.algebra->units()) add_unitality(r.verdict, "strict units", *doc.algebra);
  if (doc.pair) {
    // Closure was enforced when the subalgebra was read.
    r.verdict.add("subalgebra closed under mu", true);
    const CheckReport inc = check_pair(*doc.pair);
    r.verdict.add("subalgebra inclusion", inc.passed(),
                  inc.passed() ? std::string() : "the inclusion is not a strict homomorphism");
    if (doc.pair->sub->units()) add_unitality(r.verdict, "subalgebra strict units", *doc.pair->sub);
  }
  r.elapsed_ms = timer.ms();
  return r;
}

Report cmd_cohomology(const AlgebraDocument& doc) {
  const Timer timer;
  Report r{"cohomology", digest_of(doc), {}, {}, 0};
  try {
    r.cohomology.emplace_back("algebra", cohomology(*doc.algebra));
    if (doc.pair) r.cohomology.emplace_back("subalgebra", cohomology(*doc.pair->sub));
    r.verdict.add("mu^1 squares to zero", true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kRelation) throw;
    r.cohomology.clear();
    r.verdict.add("mu^1 squares to zero", false, e.what());
  }
  r.elapsed_ms = timer.ms();
  return r;
}

SuspendOutput cmd_suspend(const AlgebraDocument& doc, int times) {
  const Timer timer;
  if (times < 0) fail(ErrorKind::kArgument, "--times must be non-negative");
  const AlgebraPair& pair = require_pair(doc, "suspend");
  SuspendOutput out{doc, Report{"suspend", digest_of(doc), {}, {}, 0}};
  Verdict& v = out.report.verdict;
  if (!pair_gate(v, pair)) {
    out.report.elapsed_ms = timer.ms();
    return out;
  }
  if (times > 0) {
    const SuspensionResult s = suspend(suspend_times(pair, times - 1));
    out.document = document_from_suspension(s);
    add_relations(v, "suspension relations", *s.pair.ambient);
    const CheckReport inc = check_pair(s.pair);
    v.add("suspension inclusion", inc.passed());
  }
  out.report.elapsed_ms = timer.ms();
  return out;
}

std::vector<std::string> algebra_lemmas() {
  return {"trivial-extension", "phi-sigma", "split", "double-suspension", "lemma-alg",
          "suspension",        "tensor",    "contractible"};
}

Report cmd_verify(const std::string& lemma, const AlgebraDocument& doc) {
  const Timer timer;
  Report r{"verify " + lemma, digest_of(doc), {}, {}, 0};
  Verdict& v = r.verdict;
  auto finish = [&] {
    r.elapsed_ms = timer.ms();
    return r;
  };
  auto append = [&](const Verdict& stages) {
    for (const StageCheck& s : stages.stages) v.stages.push_back(s);
  };

  if (lemma == "contractible") {
    add_relations(v, "input relations", *doc.algebra);
    if (v.passed()) append(verify_contractible_cone(doc.algebra));
    return finish();
  }
  bool known = false;
  for (const std::string& name : algebra_lemmas()) known = known || name == lemma;
  if (!known) fail(ErrorKind::kArgument, "unknown lemma '" + lemma + "'");
  const AlgebraPair& pair = require_pair(doc, "verify " + lemma);
  if (!pair_gate(v, pair)) return finish();

  if (lemma == "trivial-extension") {
    append(verify_trivial_extension(pair));
    r.cohomology.emplace_back("B^s", cohomology(*suspend(pair).pair.ambient));
  } else if (lemma == "phi-sigma") {
    append(verify_phi_sigma(pair));
  } else if (lemma == "split") {
    append(verify_split(pair));
  } else if (lemma == "double-suspension") {
    const DoubleSuspensionResult d = double_suspension_model(pair);
    append(d.verdict);
    r.cohomology.emplace_back("B^ss", cohomology(*d.double_suspension));
    r.cohomology.emplace_back("A + (B/A)[-2]", cohomology(*d.model));
  } else if (lemma == "lemma-alg") {
    append(lemma_alg_check(pair));
  } else if (lemma == "suspension") {
    const SuspensionResult s = suspend(pair);
    add_relations(v, "B^s relations", *s.pair.ambient);
    add_relations(v, "A^s relations", *s.pair.sub);
    v.add("A^s inclusion", check_pair(s.pair).passed());
  } else if (lemma == "tensor") {
    const auto failure = check_tensor_embedding(suspend(pair));
    v.add("B^s -> B tensor hom(C, C) is a strict homomorphism", !failure, failure.value_or(""));
  }
  return finish();
}

Report cmd_verify_sandwich(const SimplicialPair& pair, const Field& field) {
  const Timer timer;
  Report r{"verify sandwich", fnv1a_hex(serialize_complex_document(pair) + field.to_string()), {}, {}, 0};
  r.verdict = verify_sandwich(pair, field);
  const SandwichResult s = sandwich_map(pair, field);
  r.cohomology.emplace_back("W^s", cohomology(*s.double_cochains.algebra));
  r.cohomology.emplace_back("B^s", cohomology(*s.suspension.pair.ambient));
  r.elapsed_ms = timer.ms();
  return r;
}

SimplicialPair complex_fixture(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  int n = -1;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1 || n < 0 || n > 8) n = -1;
    } catch (const std::exception&) {
      n = -1;
    }
    if (n < 0) fail(ErrorKind::kArgument, "bad complex fixture parameter in '" + name + "'");
  }
  if (head == "Point" && colon == std::string::npos) return make_simplicial_pair(standard_simplex(0), {{"0"}});
  if (head == "Ball" && n >= 1) return simplex_boundary_pair(n);
  if (head == "Simplex" && n >= 0) return SimplicialPair{standard_simplex(n), {}};
  fail(ErrorKind::kArgument, "unknown complex fixture '" + name + "'");
}

std::vector<std::string> complex_fixture_names() { return {"Ball:<n>", "Simplex:<n>", "Point"}; }

}  // namespace ainf
