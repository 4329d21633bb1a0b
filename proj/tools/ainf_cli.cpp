#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ainf/ainf.h"

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 input error.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  std::string input;
  std::string fixture;
  std::string field;
  std::string out;
  std::string json_report;
  std::string lemma;
  std::string target;
  unsigned long long seed = 1;
  int times = 1;
};

struct CliError {
  int code;
  std::string message;
};

struct Owned {
  char* s = nullptr;
  ~Owned() { ainf_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

using AlgebraHandle = std::unique_ptr<ainf_algebra, decltype(&ainf_algebra_free)>;
using ComplexHandle = std::unique_ptr<ainf_complex, decltype(&ainf_complex_free)>;

int code_of(ainf_status status) { return status == AINF_ERR_VERIFY ? kFail : kInput; }

void check(ainf_status status) {
  if (status != AINF_OK) throw CliError{code_of(status), ainf_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kInput, "cannot read '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{kInput, "cannot write '" + path + "'"};
}

const char* field_arg(const Options& o) { return o.field.empty() ? nullptr : o.field.c_str(); }

std::string fixture_name(const Options& o) {
  const std::string& name = o.fixture;
  if (name == "Rand" || name == "RandDirected") return name + ":" + std::to_string(o.seed);
  return name;
}

AlgebraHandle load_algebra(const Options& o) {
  if (o.input.empty() == o.fixture.empty()) throw CliError{kInput, "give either an input document or --fixture"};
  ainf_algebra* a = nullptr;
  if (!o.fixture.empty()) {
    check(ainf_algebra_fixture(fixture_name(o).c_str(), field_arg(o), &a));
    return AlgebraHandle(a, ainf_algebra_free);
  }
  check(ainf_algebra_parse(read_input(o.input).c_str(), &a));
  AlgebraHandle handle(a, ainf_algebra_free);
  if (!o.field.empty()) {
    Owned field;
    check(ainf_algebra_field(a, &field.s));
    if (field.str() != o.field) throw CliError{kInput, "the document is over " + field.str() + ", not " + o.field};
  }
  return handle;
}

ComplexHandle load_complex(const Options& o) {
  if (o.input.empty() == o.fixture.empty()) throw CliError{kInput, "give either a complex document or --fixture"};
  ainf_complex* c = nullptr;
  if (!o.fixture.empty())
    check(ainf_complex_fixture(o.fixture.c_str(), &c));
  else
    check(ainf_complex_parse(read_input(o.input).c_str(), &c));
  return ComplexHandle(c, ainf_complex_free);
}

// Reports go to --json-report when given, otherwise to stdout; a one-word verdict goes to stderr.
int finish_report(const Options& o, const Owned& report, int passed, bool stdout_taken) {
  if (!o.json_report.empty())
    write_output(o.json_report, report.str());
  else if (!stdout_taken)
    std::cout << report.str();
  std::cerr << (passed ? "pass" : "fail") << "\n";
  return passed ? kPass : kFail;
}

int run_validate(const Options& o) {
  const AlgebraHandle a = load_algebra(o);
  Owned report;
  int passed = 0;
  check(ainf_validate(a.get(), &report.s, &passed));
  return finish_report(o, report, passed, false);
}

int run_cohomology(const Options& o) {
  const AlgebraHandle a = load_algebra(o);
  Owned report;
  int passed = 0;
  check(ainf_cohomology(a.get(), &report.s, &passed));
  return finish_report(o, report, passed, false);
}

int run_suspend(const Options& o) {
  const AlgebraHandle a = load_algebra(o);
  ainf_algebra* raw = nullptr;
  Owned report;
  int passed = 0;
  check(ainf_suspend(a.get(), o.times, &raw, &report.s, &passed));
  const AlgebraHandle result(raw, ainf_algebra_free);
  if (passed) {
    Owned doc;
    check(ainf_algebra_to_json(result.get(), &doc.s));
    write_output(o.out, doc.str());
  }
  return finish_report(o, report, passed, o.out.empty() || o.out == "-");
}

int run_verify(const Options& o) {
  Owned report;
  int passed = 0;
  if (o.lemma == "sandwich") {
    const ComplexHandle c = load_complex(o);
    check(ainf_verify_sandwich(c.get(), field_arg(o), &report.s, &passed));
  } else {
    const AlgebraHandle a = load_algebra(o);
    check(ainf_verify(a.get(), o.lemma.c_str(), &report.s, &passed));
  }
  return finish_report(o, report, passed, false);
}

int run_fixtures(const Options& o) {
  if (o.target == "list") {
    Owned names;
    check(ainf_fixture_names(&names.s));
    std::cout << names.str() << "complexes: Ball:<n>, Simplex:<n>, Point\n";
    return kPass;
  }
  if (o.target != "emit") throw CliError{kInput, "fixtures takes list or emit"};
  if (o.fixture.empty() && !o.input.empty()) {
    Options named = o;
    named.fixture = o.input;
    named.input.clear();
    return run_fixtures(named);
  }
  const AlgebraHandle a = load_algebra(o);
  Owned doc;
  check(ainf_algebra_to_json(a.get(), &doc.s));
  write_output(o.out, doc.str());
  return kPass;
}

int run_simplicial(const Options& o, const std::string& what) {
  const ComplexHandle c = load_complex(o);
  Owned doc;
  if (what == "double") {
    ainf_complex* raw = nullptr;
    check(ainf_complex_double(c.get(), &raw));
    const ComplexHandle glued(raw, ainf_complex_free);
    check(ainf_complex_to_json(glued.get(), &doc.s));
  } else {
    ainf_algebra* raw = nullptr;
    check(what == "build" ? ainf_complex_cochains(c.get(), field_arg(o), &raw)
                          : ainf_complex_pair(c.get(), field_arg(o), &raw));
    const AlgebraHandle alg(raw, ainf_algebra_free);
    check(ainf_algebra_to_json(alg.get(), &doc.s));
  }
  write_output(o.out, doc.str());
  return kPass;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "input JSON document, or - for stdin");
  cmd->add_option("--fixture", o.fixture, "named fixture instead of an input document");
  cmd->add_option("--field", o.field, "q or fp:<p>");
  cmd->add_option("--seed", o.seed, "seed for Rand and RandDirected without a parameter");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--json-report", o.json_report, "write the JSON report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A-infinity algebras, suspensions and their checks"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check relations, strict units and the subalgebra");
  add_common(validate, o);
  auto* cohomology = app.add_subcommand("cohomology", "graded cohomology dimensions per block");
  add_common(cohomology, o);
  auto* suspend = app.add_subcommand("suspend", "suspension of the document's pair");
  add_common(suspend, o);
  suspend->add_option("--times", o.times, "number of suspensions")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->add_option("lemma", o.lemma,
                     "trivial-extension, phi-sigma, split, double-suspension, lemma-alg, sandwich, "
                     "suspension, tensor, contractible")
      ->required();
  add_common(verify, o);
  auto* fixtures = app.add_subcommand("fixtures", "list or emit fixtures");
  fixtures->add_option("action", o.target, "list or emit")->required();
  add_common(fixtures, o);
  auto* simplicial = app.add_subcommand("simplicial", "cochain algebras of simplicial pairs");
  std::string what;
  simplicial->add_option("action", what, "build, pair or double")
      ->required()
      ->check(CLI::IsMember({"build", "pair", "double"}));
  add_common(simplicial, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return run_validate(o);
    if (*cohomology) return run_cohomology(o);
    if (*suspend) return run_suspend(o);
    if (*verify) return run_verify(o);
    if (*fixtures) return run_fixtures(o);
    if (*simplicial) return run_simplicial(o, what);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kInput;
}
