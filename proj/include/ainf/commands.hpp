#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/document.hpp"
#include "ainf/simplicial.hpp"
#include "ainf/verdict.hpp"

namespace ainf {

struct Report {
  std::string command;
  std::string digest;  // of the normalized input
  Verdict verdict;
  std::vector<std::pair<std::string, Cohomology>> cohomology;
  double elapsed_ms = 0;  // the only field that varies between runs
};

std::string report_to_json(const Report& report);

/// Relations, strict unitality when units are declared, and the subalgebra.
Report cmd_validate(const AlgebraDocument& doc);
/// Throws ErrorKind::kRelation if mu^1 does not square to zero.
Report cmd_cohomology(const AlgebraDocument& doc);

struct SuspendOutput {
  AlgebraDocument document;
  Report report;
};

/// k-fold suspension of the document's pair; k = 0 returns the document.
/// Throws ErrorKind::kArgument without a subalgebra.
SuspendOutput cmd_suspend(const AlgebraDocument& doc, int times);

/// trivial-extension, phi-sigma, split, double-suspension, lemma-alg, and the
/// extra checks suspension, tensor, contractible.
std::vector<std::string> algebra_lemmas();
Report cmd_verify(const std::string& lemma, const AlgebraDocument& doc);
Report cmd_verify_sandwich(const SimplicialPair& pair, const Field& field);

/// "Ball:<n>" = (Delta^n, boundary), "Simplex:<n>" = (Delta^n, empty), "Point" = (pt, pt).
SimplicialPair complex_fixture(const std::string& name);
std::vector<std::string> complex_fixture_names();

}  // namespace ainf
