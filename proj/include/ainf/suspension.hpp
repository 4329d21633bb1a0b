#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/bimodule.hpp"
#include "ainf/dga.hpp"
#include "ainf/verdict.hpp"

namespace ainf {

enum class ComponentTag { kPlus, kMinus, kShifted };

/// The pair (A^s, B^s). B^s has basis "+a" for all a in A, then "-a", then
/// "s<b>" for all b in B (degree deg b + 1). A^s is a copy of A (same ids and
/// constants) included as a -> (+a) + (-a).
struct SuspensionResult {
  AlgebraPair original;
  AlgebraPair pair;
  std::vector<ComponentTag> tags;
  std::vector<int> source_index;  // index in A for plus/minus, in B for shifted

  int plus(int a) const { return a; }
  int minus(int a) const { return original.sub->size() + a; }
  int shifted(int b) const { return 2 * original.sub->size() + b; }
};

/// Throws ErrorKind::kRelation if the input pair fails its checks.
SuspensionResult suspend(const AlgebraPair& pair);
/// k-fold suspension; k = 0 returns the input.
AlgebraPair suspend_times(const AlgebraPair& pair, int k);

struct DgaPair {
  Dga sub;
  Dga ambient;
  std::vector<LinComb> inclusion;
};

/// Throws ErrorKind::kArgument unless both algebras have mu^d = 0 for d >= 3.
DgaPair to_dga_pair(const AlgebraPair& pair);
/// The dga formulas for the suspension, with the same basis as suspend:
///   d(a+, a-, b) = (da+, da-, db - (-1)^{|a+|} a+ + (-1)^{|a-|} a-),
///   (a2+, a2-, b2)(a1+, a1-, b1) = (a2+ a1+, a2- a1-, a2+ b1 + (-1)^{|a1-|} b2 a1-).
Dga suspend_dga(const DgaPair& pair);

/// hom_K(C, C) for C = K in degrees -1 and 0 with d = id: ids "E+", "E-", "u" (degree 1), "v" (degree -1).
Dga end_c(const Field& field);
/// B tensor hom_K(C, C); basis b@E+, b@E-, b@u, b@v at index 4b + k.
AInfAlgebra tensor_with_endC(const AInfAlgebra& b);
/// Images of the basis of B^s in the tensor algebra: +a -> a@E+, -a -> a@E-, sb -> b@u.
std::vector<LinComb> suspension_into_tensor(const SuspensionResult& s);
/// First failure of the embedding B^s -> B tensor hom_K(C, C) as a strict homomorphism, if any.
std::optional<std::string> check_tensor_embedding(const SuspensionResult& s);

/// phi^s for a bimodule morphism phi between the restriction bimodules of the
/// two original pairs that is the identity on A. Throws ErrorKind::kArgument otherwise.
AInfHomomorphism suspend_morphism(const SuspensionResult& source, const SuspensionResult& target,
                                  const BimoduleMorphism& phi);

struct SplitResult {
  SuspensionResult suspension;
  BimodulePtr restriction;  // B^s over A^s
  QuotientResult quotient;  // B^s / A^s
  BimodulePtr quotient_module;
  BimoduleMorphism xi;      // quotient -> restriction
};

/// The strict inverse of the projection on the sub-bimodule of elements (a+, 0, b).
SplitResult split_after_suspension(const AlgebraPair& pair);

/// A inside trivial_extension(A, P), included as the first summand.
AlgebraPair trivial_extension_pair(const AlgebraPtr& alg, const AInfBimodule& p);

struct DoubleSuspensionResult {
  AlgebraPtr double_suspension;  // B^ss
  AlgebraPtr model;              // A + (B/A)[-2]
  Verdict verdict;
};

/// A + P inside its suspension: the strict map A + P[-1] -> (A + P)^s, a -> (+a) + (-a), p -> s p.
Verdict verify_trivial_extension(const AlgebraPtr& alg, const AInfBimodule& p);
/// The above for P = B/A.
Verdict verify_trivial_extension(const AlgebraPair& pair);
Verdict verify_split(const AlgebraPair& pair);
/// phi^s for phi = iota + xi^s: (A^s + B^s/A^s)^s -> B^ss.
Verdict verify_phi_sigma(const AlgebraPair& pair);
DoubleSuspensionResult double_suspension_model(const AlgebraPair& pair);

}  // namespace ainf
