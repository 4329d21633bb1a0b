#pragma once

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ainf/algebra.hpp"

namespace ainf {

/// (s, r): number of algebra inputs to the left and to the right of the module slot.
using SlotCounts = std::pair<int, int>;

/// A-infinity bimodule over a fixed algebra. The map with key (s, r) reads
/// tuples (a_{r+s}, ..., a_{r+1}, p, a_r, ..., a_1): algebra basis indices in
/// the outer slots, a module basis index in slot s (counted from the left).
class AInfBimodule {
 public:
  /// Throws ErrorKind::kSemantic on malformed entries.
  AInfBimodule(AlgebraPtr base, GradedSpace space, std::map<SlotCounts, MultiMap> maps);

  const AlgebraPtr& base() const { return base_; }
  const GradedSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  const std::map<SlotCounts, MultiMap>& maps() const { return maps_; }
  /// An empty map when absent.
  const MultiMap& map(int s, int r) const;
  /// Largest s + r + 1 with a nonzero map.
  int arity_bound() const;

  bool operator==(const AInfBimodule& other) const;

 private:
  AlgebraPtr base_;
  GradedSpace space_;
  std::map<SlotCounts, MultiMap> maps_;
};

using BimodulePtr = std::shared_ptr<const AInfBimodule>;

/// mu^{d-i|1|i-1}(a_d, ..., a_1) = (-1)^{||a_1|| + ... + ||a_{i-1}|| + 1} mu^d(a_d, ..., a_1).
AInfBimodule diagonal_bimodule(const AlgebraPtr& alg);
/// B over A with the diagonal sign rule, algebra inputs included along the pair's inclusion.
AInfBimodule restriction_bimodule(const AlgebraPair& pair);
/// P[k]: degrees drop by k; each unit shift multiplies mu^{s|1|r} by (-1)^{||a_1|| + ... + ||a_r|| + 1}.
AInfBimodule shift_bimodule(const AInfBimodule& p, int k);
/// P^v[-n]: the dual of p (id "p^v") sits in degree n - deg p with source and target swapped.
AInfBimodule dual_bimodule(const AInfBimodule& p, int n);
AInfBimodule zero_bimodule(const AlgebraPtr& alg);
/// Basis of p followed by basis of q; ids must not collide.
AInfBimodule direct_sum(const AInfBimodule& p, const AInfBimodule& q);

struct QuotientResult {
  AInfBimodule quotient;
  std::vector<int> complement;       // basis indices of p representing the quotient basis, same ids
  std::vector<LinComb> projection;   // image of each basis element of p
};

/// p / span(sub). The quotient basis is the greedy complement in basis order.
/// Throws ErrorKind::kSemantic if the span is not a sub-bimodule.
QuotientResult quotient_bimodule(const AInfBimodule& p, const std::vector<LinComb>& sub);

/// A + P with mu^d carrying (-1)^{||a_1|| + ... + ||a_{i-1}|| + 1} mu_P^{d-i|1|i-1} on the module slot.
/// Algebra basis first, then module basis; module ids colliding with algebra ids get a trailing "'".
AInfAlgebra trivial_extension(const AlgebraPtr& alg, const AInfBimodule& p);

/// Failures of the relations of the trivial extension that involve a module input.
/// Tuples index the basis of trivial_extension(base, p).
CheckReport check_bimodule_relations(const AInfBimodule& p);

struct BimoduleMorphism {
  BimodulePtr source;
  BimodulePtr target;
  std::map<SlotCounts, MultiMap> components;  // key (s, r): degree shift -r-s
};

BimoduleMorphism strict_bimodule_morphism(const BimodulePtr& source, const BimodulePtr& target,
                                          const std::vector<LinComb>& linear);
std::vector<LinComb> linear_part(const BimoduleMorphism& phi);

/// The homomorphism A + P[-1] -> A + Q[-1] that is the identity on A and has
/// components phi^{s|1|r} (unsigned) on tuples with one module input.
AInfHomomorphism extension_homomorphism(const BimoduleMorphism& phi);
/// Morphism equations, defined as the homomorphism equations of extension_homomorphism.
/// Throws ErrorKind::kArgument when the base algebras differ.
CheckReport check_bimodule_morphism(const BimoduleMorphism& phi);
/// phi^{0|1|0} induces an isomorphism on mu^{0|1|0}-cohomology. Throws
/// ErrorKind::kRelation when the morphism equations fail.
bool is_bimodule_quasi_iso(const BimoduleMorphism& phi);

namespace detail {
struct DualSignInputs {
  int left;         // sum of reduced degrees of the algebra inputs left of the dual slot
  int right;        // same, to the right
  int dual_degree;  // degree of the dual input
  int s;
  int r;
  int n;
};
/// dual_bimodule with an explicit sign exponent; used to pin the convention in tests.
AInfBimodule dual_bimodule_with_sign(const AInfBimodule& p, int n,
                                     const std::function<long(const DualSignInputs&)>& exponent);
long default_dual_sign(const DualSignInputs& in);
}  // namespace detail

}  // namespace ainf
