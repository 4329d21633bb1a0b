#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/verdict.hpp"

namespace ainf {

/// Object X of the underlying algebra tensored on the right with K in degree -shift.
struct Summand {
  int object;
  int shift;
};

/// Finite one-sided twisted complex: delta has entries from summand p to summand
/// q > p only, each an element of hom(object_p, object_q) of degree 1 + shift_q - shift_p.
struct TwistedComplex {
  std::vector<Summand> summands;
  std::map<std::pair<int, int>, LinComb> delta;
};

/// Cone(c: X -> Y) = (X[1] + Y, delta = c) for a degree-0 element c.
TwistedComplex cone(int x, int y, const LinComb& c);

/// Throws ErrorKind::kSemantic on a malformed complex.
void validate_twisted(const AInfAlgebra& alg, const TwistedComplex& x);
/// Nonzero entries (p, q) of sum_d mu^d(delta, ..., delta); empty iff Maurer-Cartan holds.
std::map<std::pair<int, int>, LinComb> maurer_cartan(const AInfAlgebra& alg, const TwistedComplex& x);

/// Basis element c of hom(object of summand p of complex i, object of summand q of complex j).
struct TwistedBasis {
  int source_complex;
  int source_summand;
  int target_complex;
  int target_summand;
  int element;
};

/// The full subcategory of Tw(alg) on the given complexes, as an algebra over
/// K^{#complexes}. An element c from summand (i, p) to summand (j, q) has id
/// "<c>@<i>.<p>><j>.<q>" and degree |c| + shift_p - shift_q.
struct TwistedCategory {
  AlgebraPtr algebra;
  std::vector<TwistedBasis> basis;
};

/// mu^d sums mu^{d+k} of alg over all insertions of delta entries, with signs
/// (-1)^{sum_k |w_k| (1 + ||c_1|| + ... + ||c_{k-1}||)} for the shifts w_k of
/// the inputs read from the right. Throws ErrorKind::kRelation on a Maurer-Cartan failure.
TwistedCategory twisted_category(const AlgebraPtr& alg, const std::vector<TwistedComplex>& objects);

struct HomComplex {
  GradedSpace space;
  MultiMap differential{1, 1};
  std::vector<TwistedBasis> basis;
};

/// hom_{Tw}(X, Y) with its differential.
HomComplex hom_twisted(const AlgebraPtr& alg, const TwistedComplex& x, const TwistedComplex& y);

/// (A 0 / B A) inside double_objects(B): basis a#11 for a in A, then a#22, then b#12 for b in B.
AlgebraPair tilde_directed(const AlgebraPair& pair);

struct ConeAlgebra {
  AlgebraPair tilde;
  std::vector<TwistedComplex> cones;  // S_i = Cone(e_i#12: V_i -> V_{i+m})
  TwistedCategory category;           // endomorphisms of S_1, ..., S_m
  AlgebraPair directed;               // identities of the S_i plus hom(S_i, S_j) for i < j
};

/// Throws ErrorKind::kArgument if B has no units.
ConeAlgebra cone_endomorphism_algebra(const AlgebraPair& pair);

/// Exact comparison of the cone algebra with suspend(pair) along
/// (a#22, 1 -> 1) = +a, (a#11, 0 -> 0) = -a, (b#12, 0 -> 1) = sb.
Verdict lemma_alg_check(const AlgebraPair& pair);

/// The cones Cone(e_i#12) in Tw(double_objects(B)): Maurer-Cartan, acyclic
/// endomorphism complex, and equality with B tensor hom_K(C, C).
Verdict verify_contractible_cone(const AlgebraPtr& b);

}  // namespace ainf
