#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"

namespace ainf {

/// K: one object, basis {e}, mu^2(e, e) = e.
AlgebraPtr fixture_k(const Field& field);
/// K + K eps with deg eps = n: mu^2(e, eps) = (-1)^n eps, mu^2(eps, e) = eps, mu^2(eps, eps) = 0.
AlgebraPtr fixture_dual(const Field& field, int n);
/// Directed A_2 path algebra: e1, e2 and x: 1 -> 2 in degree 0.
AlgebraPtr fixture_a2(const Field& field);

/// A = B = K.
AlgebraPair fixture_k_pair(const Field& field);
/// K inside K + K eps.
AlgebraPair fixture_dual_pair(const Field& field, int n);
/// The A_2 path algebra inside its trivial extension by its dual diagonal bimodule shifted by n.
AlgebraPair fixture_an_pair(const Field& field, int n);

enum class SubalgebraChoice {
  kClosedSubset,  // random basis subset containing the units, closed under all mu^d
  kDirected,      // the directed subalgebra
};

/// Random strictly unital algebra with at most 6 basis elements, arity bound 3,
/// one or two objects; sparse random structure constants are rejection-sampled
/// until the relations hold. Deterministic in (field, seed).
AlgebraPtr random_algebra(const Field& field, std::uint64_t seed);
AlgebraPair fixture_random_pair(const Field& field, std::uint64_t seed,
                                SubalgebraChoice choice = SubalgebraChoice::kClosedSubset);

/// Pair by name: "K", "Dual:<n>", "An:<n>", "Rand:<seed>", "RandDirected:<seed>".
AlgebraPair fixture_by_name(const std::string& name, const Field& field);
std::vector<std::string> fixture_names();

}  // namespace ainf
