#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "ainf/graded.hpp"

namespace ainf {

/// Residuals keyed by the full input tuple.
using Accumulator = std::map<Tuple, LinComb>;

/// For each basis index y, the (tuple, coefficient) pairs of entries whose output contains y.
using OutputIndex = std::unordered_map<int, std::vector<std::pair<const Tuple*, Scalar>>>;

OutputIndex index_by_output(const std::vector<MultiMap>& maps);

/// Adds factor * sum over outer entries u, slots j and inner entries t of
///   (-1)^{||u[j+1]|| + ... + ||u[last]||} outer(u[0..j-1], inner(t), u[j+1..])
/// keyed by u with t spliced in at slot j. Reduced degrees are read from
/// outer_input_space, the space of the elements to the right of the splice.
void accumulate_insertions(Accumulator& acc, const std::vector<MultiMap>& outer, const std::vector<MultiMap>& inner,
                           const GradedSpace& outer_input_space, const Scalar& factor);

/// Adds factor * sum of outer(phi^{s_r}(...), ..., phi^{s_1}(...)) keyed by the
/// concatenated inner tuple.
void accumulate_products(Accumulator& acc, const std::vector<MultiMap>& outer, const std::vector<MultiMap>& components,
                         const Scalar& factor);

/// Drops zero residuals; returns (arity, tuple)-sorted nonzero entries.
std::vector<std::pair<Tuple, LinComb>> nonzero_sorted(const Accumulator& acc);

/// Rows of a change of coordinates: old basis index -> (new index, coefficient).
using Expansion = std::vector<std::vector<std::pair<int, Scalar>>>;

/// Pulls a map back along per-slot expansions (nullptr keeps the slot as is)
/// and pushes outputs through output_transform (nullptr keeps outputs).
MultiMap transform_slots(const MultiMap& map, const std::vector<const Expansion*>& slots,
                         const std::vector<LinComb>* output_transform, int degree_shift);

/// Rewrites a multilinear map in new coordinates: every input slot is expanded
/// through input_expansion (old basis index -> new indices with coefficients,
/// i.e. the rows of new-in-old), and outputs through output_transform.
MultiMap transform_multimap(const MultiMap& map, const Expansion& input_expansion,
                            const std::vector<LinComb>& output_transform);

}  // namespace ainf
