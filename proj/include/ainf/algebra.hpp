#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ainf/graded.hpp"
#include "ainf/linalg.hpp"

namespace ainf {

/// One nonzero residual of a quadratic identity, keyed by its input tuple.
struct Failure {
  Tuple inputs;
  LinComb residual;
};

struct CheckReport {
  std::vector<Failure> failures;  // sorted by arity, then tuple
  bool passed() const { return failures.empty(); }
};

/// A-infinity algebra over R = K^m with structure maps mu^1 .. mu^D.
class AInfAlgebra {
 public:
  /// mu[d-1] is mu^d and must have arity d and degree shift 2 - d. units, when
  /// present, holds the basis index of e_i for each object i (degree 0, i -> i).
  /// Throws ErrorKind::kSemantic on malformed entries.
  AInfAlgebra(Field field, GradedSpace space, std::vector<MultiMap> mu, std::optional<std::vector<int>> units = {});

  const Field& field() const { return field_; }
  const GradedSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  int num_objects() const { return space_.num_objects(); }
  int arity_bound() const { return static_cast<int>(mu_.size()); }
  /// An empty map when d exceeds the bound.
  const MultiMap& mu(int d) const;
  const std::vector<MultiMap>& structure_maps() const { return mu_; }
  const std::optional<std::vector<int>>& units() const { return units_; }
  bool is_dga() const;

  bool operator==(const AInfAlgebra& other) const;

 private:
  Field field_;
  GradedSpace space_;
  std::vector<MultiMap> mu_;
  std::optional<std::vector<int>> units_;
};

using AlgebraPtr = std::shared_ptr<const AInfAlgebra>;

/// Incremental construction of an AInfAlgebra.
class AlgebraBuilder {
 public:
  AlgebraBuilder(Field field, int num_objects, int arity_bound);

  int add_basis(std::string id, int degree, int source, int target);
  int index_of(const std::string& id) const;
  void set_units(std::vector<int> units) { units_ = std::move(units); }
  /// Arity is inputs.size(); throws if it exceeds the bound.
  void add(const Tuple& inputs, int output, const Scalar& coefficient);
  void add(const Tuple& inputs, const LinComb& output);
  const Field& field() const { return field_; }

  AInfAlgebra build() const;

 private:
  Field field_;
  int num_objects_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int> ids_;
  std::vector<MultiMap> mu_;
  std::optional<std::vector<int>> units_;
};

/// A subalgebra A of B together with its inclusion (images in B's basis).
struct AlgebraPair {
  AlgebraPtr sub;
  AlgebraPtr ambient;
  std::vector<LinComb> inclusion;
};

/// The subalgebra spanned by a subset of B's basis; ids and constants are kept.
/// Throws ErrorKind::kSemantic if the subset is not closed under all mu^d.
AlgebraPair subalgebra_from_subset(const AlgebraPtr& ambient, const std::vector<int>& subset);
/// The subalgebra spanned by independent homogeneous vectors of B, one per given basis element.
AlgebraPair subalgebra_from_vectors(const AlgebraPtr& ambient, std::vector<BasisElement> basis,
                                    const std::vector<LinComb>& vectors, std::optional<std::vector<int>> units);
/// The inclusion is an injective strict homomorphism.
CheckReport check_pair(const AlgebraPair& pair);

/// Sum over r, s of (-1)^{||a_1|| + ... + ||a_r||} mu(a_d, ..., mu^s(...), a_r, ..., a_1).
CheckReport check_relations(const AInfAlgebra& alg);
/// Throws ErrorKind::kArgument when units are not declared.
bool check_strict_unital(const AInfAlgebra& alg);
/// Human-readable list of strict-unit violations (empty when unital).
std::vector<std::string> strict_unit_violations(const AInfAlgebra& alg);

struct BlockKey {
  int degree;
  int source;
  int target;
  auto operator<=>(const BlockKey&) const = default;
};

struct CohomologyBlock {
  int dim = 0;
  std::vector<LinComb> representatives;  // cycles spanning a complement of the boundaries
  std::vector<LinComb> boundaries;       // basis of the image of d in this block
};

struct Cohomology {
  std::map<BlockKey, CohomologyBlock> blocks;  // only blocks with nonzero cochains
  int dim(const BlockKey& key) const;
  std::map<int, int> dims_by_degree() const;  // nonzero entries only
  int total() const;
};

/// Cohomology of (space, d), computed blockwise by exact elimination.
/// Throws ErrorKind::kRelation if d does not square to zero.
Cohomology complex_cohomology(const Field& field, const GradedSpace& space, const MultiMap& d);
Cohomology cohomology(const AInfAlgebra& alg);

/// Whether a degree-0 block-preserving chain map induces an isomorphism on cohomology.
bool induces_cohomology_iso(const Field& field, const GradedSpace& source, const MultiMap& d_source,
                            const GradedSpace& target, const MultiMap& d_target, const std::vector<LinComb>& map);

/// The units together with every basis element from a lower to a higher object.
AlgebraPair directed_subalgebra(const AlgebraPtr& alg);

/// B tensor mat_2(K) over K^{2m}. The copy of b with source i, target j in
/// copies (alpha, beta) is "b#<alpha><beta>", with source i + (alpha-1) m and
/// target j + (beta-1) m.
AInfAlgebra double_objects(const AInfAlgebra& alg);

struct AInfHomomorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<MultiMap> components;  // components[d-1] has arity d, degree shift 1 - d
};

AInfHomomorphism strict_homomorphism(const AlgebraPtr& source, const AlgebraPtr& target,
                                     const std::vector<LinComb>& linear);
AInfHomomorphism identity_homomorphism(const AlgebraPtr& alg);
/// sum mu_B(phi(...), ..., phi(...)) = sum (-1)^{||a_1|| + ... + ||a_n||} phi(a_d, ..., mu_A(...), a_n, ..., a_1).
CheckReport check_homomorphism(const AInfHomomorphism& phi);
/// Throws ErrorKind::kRelation when the homomorphism equations fail.
bool is_quasi_iso(const AInfHomomorphism& phi);
/// The first component as a list of images of source basis elements.
std::vector<LinComb> linear_part(const AInfHomomorphism& phi);

/// Rewrites alg in a new basis given by vectors in the old one (invertible).
AInfAlgebra change_basis(const AInfAlgebra& alg, std::vector<BasisElement> basis, const std::vector<LinComb>& new_in_old,
                         std::optional<std::vector<int>> units);

/// First structure-constant mismatch when a is identified with b along a
/// bijection of basis indices (degrees and objects must agree as well).
std::optional<std::string> compare_algebras(const AInfAlgebra& a, const AInfAlgebra& b, const std::vector<int>& a_to_b);
/// Bijection matching equal ids; throws ErrorKind::kArgument if the id sets differ.
std::vector<int> match_ids(const GradedSpace& a, const GradedSpace& b);
/// First mismatch when small is identified with a basis-spanned subalgebra of big
/// along an injection: every mu of big restricted to the image must agree.
std::optional<std::string> compare_embedded(const AInfAlgebra& small, const AInfAlgebra& big,
                                            const std::vector<int>& small_to_big);

std::string describe_failure(const GradedSpace& inputs, const GradedSpace& outputs, const Failure& failure);

}  // namespace ainf
