#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/suspension.hpp"
#include "ainf/verdict.hpp"

namespace ainf {

/// An ordered simplex of a Delta-complex. faces[k] is the simplex obtained by
/// deleting vertices[k]; vertex 0-simplices have no faces.
struct Simplex {
  std::string name;
  std::vector<int> vertices;
  std::vector<int> faces;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Finite Delta-complex with explicit face maps. Several simplices may share a vertex set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws ErrorKind::kSemantic if faces are missing, misplaced or inconsistent.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Simplex> simplices);

  /// Closure under faces of the given vertex sets; each simplex is ordered by
  /// the position of its vertices in the list, and named by joining the vertex
  /// names (with "." unless every vertex name is a single character).
  static SimplicialComplex from_vertex_sets(std::vector<std::string> vertices,
                                            const std::vector<std::vector<std::string>>& simplices);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  int size() const { return static_cast<int>(simplices_.size()); }
  const Simplex& operator[](int i) const { return simplices_[static_cast<std::size_t>(i)]; }
  /// Index of the 0-simplex on vertex v.
  int vertex_simplex(int v) const;
  /// The simplex with the given vertex set, if exactly one exists.
  std::optional<int> find(std::vector<int> vertex_set) const;
  /// Front face (first p+1 vertices) and back face (last q+1 vertices).
  int front_face(int s, int p) const;
  int back_face(int s, int q) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Simplex> simplices_;
};

/// W inside U, as a face-closed set of simplex indices of U.
struct SimplicialPair {
  SimplicialComplex complex;
  std::vector<int> sub;
};

/// Throws ErrorKind::kSemantic if a subcomplex simplex is not in U.
SimplicialPair make_simplicial_pair(SimplicialComplex complex, const std::vector<std::vector<std::string>>& sub);
/// The subcomplex as a complex of its own, with the vertices and simplices of W in U's order.
SimplicialComplex subcomplex(const SimplicialPair& pair);

/// Standard simplex Delta^n on vertices "0", ..., "n", and its boundary.
SimplicialComplex standard_simplex(int n);
SimplicialPair simplex_boundary_pair(int n);

/// A dga in a basis where the unit is the basis element "e" (primed until it
/// is unused; it replaces the dual of the first vertex). Other basis elements are the duals of simplices
/// (degree = dimension) under the simplex names.
struct CochainAlgebra {
  AlgebraPtr algebra;
  std::vector<LinComb> raw_to_basis;  // dual of simplex s in the algebra basis
  std::vector<LinComb> basis_to_raw;  // algebra basis element as a cochain
};

/// Simplicial cochains with the coboundary sum (-1)^k f(d_k s) and the
/// Alexander-Whitney cup product. Throws ErrorKind::kArgument for an empty complex.
CochainAlgebra cochain_dga(const SimplicialComplex& x, const Field& field);

/// B = C*(U) + C*(U, W)[1] with
///   d(b, c) = (db + (-1)^{deg c} c, dc),
///   (b2, c2)(b1, c1) = (b2 b1, b2 c1 + (-1)^{deg b1} c2 b1),
/// deg c being the cochain degree. Relative basis elements are "r:<simplex>".
struct PairAlgebra {
  AlgebraPair pair;              // C*(U) inside B, included as (b, 0)
  CochainAlgebra cochains;       // C*(U); the same algebra as pair.sub
  CochainAlgebra boundary;       // C*(W); the zero algebra when W is empty
  std::vector<int> relative;     // simplex of U -> index of "r:<simplex>" in B, or -1 on W
  AInfHomomorphism restriction;  // B -> C*(W), (b, c) -> b|W
};

PairAlgebra pair_algebra(const SimplicialPair& pair, const Field& field);

/// W^s = U+ glued to U- along W. U+ keeps U's vertices and simplices (same
/// indices); fresh U- vertices and simplices get a trailing "'".
struct GluedDouble {
  SimplicialComplex complex;
  std::vector<int> plus;   // simplex of U -> simplex of W^s
  std::vector<int> minus;
};

GluedDouble glue_double(const SimplicialPair& pair);

struct SandwichResult {
  GluedDouble glued;
  CochainAlgebra double_cochains;  // C*(W^s)
  PairAlgebra pair;
  SuspensionResult suspension;     // B^s
  AInfHomomorphism map;            // a -> (a|U+, a|U-, 0, a|U+ - a|U-)
};

SandwichResult sandwich_map(const SimplicialPair& pair, const Field& field);

/// The restriction B -> C*(W) and the sandwich map are quasi-isomorphisms and
/// H*(W^s) and H*(B^s) have equal dimensions.
Verdict verify_sandwich(const SimplicialPair& pair, const Field& field);

}  // namespace ainf
