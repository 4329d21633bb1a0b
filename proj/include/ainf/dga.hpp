#pragma once

#include <optional>
#include <vector>

#include "ainf/algebra.hpp"

namespace ainf {

/// Differential graded algebra in the usual sign conventions: d has degree +1,
/// d(xy) = d(x) y + (-1)^{|x|} x d(y), product entries are (x2, x1) -> x2 x1.
struct Dga {
  Field field;
  GradedSpace space;
  MultiMap differential{1, 1};
  MultiMap product{2, 0};
  std::optional<std::vector<int>> units;
};

/// mu^1(x) = (-1)^{|x|} dx and mu^2(x2, x1) = (-1)^{|x1|} x2 x1.
AInfAlgebra dga_to_ainf(const Dga& dga);
/// Inverse of dga_to_ainf. Throws ErrorKind::kArgument if some mu^d, d >= 3, is nonzero.
Dga ainf_to_dga(const AInfAlgebra& alg);

}  // namespace ainf
