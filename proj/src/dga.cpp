#include "ainf/dga.hpp"

#include "ainf/error.hpp"

namespace ainf {

namespace {

MultiMap resign(const MultiMap& m, const GradedSpace& space, const Field& field, int arity, int degree_shift) {
  MultiMap out(arity, degree_shift);
  for (const auto& [inputs, output] : m.entries())
    out.add(inputs, scaled(output, sign_scalar(field, space.degree(inputs.back()))));
  return out;
}

}  // namespace

AInfAlgebra dga_to_ainf(const Dga& dga) {
  std::vector<MultiMap> mu;
  mu.push_back(resign(dga.differential, dga.space, dga.field, 1, 1));
  mu.push_back(resign(dga.product, dga.space, dga.field, 2, 0));
  return AInfAlgebra(dga.field, dga.space, std::move(mu), dga.units);
}

Dga ainf_to_dga(const AInfAlgebra& alg) {
  if (!alg.is_dga()) fail(ErrorKind::kArgument, "algebra has nonzero mu^d for some d >= 3");
  Dga dga{alg.field(), alg.space(), {}, {}, alg.units()};
  // The sign change is an involution.
  dga.differential = resign(alg.mu(1), alg.space(), alg.field(), 1, 1);
  dga.product = resign(alg.mu(2), alg.space(), alg.field(), 2, 0);
  return dga;
}

}  // namespace ainf
