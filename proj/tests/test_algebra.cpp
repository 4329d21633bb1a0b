#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "oracle.hpp"

using namespace ainf;

namespace {

std::map<Tuple, LinComb> as_map(const CheckReport& report) {
  std::map<Tuple, LinComb> out;
  for (const Failure& f : report.failures) out[f.inputs] = f.residual;
  return out;
}

// Adds c times the first stored output term to the first entry of mu^d.
AInfAlgebra perturbed(const AInfAlgebra& alg, int d, long c) {
  std::vector<MultiMap> mu = alg.structure_maps();
  MultiMap& m = mu[static_cast<std::size_t>(d - 1)];
  const auto& [inputs, output] = *m.entries().begin();
  const Tuple t = inputs;
  const int y = output.begin()->first;
  m.add(t, y, alg.field().from_int(c));
  return AInfAlgebra(alg.field(), alg.space(), mu, alg.units());
}

}  // namespace

TEST_CASE("ground field is associative and unital") {
  const AlgebraPtr k = fixture_k(Field::rationals());
  CHECK(check_relations(*k).passed());
  CHECK(check_strict_unital(*k));
  CHECK(cohomology(*k).dims_by_degree() == std::map<int, int>{{0, 1}});
}

TEST_CASE("doubling the unit product keeps the relations but breaks unitality") {
  // The relations are quadratic in mu, so mu^2 = 2 * (K's product) still
  // satisfies them: the arity 3 residual is 4e - 4e.
  const Field q = Field::rationals();
  AlgebraBuilder b(q, 1, 2);
  const int e = b.add_basis("e", 0, 0, 0);
  b.add({e, e}, e, q.from_int(2));
  b.set_units({e});
  CHECK(check_relations(b.build()).passed());
  CHECK(oracle::relation_residuals(b.build()).empty());
  CHECK_FALSE(check_strict_unital(b.build()));

  // Doubling only the product with one idempotent of A_2 is detected at arity 3.
  const AlgebraPtr a2 = fixture_a2(q);
  std::vector<MultiMap> mu = a2->structure_maps();
  mu[1].add({2, 0}, 2, q.one());
  const CheckReport report = check_relations(AInfAlgebra(q, a2->space(), mu));
  REQUIRE(!report.passed());
  CHECK(report.failures.front().inputs.size() == 3);
}

TEST_CASE("check_relations agrees with the brute-force oracle") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(2)}) {
    std::vector<AInfAlgebra> algebras;
    algebras.push_back(*fixture_k(f));
    algebras.push_back(*fixture_dual(f, 2));
    algebras.push_back(*fixture_an_pair(f, 2).ambient);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) algebras.push_back(*random_algebra(f, seed));
    for (const AInfAlgebra& alg : algebras) {
      CHECK(check_relations(alg).passed());
      CHECK(oracle::relation_residuals(alg).empty());
      for (int d = 1; d <= alg.arity_bound(); ++d) {
        if (alg.mu(d).empty()) continue;
        const AInfAlgebra broken = perturbed(alg, d, 1);
        CHECK(as_map(check_relations(broken)) == oracle::relation_residuals(broken));
      }
    }
  }
}

TEST_CASE("failures are sorted by arity then tuple") {
  const AInfAlgebra broken = perturbed(*fixture_an_pair(Field::rationals(), 1).ambient, 2, 1);
  const CheckReport report = check_relations(broken);
  REQUIRE(!report.passed());
  for (std::size_t k = 1; k < report.failures.size(); ++k) {
    const Tuple& a = report.failures[k - 1].inputs;
    const Tuple& b = report.failures[k].inputs;
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
}

TEST_CASE("strict unitality") {
  const Field q = Field::rationals();
  CHECK(check_strict_unital(*fixture_dual(q, 3)));
  CHECK(check_strict_unital(*fixture_an_pair(q, 2).ambient));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) CHECK(check_strict_unital(*random_algebra(q, seed)));

  AlgebraBuilder b(q, 1, 3);
  const int e = b.add_basis("e", 0, 0, 0);
  const int x = b.add_basis("x", 0, 0, 0);
  const int y = b.add_basis("y", 1, 0, 0);
  b.add({e, e}, e, q.one());
  b.add({x, e}, x, q.one());
  b.add({e, x}, x, q.one());
  b.add({y, e}, y, q.one());
  b.add({e, y}, y, -q.one());
  b.set_units({e});
  CHECK(check_strict_unital(b.build()));
  b.add({e, x, y}, x, q.one());
  CHECK_FALSE(check_strict_unital(b.build()));
  CHECK(!strict_unit_violations(b.build()).empty());

  AlgebraBuilder no_units(q, 1, 2);
  no_units.add_basis("e", 0, 0, 0);
  CHECK_THROWS_AS(check_strict_unital(no_units.build()), Error);
}

TEST_CASE("cohomology by elimination") {
  const Field q = Field::rationals();
  // e+, e-, s with d e+ = -s, d e- = s
  AlgebraBuilder b(q, 1, 1);
  const int ep = b.add_basis("+e", 0, 0, 0);
  const int em = b.add_basis("-e", 0, 0, 0);
  const int s = b.add_basis("se", 1, 0, 0);
  b.add({ep}, s, -q.one());
  b.add({em}, s, q.one());
  const Cohomology h = cohomology(b.build());
  CHECK(h.dims_by_degree() == std::map<int, int>{{0, 1}});
  CHECK(h.total() == 1);

  AlgebraBuilder bad(q, 1, 1);
  const int u = bad.add_basis("u", 0, 0, 0);
  const int v = bad.add_basis("v", 1, 0, 0);
  const int w = bad.add_basis("w", 2, 0, 0);
  bad.add({u}, v, q.one());
  bad.add({v}, w, q.one());
  CHECK_THROWS_AS(cohomology(bad.build()), Error);
}

TEST_CASE("euler characteristic per block survives cohomology") {
  for (const Field& f : {Field::rationals(), Field::prime(2)})
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const AlgebraPtr alg = random_algebra(f, seed);
      std::map<std::pair<int, int>, int> chain;
      for (const BasisElement& x : alg->space().elements())
        chain[{x.source, x.target}] += is_odd(x.degree) ? -1 : 1;
      std::map<std::pair<int, int>, int> cohom;
      for (const auto& [key, block] : cohomology(*alg).blocks)
        cohom[{key.source, key.target}] += is_odd(key.degree) ? -block.dim : block.dim;
      for (const auto& [block, chi] : chain) CHECK(cohom[block] == chi);
    }
}

TEST_CASE("directed subalgebra") {
  const Field q = Field::rationals();
  const AlgebraPair an = directed_subalgebra(fixture_an_pair(q, 2).ambient);
  CHECK(an.sub->size() == 3);
  CHECK(compare_algebras(*an.sub, *fixture_a2(q), match_ids(an.sub->space(), fixture_a2(q)->space())) == std::nullopt);
  const AlgebraPair one = directed_subalgebra(fixture_dual(q, 1));
  CHECK(one.sub->size() == 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AlgebraPair p = directed_subalgebra(random_algebra(q, seed));
    CHECK(check_relations(*p.sub).passed());
    CHECK(check_pair(p).passed());
  }
}

TEST_CASE("object doubling") {
  const Field q = Field::rationals();
  const AInfAlgebra kk = double_objects(*fixture_k(q));
  CHECK(kk.num_objects() == 2);
  CHECK(kk.size() == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const LinComb out =
          apply_multimap(kk.mu(2), std::vector<LinComb>{single(x, q.one()), single(y, q.one())});
      if (kk.space()[y].target == kk.space()[x].source) CHECK(out.size() == 1);
      else CHECK(out.empty());
    }
  for (const Field& f : {Field::rationals(), Field::prime(3)})
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const AlgebraPtr b = random_algebra(f, seed);
      const AInfAlgebra d = double_objects(*b);
      CHECK(d.size() == 4 * b->size());
      CHECK(d.num_objects() == 2 * b->num_objects());
      CHECK(check_relations(d).passed());
      CHECK(check_strict_unital(d));
    }
}

TEST_CASE("homomorphism checks") {
  const Field q = Field::rationals();
  const AlgebraPtr b = fixture_an_pair(q, 1).ambient;
  const AInfHomomorphism id = identity_homomorphism(b);
  CHECK(check_homomorphism(id).passed());
  CHECK(is_quasi_iso(id));

  std::vector<LinComb> flipped = linear_part(id);
  flipped[2] = single(2, -q.one());  // x -> -x
  const AInfHomomorphism bad = strict_homomorphism(b, b, flipped);
  CHECK_FALSE(check_homomorphism(bad).passed());
  CHECK_THROWS_AS(is_quasi_iso(bad), Error);

  const AlgebraPtr dual = fixture_dual(q, 2);
  const AInfHomomorphism zero = strict_homomorphism(dual, dual, std::vector<LinComb>(2));
  CHECK(check_homomorphism(zero).passed());
  CHECK_FALSE(is_quasi_iso(zero));
}

TEST_CASE("quasi-isomorphisms preserve cohomology dimensions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const AlgebraPair p = fixture_random_pair(Field::rationals(), seed);
    const AInfHomomorphism inc = strict_homomorphism(p.sub, p.ambient, p.inclusion);
    CHECK(check_homomorphism(inc).passed());
    if (is_quasi_iso(inc)) CHECK(cohomology(*p.sub).dims_by_degree() == cohomology(*p.ambient).dims_by_degree());
  }
}

TEST_CASE("subalgebra closure is enforced") {
  const AlgebraPtr b = fixture_an_pair(Field::rationals(), 1).ambient;
  // x^v x lands on the dual of e1
  const int x = b->space().index_of("x");
  const int xv = b->space().index_of("x^v");
  CHECK_THROWS_AS(subalgebra_from_subset(b, {x, xv}), Error);
}
