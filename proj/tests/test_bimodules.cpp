#include "doctest.h"

#include "ainf/bimodule.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"

using namespace ainf;

namespace {

std::map<int, int> dims(const GradedSpace& s) {
  std::map<int, int> out;
  for (const auto& x : s.elements()) ++out[x.degree];
  return out;
}

std::map<std::tuple<int, int, int>, int> block_dims(const GradedSpace& s, bool transpose = false) {
  std::map<std::tuple<int, int, int>, int> out;
  for (const auto& x : s.elements())
    ++out[transpose ? std::tuple{x.degree, x.target, x.source} : std::tuple{x.degree, x.source, x.target}];
  return out;
}

bool same_maps(const AInfBimodule& p, const AInfBimodule& q) {
  auto nonempty = [](const AInfBimodule& m) {
    std::map<SlotCounts, MultiMap> out;
    for (const auto& [k, v] : m.maps())
      if (!v.empty()) out.emplace(k, v);
    return out;
  };
  return nonempty(p) == nonempty(q);
}

std::vector<AlgebraPtr> sample_algebras(const Field& f) {
  std::vector<AlgebraPtr> out{fixture_k(f), fixture_dual(f, 1), fixture_a2(f), fixture_an_pair(f, 2).ambient};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) out.push_back(random_algebra(f, seed));
  return out;
}

}  // namespace

TEST_CASE("diagonal bimodule of K") {
  const Field q = Field::rationals();
  const AInfBimodule d = diagonal_bimodule(fixture_k(q));
  CHECK(d.map(0, 0).empty());
  // i = 1: exponent 0 + 1; i = 2: exponent ||e|| + 1 = 0
  CHECK(*d.map(1, 0).find({0, 0}) == single(0, -q.one()));
  CHECK(*d.map(0, 1).find({0, 0}) == single(0, q.one()));
  CHECK(check_bimodule_relations(d).passed());
}

TEST_CASE("diagonal mu^{0|1|0} is minus mu^1") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AlgebraPtr a = random_algebra(Field::rationals(), seed);
    const AInfBimodule d = diagonal_bimodule(a);
    MultiMap expected(1, 1);
    for (const auto& [t, out] : a->mu(1).entries()) expected.add(t, scaled(out, -a->field().one()));
    CHECK(d.map(0, 0).entries() == expected.entries());
  }
}

TEST_CASE("diagonal and restriction bimodules satisfy the relations") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(2)}) {
    for (const AlgebraPtr& a : sample_algebras(f)) CHECK(check_bimodule_relations(diagonal_bimodule(a)).passed());
    std::vector<AlgebraPair> pairs{fixture_an_pair(f, 1), fixture_dual_pair(f, 2)};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) pairs.push_back(fixture_random_pair(f, seed));
    for (const AlgebraPair& p : pairs) CHECK(check_bimodule_relations(restriction_bimodule(p)).passed());
  }
}

TEST_CASE("restriction along the identity is the diagonal") {
  const AlgebraPair k = fixture_k_pair(Field::rationals());
  CHECK(restriction_bimodule(k) == diagonal_bimodule(k.sub));
}

TEST_CASE("perturbed bimodule fails its relations") {
  const Field q = Field::rationals();
  const AInfBimodule d = diagonal_bimodule(fixture_a2(q));
  std::map<SlotCounts, MultiMap> maps = d.maps();
  MultiMap& m = maps.at({1, 0});
  const Tuple t = m.entries().begin()->first;
  m.add(t, m.entries().begin()->second.begin()->first, q.one());
  CHECK_FALSE(check_bimodule_relations(AInfBimodule(d.base(), d.space(), maps)).passed());
  CHECK(check_bimodule_relations(zero_bimodule(fixture_a2(q))).passed());
}

TEST_CASE("shifted diagonal carries mu_A unsigned") {
  for (const Field& f : {Field::rationals(), Field::prime(3)})
    for (const AlgebraPtr& a : sample_algebras(f)) {
      const AInfBimodule s = shift_bimodule(diagonal_bimodule(a), -1);
      for (int d = 1; d <= a->arity_bound(); ++d)
        for (int r = 0; r < d; ++r) CHECK(s.map(d - 1 - r, r).entries() == a->mu(d).entries());
      for (int k = 0; k < s.size(); ++k) CHECK(s.space().degree(k) == a->space().degree(k) + 1);
    }
}

TEST_CASE("shift composition") {
  const Field q = Field::rationals();
  for (const AlgebraPtr& a : sample_algebras(q)) {
    const AInfBimodule d = diagonal_bimodule(a);
    CHECK(shift_bimodule(d, 0) == d);
    CHECK(shift_bimodule(shift_bimodule(d, -1), 1) == d);
    CHECK(shift_bimodule(shift_bimodule(d, -1), -1) == shift_bimodule(d, -2));
    CHECK(check_bimodule_relations(shift_bimodule(d, 3)).passed());
  }
  // [-1][-1]: the two r-string signs cancel, leaving only the two +1's
  const AlgebraPtr a2 = fixture_a2(q);
  const AInfBimodule d = diagonal_bimodule(a2);
  const AInfBimodule dd = shift_bimodule(d, -2);
  for (const auto& [key, m] : d.maps()) CHECK(dd.map(key.first, key.second).entries() == m.entries());
}

TEST_CASE("dual bimodule") {
  const Field q = Field::rationals();
  const AlgebraPtr k = fixture_k(q);
  CHECK(same_maps(dual_bimodule(diagonal_bimodule(k), 0), diagonal_bimodule(k)));
  for (int n = -2; n <= 3; ++n)
    for (const AlgebraPtr& a : sample_algebras(q)) {
      const AInfBimodule d = diagonal_bimodule(a);
      const AInfBimodule dv = dual_bimodule(d, n);
      CHECK(check_bimodule_relations(dv).passed());
      std::map<std::tuple<int, int, int>, int> mirrored;
      for (const auto& [key, count] : block_dims(d.space(), true))
        mirrored[{n - std::get<0>(key), std::get<1>(key), std::get<2>(key)}] = count;
      CHECK(block_dims(dv.space()) == mirrored);
      CHECK(block_dims(dual_bimodule(dv, n).space()) == block_dims(d.space()));
    }
}

TEST_CASE("dual sign is pinned by the relations") {
  // Flipping any one summand of the exponent breaks the relations for A_2 or
  // for a random algebra with a nonzero mu^3.
  const Field q = Field::rationals();
  std::vector<AlgebraPtr> tests{fixture_a2(q)};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) tests.push_back(random_algebra(q, seed));
  using In = detail::DualSignInputs;
  const std::vector<std::function<long(const In&)>> wrong{
      [](const In& in) { return detail::default_dual_sign(in) + in.right; },
      [](const In& in) { return detail::default_dual_sign(in) + in.left; },
      [](const In& in) { return detail::default_dual_sign(in) + in.dual_degree; },
      [](const In& in) { return detail::default_dual_sign(in) + in.s; },
  };
  for (int n : {1, 2}) {
    for (const AlgebraPtr& a : tests)
      CHECK(check_bimodule_relations(
                detail::dual_bimodule_with_sign(diagonal_bimodule(a), n, detail::default_dual_sign))
                .passed());
    for (const auto& exponent : wrong) {
      bool caught = false;
      for (const AlgebraPtr& a : tests)
        caught = caught ||
                 !check_bimodule_relations(detail::dual_bimodule_with_sign(diagonal_bimodule(a), n, exponent)).passed();
      CHECK(caught);
    }
  }
}

TEST_CASE("quotient bimodules") {
  const Field q = Field::rationals();
  const AlgebraPair k = fixture_k_pair(q);
  CHECK(quotient_bimodule(restriction_bimodule(k), k.inclusion).quotient.size() == 0);
  for (int n = 1; n <= 3; ++n) {
    const AlgebraPair p = fixture_dual_pair(q, n);
    const QuotientResult qr = quotient_bimodule(restriction_bimodule(p), p.inclusion);
    CHECK(dims(qr.quotient.space()) == std::map<int, int>{{n, 1}});
    CHECK(check_bimodule_relations(qr.quotient).passed());
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const AlgebraPair p = fixture_random_pair(q, seed);
    const AInfBimodule b = restriction_bimodule(p);
    const QuotientResult qr = quotient_bimodule(b, p.inclusion);
    std::map<std::tuple<int, int, int>, int> expected = block_dims(p.ambient->space());
    for (const auto& [key, count] : block_dims(p.sub->space())) expected[key] -= count;
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    CHECK(block_dims(qr.quotient.space()) == expected);
    // pi o iota = 0
    for (const LinComb& a : p.inclusion) {
      LinComb image;
      for (const auto& [x, c] : a) add_scaled(image, qr.projection[static_cast<std::size_t>(x)], c);
      CHECK(image.empty());
    }
    const auto pi = strict_bimodule_morphism(std::make_shared<AInfBimodule>(b),
                                             std::make_shared<AInfBimodule>(qr.quotient), qr.projection);
    CHECK(check_bimodule_morphism(pi).passed());
  }
}

TEST_CASE("quotient by a non-sub-bimodule throws") {
  const Field q = Field::rationals();
  const AlgebraPair p = fixture_an_pair(q, 1);
  const AInfBimodule b = restriction_bimodule(p);
  // x acting on x^v gives e2^v
  const int xv = b.space().index_of("x^v");
  CHECK_THROWS_AS(quotient_bimodule(b, {single(xv, q.one())}), Error);
}

TEST_CASE("trivial extensions") {
  const Field q = Field::rationals();
  for (const AlgebraPtr& a : sample_algebras(q)) {
    CHECK(trivial_extension(a, zero_bimodule(a)) == *a);
    const AInfAlgebra t = trivial_extension(a, dual_bimodule(diagonal_bimodule(a), 2));
    CHECK(check_relations(t).passed());
  }
  // K + K[-n] is Dual(n) up to names
  for (int n = 1; n <= 3; ++n) {
    const AlgebraPtr k = fixture_k(q);
    const AInfAlgebra t = trivial_extension(k, shift_bimodule(diagonal_bimodule(k), -n));
    CHECK(compare_algebras(t, *fixture_dual(q, n), {0, 1}) == std::nullopt);
  }
  // H*(A + P) = H*(A) + H*(P)
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const AlgebraPtr a = random_algebra(q, seed);
    const AInfBimodule p = shift_bimodule(diagonal_bimodule(a), -1);
    std::map<int, int> expected = cohomology(*a).dims_by_degree();
    for (const auto& [deg, dim] : complex_cohomology(q, p.space(), p.map(0, 0)).dims_by_degree())
      expected[deg] += dim;
    CHECK(cohomology(trivial_extension(a, p)).dims_by_degree() == expected);
  }
}

TEST_CASE("bimodule morphisms") {
  const Field q = Field::rationals();
  const AlgebraPair p = fixture_dual_pair(q, 2);
  const auto b = std::make_shared<AInfBimodule>(restriction_bimodule(p));
  std::vector<LinComb> id;
  for (int x = 0; x < b->size(); ++x) id.push_back(single(x, q.one()));
  const BimoduleMorphism identity = strict_bimodule_morphism(b, b, id);
  CHECK(check_bimodule_morphism(identity).passed());
  CHECK(is_bimodule_quasi_iso(identity));

  const QuotientResult qr = quotient_bimodule(*b, p.inclusion);
  const BimoduleMorphism pi =
      strict_bimodule_morphism(b, std::make_shared<AInfBimodule>(qr.quotient), qr.projection);
  CHECK(check_bimodule_morphism(pi).passed());
  CHECK_FALSE(is_bimodule_quasi_iso(pi));

  const auto other = std::make_shared<AInfBimodule>(diagonal_bimodule(fixture_a2(q)));
  CHECK_THROWS_AS(check_bimodule_morphism(strict_bimodule_morphism(b, other, std::vector<LinComb>(2))), Error);
}
