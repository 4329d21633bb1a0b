#include "doctest.h"

#include <random>

#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/graded.hpp"
#include "ainf/scalar.hpp"

using namespace ainf;

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const Scalar a = q.parse_scalar("3/7");
  const Scalar b = q.parse_scalar("7/3");
  CHECK((a * b).is_one());
  CHECK((a + b).to_string() == "58/21");
  CHECK((a - a).is_zero());
  CHECK(q.parse_scalar("-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(q.parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(q.parse_scalar("x"), Error);
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(5);
  CHECK(f.from_int(7).to_string() == "2");
  CHECK(f.from_int(-1).to_string() == "4");
  CHECK(f.parse_scalar("3/2").to_string() == "4");
  CHECK((f.from_int(3) * f.from_int(3).inverse()).is_one());
  CHECK_THROWS_AS(f.parse_scalar("1/5"), Error);
  CHECK_THROWS(Field::prime(6));
  const Field f2 = Field::prime(2);
  CHECK(sign_scalar(f2, 1) == f2.one());
}

TEST_CASE("mixing characteristics throws") {
  CHECK_THROWS(Field::rationals().one() + Field::prime(3).one());
  CHECK_THROWS(Field::prime(3).one() * Field::prime(5).one());
}

TEST_CASE("scalar text round-trips") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(7)})
    for (const char* text : {"0", "1", "-1", "5", "-22/5", "9/4"}) {
      const Scalar s = f.parse_scalar(text);
      CHECK(f.parse_scalar(s.to_string()) == s);
    }
}

TEST_CASE("field descriptors") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("fp:3").characteristic() == 3);
  CHECK(Field::parse("fp:2").to_string() == "fp:2");
  CHECK_THROWS_AS(Field::parse("fp:x"), Error);
  CHECK_THROWS_AS(Field::parse("r"), Error);
}

TEST_CASE("reduced degree and koszul exponent") {
  GradedSpace s(1, {{"a", 0, 0, 0}, {"b", 1, 0, 0}, {"c", -3, 0, 0}, {"d", 2, 0, 0}});
  CHECK(s.reduced_degree(0) == -1);
  CHECK(s.reduced_degree(1) == 0);
  CHECK(s.reduced_degree(2) == -4);
  CHECK(koszul_exponent(s, std::vector<int>{}) == 0);
  CHECK(koszul_exponent(s, std::vector<int>{1, 1}) == 0);
  CHECK(koszul_exponent(s, std::vector<int>{0, 3}) == 0);
  CHECK_THROWS_AS(s.index_of("zz"), Error);
}

TEST_CASE("graded space rejects bad bases") {
  CHECK_THROWS_AS(GradedSpace(1, {{"a", 0, 0, 0}, {"a", 1, 0, 0}}), Error);
  CHECK_THROWS_AS(GradedSpace(1, {{"a", 0, 0, 1}}), Error);
}

TEST_CASE("multimap validation names the entry") {
  GradedSpace s(2, {{"e1", 0, 0, 0}, {"e2", 0, 1, 1}, {"x", 0, 0, 1}});
  MultiMap products(2, 0);
  products.add({2, 0}, 2, Field::rationals().one());
  products.add({1, 2}, 2, Field::rationals().one());
  CHECK_NOTHROW(validate_multimap(products, s, s, "mu2"));
  MultiMap shifted(2, 1);
  shifted.add({2, 0}, 2, Field::rationals().one());
  try {
    validate_multimap(shifted, s, s, "mu2");
    FAIL("expected a degree error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSemantic);
    CHECK(std::string(e.what()).find("(x, e1)") != std::string::npos);
  }
  MultiMap uncomposable(2, 0);
  uncomposable.add({0, 2}, 2, Field::rationals().one());
  CHECK_THROWS_AS(validate_multimap(uncomposable, s, s, "mu2"), Error);
}

TEST_CASE("apply_multimap basics") {
  const Field q = Field::rationals();
  const AlgebraPtr dual = fixture_dual(q, 3);
  const MultiMap& mu2 = dual->mu(2);
  // mu^2(e, x) = (-1)^{deg x} x
  const LinComb out = apply_multimap(mu2, std::vector<LinComb>{single(0, q.one()), single(1, q.one())});
  CHECK(out == single(1, -q.one()));
  CHECK(apply_multimap(mu2, std::vector<LinComb>{LinComb{}, single(1, q.one())}).empty());
  CHECK_THROWS_AS(apply_multimap(mu2, std::vector<LinComb>{single(0, q.one())}), Error);
  const AlgebraPtr a2 = fixture_a2(q);
  // x: 1 -> 2 followed by e1 on the left is not composable
  CHECK(apply_multimap(a2->mu(2), std::vector<LinComb>{single(0, q.one()), single(2, q.one())}).empty());
}

TEST_CASE("apply_multimap is multilinear") {
  const Field f = Field::prime(7);
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const AlgebraPtr alg = random_algebra(f, seed);
    const int n = alg->size();
    auto pick = [&] { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    auto coeff = [&] { return f.from_int(std::uniform_int_distribution<int>(1, 6)(rng)); };
    for (int d = 1; d <= alg->arity_bound(); ++d)
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<LinComb> args;
        for (int k = 0; k < d; ++k) args.push_back(single(pick(), f.one()));
        const int slot = std::uniform_int_distribution<int>(0, d - 1)(rng);
        const LinComb u = single(pick(), coeff());
        const LinComb v = single(pick(), coeff());
        LinComb sum = u;
        add_scaled(sum, v, f.one());
        auto with = [&](const LinComb& x) {
          auto a = args;
          a[static_cast<std::size_t>(slot)] = x;
          return apply_multimap(alg->mu(d), a);
        };
        LinComb expected = with(u);
        add_scaled(expected, with(v), f.one());
        CHECK(with(sum) == expected);
      }
  }
}

TEST_CASE("stored entries respect degree shifts") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AlgebraPtr alg = random_algebra(Field::rationals(), seed);
    for (int d = 1; d <= alg->arity_bound(); ++d)
      for (const auto& [inputs, output] : alg->mu(d).entries()) {
        int degree = 2 - d;
        for (int x : inputs) degree += alg->space().degree(x);
        for (const auto& term : output) CHECK(alg->space().degree(term.first) == degree);
      }
  }
}
