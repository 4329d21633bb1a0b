#include "ainf/fixtures.hpp"

#include <random>

#include "ainf/bimodule.hpp"
#include "ainf/error.hpp"

namespace ainf {

namespace {

AlgebraPair identity_pair(const AlgebraPtr& alg) {
  AlgebraPair pair{alg, alg, {}};
  for (int x = 0; x < alg->size(); ++x) pair.inclusion.push_back(single(x, alg->field().one()));
  return pair;
}

// Adds the strict-unit entries of mu^2 for every unit and every basis element.
void add_unit_products(AlgebraBuilder& b, const std::vector<BasisElement>& basis, const std::vector<int>& units) {
  const Field& f = b.field();
  for (std::size_t i = 0; i < units.size(); ++i) {
    const int e = units[i];
    for (int a = 0; a < static_cast<int>(basis.size()); ++a) {
      const BasisElement& x = basis[static_cast<std::size_t>(a)];
      if (x.source == static_cast<int>(i)) b.add({a, e}, a, f.one());
      if (x.target == static_cast<int>(i) && a != e) b.add({e, a}, a, sign_scalar(f, x.degree));
    }
  }
}

}  // namespace

AlgebraPtr fixture_k(const Field& field) {
  AlgebraBuilder b(field, 1, 2);
  const int e = b.add_basis("e", 0, 0, 0);
  b.add({e, e}, e, field.one());
  b.set_units({e});
  return std::make_shared<AInfAlgebra>(b.build());
}

AlgebraPtr fixture_dual(const Field& field, int n) {
  AlgebraBuilder b(field, 1, 2);
  const int e = b.add_basis("e", 0, 0, 0);
  const int eps = b.add_basis("eps", n, 0, 0);
  b.add({e, e}, e, field.one());
  b.add({e, eps}, eps, sign_scalar(field, n));
  b.add({eps, e}, eps, field.one());
  b.set_units({e});
  return std::make_shared<AInfAlgebra>(b.build());
}

AlgebraPtr fixture_a2(const Field& field) {
  AlgebraBuilder b(field, 2, 2);
  const int e1 = b.add_basis("e1", 0, 0, 0);
  const int e2 = b.add_basis("e2", 0, 1, 1);
  const int x = b.add_basis("x", 0, 0, 1);
  b.add({e1, e1}, e1, field.one());
  b.add({e2, e2}, e2, field.one());
  b.add({x, e1}, x, field.one());
  b.add({e2, x}, x, field.one());
  b.set_units({e1, e2});
  return std::make_shared<AInfAlgebra>(b.build());
}

AlgebraPair fixture_k_pair(const Field& field) { return identity_pair(fixture_k(field)); }

AlgebraPair fixture_dual_pair(const Field& field, int n) {
  return subalgebra_from_subset(fixture_dual(field, n), {0});
}

AlgebraPair fixture_an_pair(const Field& field, int n) {
  const AlgebraPtr a = fixture_a2(field);
  auto b = std::make_shared<AInfAlgebra>(trivial_extension(a, dual_bimodule(diagonal_bimodule(a), n)));
  AlgebraPair pair{a, b, {}};
  for (int x = 0; x < a->size(); ++x) pair.inclusion.push_back(single(x, field.one()));
  return pair;
}

namespace {

struct Slot {
  Tuple inputs;
  int output;
};

std::optional<AInfAlgebra> random_candidate(const Field& field, std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int m = uniform(1, 2);
  const int extra = uniform(1, 6 - m);
  AlgebraBuilder b(field, m, 3);
  std::vector<BasisElement> basis;
  std::vector<int> units;
  for (int i = 0; i < m; ++i) {
    units.push_back(b.add_basis("e" + std::to_string(i + 1), 0, i, i));
    basis.push_back(BasisElement{"e" + std::to_string(i + 1), 0, i, i});
  }
  for (int k = 0; k < extra; ++k) {
    BasisElement x{"x" + std::to_string(k + 1), uniform(-1, 2), uniform(0, m - 1), uniform(0, m - 1)};
    b.add_basis(x.id, x.degree, x.source, x.target);
    basis.push_back(x);
  }
  const int n = static_cast<int>(basis.size());
  std::vector<Slot> slots[3];
  // Non-unit inputs; any output of the right degree and block.
  std::vector<Tuple> tuples[3];
  for (int a = m; a < n; ++a) tuples[0].push_back({a});
  for (int d = 1; d < 3; ++d)
    for (const Tuple& t : tuples[d - 1])
      for (int a = m; a < n; ++a)
        if (basis[static_cast<std::size_t>(a)].source == basis[static_cast<std::size_t>(t.front())].target) {
          Tuple u{a};
          u.insert(u.end(), t.begin(), t.end());
          tuples[d].push_back(u);
        }
  for (int d = 0; d < 3; ++d)
    for (const Tuple& t : tuples[d]) {
      int degree = 2 - (d + 1);
      for (int x : t) degree += basis[static_cast<std::size_t>(x)].degree;
      const int src = basis[static_cast<std::size_t>(t.back())].source;
      const int tgt = basis[static_cast<std::size_t>(t.front())].target;
      for (int y = 0; y < n; ++y) {
        const BasisElement& o = basis[static_cast<std::size_t>(y)];
        if (o.degree == degree && o.source == src && o.target == tgt) slots[d].push_back(Slot{t, y});
      }
    }
  std::vector<Slot> chosen;
  if (!slots[2].empty() && uniform(0, 1) == 1)
    chosen.push_back(slots[2][static_cast<std::size_t>(uniform(0, static_cast<int>(slots[2].size()) - 1))]);
  std::vector<Slot> all;
  for (const auto& list : slots) all.insert(all.end(), list.begin(), list.end());
  if (all.empty()) return std::nullopt;
  const int count = uniform(1, 4);
  for (int k = 0; k < count; ++k) chosen.push_back(all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))]);
  static const int kCoefficients[] = {1, -1, 2};
  for (const Slot& s : chosen) b.add(s.inputs, s.output, field.from_int(kCoefficients[uniform(0, 2)]));
  add_unit_products(b, basis, units);
  b.set_units(units);
  return b.build();
}

}  // namespace

AlgebraPtr random_algebra(const Field& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto candidate = random_candidate(field, rng);
    if (!candidate) continue;
    bool nontrivial = false;
    for (const auto& m : candidate->structure_maps())
      for (const auto& [inputs, output] : m.entries())
        for (int x : inputs)
          if (x >= candidate->num_objects()) nontrivial = true;
    if (!nontrivial) continue;
    if (check_relations(*candidate).passed()) return std::make_shared<AInfAlgebra>(std::move(*candidate));
  }
  fail(ErrorKind::kArgument, "random algebra sampling did not converge");
}

AlgebraPair fixture_random_pair(const Field& field, std::uint64_t seed, SubalgebraChoice choice) {
  const AlgebraPtr b = random_algebra(field, seed);
  if (choice == SubalgebraChoice::kDirected) return directed_subalgebra(b);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int m = b->num_objects();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<int> subset;
    for (int i = 0; i < b->size(); ++i)
      if (i < m || std::uniform_int_distribution<int>(0, 1)(rng) == 1) subset.push_back(i);
    try {
      return subalgebra_from_subset(b, subset);
    } catch (const Error&) {
    }
  }
  std::vector<int> units;
  for (int i = 0; i < m; ++i) units.push_back(i);
  return subalgebra_from_subset(b, units);
}

AlgebraPair fixture_by_name(const std::string& name, const Field& field) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  long param = 0;
  bool has_param = colon != std::string::npos;
  if (has_param) {
    try {
      std::size_t used = 0;
      param = std::stol(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      fail(ErrorKind::kArgument, "bad fixture parameter in '" + name + "'");
    }
  }
  if (head == "K" && !has_param) return fixture_k_pair(field);
  if (head == "Dual") return fixture_dual_pair(field, has_param ? static_cast<int>(param) : 1);
  if (head == "An") return fixture_an_pair(field, has_param ? static_cast<int>(param) : 2);
  if (head == "Rand") return fixture_random_pair(field, static_cast<std::uint64_t>(param));
  if (head == "RandDirected")
    return fixture_random_pair(field, static_cast<std::uint64_t>(param), SubalgebraChoice::kDirected);
  fail(ErrorKind::kArgument, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"K", "Dual:<n>", "An:<n>", "Rand:<seed>", "RandDirected:<seed>"}; }

}  // namespace ainf
