#include "ainf/twisted.hpp"

#include <array>
#include <functional>

#include "ainf/error.hpp"
#include "ainf/suspension.hpp"

namespace ainf {

TwistedComplex cone(int x, int y, const LinComb& c) {
  TwistedComplex t;
  t.summands = {{x, 1}, {y, 0}};
  if (!c.empty()) t.delta[{0, 1}] = c;
  return t;
}

void validate_twisted(const AInfAlgebra& alg, const TwistedComplex& x) {
  const int k = static_cast<int>(x.summands.size());
  for (const Summand& s : x.summands)
    if (s.object < 0 || s.object >= alg.num_objects()) fail(ErrorKind::kSemantic, "summand object out of range");
  for (const auto& [key, value] : x.delta) {
    const auto [p, q] = key;
    if (p < 0 || q >= k || p >= q) fail(ErrorKind::kSemantic, "twisted differential is not strictly triangular");
    const Summand& from = x.summands[static_cast<std::size_t>(p)];
    const Summand& to = x.summands[static_cast<std::size_t>(q)];
    for (const auto& [c, coeff] : value) {
      const BasisElement& e = alg.space()[c];
      if (e.source != from.object || e.target != to.object)
        fail(ErrorKind::kSemantic, "twisted differential entry '" + e.id + "' has the wrong objects");
      if (e.degree + from.shift - to.shift != 1)
        fail(ErrorKind::kSemantic, "twisted differential entry '" + e.id + "' has the wrong degree");
    }
  }
}

namespace {

// One position of an expanded tuple: either a delta entry of the current
// complex or an input element of the twisted category.
struct Walk {
  const AInfAlgebra& alg;
  const std::vector<TwistedComplex>& objects;
  bool allow_inputs;
  // Called once per complete walk with (input indices read from the right,
  // final complex, final summand, coefficient including the sign).
  std::function<int(int, int, int, int, int)> basis_index;
  std::function<void(const std::vector<int>&, int, int, const Scalar&)> emit;

  void run(const Tuple& inputs, int complex, int summand) {
    std::vector<int> chosen;
    step(inputs, static_cast<int>(inputs.size()) - 1, complex, summand, alg.field().one(), 0, 0, chosen);
  }

  void step(const Tuple& inputs, int pos, int complex, int summand, const Scalar& coeff, long exponent, long right,
            std::vector<int>& chosen) {
    if (pos < 0) {
      if (allow_inputs == chosen.empty()) return;
      emit(chosen, complex, summand, is_odd(exponent) ? -coeff : coeff);
      return;
    }
    const int c = inputs[static_cast<std::size_t>(pos)];
    const BasisElement& e = alg.space()[c];
    const TwistedComplex& x = objects[static_cast<std::size_t>(complex)];
    const int from_shift = x.summands[static_cast<std::size_t>(summand)].shift;
    const long next_right = right + alg.space().reduced_degree(c);
    for (std::size_t q = static_cast<std::size_t>(summand) + 1; q < x.summands.size(); ++q) {
      auto it = x.delta.find({summand, static_cast<int>(q)});
      if (it == x.delta.end()) continue;
      auto term = it->second.find(c);
      if (term == it->second.end()) continue;
      const long w = from_shift - x.summands[q].shift;
      step(inputs, pos - 1, complex, static_cast<int>(q), coeff * term->second, exponent + w * (1 + right), next_right,
           chosen);
    }
    if (!allow_inputs) return;
    for (std::size_t j = 0; j < objects.size(); ++j)
      for (std::size_t q = 0; q < objects[j].summands.size(); ++q) {
        const Summand& to = objects[j].summands[q];
        if (to.object != e.target) continue;
        const long w = from_shift - to.shift;
        chosen.push_back(basis_index(complex, summand, static_cast<int>(j), static_cast<int>(q), c));
        step(inputs, pos - 1, static_cast<int>(j), static_cast<int>(q), coeff, exponent + w * (1 + right), next_right,
             chosen);
        chosen.pop_back();
      }
  }
};

}  // namespace

std::map<std::pair<int, int>, LinComb> maurer_cartan(const AInfAlgebra& alg, const TwistedComplex& x) {
  validate_twisted(alg, x);
  const std::vector<TwistedComplex> objects{x};
  std::map<std::pair<int, int>, LinComb> total;
  for (int d = 1; d <= alg.arity_bound(); ++d)
    for (const auto& [inputs, output] : alg.mu(d).entries())
      for (std::size_t p = 0; p < x.summands.size(); ++p) {
        if (x.summands[p].object != alg.space()[inputs.back()].source) continue;
        Walk walk{alg, objects, false, {}, [&](const std::vector<int>&, int, int q, const Scalar& c) {
                    add_scaled(total[{static_cast<int>(p), q}], output, c);
                  }};
        walk.run(inputs, 0, static_cast<int>(p));
      }
  std::erase_if(total, [](const auto& kv) { return kv.second.empty(); });
  return total;
}

TwistedCategory twisted_category(const AlgebraPtr& alg, const std::vector<TwistedComplex>& objects) {
  const AInfAlgebra& a = *alg;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto mc = maurer_cartan(a, objects[i]);
    if (!mc.empty())
      fail(ErrorKind::kRelation, "twisted complex " + std::to_string(i) + " fails the Maurer-Cartan equation");
  }
  TwistedCategory cat;
  std::vector<BasisElement> basis;
  std::map<std::array<int, 5>, int> index;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      for (std::size_t p = 0; p < objects[i].summands.size(); ++p)
        for (std::size_t q = 0; q < objects[j].summands.size(); ++q) {
          const Summand& from = objects[i].summands[p];
          const Summand& to = objects[j].summands[q];
          for (int c = 0; c < a.size(); ++c) {
            const BasisElement& e = a.space()[c];
            if (e.source != from.object || e.target != to.object) continue;
            const std::array<int, 5> key{static_cast<int>(i), static_cast<int>(p), static_cast<int>(j),
                                         static_cast<int>(q), c};
            index[key] = static_cast<int>(basis.size());
            cat.basis.push_back(TwistedBasis{key[0], key[1], key[2], key[3], c});
            basis.push_back({e.id + "@" + std::to_string(i) + "." + std::to_string(p) + ">" + std::to_string(j) + "." +
                                 std::to_string(q),
                             e.degree + from.shift - to.shift, key[0], key[2]});
          }
        }
  GradedSpace space(static_cast<int>(objects.size()), std::move(basis));

  std::vector<MultiMap> mu;
  for (int d = 1; d <= a.arity_bound(); ++d) mu.emplace_back(d, 2 - d);
  for (int n = 1; n <= a.arity_bound(); ++n)
    for (const auto& [inputs, output] : a.mu(n).entries())
      for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t p = 0; p < objects[i].summands.size(); ++p) {
          if (objects[i].summands[p].object != a.space()[inputs.back()].source) continue;
          Walk walk{a, objects, true,
                    [&](int ci, int cp, int cj, int cq, int c) { return index.at({ci, cp, cj, cq, c}); },
                    [&](const std::vector<int>& chosen, int j, int q, const Scalar& coeff) {
                      Tuple key(chosen.rbegin(), chosen.rend());
                      LinComb value;
                      for (const auto& [y, c] : output)
                        add_term(value, index.at({static_cast<int>(i), static_cast<int>(p), j, q, y}), c * coeff);
                      mu[key.size() - 1].add(key, value);
                    }};
          walk.run(inputs, static_cast<int>(i), static_cast<int>(p));
        }
  cat.algebra = std::make_shared<AInfAlgebra>(a.field(), std::move(space), std::move(mu));
  return cat;
}

HomComplex hom_twisted(const AlgebraPtr& alg, const TwistedComplex& x, const TwistedComplex& y) {
  const TwistedCategory cat = twisted_category(alg, {x, y});
  HomComplex hom;
  std::vector<int> position(cat.basis.size(), -1);
  std::vector<BasisElement> basis;
  for (std::size_t k = 0; k < cat.basis.size(); ++k) {
    const TwistedBasis& t = cat.basis[k];
    if (t.source_complex != 0 || t.target_complex != 1) continue;
    position[k] = static_cast<int>(basis.size());
    BasisElement e = cat.algebra->space()[static_cast<int>(k)];
    e.source = e.target = 0;
    basis.push_back(std::move(e));
    hom.basis.push_back(t);
  }
  hom.space = GradedSpace(1, std::move(basis));
  for (const auto& [inputs, output] : cat.algebra->mu(1).entries()) {
    const int from = position[static_cast<std::size_t>(inputs[0])];
    if (from < 0) continue;
    LinComb value;
    for (const auto& [z, c] : output) add_term(value, position[static_cast<std::size_t>(z)], c);
    hom.differential.add({from}, value);
  }
  return hom;
}

AlgebraPair tilde_directed(const AlgebraPair& pair) {
  const AInfAlgebra& a = *pair.sub;
  const AInfAlgebra& b = *pair.ambient;
  const int m = b.num_objects();
  const Field& field = b.field();
  auto doubled = std::make_shared<AInfAlgebra>(double_objects(b));
  std::vector<BasisElement> basis;
  std::vector<LinComb> vectors;
  for (int block = 0; block < 2; ++block)
    for (int x = 0; x < a.size(); ++x) {
      const BasisElement& e = a.space()[x];
      basis.push_back({e.id + (block == 0 ? "#11" : "#22"), e.degree, e.source + block * m, e.target + block * m});
      LinComb v;
      for (const auto& [y, c] : pair.inclusion[static_cast<std::size_t>(x)]) add_term(v, 4 * y + 3 * block, c);
      vectors.push_back(std::move(v));
    }
  for (int y = 0; y < b.size(); ++y) {
    const BasisElement& e = b.space()[y];
    basis.push_back({e.id + "#12", e.degree, e.source, e.target + m});
    vectors.push_back(single(4 * y + 1, field.one()));
  }
  std::optional<std::vector<int>> units;
  if (a.units()) {
    units.emplace();
    for (int block = 0; block < 2; ++block)
      for (int u : *a.units()) units->push_back(block * a.size() + u);
  }
  return subalgebra_from_vectors(doubled, std::move(basis), vectors, std::move(units));
}

namespace {

// Identities of the complexes together with every element from a lower to a higher complex.
AlgebraPair directed_part(const TwistedCategory& cat, const std::vector<TwistedComplex>& objects,
                          const AlgebraPtr& underlying) {
  const AInfAlgebra& alg = *cat.algebra;
  const Field& field = alg.field();
  const auto& units = *underlying->units();
  std::vector<BasisElement> basis;
  std::vector<LinComb> vectors;
  std::vector<int> unit_indices;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    LinComb v;
    for (std::size_t k = 0; k < cat.basis.size(); ++k) {
      const TwistedBasis& t = cat.basis[k];
      if (t.source_complex == static_cast<int>(i) && t.target_complex == static_cast<int>(i) &&
          t.source_summand == t.target_summand &&
          t.element == units[static_cast<std::size_t>(objects[i].summands[static_cast<std::size_t>(t.source_summand)].object)])
        add_term(v, static_cast<int>(k), field.one());
    }
    unit_indices.push_back(static_cast<int>(basis.size()));
    basis.push_back({"id" + std::to_string(i + 1), 0, static_cast<int>(i), static_cast<int>(i)});
    vectors.push_back(std::move(v));
  }
  for (int k = 0; k < alg.size(); ++k)
    if (alg.space()[k].source < alg.space()[k].target) {
      basis.push_back(alg.space()[k]);
      vectors.push_back(single(k, field.one()));
    }
  return subalgebra_from_vectors(cat.algebra, std::move(basis), vectors, std::move(unit_indices));
}

std::vector<TwistedComplex> unit_cones(const AInfAlgebra& doubled, int m, const std::function<int(int)>& shifted_unit) {
  std::vector<TwistedComplex> cones;
  for (int i = 0; i < m; ++i) cones.push_back(cone(i, i + m, single(shifted_unit(i), doubled.field().one())));
  return cones;
}

}  // namespace

ConeAlgebra cone_endomorphism_algebra(const AlgebraPair& pair) {
  const AInfAlgebra& b = *pair.ambient;
  if (!b.units()) fail(ErrorKind::kArgument, "the ambient algebra has no units");
  if (!pair.sub->units()) fail(ErrorKind::kArgument, "the subalgebra has no units");
  ConeAlgebra result;
  result.tilde = tilde_directed(pair);
  const int offset = 2 * pair.sub->size();
  result.cones = unit_cones(*result.tilde.sub, b.num_objects(),
                            [&](int i) { return offset + (*b.units())[static_cast<std::size_t>(i)]; });
  result.category = twisted_category(result.tilde.sub, result.cones);
  result.directed = directed_part(result.category, result.cones, result.tilde.sub);
  return result;
}

Verdict lemma_alg_check(const AlgebraPair& pair) {
  Verdict v;
  const SuspensionResult s = suspend(pair);
  const ConeAlgebra c = cone_endomorphism_algebra(pair);
  const int na = pair.sub->size();
  const int nb = pair.ambient->size();
  const auto& cat = c.category;

  std::vector<int> to_suspension;
  for (const TwistedBasis& t : cat.basis) {
    const int x = t.element;
    if (t.source_summand == 1 && t.target_summand == 1)
      to_suspension.push_back(s.plus(x - na));
    else if (t.source_summand == 0 && t.target_summand == 0)
      to_suspension.push_back(s.minus(x));
    else if (t.source_summand == 0 && t.target_summand == 1)
      to_suspension.push_back(s.shifted(x - 2 * na));
    else
      fail(ErrorKind::kSemantic, "unexpected block in the cone algebra");
  }
  const bool sizes = cat.algebra->size() == 2 * na + nb;
  v.add("block dimensions match A+ + A- + B[-1]", sizes);
  if (!sizes) return v;
  const auto mismatch = compare_algebras(*cat.algebra, *s.pair.ambient, to_suspension);
  v.add("cone algebra equals the suspension", !mismatch, mismatch.value_or(""));

  // The identities of the S_i and the lower-to-higher part, on both sides.
  std::vector<BasisElement> basis;
  std::vector<LinComb> vectors;
  const AInfAlgebra& dir = *c.directed.sub;
  for (int k = 0; k < dir.size(); ++k) {
    basis.push_back(dir.space()[k]);
    LinComb image;
    for (const auto& [y, coeff] : c.directed.inclusion[static_cast<std::size_t>(k)])
      add_term(image, to_suspension[static_cast<std::size_t>(y)], coeff);
    vectors.push_back(std::move(image));
  }
  const AlgebraPair directed_s = subalgebra_from_vectors(s.pair.ambient, std::move(basis), vectors, dir.units());
  std::vector<int> identity(static_cast<std::size_t>(dir.size()));
  for (int k = 0; k < dir.size(); ++k) identity[static_cast<std::size_t>(k)] = k;
  const auto directed_mismatch = compare_algebras(dir, *directed_s.sub, identity);
  v.add("directed subalgebras agree", !directed_mismatch, directed_mismatch.value_or(""));

  // A^s = {(a, a, 0)} inside the cone algebra.
  std::vector<int> from_suspension(to_suspension.size());
  for (std::size_t k = 0; k < to_suspension.size(); ++k) from_suspension[static_cast<std::size_t>(to_suspension[k])] = static_cast<int>(k);
  std::vector<LinComb> sub_vectors;
  for (const LinComb& w : s.pair.inclusion) {
    LinComb image;
    for (const auto& [y, coeff] : w) add_term(image, from_suspension[static_cast<std::size_t>(y)], coeff);
    sub_vectors.push_back(std::move(image));
  }
  const AlgebraPair sub = subalgebra_from_vectors(cat.algebra, pair.sub->space().elements(), sub_vectors, pair.sub->units());
  std::vector<int> same(static_cast<std::size_t>(na));
  for (int k = 0; k < na; ++k) same[static_cast<std::size_t>(k)] = k;
  const auto sub_mismatch = compare_algebras(*sub.sub, *pair.sub, same);
  v.add("(a, a, 0) spans a copy of A", !sub_mismatch, sub_mismatch.value_or(""));
  return v;
}

Verdict verify_contractible_cone(const AlgebraPtr& b) {
  Verdict v;
  if (!b->units()) fail(ErrorKind::kArgument, "algebra has no units");
  const int m = b->num_objects();
  auto doubled = std::make_shared<AInfAlgebra>(double_objects(*b));
  // e_i#12 is copy (alpha, beta) = (0, 1) of e_i.
  const std::vector<TwistedComplex> cones =
      unit_cones(*doubled, m, [&](int i) { return 4 * (*b->units())[static_cast<std::size_t>(i)] + 1; });
  bool mc = true;
  for (const TwistedComplex& x : cones) mc = mc && maurer_cartan(*doubled, x).empty();
  v.add("cones satisfy Maurer-Cartan", mc);
  if (!mc) return v;
  const TwistedCategory cat = twisted_category(doubled, cones);
  const Cohomology h = cohomology(*cat.algebra);
  v.add("endomorphism complex is acyclic", h.total() == 0, "total dimension " + std::to_string(h.total()));

  const AInfAlgebra tensor = tensor_with_endC(*b);
  std::vector<int> to_tensor;
  for (const TwistedBasis& t : cat.basis) {
    const int base = t.element / 4;
    const int p = t.source_summand;
    const int q = t.target_summand;
    const int k = (p == 1 && q == 1) ? 0 : (p == 0 && q == 0) ? 1 : (p == 0 && q == 1) ? 2 : 3;
    to_tensor.push_back(4 * base + k);
  }
  const auto mismatch = compare_algebras(*cat.algebra, tensor, to_tensor);
  v.add("endomorphisms equal B tensor hom(C, C)", !mismatch, mismatch.value_or(""));
  return v;
}

}  // namespace ainf
