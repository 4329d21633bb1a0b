#include "ainf/bimodule.hpp"

#include <algorithm>

#include "ainf/composition.hpp"
#include "ainf/error.hpp"

namespace ainf {

namespace {

const MultiMap& empty_map() {
  static const MultiMap kEmpty;
  return kEmpty;
}

// Sum of reduced degrees of the algebra inputs right of the module slot.
int right_weight(const GradedSpace& algebra, const Tuple& t, int s) {
  int w = 0;
  for (std::size_t k = static_cast<std::size_t>(s) + 1; k < t.size(); ++k) w += algebra.reduced_degree(t[k]);
  return w;
}

int left_weight(const GradedSpace& algebra, const Tuple& t, int s) {
  int w = 0;
  for (int k = 0; k < s; ++k) w += algebra.reduced_degree(t[static_cast<std::size_t>(k)]);
  return w;
}

}  // namespace

AInfBimodule::AInfBimodule(AlgebraPtr base, GradedSpace space, std::map<SlotCounts, MultiMap> maps)
    : base_(std::move(base)), space_(std::move(space)), maps_(std::move(maps)) {
  if (!base_) fail(ErrorKind::kArgument, "bimodule without a base algebra");
  if (space_.size() > 0 && space_.num_objects() != base_->num_objects())
    fail(ErrorKind::kSemantic, "bimodule and base algebra have different numbers of objects");
  for (auto it = maps_.begin(); it != maps_.end();) {
    const auto [s, r] = it->first;
    const MultiMap& m = it->second;
    const std::string label = "mu^{" + std::to_string(s) + "|1|" + std::to_string(r) + "}";
    if (s < 0 || r < 0 || m.arity() != s + r + 1 || m.degree_shift() != 1 - r - s)
      fail(ErrorKind::kSemantic, label + " has the wrong arity or degree shift");
    validate_multimap(
        m, [&, s = s](int slot) -> const GradedSpace& { return slot == s ? space_ : base_->space(); }, space_, label);
    if (m.empty())
      it = maps_.erase(it);
    else
      ++it;
  }
}

const MultiMap& AInfBimodule::map(int s, int r) const {
  auto it = maps_.find({s, r});
  return it == maps_.end() ? empty_map() : it->second;
}

int AInfBimodule::arity_bound() const {
  int bound = 0;
  for (const auto& [key, m] : maps_) bound = std::max(bound, key.first + key.second + 1);
  return bound;
}

bool AInfBimodule::operator==(const AInfBimodule& other) const {
  return (base_ == other.base_ || *base_ == *other.base_) && space_ == other.space_ && maps_ == other.maps_;
}

AInfBimodule restriction_bimodule(const AlgebraPair& pair) {
  const AInfAlgebra& b = *pair.ambient;
  const AInfAlgebra& a = *pair.sub;
  const Field& field = b.field();
  // B basis index -> A basis elements whose image involves it.
  Expansion pull(static_cast<std::size_t>(b.size()));
  for (int x = 0; x < a.size(); ++x)
    for (const auto& [y, c] : pair.inclusion[static_cast<std::size_t>(x)])
      pull[static_cast<std::size_t>(y)].emplace_back(x, c);
  std::map<SlotCounts, MultiMap> maps;
  for (int d = 1; d <= b.arity_bound(); ++d) {
    for (int s = 0; s < d; ++s) {
      const int r = d - 1 - s;
      MultiMap signed_map(d, 1 - r - s);
      for (const auto& [inputs, output] : b.mu(d).entries())
        signed_map.add(inputs, scaled(output, sign_scalar(field, right_weight(b.space(), inputs, s) + 1)));
      std::vector<const Expansion*> slots(static_cast<std::size_t>(d), &pull);
      slots[static_cast<std::size_t>(s)] = nullptr;
      MultiMap m = transform_slots(signed_map, slots, nullptr, 1 - r - s);
      if (!m.empty()) maps.emplace(SlotCounts{s, r}, std::move(m));
    }
  }
  return AInfBimodule(pair.sub, b.space(), std::move(maps));
}

AInfBimodule diagonal_bimodule(const AlgebraPtr& alg) {
  AlgebraPair pair{alg, alg, {}};
  for (int x = 0; x < alg->size(); ++x) pair.inclusion.push_back(single(x, alg->field().one()));
  return restriction_bimodule(pair);
}

AInfBimodule zero_bimodule(const AlgebraPtr& alg) {
  return AInfBimodule(alg, GradedSpace(alg->num_objects(), {}), {});
}

AInfBimodule shift_bimodule(const AInfBimodule& p, int k) {
  const Field& field = p.base()->field();
  std::vector<BasisElement> basis = p.space().elements();
  for (auto& e : basis) e.degree -= k;
  std::map<SlotCounts, MultiMap> maps;
  for (const auto& [key, m] : p.maps()) {
    MultiMap out(m.arity(), m.degree_shift());
    for (const auto& [inputs, output] : m.entries()) {
      const long exponent = static_cast<long>(k) * (right_weight(p.base()->space(), inputs, key.first) + 1);
      out.add(inputs, scaled(output, sign_scalar(field, exponent)));
    }
    maps.emplace(key, std::move(out));
  }
  return AInfBimodule(p.base(), GradedSpace(p.base()->num_objects(), std::move(basis)), std::move(maps));
}

namespace detail {

long default_dual_sign(const DualSignInputs& in) {
  return 1 + in.dual_degree + static_cast<long>(in.n) * in.right;
}

AInfBimodule dual_bimodule_with_sign(const AInfBimodule& p, int n,
                                     const std::function<long(const DualSignInputs&)>& exponent) {
  const Field& field = p.base()->field();
  const GradedSpace& algebra = p.base()->space();
  std::vector<BasisElement> basis;
  for (const auto& e : p.space().elements())
    basis.push_back(BasisElement{e.id + "^v", n - e.degree, e.target, e.source});
  GradedSpace space(p.base()->num_objects(), std::move(basis));
  std::map<SlotCounts, MultiMap> maps;
  for (const auto& [key, m] : p.maps()) {
    const auto [s_in, r_in] = key;
    // (y, p, x) -> q becomes (x, q^v, y) -> p^v.
    const int s = r_in;
    const int r = s_in;
    MultiMap out(s + r + 1, 1 - r - s);
    for (const auto& [inputs, output] : m.entries()) {
      const Tuple y(inputs.begin(), inputs.begin() + s_in);
      const int module_input = inputs[static_cast<std::size_t>(s_in)];
      const Tuple x(inputs.begin() + s_in + 1, inputs.end());
      for (const auto& [q, c] : output) {
        Tuple t = x;
        t.push_back(q);
        t.insert(t.end(), y.begin(), y.end());
        DualSignInputs in{left_weight(algebra, t, s), right_weight(algebra, t, s), space.degree(q), s, r, n};
        out.add(t, module_input, c * sign_scalar(field, exponent(in)));
      }
    }
    maps.emplace(SlotCounts{s, r}, std::move(out));
  }
  return AInfBimodule(p.base(), std::move(space), std::move(maps));
}

}  // namespace detail

AInfBimodule dual_bimodule(const AInfBimodule& p, int n) {
  return detail::dual_bimodule_with_sign(p, n, detail::default_dual_sign);
}

AInfBimodule direct_sum(const AInfBimodule& p, const AInfBimodule& q) {
  if (!(p.base() == q.base() || *p.base() == *q.base()))
    fail(ErrorKind::kArgument, "direct sum of bimodules over different algebras");
  std::vector<BasisElement> basis = p.space().elements();
  for (const auto& e : q.space().elements()) basis.push_back(e);
  const int offset = p.size();
  std::map<SlotCounts, MultiMap> maps = p.maps();
  for (const auto& [key, m] : q.maps()) {
    MultiMap& target = maps.try_emplace(key, m.arity(), m.degree_shift()).first->second;
    for (const auto& [inputs, output] : m.entries()) {
      Tuple t = inputs;
      t[static_cast<std::size_t>(key.first)] += offset;
      LinComb o;
      for (const auto& [y, c] : output) add_term(o, y + offset, c);
      target.add(t, o);
    }
  }
  return AInfBimodule(p.base(), GradedSpace(p.base()->num_objects(), std::move(basis)), std::move(maps));
}

QuotientResult quotient_bimodule(const AInfBimodule& p, const std::vector<LinComb>& sub) {
  const Field& field = p.base()->field();
  const int n = p.size();
  std::vector<Vector> sub_dense;
  for (const auto& v : sub) {
    Vector dense(static_cast<std::size_t>(n), field.zero());
    for (const auto& [y, c] : v) dense[static_cast<std::size_t>(y)] = c;
    sub_dense.push_back(std::move(dense));
  }
  if (rank(Matrix::from_columns(field, n, sub_dense)) != static_cast<int>(sub.size()))
    fail(ErrorKind::kSemantic, "sub-bimodule vectors are linearly dependent");
  std::vector<Vector> units;
  for (int i = 0; i < n; ++i) {
    Vector e(static_cast<std::size_t>(n), field.zero());
    e[static_cast<std::size_t>(i)] = field.one();
    units.push_back(std::move(e));
  }
  QuotientResult result{zero_bimodule(p.base()), extend_basis(field, n, sub_dense, units), {}};
  const int k = static_cast<int>(sub.size());
  std::vector<Vector> columns = sub_dense;
  for (int c : result.complement) columns.push_back(units[static_cast<std::size_t>(c)]);
  const auto inv = inverse(Matrix::from_columns(field, n, columns));
  if (!inv) fail(ErrorKind::kArgument, "quotient change of basis is singular");
  result.projection.resize(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    for (int c = 0; c < static_cast<int>(result.complement.size()); ++c)
      add_term(result.projection[static_cast<std::size_t>(y)], c, inv->at(k + c, y));

  Expansion sub_pull(static_cast<std::size_t>(n));
  for (int j = 0; j < k; ++j)
    for (const auto& [y, c] : sub[static_cast<std::size_t>(j)]) sub_pull[static_cast<std::size_t>(y)].emplace_back(j, c);
  Expansion complement_pull(static_cast<std::size_t>(n));
  for (int c = 0; c < static_cast<int>(result.complement.size()); ++c)
    complement_pull[static_cast<std::size_t>(result.complement[static_cast<std::size_t>(c)])].emplace_back(
        c, field.one());

  std::vector<BasisElement> basis;
  for (int c : result.complement) basis.push_back(p.space()[c]);
  std::map<SlotCounts, MultiMap> maps;
  for (const auto& [key, m] : p.maps()) {
    std::vector<const Expansion*> slots(static_cast<std::size_t>(m.arity()), nullptr);
    slots[static_cast<std::size_t>(key.first)] = &sub_pull;
    if (!transform_slots(m, slots, &result.projection, m.degree_shift()).empty())
      fail(ErrorKind::kSemantic, "span is not a sub-bimodule (not closed under mu^{" + std::to_string(key.first) +
                                     "|1|" + std::to_string(key.second) + "})");
    slots[static_cast<std::size_t>(key.first)] = &complement_pull;
    maps.emplace(key, transform_slots(m, slots, &result.projection, m.degree_shift()));
  }
  result.quotient = AInfBimodule(p.base(), GradedSpace(p.base()->num_objects(), std::move(basis)), std::move(maps));
  return result;
}

AInfAlgebra trivial_extension(const AlgebraPtr& alg, const AInfBimodule& p) {
  if (!(p.base() == alg || *p.base() == *alg)) fail(ErrorKind::kArgument, "bimodule is over a different algebra");
  const Field& field = alg->field();
  const int na = alg->size();
  std::vector<BasisElement> basis = alg->space().elements();
  for (auto e : p.space().elements()) {
    while (alg->space().find(e.id)) e.id += "'";
    basis.push_back(std::move(e));
  }
  const int bound = std::max(alg->arity_bound(), p.arity_bound());
  std::vector<MultiMap> mu;
  for (int d = 1; d <= bound; ++d) mu.push_back(alg->mu(d).arity() == d ? alg->mu(d) : MultiMap(d, 2 - d));
  for (const auto& [key, m] : p.maps()) {
    MultiMap& target = mu[static_cast<std::size_t>(m.arity() - 1)];
    for (const auto& [inputs, output] : m.entries()) {
      Tuple t = inputs;
      t[static_cast<std::size_t>(key.first)] += na;
      const Scalar sign = sign_scalar(field, right_weight(alg->space(), inputs, key.first) + 1);
      LinComb o;
      for (const auto& [y, c] : output) add_term(o, y + na, c * sign);
      target.add(t, o);
    }
  }
  return AInfAlgebra(field, GradedSpace(alg->num_objects(), std::move(basis)), std::move(mu), alg->units());
}

CheckReport check_bimodule_relations(const AInfBimodule& p) {
  const int na = p.base()->size();
  CheckReport full = check_relations(trivial_extension(p.base(), p));
  CheckReport mixed;
  for (auto& f : full.failures)
    if (std::any_of(f.inputs.begin(), f.inputs.end(), [&](int x) { return x >= na; }))
      mixed.failures.push_back(std::move(f));
  return mixed;
}

BimoduleMorphism strict_bimodule_morphism(const BimodulePtr& source, const BimodulePtr& target,
                                          const std::vector<LinComb>& linear) {
  if (static_cast<int>(linear.size()) != source->size())
    fail(ErrorKind::kArgument, "strict morphism needs one image per source basis element");
  MultiMap m(1, 0);
  for (int x = 0; x < source->size(); ++x) m.add({x}, linear[static_cast<std::size_t>(x)]);
  BimoduleMorphism phi{source, target, {}};
  phi.components.emplace(SlotCounts{0, 0}, std::move(m));
  return phi;
}

std::vector<LinComb> linear_part(const BimoduleMorphism& phi) {
  std::vector<LinComb> out(static_cast<std::size_t>(phi.source->size()));
  auto it = phi.components.find({0, 0});
  if (it != phi.components.end())
    for (const auto& [inputs, output] : it->second.entries()) out[static_cast<std::size_t>(inputs[0])] = output;
  return out;
}

AInfHomomorphism extension_homomorphism(const BimoduleMorphism& phi) {
  const AlgebraPtr& base = phi.source->base();
  if (!(base == phi.target->base() || *base == *phi.target->base()))
    fail(ErrorKind::kArgument, "bimodule morphism between modules over different algebras");
  for (const auto& [key, m] : phi.components) {
    const auto [s, r] = key;
    if (m.arity() != s + r + 1 || m.degree_shift() != -r - s)
      fail(ErrorKind::kSemantic, "morphism component has the wrong arity or degree shift");
    validate_multimap(
        m, [&, s = s](int slot) -> const GradedSpace& { return slot == s ? phi.source->space() : base->space(); },
        phi.target->space(), "phi^{" + std::to_string(s) + "|1|" + std::to_string(r) + "}");
  }
  auto source = std::make_shared<AInfAlgebra>(trivial_extension(base, shift_bimodule(*phi.source, -1)));
  auto target = std::make_shared<AInfAlgebra>(trivial_extension(base, shift_bimodule(*phi.target, -1)));
  const int na = base->size();
  int bound = 1;
  for (const auto& [key, m] : phi.components) bound = std::max(bound, key.first + key.second + 1);
  std::vector<MultiMap> components;
  for (int d = 1; d <= bound; ++d) components.emplace_back(d, 1 - d);
  for (int x = 0; x < na; ++x) components[0].add({x}, x, base->field().one());
  for (const auto& [key, m] : phi.components) {
    MultiMap& out = components[static_cast<std::size_t>(m.arity() - 1)];
    for (const auto& [inputs, output] : m.entries()) {
      Tuple t = inputs;
      t[static_cast<std::size_t>(key.first)] += na;
      LinComb o;
      for (const auto& [y, c] : output) add_term(o, y + na, c);
      out.add(t, o);
    }
  }
  return AInfHomomorphism{source, target, std::move(components)};
}

CheckReport check_bimodule_morphism(const BimoduleMorphism& phi) {
  return check_homomorphism(extension_homomorphism(phi));
}

bool is_bimodule_quasi_iso(const BimoduleMorphism& phi) {
  const CheckReport report = check_bimodule_morphism(phi);
  if (!report.passed()) fail(ErrorKind::kRelation, "bimodule morphism equations fail");
  return induces_cohomology_iso(phi.source->base()->field(), phi.source->space(), phi.source->map(0, 0),
                                phi.target->space(), phi.target->map(0, 0), linear_part(phi));
}

}  // namespace ainf
