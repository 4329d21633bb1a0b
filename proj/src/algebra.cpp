#include "ainf/algebra.hpp"

#include <algorithm>

#include "ainf/composition.hpp"
#include "ainf/error.hpp"

namespace ainf {

namespace {

const MultiMap& empty_map() {
  static const MultiMap kEmpty;
  return kEmpty;
}

std::vector<Failure> to_failures(const Accumulator& acc) {
  std::vector<Failure> out;
  for (auto& [key, value] : nonzero_sorted(acc)) out.push_back(Failure{key, value});
  return out;
}

int trimmed_bound(const std::vector<MultiMap>& maps) {
  int last = 0;
  for (int d = 1; d <= static_cast<int>(maps.size()); ++d)
    if (!maps[static_cast<std::size_t>(d - 1)].empty()) last = d;
  return last;
}

}  // namespace

AInfAlgebra::AInfAlgebra(Field field, GradedSpace space, std::vector<MultiMap> mu,
                         std::optional<std::vector<int>> units)
    : field_(field), space_(std::move(space)), mu_(std::move(mu)), units_(std::move(units)) {
  for (int d = 1; d <= arity_bound(); ++d) {
    const MultiMap& m = mu_[static_cast<std::size_t>(d - 1)];
    if (m.arity() != d || m.degree_shift() != 2 - d)
      fail(ErrorKind::kSemantic, "mu^" + std::to_string(d) + " has arity " + std::to_string(m.arity()) +
                                     " and degree shift " + std::to_string(m.degree_shift()));
    validate_multimap(m, space_, space_, "mu^" + std::to_string(d));
  }
  if (units_) {
    if (static_cast<int>(units_->size()) != num_objects())
      fail(ErrorKind::kSemantic, "expected one unit per object");
    for (int i = 0; i < num_objects(); ++i) {
      const int u = (*units_)[static_cast<std::size_t>(i)];
      if (u < 0 || u >= size()) fail(ErrorKind::kSemantic, "unit index out of range");
      const BasisElement& e = space_[u];
      if (e.degree != 0 || e.source != i || e.target != i)
        fail(ErrorKind::kSemantic, "unit '" + e.id + "' must have degree 0 and sit on object " + std::to_string(i + 1));
    }
  }
}

const MultiMap& AInfAlgebra::mu(int d) const {
  if (d >= 1 && d <= arity_bound()) return mu_[static_cast<std::size_t>(d - 1)];
  return empty_map();
}

bool AInfAlgebra::is_dga() const {
  for (int d = 3; d <= arity_bound(); ++d)
    if (!mu(d).empty()) return false;
  return true;
}

bool AInfAlgebra::operator==(const AInfAlgebra& other) const {
  if (!(field_ == other.field_) || !(space_ == other.space_) || units_ != other.units_) return false;
  const int bound = std::max(trimmed_bound(mu_), trimmed_bound(other.mu_));
  for (int d = 1; d <= bound; ++d)
    if (!(mu(d).entries() == other.mu(d).entries())) return false;
  return true;
}

AlgebraBuilder::AlgebraBuilder(Field field, int num_objects, int arity_bound)
    : field_(field), num_objects_(num_objects) {
  for (int d = 1; d <= arity_bound; ++d) mu_.emplace_back(d, 2 - d);
}

int AlgebraBuilder::add_basis(std::string id, int degree, int source, int target) {
  const int index = static_cast<int>(basis_.size());
  if (!ids_.emplace(id, index).second) fail(ErrorKind::kSemantic, "duplicate basis id '" + id + "'");
  basis_.push_back(BasisElement{std::move(id), degree, source, target});
  return index;
}

int AlgebraBuilder::index_of(const std::string& id) const {
  auto it = ids_.find(id);
  if (it == ids_.end()) fail(ErrorKind::kSemantic, "unknown basis id '" + id + "'");
  return it->second;
}

void AlgebraBuilder::add(const Tuple& inputs, int output, const Scalar& coefficient) {
  const int d = static_cast<int>(inputs.size());
  if (d < 1 || d > static_cast<int>(mu_.size()))
    fail(ErrorKind::kArgument, "entry of arity " + std::to_string(d) + " exceeds the arity bound");
  mu_[static_cast<std::size_t>(d - 1)].add(inputs, output, coefficient);
}

void AlgebraBuilder::add(const Tuple& inputs, const LinComb& output) {
  for (const auto& [y, c] : output) add(inputs, y, c);
}

AInfAlgebra AlgebraBuilder::build() const {
  return AInfAlgebra(field_, GradedSpace(num_objects_, basis_), mu_, units_);
}

AlgebraPair subalgebra_from_subset(const AlgebraPtr& ambient, const std::vector<int>& subset) {
  const AInfAlgebra& b = *ambient;
  std::vector<int> local(static_cast<std::size_t>(b.size()), -1);
  std::vector<BasisElement> basis;
  for (int k = 0; k < static_cast<int>(subset.size()); ++k) {
    const int i = subset[static_cast<std::size_t>(k)];
    if (i < 0 || i >= b.size() || local[static_cast<std::size_t>(i)] >= 0)
      fail(ErrorKind::kArgument, "invalid subalgebra basis subset");
    local[static_cast<std::size_t>(i)] = k;
    basis.push_back(b.space()[i]);
  }
  std::vector<MultiMap> mu;
  for (int d = 1; d <= b.arity_bound(); ++d) {
    MultiMap m(d, 2 - d);
    for (const auto& [inputs, output] : b.mu(d).entries()) {
      Tuple t;
      for (int x : inputs) {
        if (local[static_cast<std::size_t>(x)] < 0) break;
        t.push_back(local[static_cast<std::size_t>(x)]);
      }
      if (t.size() != inputs.size()) continue;
      for (const auto& [y, c] : output) {
        if (local[static_cast<std::size_t>(y)] < 0)
          fail(ErrorKind::kSemantic, "subset not closed: mu^" + std::to_string(d) +
                                         describe_tuple(b.space(), inputs) + " has a component along '" +
                                         b.space()[y].id + "'");
        m.add(t, local[static_cast<std::size_t>(y)], c);
      }
    }
    mu.push_back(std::move(m));
  }
  std::optional<std::vector<int>> units;
  if (b.units()) {
    std::vector<int> u;
    for (int e : *b.units())
      if (local[static_cast<std::size_t>(e)] >= 0) u.push_back(local[static_cast<std::size_t>(e)]);
    if (u.size() == b.units()->size()) units = std::move(u);
  }
  AlgebraPair pair;
  pair.ambient = ambient;
  pair.sub = std::make_shared<AInfAlgebra>(b.field(), GradedSpace(b.num_objects(), std::move(basis)), std::move(mu),
                                           std::move(units));
  for (int i : subset) pair.inclusion.push_back(single(i, b.field().one()));
  return pair;
}

AlgebraPair subalgebra_from_vectors(const AlgebraPtr& ambient, std::vector<BasisElement> basis,
                                    const std::vector<LinComb>& vectors, std::optional<std::vector<int>> units) {
  const AInfAlgebra& b = *ambient;
  const Field& field = b.field();
  const int n = b.size();
  const int k = static_cast<int>(vectors.size());
  if (static_cast<int>(basis.size()) != k) fail(ErrorKind::kArgument, "one vector per subalgebra basis element");
  Matrix p(field, n, k);
  std::vector<std::vector<std::pair<int, Scalar>>> expansion(static_cast<std::size_t>(n));
  for (int j = 0; j < k; ++j)
    for (const auto& [y, c] : vectors[static_cast<std::size_t>(j)]) {
      const BasisElement& e = b.space()[y];
      const BasisElement& s = basis[static_cast<std::size_t>(j)];
      if (e.degree != s.degree || e.source != s.source || e.target != s.target)
        fail(ErrorKind::kSemantic, "vector for '" + s.id + "' is not homogeneous of its declared type");
      p.at(y, j) = c;
      expansion[static_cast<std::size_t>(y)].emplace_back(j, c);
    }
  if (rank(p) != k) fail(ErrorKind::kSemantic, "subalgebra vectors are linearly dependent");
  std::vector<LinComb> identity;
  for (int y = 0; y < n; ++y) identity.push_back(single(y, field.one()));
  std::vector<MultiMap> mu;
  for (int d = 1; d <= b.arity_bound(); ++d) {
    const MultiMap in_old = transform_multimap(b.mu(d), expansion, identity);
    MultiMap m(d, 2 - d);
    for (const auto& [inputs, output] : in_old.entries()) {
      Vector rhs(static_cast<std::size_t>(n), field.zero());
      for (const auto& [y, c] : output) rhs[static_cast<std::size_t>(y)] = c;
      const auto x = solve(p, rhs);
      if (!x) fail(ErrorKind::kSemantic, "span not closed under mu^" + std::to_string(d));
      for (int j = 0; j < k; ++j) m.add(inputs, j, (*x)[static_cast<std::size_t>(j)]);
    }
    mu.push_back(std::move(m));
  }
  AlgebraPair pair;
  pair.ambient = ambient;
  pair.sub = std::make_shared<AInfAlgebra>(field, GradedSpace(b.num_objects(), std::move(basis)), std::move(mu),
                                           std::move(units));
  pair.inclusion = vectors;
  return pair;
}

CheckReport check_pair(const AlgebraPair& pair) {
  Matrix p(pair.ambient->field(), pair.ambient->size(), pair.sub->size());
  for (int j = 0; j < pair.sub->size(); ++j)
    for (const auto& [y, c] : pair.inclusion[static_cast<std::size_t>(j)]) p.at(y, j) = c;
  if (rank(p) != pair.sub->size()) fail(ErrorKind::kSemantic, "inclusion is not injective");
  return check_homomorphism(strict_homomorphism(pair.sub, pair.ambient, pair.inclusion));
}

CheckReport check_relations(const AInfAlgebra& alg) {
  Accumulator acc;
  accumulate_insertions(acc, alg.structure_maps(), alg.structure_maps(), alg.space(), alg.field().one());
  return CheckReport{to_failures(acc)};
}

std::vector<std::string> strict_unit_violations(const AInfAlgebra& alg) {
  if (!alg.units()) fail(ErrorKind::kArgument, "algebra has no declared units");
  std::vector<std::string> out;
  const GradedSpace& space = alg.space();
  const Field& field = alg.field();
  auto value = [&](const MultiMap& m, const Tuple& t) {
    const LinComb* v = m.find(t);
    return v ? *v : LinComb{};
  };
  for (int i = 0; i < alg.num_objects(); ++i) {
    const int e = (*alg.units())[static_cast<std::size_t>(i)];
    if (alg.mu(1).find({e})) out.push_back("mu^1(" + space[e].id + ") != 0");
    for (int a = 0; a < alg.size(); ++a) {
      const BasisElement& x = space[a];
      if (x.source == i) {
        const LinComb expected = single(a, field.one());
        if (value(alg.mu(2), {a, e}) != expected)
          out.push_back("mu^2(" + x.id + ", " + space[e].id + ") != " + x.id);
      }
      if (x.target == i) {
        const LinComb expected = single(a, sign_scalar(field, x.degree));
        if (value(alg.mu(2), {e, a}) != expected)
          out.push_back("mu^2(" + space[e].id + ", " + x.id + ") != (-1)^" + std::to_string(x.degree) + " " + x.id);
      }
    }
  }
  std::vector<bool> is_unit(static_cast<std::size_t>(alg.size()), false);
  for (int e : *alg.units()) is_unit[static_cast<std::size_t>(e)] = true;
  for (int d = 3; d <= alg.arity_bound(); ++d)
    for (const auto& [inputs, output] : alg.mu(d).entries())
      if (std::any_of(inputs.begin(), inputs.end(), [&](int x) { return is_unit[static_cast<std::size_t>(x)]; }))
        out.push_back("mu^" + std::to_string(d) + describe_tuple(space, inputs) + " != 0");
  return out;
}

bool check_strict_unital(const AInfAlgebra& alg) { return strict_unit_violations(alg).empty(); }

int Cohomology::dim(const BlockKey& key) const {
  auto it = blocks.find(key);
  return it == blocks.end() ? 0 : it->second.dim;
}

std::map<int, int> Cohomology::dims_by_degree() const {
  std::map<int, int> out;
  for (const auto& [key, block] : blocks)
    if (block.dim > 0) out[key.degree] += block.dim;
  return out;
}

int Cohomology::total() const {
  int t = 0;
  for (const auto& [key, block] : blocks) t += block.dim;
  return t;
}

namespace {

struct BlockLayout {
  std::map<BlockKey, std::vector<int>> members;
  std::vector<int> position;  // index within its block
};

BlockLayout layout_blocks(const GradedSpace& space) {
  BlockLayout layout;
  layout.position.resize(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) {
    const BasisElement& e = space[i];
    auto& list = layout.members[BlockKey{e.degree, e.source, e.target}];
    layout.position[static_cast<std::size_t>(i)] = static_cast<int>(list.size());
    list.push_back(i);
  }
  return layout;
}

// Matrix of d restricted to the block `from`, landing in block `to`.
Matrix block_matrix(const Field& field, const MultiMap& d, const BlockLayout& layout, const std::vector<int>& from,
                    const std::vector<int>* to) {
  const int rows = to ? static_cast<int>(to->size()) : 0;
  Matrix m(field, rows, static_cast<int>(from.size()));
  if (!to) return m;
  for (int c = 0; c < static_cast<int>(from.size()); ++c)
    if (const LinComb* out = d.find({from[static_cast<std::size_t>(c)]}))
      for (const auto& [y, coeff] : *out) m.at(layout.position[static_cast<std::size_t>(y)], c) = coeff;
  return m;
}

LinComb to_lincomb(const Vector& v, const std::vector<int>& members) {
  LinComb out;
  for (std::size_t r = 0; r < v.size(); ++r) add_term(out, members[r], v[r]);
  return out;
}

Vector to_local(const LinComb& v, const BlockLayout& layout, int size, const Field& field) {
  Vector out(static_cast<std::size_t>(size), field.zero());
  for (const auto& [y, c] : v) out[static_cast<std::size_t>(layout.position[static_cast<std::size_t>(y)])] = c;
  return out;
}

}  // namespace

Cohomology complex_cohomology(const Field& field, const GradedSpace& space, const MultiMap& d) {
  for (const auto& [inputs, output] : d.entries()) {
    LinComb dd;
    for (const auto& [y, c] : output)
      if (const LinComb* next = d.find({y})) add_scaled(dd, *next, c);
    if (!dd.empty())
      fail(ErrorKind::kRelation, "differential does not square to zero on '" + space[inputs[0]].id + "'");
  }
  const BlockLayout layout = layout_blocks(space);
  Cohomology result;
  for (const auto& [key, members] : layout.members) {
    auto find_block = [&](int degree) -> const std::vector<int>* {
      auto it = layout.members.find(BlockKey{degree, key.source, key.target});
      return it == layout.members.end() ? nullptr : &it->second;
    };
    const std::vector<int>* next = find_block(key.degree + 1);
    const std::vector<int>* prev = find_block(key.degree - 1);
    const int n = static_cast<int>(members.size());
    const std::vector<Vector> cycles = kernel(block_matrix(field, d, layout, members, next));
    std::vector<Vector> boundaries;
    if (prev) {
      const Matrix incoming = block_matrix(field, d, layout, *prev, &members);
      const Echelon e = row_reduce(incoming);
      for (int c : e.pivot_cols) boundaries.push_back(incoming.column(c));
    }
    CohomologyBlock block;
    for (int idx : extend_basis(field, n, boundaries, cycles))
      block.representatives.push_back(to_lincomb(cycles[static_cast<std::size_t>(idx)], members));
    for (const auto& b : boundaries) block.boundaries.push_back(to_lincomb(b, members));
    block.dim = static_cast<int>(block.representatives.size());
    result.blocks.emplace(key, std::move(block));
  }
  return result;
}

Cohomology cohomology(const AInfAlgebra& alg) { return complex_cohomology(alg.field(), alg.space(), alg.mu(1)); }

bool induces_cohomology_iso(const Field& field, const GradedSpace& source, const MultiMap& d_source,
                            const GradedSpace& target, const MultiMap& d_target, const std::vector<LinComb>& map) {
  const Cohomology hs = complex_cohomology(field, source, d_source);
  const Cohomology ht = complex_cohomology(field, target, d_target);
  std::map<BlockKey, int> keys;
  for (const auto& [key, block] : hs.blocks) keys[key] += block.dim;
  for (const auto& [key, block] : ht.blocks) keys[key] += 0;
  for (const auto& [key, unused] : keys)
    if (hs.dim(key) != ht.dim(key)) return false;
  const BlockLayout layout = layout_blocks(target);
  for (const auto& [key, block] : hs.blocks) {
    if (block.dim == 0) continue;
    const auto& members = layout.members.at(key);
    const int n = static_cast<int>(members.size());
    std::vector<Vector> columns;
    for (const auto& b : ht.blocks.at(key).boundaries) columns.push_back(to_local(b, layout, n, field));
    const int base = static_cast<int>(columns.size());
    for (const auto& rep : block.representatives) {
      LinComb image;
      for (const auto& [x, c] : rep) add_scaled(image, map[static_cast<std::size_t>(x)], c);
      for (const auto& [y, c] : image) {
        const BasisElement& e = target[y];
        if (BlockKey{e.degree, e.source, e.target} != key)
          fail(ErrorKind::kArgument, "chain map does not preserve degree and block");
      }
      columns.push_back(to_local(image, layout, n, field));
    }
    if (rank(Matrix::from_columns(field, n, columns)) != base + block.dim) return false;
  }
  return true;
}

AlgebraPair directed_subalgebra(const AlgebraPtr& alg) {
  if (!alg->units()) fail(ErrorKind::kArgument, "directed subalgebra requires declared units");
  std::vector<bool> is_unit(static_cast<std::size_t>(alg->size()), false);
  for (int e : *alg->units()) is_unit[static_cast<std::size_t>(e)] = true;
  std::vector<int> subset;
  for (int i = 0; i < alg->size(); ++i)
    if (is_unit[static_cast<std::size_t>(i)] || alg->space()[i].source < alg->space()[i].target) subset.push_back(i);
  return subalgebra_from_subset(alg, subset);
}

AInfAlgebra double_objects(const AInfAlgebra& alg) {
  const int m = alg.num_objects();
  const Field& field = alg.field();
  std::vector<BasisElement> basis;
  for (const auto& b : alg.space().elements())
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int beta = 0; beta < 2; ++beta)
        basis.push_back(BasisElement{b.id + "#" + std::to_string(alpha + 1) + std::to_string(beta + 1), b.degree,
                                     b.source + alpha * m, b.target + beta * m});
  auto copy = [](int b, int alpha, int beta) { return 4 * b + 2 * alpha + beta; };
  std::vector<MultiMap> mu;
  for (int d = 1; d <= alg.arity_bound(); ++d) {
    MultiMap out(d, 2 - d);
    for (const auto& [inputs, output] : alg.mu(d).entries()) {
      // alpha[0] is the copy of a_1's source, alpha[k] the copy of a_k's target.
      for (int mask = 0; mask < (1 << (d + 1)); ++mask) {
        Tuple t(static_cast<std::size_t>(d));
        for (int k = 1; k <= d; ++k)
          t[static_cast<std::size_t>(d - k)] =
              copy(inputs[static_cast<std::size_t>(d - k)], (mask >> (k - 1)) & 1, (mask >> k) & 1);
        LinComb o;
        for (const auto& [y, c] : output) add_term(o, copy(y, mask & 1, (mask >> d) & 1), c);
        out.add(t, o);
      }
    }
    mu.push_back(std::move(out));
  }
  std::optional<std::vector<int>> units;
  if (alg.units()) {
    std::vector<int> u;
    for (int i = 0; i < 2 * m; ++i)
      u.push_back(i < m ? copy((*alg.units())[static_cast<std::size_t>(i)], 0, 0)
                        : copy((*alg.units())[static_cast<std::size_t>(i - m)], 1, 1));
    units = std::move(u);
  }
  return AInfAlgebra(field, GradedSpace(2 * m, std::move(basis)), std::move(mu), std::move(units));
}

AInfHomomorphism strict_homomorphism(const AlgebraPtr& source, const AlgebraPtr& target,
                                     const std::vector<LinComb>& linear) {
  if (static_cast<int>(linear.size()) != source->size())
    fail(ErrorKind::kArgument, "strict homomorphism needs one image per source basis element");
  MultiMap phi(1, 0);
  for (int x = 0; x < source->size(); ++x) phi.add({x}, linear[static_cast<std::size_t>(x)]);
  return AInfHomomorphism{source, target, {std::move(phi)}};
}

AInfHomomorphism identity_homomorphism(const AlgebraPtr& alg) {
  std::vector<LinComb> linear;
  for (int x = 0; x < alg->size(); ++x) linear.push_back(single(x, alg->field().one()));
  return strict_homomorphism(alg, alg, linear);
}

CheckReport check_homomorphism(const AInfHomomorphism& phi) {
  for (int d = 1; d <= static_cast<int>(phi.components.size()); ++d) {
    const MultiMap& m = phi.components[static_cast<std::size_t>(d - 1)];
    if (m.arity() != d || m.degree_shift() != 1 - d)
      fail(ErrorKind::kSemantic, "phi^" + std::to_string(d) + " has the wrong arity or degree");
    validate_multimap(m, phi.source->space(), phi.target->space(), "phi^" + std::to_string(d));
  }
  Accumulator acc;
  const Field& field = phi.target->field();
  accumulate_products(acc, phi.target->structure_maps(), phi.components, field.one());
  accumulate_insertions(acc, phi.components, phi.source->structure_maps(), phi.source->space(), -field.one());
  return CheckReport{to_failures(acc)};
}

std::vector<LinComb> linear_part(const AInfHomomorphism& phi) {
  std::vector<LinComb> out(static_cast<std::size_t>(phi.source->size()));
  if (!phi.components.empty())
    for (const auto& [inputs, output] : phi.components[0].entries()) out[static_cast<std::size_t>(inputs[0])] = output;
  return out;
}

bool is_quasi_iso(const AInfHomomorphism& phi) {
  const CheckReport report = check_homomorphism(phi);
  if (!report.passed())
    fail(ErrorKind::kRelation,
         "homomorphism equations fail at " + describe_failure(phi.source->space(), phi.target->space(),
                                                              report.failures.front()));
  return induces_cohomology_iso(phi.source->field(), phi.source->space(), phi.source->mu(1), phi.target->space(),
                                phi.target->mu(1), linear_part(phi));
}

AInfAlgebra change_basis(const AInfAlgebra& alg, std::vector<BasisElement> basis, const std::vector<LinComb>& new_in_old,
                         std::optional<std::vector<int>> units) {
  const int n = alg.size();
  const Field& field = alg.field();
  if (static_cast<int>(new_in_old.size()) != n || static_cast<int>(basis.size()) != n)
    fail(ErrorKind::kArgument, "change of basis must keep the dimension");
  Matrix p(field, n, n);
  std::vector<std::vector<std::pair<int, Scalar>>> expansion(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (const auto& [y, c] : new_in_old[static_cast<std::size_t>(j)]) {
      p.at(y, j) = c;
      expansion[static_cast<std::size_t>(y)].emplace_back(j, c);
    }
  const auto q = inverse(p);
  if (!q) fail(ErrorKind::kArgument, "change of basis is not invertible");
  std::vector<LinComb> output(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    for (int j = 0; j < n; ++j) add_term(output[static_cast<std::size_t>(y)], j, q->at(j, y));
  std::vector<MultiMap> mu;
  for (const auto& m : alg.structure_maps()) mu.push_back(transform_multimap(m, expansion, output));
  return AInfAlgebra(field, GradedSpace(alg.num_objects(), std::move(basis)), std::move(mu), std::move(units));
}

namespace {

Tuple map_tuple(const Tuple& t, const std::vector<int>& f) {
  Tuple out;
  out.reserve(t.size());
  for (int x : t) out.push_back(f[static_cast<std::size_t>(x)]);
  return out;
}

LinComb map_lincomb(const LinComb& v, const std::vector<int>& f) {
  LinComb out;
  for (const auto& [y, c] : v) add_term(out, f[static_cast<std::size_t>(y)], c);
  return out;
}

std::optional<std::string> compare_types(const AInfAlgebra& a, const AInfAlgebra& b, const std::vector<int>& f) {
  if (!(a.field() == b.field())) return "fields differ";
  if (a.num_objects() != b.num_objects()) return "numbers of objects differ";
  if (static_cast<int>(f.size()) != a.size()) return "basis map has the wrong length";
  std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
  for (int i = 0; i < a.size(); ++i) {
    const int j = f[static_cast<std::size_t>(i)];
    if (j < 0 || j >= b.size() || hit[static_cast<std::size_t>(j)]) return "basis map is not injective";
    hit[static_cast<std::size_t>(j)] = true;
    const BasisElement& x = a.space()[i];
    const BasisElement& y = b.space()[j];
    if (x.degree != y.degree || x.source != y.source || x.target != y.target)
      return "'" + x.id + "' and '" + y.id + "' differ in degree or objects";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> compare_embedded(const AInfAlgebra& small, const AInfAlgebra& big,
                                            const std::vector<int>& small_to_big) {
  if (auto why = compare_types(small, big, small_to_big)) return why;
  std::vector<int> back(static_cast<std::size_t>(big.size()), -1);
  for (int i = 0; i < small.size(); ++i) back[static_cast<std::size_t>(small_to_big[static_cast<std::size_t>(i)])] = i;
  const int bound = std::max(small.arity_bound(), big.arity_bound());
  for (int d = 1; d <= bound; ++d) {
    for (const auto& [inputs, output] : small.mu(d).entries()) {
      const Tuple t = map_tuple(inputs, small_to_big);
      const LinComb* other = big.mu(d).find(t);
      const LinComb expected = map_lincomb(output, small_to_big);
      if (!other || *other != expected)
        return "mu^" + std::to_string(d) + describe_tuple(small.space(), inputs) + ": " +
               describe_lincomb(small.space(), output) + " vs " +
               (other ? describe_lincomb(big.space(), *other) : std::string("0"));
    }
    for (const auto& [inputs, output] : big.mu(d).entries()) {
      if (!std::all_of(inputs.begin(), inputs.end(), [&](int x) { return back[static_cast<std::size_t>(x)] >= 0; }))
        continue;
      if (!small.mu(d).find(map_tuple(inputs, back)))
        return "mu^" + std::to_string(d) + describe_tuple(big.space(), inputs) + ": 0 vs " +
               describe_lincomb(big.space(), output);
    }
  }
  return std::nullopt;
}

std::optional<std::string> compare_algebras(const AInfAlgebra& a, const AInfAlgebra& b, const std::vector<int>& a_to_b) {
  if (a.size() != b.size()) return "dimensions differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  return compare_embedded(a, b, a_to_b);
}

std::vector<int> match_ids(const GradedSpace& a, const GradedSpace& b) {
  if (a.size() != b.size()) fail(ErrorKind::kArgument, "basis sizes differ");
  std::vector<int> out;
  for (const auto& e : a.elements()) {
    const auto j = b.find(e.id);
    if (!j) fail(ErrorKind::kArgument, "basis id '" + e.id + "' has no counterpart");
    out.push_back(*j);
  }
  return out;
}

std::string describe_failure(const GradedSpace& inputs, const GradedSpace& outputs, const Failure& failure) {
  return "arity " + std::to_string(failure.inputs.size()) + " " + describe_tuple(inputs, failure.inputs) + ": " +
         describe_lincomb(outputs, failure.residual);
}

}  // namespace ainf
