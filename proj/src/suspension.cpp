#include "ainf/suspension.hpp"

#include <array>
#include <sstream>

#include "ainf/composition.hpp"
#include "ainf/error.hpp"

namespace ainf {

namespace {

GradedSpace suspended_space(const AInfAlgebra& a, const AInfAlgebra& b) {
  std::vector<BasisElement> basis;
  for (const BasisElement& x : a.space().elements()) basis.push_back({"+" + x.id, x.degree, x.source, x.target});
  for (const BasisElement& x : a.space().elements()) basis.push_back({"-" + x.id, x.degree, x.source, x.target});
  for (const BasisElement& x : b.space().elements()) basis.push_back({"s" + x.id, x.degree + 1, x.source, x.target});
  return GradedSpace(b.num_objects(), std::move(basis));
}

// Rows b -> (offset + a, coefficient of b in iota(a)).
Expansion pull_back(const AlgebraPair& pair, int offset) {
  Expansion e(static_cast<std::size_t>(pair.ambient->size()));
  for (int a = 0; a < pair.sub->size(); ++a)
    for (const auto& [b, c] : pair.inclusion[static_cast<std::size_t>(a)])
      e[static_cast<std::size_t>(b)].push_back({offset + a, c});
  return e;
}

Expansion relabel(int size, int offset, const Field& field) {
  Expansion e(static_cast<std::size_t>(size));
  for (int b = 0; b < size; ++b) e[static_cast<std::size_t>(b)].push_back({offset + b, field.one()});
  return e;
}

std::vector<LinComb> relabel_outputs(int size, int offset, const Field& field) {
  std::vector<LinComb> out;
  for (int b = 0; b < size; ++b) out.push_back(single(offset + b, field.one()));
  return out;
}

LinComb offset_lincomb(const LinComb& v, int offset) {
  LinComb out;
  for (const auto& [y, c] : v) add_term(out, y + offset, c);
  return out;
}

Tuple offset_tuple(Tuple t, int offset) {
  for (int& x : t) x += offset;
  return t;
}

std::string first_failure(const CheckReport& report, const GradedSpace& in, const GradedSpace& out) {
  return report.passed() ? std::string() : describe_failure(in, out, report.failures.front());
}

std::string format_dims(const std::map<int, int>& dims) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, dim] : dims) {
    os << (first ? "" : ", ") << deg << ':' << dim;
    first = false;
  }
  os << '}';
  return os.str();
}

void require_valid(const AlgebraPair& pair) {
  const CheckReport ra = check_relations(*pair.sub);
  if (!ra.passed())
    fail(ErrorKind::kRelation, "subalgebra fails the relations at " +
                                   first_failure(ra, pair.sub->space(), pair.sub->space()));
  const CheckReport rb = check_relations(*pair.ambient);
  if (!rb.passed())
    fail(ErrorKind::kRelation, "algebra fails the relations at " +
                                   first_failure(rb, pair.ambient->space(), pair.ambient->space()));
  const CheckReport rp = check_pair(pair);
  if (!rp.passed())
    fail(ErrorKind::kRelation, "inclusion is not a homomorphism at " +
                                   first_failure(rp, pair.sub->space(), pair.ambient->space()));
}

}  // namespace

SuspensionResult suspend(const AlgebraPair& pair) {
  require_valid(pair);
  const AInfAlgebra& a = *pair.sub;
  const AInfAlgebra& b = *pair.ambient;
  const Field& field = b.field();
  const int na = a.size();
  const int nb = b.size();
  GradedSpace space = suspended_space(a, b);

  const Expansion plus = pull_back(pair, 0);
  const Expansion minus = pull_back(pair, na);
  const Expansion middle = relabel(nb, 2 * na, field);
  const std::vector<LinComb> shifted_out = relabel_outputs(nb, 2 * na, field);

  const int bound = std::max(a.arity_bound(), b.arity_bound());
  std::vector<MultiMap> mu;
  for (int d = 1; d <= bound; ++d) {
    MultiMap m(d, 2 - d);
    for (const auto& [inputs, output] : a.mu(d).entries()) {
      m.add(inputs, output);
      m.add(offset_tuple(inputs, na), offset_lincomb(output, na));
    }
    for (int i = 0; i < d; ++i) {
      std::vector<const Expansion*> slots;
      for (int k = 0; k < d; ++k) slots.push_back(k < i ? &plus : k == i ? &middle : &minus);
      const MultiMap t = transform_slots(b.mu(d), slots, &shifted_out, 2 - d);
      for (const auto& [inputs, output] : t.entries()) {
        long exponent = 1;
        for (int k = i + 1; k < d; ++k) exponent += space.reduced_degree(inputs[static_cast<std::size_t>(k)]);
        m.add(inputs, scaled(output, sign_scalar(field, exponent)));
      }
    }
    if (d == 1) {
      for (int x = 0; x < na; ++x) {
        const LinComb image = offset_lincomb(pair.inclusion[static_cast<std::size_t>(x)], 2 * na);
        m.add({x}, scaled(image, field.from_int(-1)));
        m.add({na + x}, image);
      }
    }
    mu.push_back(std::move(m));
  }

  SuspensionResult result;
  result.original = pair;
  auto ambient = std::make_shared<AInfAlgebra>(field, std::move(space), std::move(mu));
  result.pair.sub = pair.sub;
  result.pair.ambient = ambient;
  for (int x = 0; x < na; ++x) {
    LinComb v = single(x, field.one());
    add_term(v, na + x, field.one());
    result.pair.inclusion.push_back(std::move(v));
  }
  for (int x = 0; x < na; ++x) {
    result.tags.push_back(ComponentTag::kPlus);
    result.source_index.push_back(x);
  }
  for (int x = 0; x < na; ++x) {
    result.tags.push_back(ComponentTag::kMinus);
    result.source_index.push_back(x);
  }
  for (int y = 0; y < nb; ++y) {
    result.tags.push_back(ComponentTag::kShifted);
    result.source_index.push_back(y);
  }
  return result;
}

AlgebraPair suspend_times(const AlgebraPair& pair, int k) {
  if (k < 0) fail(ErrorKind::kArgument, "number of suspensions must be non-negative");
  AlgebraPair current = pair;
  for (int i = 0; i < k; ++i) current = suspend(current).pair;
  return current;
}

DgaPair to_dga_pair(const AlgebraPair& pair) {
  return DgaPair{ainf_to_dga(*pair.sub), ainf_to_dga(*pair.ambient), pair.inclusion};
}

Dga suspend_dga(const DgaPair& pair) {
  const Dga& a = pair.sub;
  const Dga& b = pair.ambient;
  const Field& field = b.field;
  const int na = a.space.size();
  const int nb = b.space.size();
  Dga out{field, GradedSpace(), MultiMap(1, 1), MultiMap(2, 0), std::nullopt};
  {
    std::vector<BasisElement> basis;
    for (const BasisElement& x : a.space.elements()) basis.push_back({"+" + x.id, x.degree, x.source, x.target});
    for (const BasisElement& x : a.space.elements()) basis.push_back({"-" + x.id, x.degree, x.source, x.target});
    for (const BasisElement& x : b.space.elements()) basis.push_back({"s" + x.id, x.degree + 1, x.source, x.target});
    out.space = GradedSpace(b.space.num_objects(), std::move(basis));
  }

  Expansion plus(static_cast<std::size_t>(nb)), minus(static_cast<std::size_t>(nb));
  for (int x = 0; x < na; ++x)
    for (const auto& [y, c] : pair.inclusion[static_cast<std::size_t>(x)]) {
      plus[static_cast<std::size_t>(y)].push_back({x, c});
      minus[static_cast<std::size_t>(y)].push_back({na + x, c});
    }
  const Expansion middle = relabel(nb, 2 * na, field);
  const std::vector<LinComb> shifted_out = relabel_outputs(nb, 2 * na, field);

  // d(a+, 0, 0) = (da+, 0, -(-1)^{|a|} a), d(0, a-, 0) = (0, da-, (-1)^{|a|} a), d(0, 0, b) = (0, 0, db).
  for (const auto& [inputs, output] : a.differential.entries()) {
    out.differential.add(inputs, output);
    out.differential.add(offset_tuple(inputs, na), offset_lincomb(output, na));
  }
  for (int x = 0; x < na; ++x) {
    const LinComb image = offset_lincomb(pair.inclusion[static_cast<std::size_t>(x)], 2 * na);
    const Scalar sign = sign_scalar(field, a.space.degree(x));
    out.differential.add({x}, scaled(image, -sign));
    out.differential.add({na + x}, scaled(image, sign));
  }
  for (const auto& [inputs, output] : b.differential.entries())
    out.differential.add(offset_tuple(inputs, 2 * na), offset_lincomb(output, 2 * na));

  // a2+ a1+, a2- a1-, a2+ b1 and (-1)^{|a1-|} b2 a1-.
  for (const auto& [inputs, output] : a.product.entries()) {
    out.product.add(inputs, output);
    out.product.add(offset_tuple(inputs, na), offset_lincomb(output, na));
  }
  const MultiMap left = transform_slots(b.product, {&plus, &middle}, &shifted_out, 0);
  const MultiMap right = transform_slots(b.product, {&middle, &minus}, &shifted_out, 0);
  for (const auto& [inputs, output] : left.entries()) out.product.add(inputs, output);
  for (const auto& [inputs, output] : right.entries())
    out.product.add(inputs, scaled(output, sign_scalar(field, out.space.degree(inputs[1]))));
  return out;
}

Dga end_c(const Field& field) {
  Dga c{field,
        GradedSpace(1, {{"E+", 0, 0, 0}, {"E-", 0, 0, 0}, {"u", 1, 0, 0}, {"v", -1, 0, 0}}),
        MultiMap(1, 1),
        MultiMap(2, 0),
        std::nullopt};
  enum { kEp, kEm, kU, kV };
  const Scalar one = field.one();
  c.differential.add({kEp}, kU, -one);
  c.differential.add({kEm}, kU, one);
  LinComb dv = single(kEp, one);
  add_term(dv, kEm, one);
  c.differential.add({kV}, dv);
  c.product.add({kEp, kEp}, kEp, one);
  c.product.add({kEm, kEm}, kEm, one);
  c.product.add({kEp, kU}, kU, one);
  c.product.add({kU, kEm}, kU, one);
  c.product.add({kU, kV}, kEp, one);
  c.product.add({kV, kU}, kEm, one);
  c.product.add({kEm, kV}, kV, one);
  c.product.add({kV, kEp}, kV, one);
  return c;
}

AInfAlgebra tensor_with_endC(const AInfAlgebra& b) {
  const Field& field = b.field();
  const Dga c = end_c(field);
  const int nc = c.space.size();
  std::vector<BasisElement> basis;
  for (const BasisElement& x : b.space().elements())
    for (const BasisElement& m : c.space.elements())
      basis.push_back({x.id + "@" + m.id, x.degree + m.degree, x.source, x.target});
  GradedSpace space(b.num_objects(), std::move(basis));
  auto index = [nc](int x, int m) { return nc * x + m; };

  // Matrix units multiply to a single basis element or zero.
  std::vector<std::vector<int>> product(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(nc), -1));
  for (const auto& [inputs, output] : c.product.entries())
    product[static_cast<std::size_t>(inputs[0])][static_cast<std::size_t>(inputs[1])] = output.begin()->first;

  std::vector<MultiMap> mu;
  for (int d = 1; d <= b.arity_bound(); ++d) {
    MultiMap m(d, 2 - d);
    for (const auto& [inputs, output] : b.mu(d).entries()) {
      std::vector<int> choice(static_cast<std::size_t>(d), 0);
      while (true) {
        int composite = choice[0];
        for (int k = 1; k < d && composite >= 0; ++k)
          composite = product[static_cast<std::size_t>(composite)][static_cast<std::size_t>(choice[static_cast<std::size_t>(k)])];
        if (composite >= 0) {
          // Position p in written order holds the input with label k = d - p.
          long exponent = 0;
          long right = 0;
          for (int p = d - 1; p >= 0; --p) {
            const std::size_t sp = static_cast<std::size_t>(p);
            exponent += static_cast<long>(c.space.degree(choice[sp])) * (1 + right);
            right += b.space().reduced_degree(inputs[sp]);
          }
          Tuple key;
          for (int p = 0; p < d; ++p)
            key.push_back(index(inputs[static_cast<std::size_t>(p)], choice[static_cast<std::size_t>(p)]));
          LinComb value;
          for (const auto& [y, coeff] : output) add_term(value, index(y, composite), coeff);
          m.add(key, scaled(value, sign_scalar(field, exponent)));
        }
        int k = d - 1;
        while (k >= 0 && ++choice[static_cast<std::size_t>(k)] == nc) choice[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
    if (d == 1) {
      for (int x = 0; x < b.size(); ++x)
        for (const auto& [inputs, output] : c.differential.entries()) {
          LinComb value;
          for (const auto& [y, coeff] : output) add_term(value, index(x, y), coeff);
          m.add({index(x, inputs[0])}, scaled(value, sign_scalar(field, c.space.degree(inputs[0]))));
        }
    }
    mu.push_back(std::move(m));
  }
  return AInfAlgebra(field, std::move(space), std::move(mu));
}

std::vector<LinComb> suspension_into_tensor(const SuspensionResult& s) {
  const int nc = 4;
  std::vector<LinComb> images;
  const AlgebraPair& pair = s.original;
  for (int copy = 0; copy < 2; ++copy)
    for (int x = 0; x < pair.sub->size(); ++x) {
      LinComb v;
      for (const auto& [y, c] : pair.inclusion[static_cast<std::size_t>(x)]) add_term(v, nc * y + copy, c);
      images.push_back(std::move(v));
    }
  for (int y = 0; y < pair.ambient->size(); ++y) images.push_back(single(nc * y + 2, pair.ambient->field().one()));
  return images;
}

std::optional<std::string> check_tensor_embedding(const SuspensionResult& s) {
  auto tensor = std::make_shared<AInfAlgebra>(tensor_with_endC(*s.original.ambient));
  const AInfHomomorphism phi = strict_homomorphism(s.pair.ambient, tensor, suspension_into_tensor(s));
  const CheckReport report = check_homomorphism(phi);
  if (report.passed()) return std::nullopt;
  return first_failure(report, s.pair.ambient->space(), tensor->space());
}

AInfHomomorphism suspend_morphism(const SuspensionResult& source, const SuspensionResult& target,
                                  const BimoduleMorphism& phi) {
  const AlgebraPair& src = source.original;
  const AlgebraPair& tgt = target.original;
  if (!(*src.sub == *tgt.sub)) fail(ErrorKind::kArgument, "the two pairs have different subalgebras");
  if (!(phi.source->space() == src.ambient->space()) || !(phi.target->space() == tgt.ambient->space()))
    fail(ErrorKind::kArgument, "morphism does not match the restriction bimodules of the pairs");
  const Field& field = src.ambient->field();

  // Identity on A: phi^{0|1|0}(iota a) = iota a, higher components vanish on iota(A).
  const Expansion on_sub = pull_back(src, 0);
  for (const auto& [key, m] : phi.components) {
    const auto [s, r] = key;
    if (s == 0 && r == 0) {
      for (int a = 0; a < src.sub->size(); ++a) {
        const LinComb args[] = {src.inclusion[static_cast<std::size_t>(a)]};
        if (apply_multimap(m, args) != tgt.inclusion[static_cast<std::size_t>(a)])
          fail(ErrorKind::kArgument, "morphism is not the identity on " + (*src.sub).space()[a].id);
      }
      continue;
    }
    std::vector<const Expansion*> slots(static_cast<std::size_t>(s + r + 1), nullptr);
    slots[static_cast<std::size_t>(s)] = &on_sub;
    if (!transform_slots(m, slots, nullptr, m.degree_shift()).empty())
      fail(ErrorKind::kArgument, "higher morphism components do not vanish on the subalgebra");
  }

  int bound = 1;
  for (const auto& [key, m] : phi.components)
    if (!m.empty()) bound = std::max(bound, key.first + key.second + 1);
  std::vector<MultiMap> components;
  for (int d = 1; d <= bound; ++d) components.emplace_back(d, 1 - d);
  const int na = src.sub->size();
  for (int x = 0; x < 2 * na; ++x) components[0].add({x}, x, field.one());
  for (const auto& [key, m] : phi.components) {
    const int s = key.first;
    MultiMap& out = components[static_cast<std::size_t>(m.arity() - 1)];
    for (const auto& [inputs, output] : m.entries()) {
      Tuple t;
      for (int k = 0; k < m.arity(); ++k) {
        const int x = inputs[static_cast<std::size_t>(k)];
        t.push_back(k < s ? source.plus(x) : k == s ? source.shifted(x) : source.minus(x));
      }
      LinComb o;
      for (const auto& [y, c] : output) add_term(o, target.shifted(y), c);
      out.add(t, o);
    }
  }
  return AInfHomomorphism{source.pair.ambient, target.pair.ambient, std::move(components)};
}

SplitResult split_after_suspension(const AlgebraPair& pair) {
  SuspensionResult s = suspend(pair);
  auto restriction = std::make_shared<AInfBimodule>(restriction_bimodule(s.pair));
  QuotientResult q = quotient_bimodule(*restriction, s.pair.inclusion);
  auto quotient = std::make_shared<AInfBimodule>(q.quotient);
  const Field& field = pair.ambient->field();

  std::vector<int> w;
  for (int a = 0; a < pair.sub->size(); ++a) w.push_back(s.plus(a));
  for (int b = 0; b < pair.ambient->size(); ++b) w.push_back(s.shifted(b));
  const int nq = quotient->size();
  if (static_cast<int>(w.size()) != nq) fail(ErrorKind::kSemantic, "quotient has unexpected dimension");
  Matrix m(field, nq, nq);
  for (int j = 0; j < nq; ++j)
    for (const auto& [row, c] : q.projection[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])]) m.at(row, j) = c;
  const std::optional<Matrix> inv = inverse(m);
  if (!inv) fail(ErrorKind::kSemantic, "projection is not invertible on the (a+, 0, b) part");
  std::vector<LinComb> images(static_cast<std::size_t>(nq));
  for (int row = 0; row < nq; ++row)
    for (int j = 0; j < nq; ++j)
      if (!inv->at(j, row).is_zero()) add_term(images[static_cast<std::size_t>(row)], w[static_cast<std::size_t>(j)], inv->at(j, row));
  BimoduleMorphism xi = strict_bimodule_morphism(quotient, restriction, images);
  return SplitResult{std::move(s), restriction, std::move(q), quotient, std::move(xi)};
}

AlgebraPair trivial_extension_pair(const AlgebraPtr& alg, const AInfBimodule& p) {
  AlgebraPair pair{alg, std::make_shared<AInfAlgebra>(trivial_extension(alg, p)), {}};
  for (int x = 0; x < alg->size(); ++x) pair.inclusion.push_back(single(x, alg->field().one()));
  return pair;
}

namespace {

void add_homomorphism_stages(Verdict& v, const std::string& name, const AInfHomomorphism& phi) {
  const CheckReport report = check_homomorphism(phi);
  v.add(name + " is a homomorphism", report.passed(),
        first_failure(report, phi.source->space(), phi.target->space()));
  if (report.passed()) v.add(name + " is a quasi-isomorphism", is_quasi_iso(phi));
}

void add_bimodule_stages(Verdict& v, const std::string& name, const BimoduleMorphism& phi, bool quasi_iso = true) {
  const CheckReport report = check_bimodule_morphism(phi);
  v.add(name + " is a bimodule morphism", report.passed(),
        report.passed() ? std::string() : describe_tuple(phi.source->space(), report.failures.front().inputs));
  if (report.passed() && quasi_iso) v.add(name + " is a quasi-isomorphism", is_bimodule_quasi_iso(phi));
}

void add_dims_stage(Verdict& v, const std::string& name, const AInfAlgebra& x, const AInfAlgebra& y) {
  const auto dx = cohomology(x).dims_by_degree();
  const auto dy = cohomology(y).dims_by_degree();
  v.add(name, dx == dy, format_dims(dx) + " vs " + format_dims(dy));
}

// The strict inclusion A + P[-1] -> (A + P)^s.
AInfHomomorphism extension_into_suspension(const AlgebraPtr& alg, const AInfBimodule& p, const SuspensionResult& s) {
  auto model = std::make_shared<AInfAlgebra>(trivial_extension(alg, shift_bimodule(p, -1)));
  const Field& field = alg->field();
  const int na = alg->size();
  std::vector<LinComb> images;
  for (int x = 0; x < na; ++x) {
    LinComb v = single(s.plus(x), field.one());
    add_term(v, s.minus(x), field.one());
    images.push_back(std::move(v));
  }
  for (int x = 0; x < p.size(); ++x) images.push_back(single(s.shifted(na + x), field.one()));
  return strict_homomorphism(model, s.pair.ambient, images);
}

void add_split_stages(Verdict& v, const SplitResult& split) {
  add_bimodule_stages(v, "xi^s", split.xi, false);
  const auto projection =
      strict_bimodule_morphism(split.restriction, split.quotient_module, split.quotient.projection);
  std::vector<LinComb> composite;
  bool identity = true;
  const std::vector<LinComb> xi = linear_part(split.xi);
  for (int q = 0; q < split.quotient_module->size(); ++q) {
    LinComb image;
    for (const auto& [x, c] : xi[static_cast<std::size_t>(q)])
      add_scaled(image, split.quotient.projection[static_cast<std::size_t>(x)], c);
    identity = identity && image == single(q, split.quotient_module->base()->field().one());
    composite.push_back(std::move(image));
  }
  v.add("pi xi^s = id", identity);
  add_bimodule_stages(v, "pi", projection, false);
  add_bimodule_stages(v, "pi xi^s", strict_bimodule_morphism(split.quotient_module, split.quotient_module, composite));
}

struct PipelineState {
  SplitResult split;
  AlgebraPair tilde;  // A^s inside A^s + B^s/A^s
  SuspensionResult tilde_suspension;
  SuspensionResult double_suspension;
};

PipelineState phi_sigma_stages(Verdict& v, const AlgebraPair& pair) {
  SplitResult split = split_after_suspension(pair);
  const CheckReport rel = check_relations(*split.suspension.pair.ambient);
  v.add("suspension satisfies the relations", rel.passed(),
        first_failure(rel, split.suspension.pair.ambient->space(), split.suspension.pair.ambient->space()));
  add_split_stages(v, split);

  const AlgebraPtr& sub = split.suspension.pair.sub;
  AlgebraPair tilde = trivial_extension_pair(sub, *split.quotient_module);
  const int na = sub->size();
  std::vector<LinComb> images;
  for (int x = 0; x < na; ++x) images.push_back(split.suspension.pair.inclusion[static_cast<std::size_t>(x)]);
  for (const LinComb& y : linear_part(split.xi)) images.push_back(y);
  const auto tilde_module = std::make_shared<AInfBimodule>(restriction_bimodule(tilde));
  const BimoduleMorphism iota_xi = strict_bimodule_morphism(tilde_module, split.restriction, images);
  add_bimodule_stages(v, "iota + xi^s", iota_xi);

  SuspensionResult tilde_suspension = suspend(tilde);
  SuspensionResult double_suspension = suspend(split.suspension.pair);
  add_homomorphism_stages(v, "phi^s", suspend_morphism(tilde_suspension, double_suspension, iota_xi));
  return PipelineState{std::move(split), std::move(tilde), std::move(tilde_suspension), std::move(double_suspension)};
}

}  // namespace

Verdict verify_trivial_extension(const AlgebraPtr& alg, const AInfBimodule& p) {
  Verdict v;
  const CheckReport rel = check_bimodule_relations(p);
  v.add("bimodule relations", rel.passed());
  if (!rel.passed()) return v;
  const SuspensionResult s = suspend(trivial_extension_pair(alg, p));
  const AInfHomomorphism j = extension_into_suspension(alg, p, s);
  add_homomorphism_stages(v, "A + P[-1] -> (A + P)^s", j);
  add_dims_stage(v, "cohomology dims", *s.pair.ambient, *j.source);
  return v;
}

Verdict verify_trivial_extension(const AlgebraPair& pair) {
  require_valid(pair);
  const QuotientResult q = quotient_bimodule(restriction_bimodule(pair), pair.inclusion);
  return verify_trivial_extension(pair.sub, q.quotient);
}

Verdict verify_split(const AlgebraPair& pair) {
  Verdict v;
  add_split_stages(v, split_after_suspension(pair));
  return v;
}

Verdict verify_phi_sigma(const AlgebraPair& pair) {
  Verdict v;
  phi_sigma_stages(v, pair);
  return v;
}

DoubleSuspensionResult double_suspension_model(const AlgebraPair& pair) {
  DoubleSuspensionResult result;
  Verdict& v = result.verdict;
  const PipelineState state = phi_sigma_stages(v, pair);
  const SplitResult& split = state.split;
  const AlgebraPtr& sub = split.suspension.pair.sub;

  // A^s + (B^s/A^s)[-1] -> (A^s + B^s/A^s)^s.
  add_homomorphism_stages(v, "j", extension_into_suspension(sub, *split.quotient_module, state.tilde_suspension));

  // rho: B^s/A^s -> (B/A)[-1], sb -> [b], +a and -a -> 0.
  const AlgebraPair base_pair{sub, pair.ambient, pair.inclusion};
  const QuotientResult b_mod_a = quotient_bimodule(restriction_bimodule(base_pair), pair.inclusion);
  const auto target = std::make_shared<AInfBimodule>(shift_bimodule(b_mod_a.quotient, -1));
  std::vector<LinComb> rho;
  for (int c : split.quotient.complement) {
    const SuspensionResult& s = split.suspension;
    rho.push_back(s.tags[static_cast<std::size_t>(c)] == ComponentTag::kShifted
                      ? b_mod_a.projection[static_cast<std::size_t>(s.source_index[static_cast<std::size_t>(c)])]
                      : LinComb{});
  }
  const BimoduleMorphism rho_map = strict_bimodule_morphism(split.quotient_module, target, rho);
  add_bimodule_stages(v, "rho", rho_map);
  const AInfHomomorphism psi = extension_homomorphism(rho_map);
  add_homomorphism_stages(v, "id + rho", psi);

  result.double_suspension = state.double_suspension.pair.ambient;
  result.model = std::make_shared<AInfAlgebra>(trivial_extension(pair.sub, shift_bimodule(b_mod_a.quotient, -2)));
  v.add("model is A + (B/A)[-2]", *psi.target == *result.model);
  add_dims_stage(v, "cohomology dims of B^ss and the model", *result.double_suspension, *result.model);
  return result;
}

}  // namespace ainf
