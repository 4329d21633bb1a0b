#include "ainf/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ainf/dga.hpp"
#include "ainf/error.hpp"

namespace ainf {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Simplex> simplices)
    : vertices_(std::move(vertices)), simplices_(std::move(simplices)) {
  const int n = size();
  const int nv = static_cast<int>(vertices_.size());
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (static_cast<int>(names.size()) != nv) fail(ErrorKind::kSemantic, "duplicate vertex names");
  names.clear();
  std::vector<int> vertex_count(static_cast<std::size_t>(nv), 0);
  for (const Simplex& s : simplices_) {
    if (!names.insert(s.name).second) fail(ErrorKind::kSemantic, "duplicate simplex name '" + s.name + "'");
    if (s.vertices.empty()) fail(ErrorKind::kSemantic, "simplex '" + s.name + "' has no vertices");
    for (int v : s.vertices)
      if (v < 0 || v >= nv) fail(ErrorKind::kSemantic, "simplex '" + s.name + "' has an unknown vertex");
    if (s.dimension() == 0) {
      if (!s.faces.empty()) fail(ErrorKind::kSemantic, "vertex '" + s.name + "' has faces");
      ++vertex_count[static_cast<std::size_t>(s.vertices[0])];
      continue;
    }
    if (s.faces.size() != s.vertices.size()) fail(ErrorKind::kSemantic, "simplex '" + s.name + "' lacks faces");
    for (std::size_t k = 0; k < s.faces.size(); ++k) {
      const int f = s.faces[k];
      if (f < 0 || f >= n) fail(ErrorKind::kSemantic, "simplex '" + s.name + "' has an unknown face");
      std::vector<int> expected = s.vertices;
      expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(k));
      if ((*this)[f].vertices != expected)
        fail(ErrorKind::kSemantic, "face " + std::to_string(k) + " of '" + s.name + "' has the wrong vertices");
    }
  }
  for (int v = 0; v < nv; ++v)
    if (vertex_count[static_cast<std::size_t>(v)] != 1)
      fail(ErrorKind::kSemantic, "vertex '" + vertices_[static_cast<std::size_t>(v)] + "' needs exactly one 0-simplex");
  // d_i d_j = d_{j-1} d_i for i < j.
  for (const Simplex& s : simplices_) {
    if (s.dimension() < 2) continue;
    const int d = s.dimension();
    for (int j = 1; j <= d; ++j)
      for (int i = 0; i < j; ++i) {
        const int lhs = (*this)[s.faces[static_cast<std::size_t>(j)]].faces[static_cast<std::size_t>(i)];
        const int rhs = (*this)[s.faces[static_cast<std::size_t>(i)]].faces[static_cast<std::size_t>(j - 1)];
        if (lhs != rhs) fail(ErrorKind::kSemantic, "face maps of '" + s.name + "' violate the simplicial identities");
      }
  }
}

SimplicialComplex SimplicialComplex::from_vertex_sets(std::vector<std::string> vertices,
                                                      const std::vector<std::vector<std::string>>& simplices) {
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!index.emplace(vertices[v], static_cast<int>(v)).second)
      fail(ErrorKind::kSemantic, "duplicate vertex '" + vertices[v] + "'");
  std::set<std::vector<int>> closed;
  for (const auto& names : simplices) {
    std::vector<int> s;
    for (const std::string& name : names) {
      auto it = index.find(name);
      if (it == index.end()) fail(ErrorKind::kSemantic, "unknown vertex '" + name + "'");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(ErrorKind::kSemantic, "simplex must list distinct vertices");
    if (s.size() > 20) fail(ErrorKind::kSemantic, "simplex dimension too large");
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask & (1u << k)) face.push_back(s[k]);
      closed.insert(face);
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) closed.insert({static_cast<int>(v)});
  std::vector<std::vector<int>> ordered(closed.begin(), closed.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const bool short_names =
      std::all_of(vertices.begin(), vertices.end(), [](const std::string& v) { return v.size() == 1; });
  std::map<std::vector<int>, int> position;
  std::vector<Simplex> out;
  for (const auto& s : ordered) {
    Simplex simplex;
    simplex.vertices = s;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0 && !short_names) simplex.name += ".";
      simplex.name += vertices[static_cast<std::size_t>(s[k])];
    }
    if (s.size() > 1)
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        simplex.faces.push_back(position.at(face));
      }
    position[s] = static_cast<int>(out.size());
    out.push_back(std::move(simplex));
  }
  return SimplicialComplex(std::move(vertices), std::move(out));
}

int SimplicialComplex::vertex_simplex(int v) const {
  for (int s = 0; s < size(); ++s)
    if ((*this)[s].dimension() == 0 && (*this)[s].vertices[0] == v) return s;
  fail(ErrorKind::kArgument, "no such vertex");
}

std::optional<int> SimplicialComplex::find(std::vector<int> vertex_set) const {
  std::sort(vertex_set.begin(), vertex_set.end());
  std::optional<int> found;
  for (int s = 0; s < size(); ++s) {
    std::vector<int> v = (*this)[s].vertices;
    std::sort(v.begin(), v.end());
    if (v != vertex_set) continue;
    if (found) return std::nullopt;
    found = s;
  }
  return found;
}

int SimplicialComplex::front_face(int s, int p) const {
  while ((*this)[s].dimension() > p) s = (*this)[s].faces.back();
  return s;
}

int SimplicialComplex::back_face(int s, int q) const {
  while ((*this)[s].dimension() > q) s = (*this)[s].faces.front();
  return s;
}

SimplicialPair make_simplicial_pair(SimplicialComplex complex, const std::vector<std::vector<std::string>>& sub) {
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < complex.vertices().size(); ++v) index[complex.vertices()[v]] = static_cast<int>(v);
  std::set<int> closed;
  std::vector<int> stack;
  for (const auto& names : sub) {
    std::vector<int> set;
    for (const std::string& name : names) {
      auto it = index.find(name);
      if (it == index.end()) fail(ErrorKind::kSemantic, "subcomplex uses unknown vertex '" + name + "'");
      set.push_back(it->second);
    }
    const auto s = complex.find(set);
    if (!s) fail(ErrorKind::kSemantic, "subcomplex simplex is not a unique simplex of the complex");
    stack.push_back(*s);
  }
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    if (!closed.insert(s).second) continue;
    for (int f : complex[s].faces) stack.push_back(f);
  }
  return SimplicialPair{std::move(complex), std::vector<int>(closed.begin(), closed.end())};
}

SimplicialComplex subcomplex(const SimplicialPair& pair) {
  const SimplicialComplex& u = pair.complex;
  std::vector<int> new_index(static_cast<std::size_t>(u.size()), -1);
  std::vector<int> vertex_index(u.vertices().size(), -1);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < u.vertices().size(); ++v)
    if (std::binary_search(pair.sub.begin(), pair.sub.end(), u.vertex_simplex(static_cast<int>(v)))) {
      vertex_index[v] = static_cast<int>(vertices.size());
      vertices.push_back(u.vertices()[v]);
    }
  int count = 0;
  for (int s : pair.sub) new_index[static_cast<std::size_t>(s)] = count++;
  std::vector<Simplex> simplices;
  for (int s : pair.sub) {
    Simplex x = u[s];
    for (int& v : x.vertices) v = vertex_index[static_cast<std::size_t>(v)];
    for (int& f : x.faces) f = new_index[static_cast<std::size_t>(f)];
    simplices.push_back(std::move(x));
  }
  return SimplicialComplex(std::move(vertices), std::move(simplices));
}

SimplicialComplex standard_simplex(int n) {
  if (n < 0) fail(ErrorKind::kArgument, "simplex dimension must be non-negative");
  std::vector<std::string> vertices;
  for (int v = 0; v <= n; ++v) vertices.push_back(std::to_string(v));
  return SimplicialComplex::from_vertex_sets(vertices, {vertices});
}

SimplicialPair simplex_boundary_pair(int n) {
  SimplicialComplex u = standard_simplex(n);
  std::vector<std::vector<std::string>> facets;
  if (n >= 1)
    for (int k = 0; k <= n; ++k) {
      std::vector<std::string> facet;
      for (int v = 0; v <= n; ++v)
        if (v != k) facet.push_back(std::to_string(v));
      facets.push_back(facet);
    }
  return make_simplicial_pair(std::move(u), facets);
}

namespace {

Dga raw_cochains(const SimplicialComplex& x, const Field& field) {
  std::vector<BasisElement> basis;
  for (const Simplex& s : x.simplices()) basis.push_back({s.name, s.dimension(), 0, 0});
  Dga dga{field, GradedSpace(1, std::move(basis)), MultiMap(1, 1), MultiMap(2, 0), std::nullopt};
  for (int t = 0; t < x.size(); ++t) {
    const Simplex& s = x[t];
    for (std::size_t k = 0; k < s.faces.size(); ++k)
      dga.differential.add({s.faces[k]}, t, sign_scalar(field, static_cast<long>(k)));
    for (int p = 0; p <= s.dimension(); ++p)
      dga.product.add({x.front_face(t, p), x.back_face(t, s.dimension() - p)}, t, field.one());
  }
  return dga;
}

LinComb vertex_sum(const SimplicialComplex& x, const Field& field) {
  LinComb u;
  for (std::size_t v = 0; v < x.vertices().size(); ++v) add_term(u, x.vertex_simplex(static_cast<int>(v)), field.one());
  return u;
}

// Replaces basis element r (with coefficient 1 in unit) by the unit "e".
CochainAlgebra unitalize(const Dga& raw, const LinComb& unit, int r) {
  const Field& field = raw.field;
  const int n = raw.space.size();
  std::vector<BasisElement> basis = raw.space.elements();
  std::string unit_id = "e";
  while (raw.space.find(unit_id)) unit_id += "'";
  basis[static_cast<std::size_t>(r)] = {unit_id, 0, 0, 0};
  CochainAlgebra out;
  for (int k = 0; k < n; ++k) {
    out.basis_to_raw.push_back(k == r ? unit : single(k, field.one()));
    LinComb back = single(k, field.one());
    if (k == r)
      for (const auto& [y, c] : unit)
        if (y != r) add_term(back, y, -c);
    out.raw_to_basis.push_back(std::move(back));
  }
  out.algebra = std::make_shared<AInfAlgebra>(
      change_basis(dga_to_ainf(raw), std::move(basis), out.basis_to_raw, std::vector<int>{r}));
  return out;
}

LinComb apply_linear(const std::vector<LinComb>& map, const LinComb& v) {
  LinComb out;
  for (const auto& [y, c] : v) add_scaled(out, map[static_cast<std::size_t>(y)], c);
  return out;
}

CochainAlgebra zero_algebra(const Field& field) {
  return CochainAlgebra{std::make_shared<AInfAlgebra>(field, GradedSpace(1, {}), std::vector<MultiMap>{}), {}, {}};
}

}  // namespace

CochainAlgebra cochain_dga(const SimplicialComplex& x, const Field& field) {
  if (x.size() == 0) fail(ErrorKind::kArgument, "empty simplicial complex");
  return unitalize(raw_cochains(x, field), vertex_sum(x, field), x.vertex_simplex(0));
}

PairAlgebra pair_algebra(const SimplicialPair& pair, const Field& field) {
  const SimplicialComplex& u = pair.complex;
  if (u.size() == 0) fail(ErrorKind::kArgument, "empty simplicial complex");
  const int n = u.size();
  auto in_w = [&](int s) { return std::binary_search(pair.sub.begin(), pair.sub.end(), s); };

  PairAlgebra result;
  const Dga a = raw_cochains(u, field);
  std::vector<BasisElement> basis = a.space.elements();
  result.relative.assign(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s)
    if (!in_w(s)) {
      result.relative[static_cast<std::size_t>(s)] = static_cast<int>(basis.size());
      basis.push_back({"r:" + u[s].name, u[s].dimension() - 1, 0, 0});
    }
  auto rel = [&](int s) { return result.relative[static_cast<std::size_t>(s)]; };
  Dga b{field, GradedSpace(1, std::move(basis)), a.differential, a.product, std::nullopt};
  for (int s = 0; s < n; ++s) {
    if (in_w(s)) continue;
    // d(0, c) = ((-1)^{deg c} c, dc), deg c the cochain degree.
    b.differential.add({rel(s)}, s, sign_scalar(field, u[s].dimension()));
  }
  for (int t = 0; t < n; ++t) {
    if (in_w(t)) continue;
    const Simplex& x = u[t];
    for (std::size_t k = 0; k < x.faces.size(); ++k)
      if (!in_w(x.faces[k])) b.differential.add({rel(x.faces[k])}, rel(t), sign_scalar(field, static_cast<long>(k)));
    for (int p = 0; p <= x.dimension(); ++p) {
      const int front = u.front_face(t, p);
      const int back = u.back_face(t, x.dimension() - p);
      // (b2, 0)(0, c1) = (0, b2 c1) and (0, c2)(b1, 0) = (0, (-1)^{deg b1} c2 b1).
      if (!in_w(back)) b.product.add({front, rel(back)}, rel(t), field.one());
      if (!in_w(front)) b.product.add({rel(front), back}, rel(t), sign_scalar(field, u[back].dimension()));
    }
  }

  result.cochains = unitalize(a, vertex_sum(u, field), u.vertex_simplex(0));
  CochainAlgebra b_unital = unitalize(b, vertex_sum(u, field), u.vertex_simplex(0));
  result.pair.sub = result.cochains.algebra;
  result.pair.ambient = b_unital.algebra;
  for (int k = 0; k < n; ++k) result.pair.inclusion.push_back(single(k, field.one()));

  if (pair.sub.empty()) {
    result.boundary = zero_algebra(field);
  } else {
    result.boundary = cochain_dga(subcomplex(pair), field);
  }
  std::vector<int> w_index(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < pair.sub.size(); ++k) w_index[static_cast<std::size_t>(pair.sub[k])] = static_cast<int>(k);
  std::vector<LinComb> images;
  for (const LinComb& raw : b_unital.basis_to_raw) {
    LinComb restricted;
    for (const auto& [y, c] : raw)
      if (y < n && w_index[static_cast<std::size_t>(y)] >= 0)
        add_scaled(restricted, result.boundary.raw_to_basis[static_cast<std::size_t>(w_index[static_cast<std::size_t>(y)])], c);
    images.push_back(std::move(restricted));
  }
  result.restriction = strict_homomorphism(result.pair.ambient, result.boundary.algebra, images);
  return result;
}

GluedDouble glue_double(const SimplicialPair& pair) {
  const SimplicialComplex& u = pair.complex;
  auto in_w = [&](int s) { return std::binary_search(pair.sub.begin(), pair.sub.end(), s); };
  std::vector<std::string> vertices = u.vertices();
  std::set<std::string> vertex_names(vertices.begin(), vertices.end());
  std::vector<int> minus_vertex(u.vertices().size());
  for (std::size_t v = 0; v < u.vertices().size(); ++v) {
    if (in_w(u.vertex_simplex(static_cast<int>(v)))) {
      minus_vertex[v] = static_cast<int>(v);
      continue;
    }
    std::string name = u.vertices()[v] + "'";
    while (!vertex_names.insert(name).second) name += "'";
    minus_vertex[v] = static_cast<int>(vertices.size());
    vertices.push_back(std::move(name));
  }
  GluedDouble out;
  std::vector<Simplex> simplices = u.simplices();
  std::set<std::string> names;
  for (const Simplex& s : simplices) names.insert(s.name);
  for (int s = 0; s < u.size(); ++s) out.plus.push_back(s);
  out.minus.assign(static_cast<std::size_t>(u.size()), -1);
  for (int s = 0; s < u.size(); ++s) {
    if (in_w(s)) {
      out.minus[static_cast<std::size_t>(s)] = s;
      continue;
    }
    out.minus[static_cast<std::size_t>(s)] = static_cast<int>(simplices.size());
    Simplex copy = u[s];
    copy.name += "'";
    while (!names.insert(copy.name).second) copy.name += "'";
    for (int& v : copy.vertices) v = minus_vertex[static_cast<std::size_t>(v)];
    simplices.push_back(std::move(copy));
  }
  for (int s = 0; s < u.size(); ++s)
    if (!in_w(s))
      for (int& f : simplices[static_cast<std::size_t>(out.minus[static_cast<std::size_t>(s)])].faces)
        f = out.minus[static_cast<std::size_t>(f)];
  out.complex = SimplicialComplex(std::move(vertices), std::move(simplices));
  return out;
}

SandwichResult sandwich_map(const SimplicialPair& pair, const Field& field) {
  GluedDouble glued = glue_double(pair);
  CochainAlgebra doubled = cochain_dga(glued.complex, field);
  PairAlgebra p = pair_algebra(pair, field);
  SuspensionResult s = suspend(p.pair);
  const int n = pair.complex.size();
  std::vector<LinComb> images;
  for (const LinComb& raw : doubled.basis_to_raw) {
    LinComb plus_raw, minus_raw;
    for (int x = 0; x < n; ++x) {
      auto a = raw.find(glued.plus[static_cast<std::size_t>(x)]);
      if (a != raw.end()) add_term(plus_raw, x, a->second);
      auto b = raw.find(glued.minus[static_cast<std::size_t>(x)]);
      if (b != raw.end()) add_term(minus_raw, x, b->second);
    }
    LinComb image;
    for (const auto& [x, c] : apply_linear(p.cochains.raw_to_basis, plus_raw)) add_term(image, s.plus(x), c);
    for (const auto& [x, c] : apply_linear(p.cochains.raw_to_basis, minus_raw)) add_term(image, s.minus(x), c);
    LinComb difference = plus_raw;
    add_scaled(difference, minus_raw, -field.one());
    for (const auto& [x, c] : difference) {
      const int r = p.relative[static_cast<std::size_t>(x)];
      if (r < 0) fail(ErrorKind::kSemantic, "restrictions to the two copies differ on the common subcomplex");
      add_term(image, s.shifted(r), c);
    }
    images.push_back(std::move(image));
  }
  AInfHomomorphism map = strict_homomorphism(doubled.algebra, s.pair.ambient, images);
  return SandwichResult{std::move(glued), std::move(doubled), std::move(p), std::move(s), std::move(map)};
}

namespace {

void add_map_stages(Verdict& v, const std::string& name, const AInfHomomorphism& phi) {
  const CheckReport report = check_homomorphism(phi);
  v.add(name + " is a homomorphism", report.passed(),
        report.passed() ? std::string() : describe_failure(phi.source->space(), phi.target->space(), report.failures.front()));
  if (report.passed()) v.add(name + " is a quasi-isomorphism", is_quasi_iso(phi));
}

}  // namespace

Verdict verify_sandwich(const SimplicialPair& pair, const Field& field) {
  Verdict v;
  const SandwichResult r = sandwich_map(pair, field);
  v.add("C*(U) satisfies the relations", check_relations(*r.pair.pair.sub).passed());
  v.add("B satisfies the relations", check_relations(*r.pair.pair.ambient).passed());
  v.add("C*(W^s) satisfies the relations", check_relations(*r.double_cochains.algebra).passed());
  v.add("C*(U) and C*(W^s) are strictly unital",
        check_strict_unital(*r.pair.pair.sub) && check_strict_unital(*r.double_cochains.algebra));
  add_map_stages(v, "restriction B -> C*(W)", r.pair.restriction);
  add_map_stages(v, "sandwich map", r.map);
  const auto dw = cohomology(*r.double_cochains.algebra).dims_by_degree();
  const auto db = cohomology(*r.suspension.pair.ambient).dims_by_degree();
  v.add("H*(W^s) and H*(B^s) have equal dimensions", dw == db);
  return v;
}

}  // namespace ainf
