#include "ainf/document.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"

#include "ainf/error.hpp"

namespace ainf {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Top-level keys one per line, array members one per line, everything below compact.
std::string write_document(const ordered_json& doc) {
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + json(key).dump() + ": ";
    if (value.is_array() && !value.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i)
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++k < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(ErrorKind::kSemantic, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::kSemantic, where + ": missing \"" + key + "\"");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(ErrorKind::kSemantic, where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) fail(ErrorKind::kSemantic, where + ": integer out of range");
  return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(ErrorKind::kSemantic, where + ": expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(ErrorKind::kSemantic, where + ": expected an array");
  return v;
}

Scalar as_scalar(const Field& field, const json& v, const std::string& where) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = v.dump();
  else
    fail(ErrorKind::kSemantic, where + ": coefficient must be a string or an integer");
  try {
    return field.parse_scalar(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::kSemantic, where + ": bad coefficient '" + text + "': " + e.what());
  }
}

// [[coef, id], ...] resolved against a space.
LinComb parse_terms(const Field& field, const GradedSpace& space, const json& v, const std::string& where) {
  LinComb out;
  std::size_t k = 0;
  for (const json& term : as_array(v, where)) {
    const std::string here = where + " term " + std::to_string(k++);
    if (!term.is_array() || term.size() != 2) fail(ErrorKind::kSemantic, here + ": expected [coefficient, id]");
    const std::string id = as_string(term[1], here);
    const auto index = space.find(id);
    if (!index) fail(ErrorKind::kSemantic, here + ": unknown id '" + id + "'");
    add_term(out, *index, as_scalar(field, term[0], here));
  }
  return out;
}

ordered_json terms_json(const GradedSpace& space, const LinComb& value) {
  ordered_json out = ordered_json::array();
  for (const auto& [y, c] : value) out.push_back(ordered_json::array({c.to_string(), space[y].id}));
  return out;
}

Field parse_field(const json& doc) {
  const std::string text = as_string(member(doc, "field", "document"), "field");
  try {
    return Field::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::kSemantic, "field: " + std::string(e.what()));
  }
}

AlgebraPair parse_subalgebra(const AlgebraPtr& b, const json& entries) {
  const json& list = as_array(entries, "subalgebra");
  const bool by_id = std::all_of(list.begin(), list.end(), [](const json& x) { return x.is_string(); });
  if (by_id) {
    std::vector<int> subset;
    for (const json& x : list) {
      const std::string id = x.get<std::string>();
      const auto index = b->space().find(id);
      if (!index) fail(ErrorKind::kSemantic, "subalgebra: unknown id '" + id + "'");
      if (std::find(subset.begin(), subset.end(), *index) != subset.end())
        fail(ErrorKind::kSemantic, "subalgebra: repeated id '" + id + "'");
      subset.push_back(*index);
    }
    return subalgebra_from_subset(b, subset);
  }
  std::vector<BasisElement> basis;
  std::vector<LinComb> vectors;
  std::vector<int> units;
  std::size_t k = 0;
  for (const json& x : list) {
    const std::string where = "subalgebra entry " + std::to_string(k++);
    BasisElement element;
    LinComb v;
    bool unit = false;
    if (x.is_string()) {
      element.id = x.get<std::string>();
      const auto index = b->space().find(element.id);
      if (!index) fail(ErrorKind::kSemantic, where + ": unknown id '" + element.id + "'");
      v = single(*index, b->field().one());
      if (b->units()) {
        const auto& u = *b->units();
        unit = std::find(u.begin(), u.end(), *index) != u.end();
      }
    } else {
      element.id = as_string(member(x, "id", where), where + " id");
      v = parse_terms(b->field(), b->space(), member(x, "terms", where), where);
      if (x.contains("unit")) {
        if (!x["unit"].is_boolean()) fail(ErrorKind::kSemantic, where + ": unit must be a boolean");
        unit = x["unit"].get<bool>();
      }
    }
    if (v.empty()) fail(ErrorKind::kSemantic, where + ": zero vector");
    const BasisElement& lead = b->space()[v.begin()->first];
    element.degree = lead.degree;
    element.source = lead.source;
    element.target = lead.target;
    if (unit) units.push_back(static_cast<int>(basis.size()));
    basis.push_back(std::move(element));
    vectors.push_back(std::move(v));
  }
  std::optional<std::vector<int>> declared;
  if (!units.empty()) {
    std::vector<int> ordered(static_cast<std::size_t>(b->num_objects()), -1);
    for (int u : units) {
      const BasisElement& e = basis[static_cast<std::size_t>(u)];
      if (e.degree != 0 || e.source != e.target || ordered[static_cast<std::size_t>(e.source)] >= 0)
        fail(ErrorKind::kSemantic, "subalgebra: unit '" + e.id + "' is not a degree-0 endomorphism of its own object");
      ordered[static_cast<std::size_t>(e.source)] = u;
    }
    if (std::find(ordered.begin(), ordered.end(), -1) != ordered.end())
      fail(ErrorKind::kSemantic, "subalgebra: units must be declared for every object or none");
    declared = std::move(ordered);
  }
  return subalgebra_from_vectors(b, std::move(basis), vectors, std::move(declared));
}

bool basis_spanned(const AlgebraPair& pair) {
  const Field& f = pair.ambient->field();
  for (int x = 0; x < pair.sub->size(); ++x) {
    const LinComb& v = pair.inclusion[static_cast<std::size_t>(x)];
    if (v.size() != 1 || v.begin()->second != f.one()) return false;
    if (pair.ambient->space()[v.begin()->first].id != pair.sub->space()[x].id) return false;
  }
  // A span of basis elements picks up every ambient unit it contains.
  const AlgebraPair rebuilt = [&] {
    std::vector<int> subset;
    for (const LinComb& v : pair.inclusion) subset.push_back(v.begin()->first);
    return subalgebra_from_subset(pair.ambient, subset);
  }();
  return rebuilt.sub->units() == pair.sub->units();
}

ordered_json simplex_names(const SimplicialComplex& x, const std::vector<int>& indices) {
  ordered_json out = ordered_json::array();
  for (int s : indices) out.push_back(x[s].name);
  return out;
}

}  // namespace

AlgebraDocument parse_algebra_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(ErrorKind::kSemantic, "document: expected an object");
  const Field field = parse_field(doc);
  const int objects = as_int(member(doc, "objects", "document"), "objects");
  if (objects < 1) fail(ErrorKind::kSemantic, "objects: must be at least 1");
  const json& basis = as_array(member(doc, "basis", "document"), "basis");
  const json& mu = doc.contains("mu") ? as_array(doc["mu"], "mu") : json::array();

  int arity = 1;
  for (const json& entry : mu)
    if (entry.is_object() && entry.contains("inputs") && entry["inputs"].is_array())
      arity = std::max(arity, static_cast<int>(entry["inputs"].size()));
  if (doc.contains("arity_bound")) {
    const int declared = as_int(doc["arity_bound"], "arity_bound");
    if (declared < arity)
      fail(ErrorKind::kSemantic, "arity_bound: a mu entry has arity " + std::to_string(arity));
    arity = declared;
  } else {
    arity = std::max(arity, 2);
  }

  AlgebraBuilder builder(field, objects, arity);
  AlgebraDocument out;
  std::vector<int> units(static_cast<std::size_t>(objects), -1);
  bool any_unit = false;
  std::vector<BasisElement> elements;
  std::size_t k = 0;
  for (const json& item : basis) {
    const std::string where = "basis entry " + std::to_string(k++);
    const std::string id = as_string(member(item, "id", where), where + " id");
    const std::string named = "basis '" + id + "'";
    const int degree = as_int(member(item, "degree", named), named + " degree");
    const int source = as_int(member(item, "source", named), named + " source");
    const int target = as_int(member(item, "target", named), named + " target");
    if (source < 1 || source > objects || target < 1 || target > objects)
      fail(ErrorKind::kSemantic, named + ": objects are numbered 1.." + std::to_string(objects));
    const int index = builder.add_basis(id, degree, source - 1, target - 1);
    elements.push_back(BasisElement{id, degree, source - 1, target - 1});
    if (item.contains("unit")) {
      if (!item["unit"].is_boolean()) fail(ErrorKind::kSemantic, named + ": unit must be a boolean");
      if (item["unit"].get<bool>()) {
        if (degree != 0 || source != target || units[static_cast<std::size_t>(source - 1)] >= 0)
          fail(ErrorKind::kSemantic, named + ": units are degree-0 endomorphisms, one per object");
        units[static_cast<std::size_t>(source - 1)] = index;
        any_unit = true;
      }
    }
    out.tags.push_back(item.contains("tag") ? as_string(item["tag"], named + " tag") : std::string());
  }
  if (any_unit) {
    if (std::find(units.begin(), units.end(), -1) != units.end())
      fail(ErrorKind::kSemantic, "units must be declared for every object or none");
    builder.set_units(units);
  }
  if (std::all_of(out.tags.begin(), out.tags.end(), [](const std::string& t) { return t.empty(); })) out.tags.clear();

  const GradedSpace space(objects, elements);
  k = 0;
  for (const json& entry : mu) {
    const std::string where = "mu entry " + std::to_string(k++);
    const json& inputs = as_array(member(entry, "inputs", where), where + " inputs");
    if (inputs.empty()) fail(ErrorKind::kSemantic, where + ": no inputs");
    Tuple t;
    for (const json& x : inputs) {
      const std::string id = as_string(x, where + " inputs");
      const auto index = space.find(id);
      if (!index) fail(ErrorKind::kSemantic, where + ": unknown input id '" + id + "'");
      t.push_back(*index);
    }
    const std::string named = where + " " + describe_tuple(space, t);
    builder.add(t, parse_terms(field, space, member(entry, "output", named), named));
  }
  out.algebra = std::make_shared<AInfAlgebra>(builder.build());
  if (doc.contains("subalgebra")) out.pair = parse_subalgebra(out.algebra, doc["subalgebra"]);
  return out;
}

std::string serialize_algebra_document(const AlgebraDocument& doc) {
  const AInfAlgebra& b = *doc.algebra;
  const GradedSpace& space = b.space();
  ordered_json out;
  out["field"] = b.field().to_string();
  out["objects"] = b.num_objects();
  out["arity_bound"] = b.arity_bound();
  ordered_json basis = ordered_json::array();
  for (int x = 0; x < b.size(); ++x) {
    const BasisElement& e = space[x];
    ordered_json item{{"id", e.id}, {"degree", e.degree}, {"source", e.source + 1}, {"target", e.target + 1}};
    if (b.units() && std::find(b.units()->begin(), b.units()->end(), x) != b.units()->end()) item["unit"] = true;
    if (!doc.tags.empty() && !doc.tags[static_cast<std::size_t>(x)].empty())
      item["tag"] = doc.tags[static_cast<std::size_t>(x)];
    basis.push_back(std::move(item));
  }
  out["basis"] = std::move(basis);
  ordered_json mu = ordered_json::array();
  for (int d = 1; d <= b.arity_bound(); ++d)
    for (const auto& [inputs, output] : b.mu(d).entries()) {
      ordered_json ids = ordered_json::array();
      for (int x : inputs) ids.push_back(space[x].id);
      mu.push_back(ordered_json{{"inputs", std::move(ids)}, {"output", terms_json(space, output)}});
    }
  out["mu"] = std::move(mu);
  if (doc.pair) {
    const AlgebraPair& p = *doc.pair;
    ordered_json sub = ordered_json::array();
    if (basis_spanned(p)) {
      for (int x = 0; x < p.sub->size(); ++x) sub.push_back(p.sub->space()[x].id);
    } else {
      for (int x = 0; x < p.sub->size(); ++x) {
        ordered_json item{{"id", p.sub->space()[x].id}, {"terms", terms_json(space, p.inclusion[static_cast<std::size_t>(x)])}};
        if (p.sub->units()) {
          const auto& u = *p.sub->units();
          if (std::find(u.begin(), u.end(), x) != u.end()) item["unit"] = true;
        }
        sub.push_back(std::move(item));
      }
    }
    out["subalgebra"] = std::move(sub);
  }
  return write_document(out);
}

AlgebraDocument document_from_algebra(const AlgebraPtr& alg) { return AlgebraDocument{alg, std::nullopt, {}}; }

AlgebraDocument document_from_pair(const AlgebraPair& pair) { return AlgebraDocument{pair.ambient, pair, {}}; }

AlgebraDocument document_from_suspension(const SuspensionResult& s) {
  AlgebraDocument doc = document_from_pair(s.pair);
  for (ComponentTag t : s.tags)
    doc.tags.push_back(t == ComponentTag::kPlus ? "+" : t == ComponentTag::kMinus ? "-" : "s");
  return doc;
}

SimplicialPair parse_complex_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(ErrorKind::kSemantic, "complex: expected an object");
  std::vector<std::string> vertices;
  for (const json& v : as_array(member(doc, "vertices", "complex"), "vertices"))
    vertices.push_back(as_string(v, "vertices"));
  const json& simplices = as_array(member(doc, "simplices", "complex"), "simplices");
  const bool explicit_form = std::any_of(simplices.begin(), simplices.end(), [](const json& s) { return s.is_object(); });
  std::map<std::string, int> vertex_index;
  for (std::size_t v = 0; v < vertices.size(); ++v) vertex_index[vertices[v]] = static_cast<int>(v);

  SimplicialComplex complex;
  if (explicit_form) {
    std::map<std::string, int> by_name;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
      const std::string where = "simplex " + std::to_string(k);
      by_name[as_string(member(simplices[k], "name", where), where + " name")] = static_cast<int>(k);
    }
    std::vector<Simplex> list;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
      const json& s = simplices[k];
      Simplex simplex;
      simplex.name = s["name"].get<std::string>();
      const std::string where = "simplex '" + simplex.name + "'";
      for (const json& v : as_array(member(s, "vertices", where), where + " vertices")) {
        const std::string name = as_string(v, where + " vertices");
        auto it = vertex_index.find(name);
        if (it == vertex_index.end()) fail(ErrorKind::kSemantic, where + ": unknown vertex '" + name + "'");
        simplex.vertices.push_back(it->second);
      }
      if (s.contains("faces"))
        for (const json& f : as_array(s["faces"], where + " faces")) {
          const std::string name = as_string(f, where + " faces");
          auto it = by_name.find(name);
          if (it == by_name.end()) fail(ErrorKind::kSemantic, where + ": unknown face '" + name + "'");
          simplex.faces.push_back(it->second);
        }
      list.push_back(std::move(simplex));
    }
    complex = SimplicialComplex(vertices, std::move(list));
  } else {
    std::vector<std::vector<std::string>> sets;
    for (const json& s : simplices) {
      std::vector<std::string> names;
      for (const json& v : as_array(s, "simplices")) names.push_back(as_string(v, "simplices"));
      sets.push_back(std::move(names));
    }
    complex = SimplicialComplex::from_vertex_sets(vertices, sets);
  }

  std::set<int> closed;
  std::vector<int> stack;
  if (doc.contains("subcomplex"))
    for (const json& s : as_array(doc["subcomplex"], "subcomplex")) {
      if (s.is_string()) {
        const std::string name = s.get<std::string>();
        int found = -1;
        for (int i = 0; i < complex.size(); ++i)
          if (complex[i].name == name) found = i;
        if (found < 0) fail(ErrorKind::kSemantic, "subcomplex: unknown simplex '" + name + "'");
        stack.push_back(found);
        continue;
      }
      std::vector<int> set;
      for (const json& v : as_array(s, "subcomplex")) {
        const std::string name = as_string(v, "subcomplex");
        auto it = vertex_index.find(name);
        if (it == vertex_index.end()) fail(ErrorKind::kSemantic, "subcomplex: unknown vertex '" + name + "'");
        set.push_back(it->second);
      }
      const auto found = complex.find(set);
      if (!found) fail(ErrorKind::kSemantic, "subcomplex: vertex set is not a unique simplex of the complex");
      stack.push_back(*found);
    }
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    if (!closed.insert(s).second) continue;
    for (int f : complex[s].faces) stack.push_back(f);
  }
  return SimplicialPair{std::move(complex), std::vector<int>(closed.begin(), closed.end())};
}

std::string serialize_complex_document(const SimplicialPair& pair) {
  const SimplicialComplex& x = pair.complex;
  ordered_json out;
  out["vertices"] = x.vertices();
  ordered_json simplices = ordered_json::array();
  for (const Simplex& s : x.simplices()) {
    ordered_json vertices = ordered_json::array();
    for (int v : s.vertices) vertices.push_back(x.vertices()[static_cast<std::size_t>(v)]);
    ordered_json item{{"name", s.name}, {"vertices", std::move(vertices)}};
    if (!s.faces.empty()) item["faces"] = simplex_names(x, s.faces);
    simplices.push_back(std::move(item));
  }
  out["simplices"] = std::move(simplices);
  if (!pair.sub.empty()) {
    std::vector<int> sub = pair.sub;
    std::sort(sub.begin(), sub.end());
    out["subcomplex"] = simplex_names(x, sub);
  }
  return write_document(out);
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ainf
