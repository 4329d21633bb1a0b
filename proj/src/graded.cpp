#include "ainf/graded.hpp"

#include "ainf/error.hpp"

namespace ainf {

GradedSpace::GradedSpace(int num_objects, std::vector<BasisElement> basis)
    : num_objects_(num_objects), basis_(std::move(basis)) {
  if (num_objects_ < 1) fail(ErrorKind::kSemantic, "number of objects must be at least 1");
  for (int i = 0; i < size(); ++i) {
    const auto& b = basis_[static_cast<std::size_t>(i)];
    if (b.source < 0 || b.source >= num_objects_ || b.target < 0 || b.target >= num_objects_)
      fail(ErrorKind::kSemantic, "basis element '" + b.id + "' has object label out of range");
    if (!index_.emplace(b.id, i).second) fail(ErrorKind::kSemantic, "duplicate basis id '" + b.id + "'");
  }
}

std::optional<int> GradedSpace::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GradedSpace::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  fail(ErrorKind::kSemantic, "unknown basis id '" + std::string(id) + "'");
}

int koszul_exponent(const GradedSpace& space, std::span<const int> elements) {
  int total = 0;
  for (int e : elements) total += space.reduced_degree(e);
  return total;
}

void add_term(LinComb& target, int index, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = target.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) target.erase(it);
  }
}

void add_scaled(LinComb& target, const LinComb& source, const Scalar& factor) {
  for (const auto& [i, c] : source) add_term(target, i, c * factor);
}

LinComb scaled(const LinComb& source, const Scalar& factor) {
  LinComb out;
  add_scaled(out, source, factor);
  return out;
}

LinComb single(int index, const Scalar& coefficient) {
  LinComb out;
  add_term(out, index, coefficient);
  return out;
}

void MultiMap::add(const Tuple& inputs, int output, const Scalar& coefficient) {
  if (static_cast<int>(inputs.size()) != arity_)
    fail(ErrorKind::kArgument, "entry of length " + std::to_string(inputs.size()) + " added to arity-" +
                                   std::to_string(arity_) + " map");
  if (coefficient.is_zero()) return;
  auto& slot = entries_[inputs];
  add_term(slot, output, coefficient);
  if (slot.empty()) entries_.erase(inputs);
}

void MultiMap::add(const Tuple& inputs, const LinComb& output) {
  for (const auto& [i, c] : output) add(inputs, i, c);
}

const LinComb* MultiMap::find(const Tuple& inputs) const {
  auto it = entries_.find(inputs);
  return it == entries_.end() ? nullptr : &it->second;
}

bool MultiMap::operator==(const MultiMap& other) const {
  return arity_ == other.arity_ && degree_shift_ == other.degree_shift_ && entries_ == other.entries_;
}

void validate_multimap(const MultiMap& map, const std::function<const GradedSpace&(int slot)>& input_space,
                       const GradedSpace& output_space, std::string_view label) {
  for (const auto& [inputs, output] : map.entries()) {
    const int d = map.arity();
    auto where = [&] {
      std::string s = std::string(label) + "(";
      for (int k = 0; k < d; ++k) s += (k ? ", " : "") + input_space(k)[inputs[static_cast<std::size_t>(k)]].id;
      return s + ")";
    };
    int degree_sum = 0;
    for (int k = 0; k < d; ++k) {
      const auto& space = input_space(k);
      int idx = inputs[static_cast<std::size_t>(k)];
      if (idx < 0 || idx >= space.size()) fail(ErrorKind::kSemantic, std::string(label) + ": input index out of range");
      degree_sum += space.degree(idx);
    }
    // Written order: the last slot is a_1, applied first.
    for (int k = d - 1; k > 0; --k) {
      const auto& right = input_space(k)[inputs[static_cast<std::size_t>(k)]];
      const auto& left = input_space(k - 1)[inputs[static_cast<std::size_t>(k - 1)]];
      if (right.target != left.source) fail(ErrorKind::kSemantic, where() + " is not composable");
    }
    const int src = input_space(d - 1)[inputs.back()].source;
    const int tgt = input_space(0)[inputs.front()].target;
    for (const auto& [out, coeff] : output) {
      if (out < 0 || out >= output_space.size())
        fail(ErrorKind::kSemantic, where() + ": output index out of range");
      const auto& o = output_space[out];
      if (o.degree != degree_sum + map.degree_shift())
        fail(ErrorKind::kSemantic, where() + " -> " + o.id + " violates degree: expected " +
                                       std::to_string(degree_sum + map.degree_shift()) + ", got " +
                                       std::to_string(o.degree));
      if (o.source != src || o.target != tgt)
        fail(ErrorKind::kSemantic, where() + " -> " + o.id + " lands in the wrong (source, target) block");
    }
  }
}

void validate_multimap(const MultiMap& map, const GradedSpace& input_space, const GradedSpace& output_space,
                       std::string_view label) {
  validate_multimap(map, [&](int) -> const GradedSpace& { return input_space; }, output_space, label);
}

LinComb apply_multimap(const MultiMap& map, std::span<const LinComb> args) {
  if (static_cast<int>(args.size()) != map.arity())
    fail(ErrorKind::kArgument, "arity mismatch: map of arity " + std::to_string(map.arity()) + " applied to " +
                                   std::to_string(args.size()) + " arguments");
  LinComb result;
  for (const auto& arg : args)
    if (arg.empty()) return result;
  // Odometer over the supports of the arguments.
  const std::size_t d = args.size();
  std::vector<LinComb::const_iterator> pos(d);
  for (std::size_t k = 0; k < d; ++k) pos[k] = args[k].begin();
  Tuple key(d);
  while (true) {
    for (std::size_t k = 0; k < d; ++k) key[k] = pos[k]->first;
    if (const LinComb* out = map.find(key)) {
      Scalar coeff = pos[0]->second;
      for (std::size_t k = 1; k < d; ++k) coeff *= pos[k]->second;
      add_scaled(result, *out, coeff);
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++pos[k] != args[k].end()) break;
      pos[k] = args[k].begin();
      if (k == 0) return result;
    }
  }
}

std::string describe_tuple(const GradedSpace& space, const Tuple& tuple) {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) s += (k ? ", " : "") + space[tuple[k]].id;
  return s + ")";
}

std::string describe_lincomb(const GradedSpace& space, const LinComb& value) {
  if (value.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : value) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*" + space[i].id;
  }
  return s;
}

}  // namespace ainf
