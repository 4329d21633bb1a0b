#include "ainf/composition.hpp"

#include <algorithm>

namespace ainf {

OutputIndex index_by_output(const std::vector<MultiMap>& maps) {
  OutputIndex index;
  for (const auto& map : maps)
    for (const auto& [inputs, output] : map.entries())
      for (const auto& [y, c] : output) index[y].emplace_back(&inputs, c);
  return index;
}

void accumulate_insertions(Accumulator& acc, const std::vector<MultiMap>& outer, const std::vector<MultiMap>& inner,
                           const GradedSpace& outer_input_space, const Scalar& factor) {
  const OutputIndex index = index_by_output(inner);
  const Field field = factor.field();
  for (const auto& map : outer) {
    for (const auto& [u, output] : map.entries()) {
      const int d = static_cast<int>(u.size());
      // suffix[j] = sum of reduced degrees of u[j..d-1]
      std::vector<int> suffix(static_cast<std::size_t>(d) + 1, 0);
      for (int j = d - 1; j >= 0; --j)
        suffix[static_cast<std::size_t>(j)] =
            suffix[static_cast<std::size_t>(j) + 1] + outer_input_space.reduced_degree(u[static_cast<std::size_t>(j)]);
      for (int j = 0; j < d; ++j) {
        auto it = index.find(u[static_cast<std::size_t>(j)]);
        if (it == index.end()) continue;
        const Scalar sign = sign_scalar(field, suffix[static_cast<std::size_t>(j) + 1]) * factor;
        for (const auto& [t, c] : it->second) {
          Tuple key;
          key.reserve(u.size() + t->size() - 1);
          key.insert(key.end(), u.begin(), u.begin() + j);
          key.insert(key.end(), t->begin(), t->end());
          key.insert(key.end(), u.begin() + j + 1, u.end());
          add_scaled(acc[key], output, sign * c);
        }
      }
    }
  }
}

void accumulate_products(Accumulator& acc, const std::vector<MultiMap>& outer, const std::vector<MultiMap>& components,
                         const Scalar& factor) {
  const OutputIndex index = index_by_output(components);
  for (const auto& map : outer) {
    for (const auto& [u, output] : map.entries()) {
      const std::size_t r = u.size();
      std::vector<const std::vector<std::pair<const Tuple*, Scalar>>*> choices(r);
      bool possible = true;
      for (std::size_t k = 0; k < r && possible; ++k) {
        auto it = index.find(u[k]);
        if (it == index.end())
          possible = false;
        else
          choices[k] = &it->second;
      }
      if (!possible) continue;
      std::vector<std::size_t> pos(r, 0);
      while (true) {
        Tuple key;
        Scalar coeff = factor;
        for (std::size_t k = 0; k < r; ++k) {
          const auto& [t, c] = (*choices[k])[pos[k]];
          key.insert(key.end(), t->begin(), t->end());
          coeff *= c;
        }
        add_scaled(acc[key], output, coeff);
        std::size_t k = r;
        bool done = true;
        while (k > 0) {
          --k;
          if (++pos[k] < choices[k]->size()) {
            done = false;
            break;
          }
          pos[k] = 0;
        }
        if (done) break;
      }
    }
  }
}

std::vector<std::pair<Tuple, LinComb>> nonzero_sorted(const Accumulator& acc) {
  std::vector<std::pair<Tuple, LinComb>> out;
  for (const auto& [key, value] : acc)
    if (!value.empty()) out.emplace_back(key, value);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return out;
}

MultiMap transform_slots(const MultiMap& map, const std::vector<const Expansion*>& slots,
                         const std::vector<LinComb>* output_transform, int degree_shift) {
  MultiMap result(map.arity(), degree_shift);
  const std::size_t d = static_cast<std::size_t>(map.arity());
  std::vector<std::vector<std::pair<int, Scalar>>> identity_choice(d);
  for (const auto& [old_inputs, output] : map.entries()) {
    LinComb image;
    if (output_transform) {
      for (const auto& [y, c] : output) add_scaled(image, (*output_transform)[static_cast<std::size_t>(y)], c);
      if (image.empty()) continue;
    } else {
      image = output;
    }
    std::vector<const std::vector<std::pair<int, Scalar>>*> choices(d);
    bool possible = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (slots[k]) {
        choices[k] = &(*slots[k])[static_cast<std::size_t>(old_inputs[k])];
      } else {
        identity_choice[k] = {{old_inputs[k], image.begin()->second.field().one()}};
        choices[k] = &identity_choice[k];
      }
      if (choices[k]->empty()) possible = false;
    }
    if (!possible) continue;
    std::vector<std::size_t> pos(d, 0);
    Tuple key(d);
    while (true) {
      Scalar coeff = (*choices[0])[pos[0]].second;
      key[0] = (*choices[0])[pos[0]].first;
      for (std::size_t k = 1; k < d; ++k) {
        key[k] = (*choices[k])[pos[k]].first;
        coeff *= (*choices[k])[pos[k]].second;
      }
      result.add(key, scaled(image, coeff));
      std::size_t k = d;
      bool done = true;
      while (k > 0) {
        --k;
        if (++pos[k] < choices[k]->size()) {
          done = false;
          break;
        }
        pos[k] = 0;
      }
      if (done) break;
    }
  }
  return result;
}

MultiMap transform_multimap(const MultiMap& map, const Expansion& input_expansion,
                            const std::vector<LinComb>& output_transform) {
  const std::vector<const Expansion*> slots(static_cast<std::size_t>(map.arity()), &input_expansion);
  return transform_slots(map, slots, &output_transform, map.degree_shift());
}

}  // namespace ainf
