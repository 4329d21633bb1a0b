#pragma once

// Slow reference computations used to cross-check the library. They only use
// apply_multimap and never the library's own insertion machinery.

#include <functional>
#include <map>
#include <vector>

#include "ainf/algebra.hpp"

namespace oracle {

using namespace ainf;

inline std::vector<Tuple> composable_tuples(const GradedSpace& space, int d) {
  std::vector<Tuple> out;
  Tuple t;
  std::function<void()> grow = [&] {
    if (static_cast<int>(t.size()) == d) {
      out.push_back(t);
      return;
    }
    for (int x = 0; x < space.size(); ++x) {
      // t is built from a_1 towards a_d; a_{k+1}.source must equal a_k.target.
      if (!t.empty() && space[x].source != space[t.back()].target) continue;
      t.push_back(x);
      grow();
      t.pop_back();
    }
  };
  grow();
  for (Tuple& u : out) u = Tuple(u.rbegin(), u.rend());
  return out;
}

inline LinComb apply(const AInfAlgebra& alg, int d, const std::vector<LinComb>& args) {
  if (d > alg.arity_bound()) return {};
  return apply_multimap(alg.mu(d), args);
}

/// Nonzero residuals of the A-infinity relations, by brute force.
inline std::map<Tuple, LinComb> relation_residuals(const AInfAlgebra& alg) {
  const Field& f = alg.field();
  std::map<Tuple, LinComb> out;
  for (int d = 1; d <= 2 * alg.arity_bound() - 1; ++d)
    for (const Tuple& t : composable_tuples(alg.space(), d)) {
      LinComb total;
      // t[0] = a_d, t[d-1] = a_1. Inner block covers a_{r+s} .. a_{r+1}.
      for (int s = 1; s <= d; ++s)
        for (int r = 0; r + s <= d; ++r) {
          long exponent = 0;
          for (int k = 1; k <= r; ++k) exponent += alg.space().reduced_degree(t[static_cast<std::size_t>(d - k)]);
          std::vector<LinComb> inner;
          for (int k = r + s; k >= r + 1; --k) inner.push_back(single(t[static_cast<std::size_t>(d - k)], f.one()));
          const LinComb mid = apply(alg, s, inner);
          if (mid.empty()) continue;
          std::vector<LinComb> outer;
          for (int k = d; k >= r + s + 1; --k) outer.push_back(single(t[static_cast<std::size_t>(d - k)], f.one()));
          outer.push_back(mid);
          for (int k = r; k >= 1; --k) outer.push_back(single(t[static_cast<std::size_t>(d - k)], f.one()));
          add_scaled(total, apply(alg, d - s + 1, outer), sign_scalar(f, exponent));
        }
      if (!total.empty()) out[t] = total;
    }
  return out;
}

/// mu^d of B^s transcribed term by term: + copies carry mu_A, - copies carry
/// mu_A, and the shifted part is sum_i (-1)^{||a_1-|| + ... + ||a_{i-1}-|| + 1}
/// mu_B(a_d+, ..., b_i, ..., a_1-), plus -a+ + a- in arity 1.
inline std::vector<MultiMap> suspension_maps(const AlgebraPair& pair) {
  const AInfAlgebra& a = *pair.sub;
  const AInfAlgebra& b = *pair.ambient;
  const Field& f = a.field();
  const int na = a.size();
  const int nb = b.size();
  const int n = 2 * na + nb;
  auto kind = [&](int x) { return x < na ? 0 : (x < 2 * na ? 1 : 2); };
  auto source_of = [&](int x) { return x < na ? x : (x < 2 * na ? x - na : x - 2 * na); };
  std::vector<MultiMap> maps;
  for (int d = 1; d <= b.arity_bound(); ++d) maps.emplace_back(d, 2 - d);
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) degrees[static_cast<std::size_t>(x)] = kind(x) == 2 ? b.space().degree(source_of(x)) + 1 : a.space().degree(source_of(x));
  for (int d = 1; d <= b.arity_bound(); ++d) {
    Tuple t(static_cast<std::size_t>(d), 0);
    std::function<void(int)> fill = [&](int k) {
      if (k < d) {
        for (int x = 0; x < n; ++x) {
          t[static_cast<std::size_t>(k)] = x;
          fill(k + 1);
        }
        return;
      }
      LinComb out;
      for (int c = 0; c < 2; ++c) {
        bool all = true;
        std::vector<LinComb> args;
        for (int x : t) {
          all = all && kind(x) == c;
          args.push_back(single(source_of(x), f.one()));
        }
        if (!all) continue;
        for (const auto& [y, coefficient] : apply(a, d, args)) add_term(out, y + c * na, coefficient);
      }
      for (int i = 1; i <= d; ++i) {
        // slot of a_i is index d - i
        bool shape = kind(t[static_cast<std::size_t>(d - i)]) == 2;
        long exponent = 1;
        std::vector<LinComb> args;
        for (int k = d; k >= 1; --k) {
          const int x = t[static_cast<std::size_t>(d - k)];
          if (k == i) {
            args.push_back(single(source_of(x), f.one()));
            continue;
          }
          if (kind(x) != (k > i ? 0 : 1)) {
            shape = false;
            break;
          }
          if (k < i) exponent += degrees[static_cast<std::size_t>(x)] - 1;
          args.push_back(pair.inclusion[static_cast<std::size_t>(source_of(x))]);
        }
        if (!shape) continue;
        for (const auto& [y, coefficient] : apply(b, d, args))
          add_term(out, 2 * na + y, sign_scalar(f, exponent) * coefficient);
      }
      if (d == 1) {
        const int x = t[0];
        if (kind(x) != 2)
          for (const auto& [y, coefficient] : pair.inclusion[static_cast<std::size_t>(source_of(x))])
            add_term(out, 2 * na + y, kind(x) == 0 ? -coefficient : coefficient);
      }
      if (!out.empty()) maps[static_cast<std::size_t>(d - 1)].add(t, out);
    };
    fill(0);
  }
  return maps;
}

}  // namespace oracle
