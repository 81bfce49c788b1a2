#pragma once

// Shared helpers for the test binaries: random cochains and an independent
// position-by-position evaluator of the circle product.

#include <random>
#include <vector>

#include "liext/cochain.hpp"

namespace liext::testing {

inline Scalar small_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 2);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return Scalar(q);
}

// Homogeneous random cochain with inputs of the given degrees; each admissible
// term is kept with probability `density`.
inline Cochain random_cochain(const SpacePtr& space, const std::vector<std::size_t>& degrees,
                              Parity parity, std::mt19937& rng, double density = 0.4,
                              int range = 3) {
  std::bernoulli_distribution keep(density);
  Cochain c(space, parity);
  for (auto k : degrees)
    for (const auto& m : monomial_basis(*space, k))
      for (std::uint32_t t = 0; t < space->size(); ++t)
        if (parity_of(m, *space) + space->parity(t) == parity && keep(rng))
          c.add(m, t, small_rational(rng, range));
  return c;
}

// Sign of the word `w` relative to its sorted rearrangement, by explicit
// bubble sort; 0 when an odd letter repeats.
inline int bubble_sign(std::vector<std::uint32_t> w, const GradedSpace& s) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        if (is_odd(s.parity(w[j])) && is_odd(s.parity(w[j + 1]))) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1] && is_odd(s.parity(w[j]))) return 0;
  return sign;
}

// phi o psi evaluated on every output monomial by running over all subsets of
// positions (bitmasks) and reordering each word explicitly.
inline Cochain brute_circle(const Cochain& phi, const Cochain& psi) {
  const GradedSpace& s = *phi.space();
  Cochain out(phi.space(), phi.parity() + psi.parity());
  std::size_t max_deg = 0;
  for (const auto& [k, v] : phi.terms()) max_deg = std::max(max_deg, k.in.degree());
  std::size_t max_l = 0;
  for (const auto& [k, v] : psi.terms()) max_l = std::max(max_l, k.in.degree());
  for (std::size_t n = 1; n <= max_deg + max_l; ++n) {
    for (const auto& m : monomial_basis(s, n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> chosen, rest;
        for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1 ? chosen : rest).push_back(m.idx[p]);
        if (chosen.empty()) continue;
        std::vector<std::uint32_t> word = chosen;
        word.insert(word.end(), rest.begin(), rest.end());
        const int eps = bubble_sign(word, s);
        if (eps == 0) continue;
        for (const auto& [t, c] : psi.value(Monomial{chosen})) {
          std::vector<std::uint32_t> inner{t};
          inner.insert(inner.end(), rest.begin(), rest.end());
          const int kappa = bubble_sign(inner, s);
          if (kappa == 0) continue;
          std::sort(inner.begin(), inner.end());
          for (const auto& [u, e] : phi.value(Monomial{inner}))
            out.add(m, u, c * e * Scalar(static_cast<long>(eps * kappa)));
        }
      }
    }
  }
  return out;
}

}  // namespace liext::testing
