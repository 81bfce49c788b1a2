#pragma once

// Randomized property checks, shared by the doctest suite and the acceptance
// runner. Spaces have dimension at most 4; each check returns a tally of the
// cases it ran and the first failure it saw.

#include <exception>
#include <random>
#include <string>
#include <vector>

#include "liext/deformation.hpp"
#include "support.hpp"

namespace liext::properties {

inline constexpr std::size_t kMinCases = 100;

struct Tally {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed() const { return failures == 0 && cases >= kMinCases; }
};

inline bool coin(std::mt19937& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Parity random_parity(std::mt19937& rng) { return coin(rng) ? Parity::Odd : Parity::Even; }

// dim in [lo, hi], even elements first; with `split`, both M and W nonempty.
inline SpacePtr random_space(std::mt19937& rng, std::size_t lo, std::size_t hi, bool split) {
  const std::size_t n = pick(rng, split ? std::max<std::size_t>(lo, 2) : lo, hi);
  const std::size_t even = pick(rng, 0, n);
  if (!split) return make_space(even, n - even);
  std::vector<Part> parts(n);
  for (;;) {
    std::size_t m = 0;
    for (auto& p : parts) {
      p = coin(rng) ? Part::M : Part::W;
      m += p == Part::M;
    }
    if (m != 0 && m != n) break;
  }
  return make_space(even, n - even, parts);
}

// Invertible parity-preserving map on the given indices (a block of V).
inline LinearMap random_even_block(const GradedSpace& s, const std::vector<std::size_t>& idx,
                                   std::mt19937& rng) {
  const std::size_t n = idx.size();
  for (;;) {
    LinearMap f(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s.parity(idx[i]) == s.parity(idx[j]) && (i == j || coin(rng, 0.4)))
          f[i][j] = testing::small_rational(rng, 2);
    if (n == 0 || !determinant(f).is_zero()) return f;
  }
}

inline LinearMap random_even_map(const GradedSpace& s, std::mt19937& rng) {
  std::vector<std::size_t> all(s.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return random_even_block(s, all, rng);
}

inline DiagonalAutomorphism random_diag(const GradedSpace& s, std::mt19937& rng) {
  return {random_even_block(s, s.indices_in(Part::M), rng),
          random_even_block(s, s.indices_in(Part::W), rng)};
}

// Even map W -> M.
inline Cochain random_beta(const SpacePtr& s, std::mt19937& rng, double density = 0.5) {
  Cochain b(s, Parity::Even);
  for (auto w : s->indices_in(Part::W))
    for (auto m : s->indices_in(Part::M))
      if (s->parity(w) == s->parity(m) && coin(rng, density))
        b.add({static_cast<std::uint32_t>(w)}, static_cast<std::uint32_t>(m),
              testing::small_rational(rng, 2));
  return b;
}

// Random odd quadratic cochain; on a split space only terms compatible with
// M being an ideal, and without Hom(W^2, M) terms when `no_psi`.
inline Cochain random_quadratic(const SpacePtr& s, std::mt19937& rng, double density,
                                bool no_psi = false) {
  Cochain d(s, Parity::Odd);
  for (const auto& m : monomial_basis(*s, 2))
    for (std::uint32_t t = 0; t < s->size(); ++t) {
      if (parity_of(m, *s) + s->parity(t) != Parity::Odd) continue;
      if (s->has_split()) {
        const bool w_inputs = s->part(m.idx[0]) == Part::W && s->part(m.idx[1]) == Part::W;
        if (s->part(t) == Part::W && !w_inputs) continue;
        if (no_psi && s->part(t) == Part::M && w_inputs) continue;
      }
      if (coin(rng, density)) d.add(m, t, testing::small_rational(rng, 2));
    }
  return d;
}

// Nonzero codifferential: either a random one found by rejection or a known
// one (d1, d2, d3, d(l:m) on three odd generators, the 1|1 brackets with
// ab = 0) conjugated by a random invertible even map.
inline Cochain random_codifferential(std::mt19937& rng) {
  if (coin(rng)) {
    for (;;) {
      auto s = random_space(rng, 1, 4, false);
      Cochain d = random_quadratic(s, rng, std::uniform_real_distribution<>(0.1, 0.5)(rng));
      if (!d.is_zero() && is_codifferential(d).ok) return d;
    }
  }
  auto basis = [](const SpacePtr& s, std::vector<std::uint32_t> w, std::uint32_t out,
                  const Scalar& c) { return Cochain::basis(s, w, out, c); };
  auto known = [&]() {
    if (coin(rng, 0.25)) {
      auto s = make_space(1, 1);
      Scalar c = testing::small_rational(rng);
      if (c.is_zero()) c = Scalar(1);
      return coin(rng) ? basis(s, {0, 1}, 0, c) : basis(s, {0, 0}, 1, c);
    }
    auto s = make_space(0, 3);
    switch (pick(rng, 0, 3)) {
      case 0: return basis(s, {1, 2}, 0, Scalar(1));
      case 1: return basis(s, {0, 2}, 0, Scalar(1)) + basis(s, {1, 2}, 1, Scalar(1));
      case 2:
        return basis(s, {0, 1}, 2, Scalar(1)) + basis(s, {0, 2}, 1, Scalar(1)) +
               basis(s, {1, 2}, 0, Scalar(1));
      default: {
        Scalar l = testing::small_rational(rng), m = testing::small_rational(rng);
        return basis(s, {0, 2}, 0, l) + basis(s, {1, 2}, 1, m) + basis(s, {1, 2}, 0, Scalar(1));
      }
    }
  };
  Cochain d = known();
  return conjugate(d, random_even_map(*d.space(), rng));
}

// A random extension on a split space of dimension 2..max_dim: a split
// codifferential found by rejection, then moved by a random beta (unless
// psi must stay zero) and a random block automorphism.
inline ExtensionData random_extension(std::mt19937& rng, bool psi_zero = false,
                                      std::size_t max_dim = 4) {
  for (;;) {
    auto s = random_space(rng, 2, max_dim, true);
    Cochain d = random_quadratic(s, rng, std::uniform_real_distribution<>(0.15, 0.6)(rng), psi_zero);
    if (d.is_zero() || !is_codifferential(d).ok) continue;
    ExtensionData e = split(d);
    if (!psi_zero) e = apply_beta(e, random_beta(s, rng));
    return pullback_diag(e, random_diag(*s, rng));
  }
}

// Weights of the slices the operator checks run over.
inline std::vector<Weight> small_weights() {
  std::vector<Weight> out;
  for (int p = -1; p <= 1; ++p)
    for (int q = 0; q <= 2; ++q) out.push_back({p, q});
  return out;
}

inline bool sum_is_zero(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) + b(i, j) != 0) return false;
  return true;
}

inline Cochain random_in(const Slice& sl, const std::vector<Vec>& gens, std::mt19937& rng) {
  Vec v(sl.dim());
  for (const auto& g : gens) {
    const Rational c = testing::small_rational(rng).constant_value();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * g[i];
  }
  return sl.cochain(v);
}

inline Vec random_vec(std::size_t n, std::mt19937& rng) {
  Vec v(n);
  for (auto& x : v) x = testing::small_rational(rng).constant_value();
  return v;
}

// ---------------------------------------------------------------------------

inline Tally graded_antisymmetry(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"graded antisymmetry"};
  for (std::size_t i = 0; i < n; ++i) {
    auto s = random_space(rng, 1, 4, false);
    auto a = testing::random_cochain(s, {pick(rng, 1, 3)}, random_parity(rng), rng, 0.3);
    auto b = testing::random_cochain(s, {pick(rng, 1, 3)}, random_parity(rng), rng, 0.3);
    const Scalar sign(static_cast<long>(sign_of(a.parity(), b.parity())));
    t.record(bracket(a, b) == -(sign * bracket(b, a)), a.str() + " , " + b.str());
  }
  return t;
}

inline Tally graded_jacobi(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"graded Jacobi"};
  for (std::size_t i = 0; i < n; ++i) {
    auto s = random_space(rng, 1, 4, false);
    auto a = testing::random_cochain(s, {pick(rng, 1, 2)}, random_parity(rng), rng, 0.3);
    auto b = testing::random_cochain(s, {pick(rng, 1, 2)}, random_parity(rng), rng, 0.3);
    auto c = testing::random_cochain(s, {pick(rng, 1, 2)}, random_parity(rng), rng, 0.3);
    const Scalar sign(static_cast<long>(sign_of(a.parity(), b.parity())));
    Cochain lhs = bracket(a, bracket(b, c));
    Cochain rhs = bracket(bracket(a, b), c) + sign * bracket(b, bracket(a, c));
    t.record(lhs == rhs, a.str() + " , " + b.str() + " , " + c.str());
  }
  return t;
}

inline Tally odd_cube(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"[a, [a, a]] = 0 for odd a"};
  for (std::size_t i = 0; i < n; ++i) {
    auto s = random_space(rng, 1, 4, false);
    auto a = testing::random_cochain(s, {1, 2}, Parity::Odd, rng, 0.3);
    t.record(bracket(a, bracket(a, a)).is_zero(), a.str());
  }
  return t;
}

inline Tally codifferential_squares(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"D_d^2 = 0 for codifferentials"};
  for (std::size_t i = 0; i < n; ++i) {
    Cochain d = random_codifferential(rng);
    if (!is_codifferential(d).ok) {
      t.record(false, "conjugate is not a codifferential: " + d.str());
      continue;
    }
    auto phi = testing::random_cochain(d.space(), {pick(rng, 1, 3)}, random_parity(rng), rng, 0.3);
    t.record(coboundary(d, coboundary(d, phi)).is_zero(), d.str() + " on " + phi.str());
  }
  return t;
}

inline Tally jacobi_agrees(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"Jacobi evaluation agrees with [d, d] = 0"};
  for (std::size_t i = 0; i < n; ++i) {
    Cochain d = coin(rng) ? random_codifferential(rng)
                          : random_quadratic(random_space(rng, 1, 4, false), rng, 0.3);
    t.record(jacobi_check(d) == is_codifferential(d).ok, d.str());
  }
  return t;
}

inline Tally serial_matches_parallel(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"parallel column assembly matches the serial reference"};
  while (t.cases < n) {
    auto e = random_extension(rng);
    auto ws = small_weights();
    auto sl = Slice::weight(e.space, ws[pick(rng, 0, ws.size() - 1)], random_parity(rng));
    if (sl.dim() == 0) continue;
    const Cochain d = e.assembled();
    t.record(apply_columns_serial(d, sl) == apply_columns_parallel(d, sl), sl.str());
  }
  return t;
}

// A_mu^2 = 0, A_mu A_dl + A_dl A_mu = 0, A_dl^2 + A_mu A_psi + A_psi A_mu = 0,
// A_dl A_psi + A_psi A_dl = 0, A_psi^2 = 0 on slices of random extensions.
inline Tally anticommutation(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"anticommutation relations of D_mu, D_dl, D_psi"};
  while (t.cases < n) {
    auto e = random_extension(rng);
    const auto mu = mu_operator(e), dl = dl_operator(e), psi = psi_operator(e);
    for (const auto& w : small_weights())
      for (Parity par : {Parity::Even, Parity::Odd}) {
        auto sl = Slice::weight(e.space, w, par);
        if (sl.dim() == 0) continue;
        bool ok = composite(mu, mu, sl).is_zero() && anticommutator(mu, dl, sl).is_zero() &&
                  sum_is_zero(composite(dl, dl, sl), anticommutator(mu, psi, sl)) &&
                  anticommutator(dl, psi, sl).is_zero() && composite(psi, psi, sl).is_zero();
        t.record(ok, e.assembled().str() + " on " + sl.str());
      }
  }
  return t;
}

// D_psi on H_{mu,dl}: the class of the image does not depend on beta or on
// the representative, and D_psi^2 = 0.
inline Tally psi_well_defined(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"D_psi is well defined on H_{mu,dl} and squares to zero"};
  std::size_t attempts = 0;
  while (t.cases < n && ++attempts < 20 * n) {
    auto e = random_extension(rng);
    if (e.psi.is_zero()) continue;
    const auto mu = mu_operator(e), dl = dl_operator(e), psi = psi_operator(e);
    for (const auto& w : small_weights())
      for (Parity par : {Parity::Even, Parity::Odd}) {
        const std::string where = e.assembled().str() + " on weight (" + std::to_string(w.p) +
                                  "," + std::to_string(w.q) + ") " + to_string(par);
        try {
          auto sl = Slice::weight(e.space, w, par);
          auto h = double_cohomology(e, sl);
          auto next = next_slice(sl, kPsiShift);
          auto hn = double_cohomology(e, next);
          auto hp = double_cohomology(e, prev_slice(sl, kPsiShift));
          if (h.dim() != 0 && (hn.dim() != 0 && hp.dim() != 0)) {
            Matrix sq = triple_matrix(mu, dl, psi, h, hn) * triple_matrix(mu, dl, psi, hp, h);
            t.record(sq.is_zero(), "D_psi^2 " + where);
          }
          if (h.dim() == 0 || hn.dim() == 0) continue;
          auto beta_slice = Slice::weight(e.space, w + Weight{-1, 1}, par);
          auto mu_kernel = kernel_of(mu, beta_slice);
          auto below_dl = prev_slice(sl, kDeltaShift);
          auto below_mu = prev_slice(sl, kMuShift);
          auto dl_sources = kernel_of(mu, below_dl);
          for (const auto& phi : h.representatives()) {
            auto base = triple_differential_psi(e, phi, hn);
            auto shifted_beta = base.beta + random_in(beta_slice, mu_kernel, rng);
            bool ok = triple_differential_psi(e, phi, hn, shifted_beta).coords == base.coords;
            Cochain other = phi + coboundary(dl.op, random_in(below_dl, dl_sources, rng), false) +
                            coboundary(mu.op, below_mu.cochain(random_vec(below_mu.dim(), rng)));
            ok = ok && triple_differential_psi(e, other, hn).coords == base.coords;
            t.record(ok, "representative " + phi.str() + " " + where);
          }
        } catch (const std::exception& ex) {
          t.record(false, std::string(ex.what()) + " at " + where);
        }
      }
  }
  return t;
}

// Scenario classifiers against the total cohomology of d on the same cochains.
inline Tally scenario_oracle(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"scenario classifiers match the total cohomology"};
  while (t.cases < n) {
    auto e = random_extension(rng, true);
    const Cochain d = e.assembled();
    auto s = e.space;
    const auto oracle1 = total_cohomology_dim(d, scenario1_slice(s), scenario_prev_slice(s));
    const auto oracle2 = total_cohomology_dim(d, scenario2_slice(s), scenario_prev_slice(s));
    t.record(classify_rep_deformations_scenario1(e).parameter_count() == oracle1,
             "scenario 1 on " + d.str());
    t.record(classify_rep_deformations_scenario2(e).parameter_count() == oracle2,
             "scenario 2 on " + d.str());
  }
  return t;
}

// For D = D_mu or D_delta: [cocycle, cocycle] is a cocycle and
// [D a, cocycle] = D [a, cocycle].
inline Tally bracket_descends(std::mt19937& rng, std::size_t n = kMinCases) {
  Tally t{"the bracket descends to cohomology"};
  const auto ws = small_weights();
  while (t.cases < n) {
    auto e = random_extension(rng);
    for (const auto& op : {mu_operator(e), delta_operator(e)}) {
      auto s1 = Slice::weight(e.space, ws[pick(rng, 0, ws.size() - 1)], random_parity(rng));
      auto s2 = Slice::weight(e.space, ws[pick(rng, 0, ws.size() - 1)], random_parity(rng));
      auto z1 = kernel_of(op, s1), z2 = kernel_of(op, s2);
      if (z1.empty() || z2.empty()) continue;
      Cochain phi = random_in(s1, z1, rng), chi = random_in(s2, z2, rng);
      auto below = prev_slice(s1, op.shift);
      Cochain a = below.cochain(random_vec(below.dim(), rng));
      bool ok = bracket(op.op, bracket(phi, chi)).is_zero() &&
                bracket(bracket(op.op, a), chi) == bracket(op.op, bracket(a, chi));
      t.record(ok, phi.str() + " , " + chi.str());
    }
  }
  return t;
}

// An exception escaping a check counts as a failed case.
template <class Check>
Tally guarded(const char* name, std::mt19937& rng, Check check) {
  try {
    return check(rng, kMinCases);
  } catch (const std::exception& ex) {
    Tally t{name};
    t.record(false, ex.what());
    return t;
  }
}

inline std::vector<Tally> all(std::uint32_t seed) {
  std::mt19937 rng(seed);
  return {guarded("graded antisymmetry", rng, graded_antisymmetry),
          guarded("graded Jacobi", rng, graded_jacobi),
          guarded("[a, [a, a]] = 0", rng, odd_cube),
          guarded("D_d^2 = 0", rng, codifferential_squares),
          guarded("Jacobi evaluation", rng, jacobi_agrees),
          guarded("parallel assembly", rng, serial_matches_parallel),
          guarded("anticommutation", rng, anticommutation),
          guarded("D_psi", rng, psi_well_defined),
          guarded("scenario classifiers", rng, scenario_oracle),
          guarded("bracket on cohomology", rng, bracket_descends)};
}

}  // namespace liext::properties
