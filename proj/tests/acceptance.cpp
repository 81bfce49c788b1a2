// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "catalog.hpp"
#include "properties.hpp"

using namespace liext;
using catalog::P;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// (1) brackets in the 2+1 and five dimensional examples
Verdict brackets() {
  Verdict v;
  auto ps = make_params({"a", "b", "x", "y"});
  auto var = [&](const char* n) { return Scalar::variable(ps, n); };
  auto s = catalog::space_w2_m1();
  auto e = catalog::small_extension(s, true, var("a"), var("b"), 0);
  v.require(bracket(e.delta, e.lambda) == P(s, {1, 2, 3}, 3, var("a")), "[delta, lambda]");
  Cochain beta = P(s, {1}, 3, var("x")) + P(s, {2}, 3, var("y"));
  v.require(bracket(e.delta + e.lambda, beta) ==
                P(s, {1, 2}, 3, var("a") * var("y") - (Scalar(1) + var("b")) * var("x")),
            "[delta + lambda, beta] in the 2+1 example");

  auto s5 = catalog::space_five();
  auto q = make_params({"a16", "a19", "c11", "c21", "c31", "c12", "c22", "c32"});
  auto w = [&](const char* n) { return Scalar::variable(q, n); };
  Cochain b5 = catalog::beta_five(s5, {w("c11"), w("c21"), w("c31"), w("c12"), w("c22"), w("c32")});
  std::vector<Monomial> cols{Monomial{{0, 3}}, Monomial{{1, 3}}, Monomial{{2, 3}},
                             Monomial{{0, 4}}, Monomial{{1, 4}}, Monomial{{2, 4}}};
  auto m = as_matrix(bracket(catalog::mu_five(s5), b5), {0, 1, 2}, cols);
  const std::vector<Scalar> row{0, w("c31"), -w("c21"), 0, w("c32"), -w("c22")};
  v.require(m[0] == row && m[1] == row, "[mu, beta] rows 1 and 2");
  for (const auto& x : m[2]) v.require(x.is_zero(), "[mu, beta] row 3");
  Cochain lam = catalog::lambda_five(s5, 0, w("a16"), 1, w("a19"));
  v.require(bracket(catalog::delta_five(s5) + lam, b5) ==
                P(s5, {4, 5}, 1, w("c31") * w("a19") - w("c32") * w("a16")) -
                    P(s5, {4, 5}, 3, w("c31")),
            "[delta + lambda, beta] in the five dimensional example");
  return v;
}

// (2) the codifferential gate and the 1|1 moduli
Verdict codifferentials() {
  Verdict v;
  auto ps = make_params({"l", "m"});
  auto s = make_space(0, 3);
  const std::vector<std::pair<std::string, Cochain>> known{
      {"d1", P(s, {2, 3}, 1)},
      {"d2", P(s, {1, 3}, 1) + P(s, {2, 3}, 2)},
      {"d3", P(s, {1, 2}, 3) + P(s, {1, 3}, 2) + P(s, {2, 3}, 1)},
      {"d(l:m)", P(s, {1, 3}, 1, Scalar::variable(ps, "l")) + P(s, {2, 3}, 2, Scalar::variable(ps, "m")) +
                     P(s, {2, 3}, 1)}};
  for (const auto& [name, d] : known) {
    v.require(is_codifferential(d).ok, name + " is not a codifferential");
    v.require(jacobi_check(d), name + " fails the Jacobi evaluation");
  }

  auto ab = make_params({"a", "b"});
  auto a = Scalar::variable(ab, "a"), b = Scalar::variable(ab, "b");
  auto s11 = make_space(1, 1);
  auto r = is_codifferential(P(s11, {1, 2}, 1, a) + P(s11, {1, 1}, 2, b));
  v.require(!r.ok, "a psi^{12}_1 + b psi^{11}_2 passes");
  for (const auto& [k, c] : r.obstruction.terms()) {
    // a polynomial in a, b vanishing on a = 0 and on b = 0 is divisible by ab
    v.require(c.substitute({{"a", 0}}).is_zero() && c.substitute({{"b", 0}}).is_zero(),
              "obstruction coefficient " + c.str() + " not divisible by ab");
  }

  // every nonzero structure is a*psi^{12}_1 or b*psi^{11}_2; diag(r, t)
  // sends a to a t and b to b r^2 / t, so each family is one orbit...
  for (int n : {-3, -1, 2, 5}) {
    Scalar c(n);
    Scalar inv(Rational(1) / n);
    v.require(conjugate(P(s11, {1, 2}, 1, c), {{1, 0}, {0, inv}}) == P(s11, {1, 2}, 1),
              "a psi^{12}_1 not equivalent to psi^{12}_1");
    v.require(conjugate(P(s11, {1, 1}, 2, c), {{1, 0}, {0, c}}) == P(s11, {1, 1}, 2),
              "b psi^{11}_2 not equivalent to psi^{11}_2");
  }
  // ...and the two orbits differ: even automorphisms of a 1|1 space are
  // diagonal and preserve the support of each normal form
  auto rt = make_params({"r", "t"});
  LinearMap g{{Scalar::variable(rt, "r"), 0}, {0, Scalar::variable(rt, "t")}};
  for (const auto& d : {P(s11, {1, 2}, 1), P(s11, {1, 1}, 2)}) {
    auto img = conjugate_scaled(d, g).numerator;
    v.require(img.terms().size() == 1 && img.terms().begin()->first == d.terms().begin()->first,
              "conjugation moves the support of " + d.str());
  }
  return v;
}

// (3) the extension conditions on the five dimensional example cut out
// b2 = b3 = a14 = 0, a16 (a17 - 1) = 0
Verdict residuals() {
  Verdict v;
  auto s = catalog::space_five();
  auto ps = make_params({"a14", "a16", "a17", "a19", "b1", "b2", "b3"});
  auto var = [&](const char* n) { return Scalar::variable(ps, n); };
  ExtensionData e(catalog::delta_five(s), catalog::mu_five(s),
                  catalog::lambda_five(s, var("a14"), var("a16"), var("a17"), var("a19")),
                  catalog::psi_five(s, var("b1"), var("b2"), var("b3")));
  auto r = verify_extension(e);
  v.require(r.cond_compat.is_zero() && r.cond_cocycle.is_zero(), "unexpected compat/cocycle residual");
  auto coef = [&](std::vector<std::uint32_t> in, std::uint32_t out) {
    for (auto& i : in) --i;
    return r.cond_module.coeff(Monomial{in}, out - 1);
  };
  auto k1 = coef({1, 4, 5}, 1), k2 = coef({2, 4, 5}, 1), k3 = coef({3, 4, 5}, 1),
       k4 = coef({3, 4, 5}, 2);
  const Scalar disjunction = var("a16") * (var("a17") - Scalar(1));
  // each generator is a combination of residuals
  v.require(-k1 == var("a14"), "a14");
  v.require(-k2 == var("b3"), "b3");
  v.require(k4 == var("b2"), "b2");
  v.require(k3 - var("a19") * k1 - k4 == disjunction, "a16 (a17 - 1)");
  // and each residual lies in the ideal they generate
  for (const auto& [k, c] : r.cond_module.terms()) {
    Scalar rest = c.substitute({{"a14", 0}, {"b2", 0}, {"b3", 0}});
    v.require(rest.is_zero() || rest == disjunction || rest == -disjunction,
              "residual " + c.str() + " outside the ideal");
  }
  return v;
}

// (1 + beta) o d o S(1 - beta) evaluated term by term: the map is even and
// beta^2 = 0, so (1 - beta)^{-1} = 1 + beta.
Cochain direct_conjugate(const Cochain& d, const Cochain& beta) {
  const auto& sp = *d.space();
  const std::size_t n = sp.size();
  std::vector<std::vector<Scalar>> f(n, std::vector<Scalar>(n));  // f[out][in]
  for (std::size_t i = 0; i < n; ++i) f[i][i] = Scalar(1);
  for (const auto& [k, c] : beta.terms()) f[k.out][k.in.idx[0]] -= c;
  Cochain out(d.space(), d.parity());
  for (const auto& m : monomial_basis(sp, 2)) {
    const auto i = m.idx[0], j = m.idx[1];
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t l = 0; l < n; ++l) {
        if (f[k][i].is_zero() || f[l][j].is_zero()) continue;
        int sign = 1;
        Monomial kl{{k, l}};
        if (k > l) {
          kl = Monomial{{l, k}};
          if (is_odd(sp.parity(k)) && is_odd(sp.parity(l))) sign = -1;
        }
        if (k == l && is_odd(sp.parity(k))) continue;
        const Scalar c = f[k][i] * f[l][j] * Scalar(static_cast<long>(sign));
        for (const auto& [t, e] : d.value(kl)) {
          out.add(m, t, c * e);
          for (const auto& [bk, bc] : beta.terms())
            if (bk.in.idx[0] == t) out.add(m, bk.out, c * e * bc);
        }
      }
  }
  return out;
}

// (4) apply_beta against direct conjugation on 200 random extensions
Verdict equivalence_engine() {
  Verdict v;
  std::mt19937 rng(404);
  for (int i = 0; i < 200; ++i) {
    auto e = properties::random_extension(rng, false, 5);
    auto beta = properties::random_beta(e.space, rng, 0.7);
    const Cochain via_engine = apply_beta(e, beta).assembled();
    v.require(via_engine == direct_conjugate(e.assembled(), beta),
              "mismatch on " + e.assembled().str() + " with beta " + beta.str());
  }
  return v;
}

// (5) tau = psi^{12}_3 at a = 0: a coboundary unless b = -1
Verdict degenerations() {
  Verdict v;
  auto s = catalog::space_w2_m1();
  const Cochain tau = P(s, {1, 2}, 3);
  for (int b : {-1, 0, 2, 7}) {
    auto e = catalog::small_extension(s, true, 0, Scalar(b), 0);
    auto h = double_cohomology(e, Slice::hom(s, 0, 2));
    const std::string at = " at b = " + std::to_string(b);
    if (b == -1) {
      auto c = h.project(tau);
      v.require(h.dim() == 1, "dimension" + at);
      v.require(c && !h.is_coboundary(tau) && (*c)[0] != 0, "tau trivial" + at);
    } else {
      v.require(h.dim() == 0, "dimension" + at);
      v.require(h.is_coboundary(tau), "tau not a coboundary" + at);
    }
  }
  return v;
}

// (6) the non-semidirect extension: tau = psi^{45}_1 survives
Verdict non_semidirect() {
  Verdict v;
  auto s = catalog::space_five();
  const Cochain tau = P(s, {4, 5}, 1);
  for (int a19 : {0, 1, 2}) {
    auto e = catalog::five_extension(s, Scalar(a19), Scalar(1), Scalar(0));
    v.require(verify_extension(e).ok, "not an extension at a19 = " + std::to_string(a19));
    auto h = double_cohomology(e, Slice::hom(s, 0, 2));
    auto c = h.project(tau);
    bool nonzero = false;
    if (c)
      for (const auto& x : *c) nonzero = nonzero || x != 0;
    v.require(h.dim() >= 1 && nonzero, "class of tau vanishes at a19 = " + std::to_string(a19));
  }
  return v;
}

// (7) deformation parameter counts in the 2+1 example
Verdict deformation_counts() {
  Verdict v;
  auto s = catalog::space_w2_m1();
  auto count = [&](int b, int c) {
    return classify_deformations(catalog::small_extension(s, true, 0, Scalar(b), Scalar(c)))
        .parameter_count();
  };
  for (int b : {0, 2, 7}) v.require(count(b, 0) == 1, "b = " + std::to_string(b) + ", psi = 0");
  v.require(count(-1, 0) == 2, "b = -1, psi = 0");
  v.require(count(-1, 1) == 1, "b = -1, psi = psi^{12}_3");
  return v;
}

// (8) randomized property suites
Verdict property_suites() {
  Verdict v;
  std::size_t total = 0;
  for (const auto& t : properties::all(20261016)) {
    total += t.cases;
    v.require(t.passed(), t.name + ": " + std::to_string(t.cases) + " cases, " +
                              std::to_string(t.failures) + " failures (" + t.first_failure + ")");
  }
  if (v.ok) v.detail = std::to_string(total) + " cases";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"bracket fixtures", brackets},
      {"codifferential gate and 1|1 moduli", codifferentials},
      {"extension residuals on the five dimensional example", residuals},
      {"apply_beta equals conjugation by 1 + beta", equivalence_engine},
      {"tau degenerates only at b = -1", degenerations},
      {"non-semidirect certificate", non_semidirect},
      {"deformation parameter counts 1, 2, 1", deformation_counts},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& ex) {
      v.ok = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    failed += !v.ok;
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << index << " " << name;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
