#include "liext/extension.hpp"

#include <set>
#include <sstream>

#include "liext/error.hpp"

namespace liext {

bool supported_on(const Cochain& c, std::size_t m, std::size_t w, Part target) {
  const GradedSpace& s = *c.space();
  for (const auto& [k, v] : c.terms())
    if (s.part(k.out) != target || bidegree(k.in, s) != std::pair{m, w}) return false;
  return true;
}

namespace {

void require_component(const Cochain& c, std::size_t m, std::size_t w, Part target,
                       const char* name) {
  if (!c.is_zero() && !is_odd(c.parity()))
    throw InputError(std::string(name) + " must be odd");
  if (!supported_on(c, m, w, target))
    throw InputError(std::string(name) + " has terms outside its bidegree");
}

Cochain odd_zero(const SpacePtr& s) { return Cochain(s, Parity::Odd); }

}  // namespace

ExtensionData::ExtensionData(Cochain d, Cochain m, Cochain l, Cochain p)
    : space(d.space()),
      delta(std::move(d)),
      mu(std::move(m)),
      lambda(std::move(l)),
      psi(std::move(p)) {
  if (!space->has_split()) throw InputError("extension data needs an M/W split");
  for (const Cochain* c : {&mu, &lambda, &psi})
    if (!(*c->space() == *space)) throw InputError("extension components live on different spaces");
  require_component(delta, 0, 2, Part::W, "delta");
  require_component(mu, 2, 0, Part::M, "mu");
  require_component(lambda, 1, 1, Part::M, "lambda");
  require_component(psi, 0, 2, Part::M, "psi");
}

Cochain ExtensionData::assembled() const {
  Cochain d = odd_zero(space);
  d += delta;
  d += mu;
  d += lambda;
  d += psi;
  return d;
}

ExtensionData ExtensionData::substitute(const Assignment& values) const {
  return ExtensionData(delta.substitute(values), mu.substitute(values), lambda.substitute(values),
                       psi.substitute(values));
}

bool ExtensionData::is_numeric() const {
  return delta.is_numeric() && mu.is_numeric() && lambda.is_numeric() && psi.is_numeric();
}

bool ExtensionData::operator==(const ExtensionData& o) const {
  return delta == o.delta && mu == o.mu && lambda == o.lambda && psi == o.psi;
}

ExtensionData split(const Cochain& d) {
  const SpacePtr& s = d.space();
  if (!s->has_split()) throw InputError("space has no M/W split");
  if (!d.is_zero() && !is_odd(d.parity())) throw InputError("a codifferential must be odd");
  Cochain delta = odd_zero(s), mu = odd_zero(s), lambda = odd_zero(s), psi = odd_zero(s);
  std::vector<std::string> offending;
  for (const auto& [k, v] : d.terms()) {
    if (k.in.degree() != 2) throw InputError("split expects a quadratic cochain");
    auto [m, w] = bidegree(k.in, *s);
    const bool to_m = s->part(k.out) == Part::M;
    if (m == 0 && !to_m)
      delta.add(k.in, k.out, v);
    else if (m == 0 && to_m)
      psi.add(k.in, k.out, v);
    else if (m == 1 && to_m)
      lambda.add(k.in, k.out, v);
    else if (m == 2 && to_m)
      mu.add(k.in, k.out, v);
    else
      offending.push_back(term_label(k.in, k.out));
  }
  if (!offending.empty()) {
    std::string msg = "M is not an ideal; terms into W:";
    for (const auto& t : offending) msg += " " + t;
    throw NotAnIdeal(msg);
  }
  return ExtensionData(delta, mu, lambda, psi);
}

ExtensionReport verify_extension(const ExtensionData& e) {
  if (!is_codifferential(e.delta).ok) throw InputError("delta is not a codifferential");
  if (!is_codifferential(e.mu).ok) throw InputError("mu is not a codifferential");
  const Scalar half(Rational(1, 2));
  ExtensionReport r{bracket(e.delta, e.lambda), bracket(e.mu, e.lambda),
                    bracket(e.delta + e.lambda, e.psi), false};
  r.cond_module += bracket(e.lambda, e.lambda) * half;
  r.cond_module += bracket(e.mu, e.psi);
  r.ok = r.cond_module.is_zero() && r.cond_compat.is_zero() && r.cond_cocycle.is_zero();
  return r;
}

void check_beta(const Cochain& beta) {
  if (!beta.is_zero() && is_odd(beta.parity()))
    throw InputError("beta must preserve parity (an even cochain)");
  if (!supported_on(beta, 0, 1, Part::M)) throw InputError("beta must map W into M");
}

ExtensionData apply_beta(const ExtensionData& e, const Cochain& beta) {
  check_beta(beta);
  const Scalar half(Rational(1, 2));
  Cochain mb = bracket(e.mu, beta);
  Cochain lambda = e.lambda - mb;
  Cochain inner = e.delta + e.lambda;
  inner -= mb * half;
  Cochain psi = e.psi - bracket(inner, beta);
  return ExtensionData(e.delta, e.mu, lambda, psi);
}

LinearMap identity_map(std::size_t n) {
  LinearMap f(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) f[i][i] = Scalar(1);
  return f;
}

LinearMap to_linear_map(const Cochain& phi) {
  const std::size_t n = phi.space()->size();
  LinearMap f(n, std::vector<Scalar>(n));
  for (const auto& [k, v] : phi.terms()) {
    if (k.in.degree() != 1) throw InputError("only a linear cochain is an endomorphism");
    f[k.out][k.in.idx[0]] += v;
  }
  return f;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  const std::size_t n = f.size();
  LinearMap h(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!g[k][j].is_zero()) h[i][j] += f[i][k] * g[k][j];
    }
  return h;
}

namespace {

Scalar det_rec(const LinearMap& a, std::vector<std::size_t>& rows, std::vector<bool>& used_cols,
               std::size_t depth) {
  const std::size_t n = a.size();
  if (depth == n) return Scalar(1);
  Scalar total;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used_cols[c]) continue;
    if (!a[rows[depth]][c].is_zero()) {
      used_cols[c] = true;
      Scalar minor = det_rec(a, rows, used_cols, depth + 1);
      used_cols[c] = false;
      Scalar t = a[rows[depth]][c] * minor;
      total += sign > 0 ? t : -t;
    }
    sign = -sign;  // alternates over the remaining columns only
  }
  return total;
}

LinearMap minor_of(const LinearMap& a, std::size_t r, std::size_t c) {
  LinearMap m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == r) continue;
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != c) row.push_back(a[i][j]);
    m.push_back(std::move(row));
  }
  return m;
}

void check_parity_preserving(const LinearMap& f, const GradedSpace& s) {
  if (f.size() != s.size()) throw InputError("linear map has the wrong size");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].size() != s.size()) throw InputError("linear map is not square");
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!f[i][j].is_zero() && s.parity(i) != s.parity(j))
        throw InputError("linear map does not preserve parity");
  }
}

}  // namespace

Scalar determinant(const LinearMap& f) {
  std::vector<std::size_t> rows(f.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<bool> used(f.size(), false);
  return det_rec(f, rows, used, 0);
}

LinearMap adjugate(const LinearMap& f) {
  const std::size_t n = f.size();
  LinearMap adj(n, std::vector<Scalar>(n));
  if (n == 1) {
    adj[0][0] = Scalar(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = determinant(minor_of(f, i, j));
      adj[j][i] = (i + j) % 2 ? -c : c;
    }
  return adj;
}

std::map<Monomial, Scalar> apply_sym(const LinearMap& f, const Monomial& m, const GradedSpace& space) {
  // Expand f(w_{i1}) ... f(w_{ik}) one factor at a time, keeping words sorted.
  std::map<Monomial, Scalar> acc{{Monomial{}, Scalar(1)}};
  for (auto i : m.idx) {
    std::map<Monomial, Scalar> next;
    for (const auto& [word, c] : acc)
      for (std::uint32_t j = 0; j < f.size(); ++j) {
        if (f[j][i].is_zero()) continue;
        auto prod = multiply(word, Monomial{{j}}, space);
        if (!prod) continue;
        Scalar t = c * f[j][i];
        next[prod->mono] += prod->sign < 0 ? -t : t;
      }
    acc.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) acc.emplace(k, std::move(v));
  }
  return acc;
}

ScaledCochain conjugate_scaled(const Cochain& d, const LinearMap& f) {
  const GradedSpace& s = *d.space();
  check_parity_preserving(f, s);
  Scalar det = determinant(f);
  if (det.is_zero()) throw InputError("linear map is not invertible");
  LinearMap adj = adjugate(f);
  std::set<std::size_t> degrees;
  for (const auto& [k, v] : d.terms()) degrees.insert(k.in.degree());
  Cochain out(d.space(), d.parity());
  for (auto deg : degrees)
    for (const auto& m : monomial_basis(s, deg)) {
      std::vector<Scalar> image(s.size());
      for (const auto& [n, c] : apply_sym(f, m, s))
        for (const auto& [t, e] : d.value(n)) image[t] += c * e;
      for (std::uint32_t r = 0; r < s.size(); ++r) {
        Scalar v;
        for (std::uint32_t t = 0; t < s.size(); ++t)
          if (!image[t].is_zero() && !adj[r][t].is_zero()) v += adj[r][t] * image[t];
        out.add(m, r, v);
      }
    }
  return {std::move(out), std::move(det)};
}

Cochain conjugate(const Cochain& d, const LinearMap& f) {
  auto sc = conjugate_scaled(d, f);
  if (!sc.denominator.is_constant())
    throw NeedsInstantiation("determinant " + sc.denominator.str() + " is not a rational constant");
  Rational det = sc.denominator.constant_value();
  Cochain out = sc.numerator;
  out *= Scalar(Rational(1) / det);
  return out;
}

LinearMap DiagonalAutomorphism::full(const GradedSpace& space) const {
  auto ms = space.indices_in(Part::M);
  auto ws = space.indices_in(Part::W);
  if (m_block.size() != ms.size() || w_block.size() != ws.size())
    throw InputError("automorphism blocks do not match the M/W split");
  LinearMap f(space.size(), std::vector<Scalar>(space.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (m_block[i].size() != ms.size()) throw InputError("M block is not square");
    for (std::size_t j = 0; j < ms.size(); ++j) f[ms[i]][ms[j]] = m_block[i][j];
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (w_block[i].size() != ws.size()) throw InputError("W block is not square");
    for (std::size_t j = 0; j < ws.size(); ++j) f[ws[i]][ws[j]] = w_block[i][j];
  }
  return f;
}

ExtensionData pullback_diag(const ExtensionData& e, const DiagonalAutomorphism& g) {
  return split(conjugate(e.assembled(), g.full(*e.space)));
}

ScaledExtension pullback_diag_scaled(const ExtensionData& e, const DiagonalAutomorphism& g) {
  auto sc = conjugate_scaled(e.assembled(), g.full(*e.space));
  return {split(sc.numerator), sc.denominator};
}

ExtensionData pullback_general(const ExtensionData& e, const DiagonalAutomorphism& g,
                               const Cochain& beta) {
  return apply_beta(pullback_diag(e, g), -beta);
}

bool semidirect_witness_check(const ExtensionData& e, const Cochain& beta) {
  check_beta(beta);
  Cochain inner = e.delta + e.lambda;
  inner -= bracket(e.mu, beta) * Scalar(Rational(1, 2));
  return e.psi == bracket(inner, beta);
}

}  // namespace liext
