#include "liext/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "liext/error.hpp"

namespace liext {

Cochain::Cochain(SpacePtr space, Parity parity) : space_(std::move(space)), parity_(parity) {
  if (!space_) throw InputError("cochain without a space");
}

Cochain Cochain::basis(SpacePtr space, const std::vector<std::uint32_t>& word, std::uint32_t out,
                       const Scalar& coeff) {
  if (out >= space->size()) throw InputError("target index out of range");
  Parity p = space->parity(out);
  for (auto i : word) {
    if (i >= space->size()) throw InputError("basis index out of range");
    p = p + space->parity(i);
  }
  Cochain c(std::move(space), p);
  c.add(word, out, coeff);
  return c;
}

void Cochain::add(const std::vector<std::uint32_t>& word, std::uint32_t out, const Scalar& c) {
  auto norm = koszul_sign(word, *space_);
  if (out >= space_->size()) throw InputError("target index out of range");
  if (!norm) return;
  add(norm->mono, out, norm->sign < 0 ? -c : c);
}

void Cochain::add(const Monomial& in, std::uint32_t out, const Scalar& c) {
  if (c.is_zero()) return;
  if (parity_of(in, *space_) + space_->parity(out) != parity_)
    throw InputError("term " + term_label(in, out) + " has parity opposite to the cochain");
  auto [it, inserted] = terms_.try_emplace(TermKey{in, out}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Cochain::coeff(const Monomial& in, std::uint32_t out) const {
  auto it = terms_.find(TermKey{in, out});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::map<std::uint32_t, Scalar> Cochain::value(const Monomial& in) const {
  std::map<std::uint32_t, Scalar> out;
  for (auto it = terms_.lower_bound(TermKey{in, 0}); it != terms_.end() && it->first.in == in; ++it)
    out.emplace(it->first.out, it->second);
  return out;
}

Cochain Cochain::component(std::size_t degree) const {
  Cochain c(space_, parity_);
  for (const auto& [k, v] : terms_)
    if (k.in.degree() == degree) c.terms_.emplace(k, v);
  return c;
}

Cochain Cochain::component(std::size_t m, std::size_t w, Part target) const {
  Cochain c(space_, parity_);
  for (const auto& [k, v] : terms_)
    if (space_->part(k.out) == target && bidegree(k.in, *space_) == std::pair{m, w})
      c.terms_.emplace(k, v);
  return c;
}

void Cochain::check_space(const Cochain& o) const {
  if (space_ != o.space_ && !(*space_ == *o.space_))
    throw InputError("cochains live on different spaces");
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
  check_space(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) parity_ = rhs.parity_;
  if (parity_ != rhs.parity_) throw InputError("sum of cochains of different parity");
  for (const auto& [k, v] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) { return *this += -rhs; }

Cochain& Cochain::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= rhs;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain c = *this;
  for (auto& [k, v] : c.terms_) v = -v;
  return c;
}

bool Cochain::operator==(const Cochain& o) const {
  check_space(o);
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (parity_ != o.parity_) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

Cochain Cochain::substitute(const Assignment& values) const {
  Cochain c(space_, parity_);
  for (const auto& [k, v] : terms_) {
    Scalar s = v.substitute(values);
    if (!s.is_zero()) c.terms_.emplace(k, std::move(s));
  }
  return c;
}

bool Cochain::is_numeric() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

ParamsPtr Cochain::params() const {
  ParamsPtr p;
  for (const auto& [k, v] : terms_) p = unify_params(p, v.params());
  return p;
}

std::string term_label(const Monomial& in, std::uint32_t out) {
  std::string s = in.degree() == 1 ? "phi^{" : "psi^{";
  for (std::size_t i = 0; i < in.idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(in.idx[i] + 1);
  }
  return s + "}_" + std::to_string(out + 1);
}

std::string Cochain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    std::string c = v.str();
    bool negative = v.terms().size() == 1 && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (c != "1") {
      if (v.terms().size() > 1)
        os << "(" << c << ")*";
      else
        os << c << "*";
    }
    os << term_label(k.in, k.out);
  }
  return os.str();
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Cochain circle(const Cochain& phi, const Cochain& psi) {
  if (phi.space() != psi.space() && !(*phi.space() == *psi.space()))
    throw InputError("cochains live on different spaces");
  const GradedSpace& space = *phi.space();
  Cochain out(phi.space(), phi.parity() + psi.parity());
  if (phi.is_zero() || psi.is_zero()) return out;

  // psi terms grouped by target
  std::vector<std::vector<std::pair<const Monomial*, const Scalar*>>> by_target(space.size());
  for (const auto& [k, v] : psi.terms()) by_target[k.out].emplace_back(&k.in, &v);

  std::vector<std::uint32_t> rest;
  for (const auto& [pk, pv] : phi.terms()) {
    const auto& b = pk.in.idx;
    for (std::size_t pos = 0; pos < b.size(); ++pos) {
      if (pos > 0 && b[pos] == b[pos - 1]) continue;  // same generator, same rest
      const std::uint32_t t = b[pos];
      if (by_target[t].empty()) continue;
      rest.assign(b.begin(), b.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      // kappa: bring t from the front of (t, rest) to its sorted place
      int kappa = 1;
      if (is_odd(space.parity(t)))
        for (auto y : rest)
          if (y < t && is_odd(space.parity(y))) kappa = -kappa;

      for (const auto& [a_ptr, c_ptr] : by_target[t]) {
        const auto& a = a_ptr->idx;
        std::vector<std::uint32_t> m;
        m.reserve(a.size() + rest.size());
        std::merge(a.begin(), a.end(), rest.begin(), rest.end(), std::back_inserter(m));
        bool zero = false;
        for (std::size_t i = 1; i < m.size() && !zero; ++i)
          zero = m[i] == m[i - 1] && is_odd(space.parity(m[i]));
        if (zero) continue;
        // eps: the chosen (a) factors pass the unchosen odd ones before them
        int eps = 1;
#ifndef LIEXT_MUTATE_KOSZUL
        for (auto x : a) {
          if (!is_odd(space.parity(x))) continue;
          for (auto y : rest)
            if (y < x && is_odd(space.parity(y))) eps = -eps;
        }
#endif
        // number of position sets realizing the sub-multiset a of m
        std::uint64_t mult = 1;
        for (std::size_t i = 0; i < a.size();) {
          std::size_t j = i;
          while (j < a.size() && a[j] == a[i]) ++j;
          auto in_m = static_cast<std::uint64_t>(std::count(m.begin(), m.end(), a[i]));
          mult *= binomial(in_m, j - i);
          i = j;
        }
        Scalar coeff = (*c_ptr) * pv;
        coeff *= Scalar(static_cast<long>(mult) * eps * kappa);
        out.add(Monomial{std::move(m)}, pk.out, coeff);
      }
    }
  }
  return out;
}

Cochain bracket(const Cochain& phi, const Cochain& psi) {
  Cochain a = circle(phi, psi);
  Cochain b = circle(psi, phi);
  if (sign_of(phi.parity(), psi.parity()) < 0)
    a += b;
  else
    a -= b;
  return a;
}

Cochain coboundary(const Cochain& alpha, const Cochain& phi, bool check) {
  if (!is_odd(alpha.parity()) && !alpha.is_zero()) throw InputError("coboundary operator must be odd");
  if (check && !bracket(alpha, alpha).is_zero())
    throw InputError("[a, a] does not vanish; D_a is not a differential");
  return bracket(alpha, phi);
}

CodifferentialReport is_codifferential(const Cochain& d) {
  if (!is_odd(d.parity()) && !d.is_zero()) throw InputError("a codifferential must be odd");
  Cochain dd = bracket(d, d);
  bool ok = dd.is_zero();
  return {ok, std::move(dd)};
}

namespace {

// d(x, y) for basis x, y, as a vector over the basis.
std::vector<Scalar> apply2(const Cochain& d, std::uint32_t x, std::uint32_t y) {
  std::vector<Scalar> v(d.space()->size());
  auto norm = koszul_sign({x, y}, *d.space());
  if (!norm) return v;
  for (auto& [t, c] : d.value(norm->mono)) v[t] = norm->sign < 0 ? -c : c;
  return v;
}

// d(u, z) with u a vector
std::vector<Scalar> apply2(const Cochain& d, const std::vector<Scalar>& u, std::uint32_t z) {
  std::vector<Scalar> v(d.space()->size());
  for (std::uint32_t t = 0; t < u.size(); ++t) {
    if (u[t].is_zero()) continue;
    auto w = apply2(d, t, z);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!w[i].is_zero()) v[i] += u[t] * w[i];
  }
  return v;
}

}  // namespace

bool jacobi_check(const Cochain& d) {
  const GradedSpace& s = *d.space();
  for (const auto& [k, v] : d.terms())
    if (k.in.degree() != 2) throw InputError("jacobi_check needs a purely quadratic cochain");
  const auto n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        Parity pa = s.parity(a), pb = s.parity(b), pc = s.parity(c);
        auto t1 = apply2(d, apply2(d, a, b), c);
        auto t2 = apply2(d, apply2(d, a, c), b);
        auto t3 = apply2(d, apply2(d, b, c), a);
        const int s2 = sign_of(pb, pc);
        const int s3 = sign_of(pa, pb + pc);
        for (std::size_t i = 0; i < n; ++i) {
          Scalar sum = t1[i];
          sum += s2 < 0 ? -t2[i] : t2[i];
          sum += s3 < 0 ? -t3[i] : t3[i];
          if (!sum.is_zero()) return false;
        }
      }
  return true;
}

ScalarMatrix as_matrix(const Cochain& d, const std::vector<std::uint32_t>& rows,
                       const std::vector<Monomial>& cols) {
  ScalarMatrix m(rows.size(), std::vector<Scalar>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto val = d.value(cols[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = val.find(rows[i]);
      if (it != val.end()) m[i][j] = it->second;
    }
  }
  return m;
}

ScalarMatrix as_matrix(const Cochain& d, std::size_t degree) {
  std::vector<std::uint32_t> rows(d.space()->size());
  for (std::uint32_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return as_matrix(d, rows, monomial_basis(*d.space(), degree));
}

Cochain from_matrix(SpacePtr space, Parity parity, const ScalarMatrix& m,
                    const std::vector<std::uint32_t>& rows, const std::vector<Monomial>& cols) {
  Cochain c(std::move(space), parity);
  if (m.size() != rows.size()) throw InputError("matrix row count does not match");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (m[i].size() != cols.size()) throw InputError("matrix column count does not match");
    for (std::size_t j = 0; j < cols.size(); ++j) c.add(cols[j], rows[i], m[i][j]);
  }
  return c;
}

}  // namespace liext
