#include "liext/cohomology.hpp"

#include <map>

#include "liext/error.hpp"

namespace liext {

Operator mu_operator(const ExtensionData& e) { return {e.mu, kMuShift}; }
Operator delta_operator(const ExtensionData& e) { return {e.delta, kDeltaShift}; }
Operator dl_operator(const ExtensionData& e) { return {e.delta + e.lambda, kDeltaShift}; }
Operator lambda_operator(const ExtensionData& e) { return {e.lambda, kDeltaShift}; }
Operator psi_operator(const ExtensionData& e) { return {e.psi, kPsiShift}; }

namespace {

void check_operator(const Operator& d) {
  if (d.op.parity() != Parity::Odd) throw InputError("coboundary operators must be odd");
  auto w = weight_of(d.op);
  if (w && !(*w == d.shift)) throw InputError("operator does not have the stated bidegree shift");
}

Weight weight_or_throw(const Slice& s) {
  if (!s.weight()) throw InputError("slice " + s.str() + " is not homogeneous");
  return *s.weight();
}

Matrix with_op(const Operator& d, const Slice& domain, const Slice& codomain, Exec exec) {
  check_operator(d);
  return assemble(d.op, domain, codomain, exec);
}

std::vector<Cochain> lift_all(const Slice& s, const std::vector<Vec>& vs) {
  std::vector<Cochain> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(s.cochain(v));
  return out;
}

std::vector<Cochain> images(const Operator& d, const Slice& s, const std::vector<Vec>& vs) {
  std::vector<Cochain> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(bracket(d.op, s.cochain(v)));
  return out;
}

Matrix sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

struct TripleValue {
  Cochain beta;
  Cochain value;
};

TripleValue triple_value(const Operator& first, const Operator& second, const Operator& third,
                         const Cochain& phi, bool k_positive, const std::optional<Cochain>& beta) {
  auto w = weight_of(phi);
  if (!w) return {Cochain(phi.space(), phi.parity()), Cochain(phi.space(), phi.parity() + Parity::Odd)};
  if (!bracket(first.op, phi).is_zero()) throw InputError("not a cocycle of the first operator: " + phi.str());
  const Cochain x = bracket(second.op, phi);
  Cochain b(phi.space(), phi.parity());
  if (beta) {
    if (bracket(first.op, *beta) != x)
      throw InputError("beta does not solve [second, phi] = [first, beta]");
    b = *beta;
  } else {
    Slice u = Slice::weight(phi.space(), *w + second.shift, phi.parity() + Parity::Odd, k_positive);
    Slice bs = Slice::weight(phi.space(), *w + second.shift - first.shift, phi.parity(), k_positive);
    auto sol = solve(assemble(first.op, bs, u), u.coords(x));
    if (!sol) throw InputError("no beta with [second, phi] = [first, beta]; phi does not define a class");
    b = bs.cochain(*sol);
  }
  return {b, bracket(third.op, phi) - bracket(second.op, b)};
}

}  // namespace

SliceMap slice_matrix(const Operator& d, const Slice& domain, Exec exec) {
  Slice codomain = next_slice(domain, d.shift);
  Matrix m = with_op(d, domain, codomain, exec);
  return {domain, std::move(codomain), std::move(m)};
}

Slice next_slice(const Slice& slice, Weight shift) {
  return Slice::weight(slice.space(), weight_or_throw(slice) + shift, slice.parity() + Parity::Odd,
                       slice.k_positive());
}

Slice prev_slice(const Slice& slice, Weight shift) {
  return Slice::weight(slice.space(), weight_or_throw(slice) - shift, slice.parity() + Parity::Odd,
                       slice.k_positive());
}

CohomologySpace::CohomologySpace(std::string description, Slice slice,
                                 const std::vector<Vec>& cocycles,
                                 const std::vector<Vec>& coboundaries)
    : description_(std::move(description)),
      slice_(std::move(slice)),
      quotient_(cocycles, coboundaries, slice_.dim()) {
  cocycles_ = lift_all(slice_, quotient_.cycles());
  coboundaries_ = lift_all(slice_, quotient_.boundaries());
  reps_ = lift_all(slice_, quotient_.representatives());
}

bool CohomologySpace::is_cocycle(const Cochain& c) const { return project(c).has_value(); }

bool CohomologySpace::is_coboundary(const Cochain& c) const {
  Cochain outside(c.space(), c.parity());
  Vec v = slice_.coords(c, outside);
  if (!outside.is_zero()) return false;
  return in_span(quotient_.boundaries(), v, slice_.dim());
}

std::optional<Vec> CohomologySpace::project(const Cochain& c) const {
  Cochain outside(c.space(), c.parity());
  Vec v = slice_.coords(c, outside);
  if (!outside.is_zero()) return std::nullopt;
  return quotient_.project(v);
}

Cochain CohomologySpace::lift(const Vec& class_coords) const {
  if (class_coords.size() != reps_.size()) throw IntegrityError("class coordinates have the wrong length");
  Cochain c(slice_.space(), slice_.parity());
  for (std::size_t j = 0; j < reps_.size(); ++j)
    if (class_coords[j] != 0) c += reps_[j] * Scalar(class_coords[j]);
  return c;
}

std::vector<Vec> combinations_in(const std::vector<Cochain>& gens, const Slice& slice) {
  std::vector<Vec> inside;
  std::vector<Cochain> outside;
  std::map<TermKey, std::size_t> rows;
  for (const auto& g : gens) {
    Cochain out(g.space(), g.parity());
    inside.push_back(slice.coords(g, out));
    for (const auto& [key, c] : out.terms()) {
      if (!c.is_constant()) throw NeedsInstantiation("parametric coefficient " + c.str());
      rows.emplace(key, rows.size());
    }
    outside.push_back(std::move(out));
  }
  if (rows.empty()) return inside;
  Matrix o(rows.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& [key, c] : outside[j].terms()) o(rows.at(key), j) = c.constant_value();
  std::vector<Vec> out;
  for (const auto& n : nullspace(o)) {
    Vec v(slice.dim());
    for (std::size_t j = 0; j < n.size(); ++j)
      if (n[j] != 0)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += n[j] * inside[j][i];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> kernel_of(const Operator& d, const Slice& slice, Exec exec) {
  return nullspace(slice_matrix(d, slice, exec).matrix);
}

CohomologySpace cohomology_of(const Operator& d, const Slice& slice, Exec exec) {
  check_operator(d);
  if (!d.op.is_numeric()) throw NeedsInstantiation("coboundary operator has parametric entries");
  if (!is_codifferential(d.op).ok) throw InputError("[a, a] != 0; D_a is not a coboundary operator");
  auto z = kernel_of(d, slice, exec);
  Slice prev = prev_slice(slice, d.shift);
  auto b = combinations_in(apply_columns(d.op, prev, exec), slice);
  return CohomologySpace("cohomology on " + slice.str(), slice, z, b);
}

CohomologySpace restricted_cohomology(const Operator& inner, const Operator& outer,
                                      const Slice& slice, Exec exec) {
  Matrix a_in = slice_matrix(inner, slice, exec).matrix;
  Matrix a_out = slice_matrix(outer, slice, exec).matrix;
  auto z = nullspace(a_in.vstack(a_out));
  Slice prev = prev_slice(slice, inner.shift);
  auto b = combinations_in(images(inner, prev, kernel_of(outer, prev, exec)), slice);
  try {
    return CohomologySpace("restricted cohomology on " + slice.str(), slice, z, b);
  } catch (const IntegrityError&) {
    throw IntegrityError("the operators do not anticommute on " + slice.str());
  }
}

CohomologySpace double_cohomology(const Operator& first, const Operator& second, const Slice& slice,
                                  Exec exec) {
  // cocycles: (phi, beta) with D1 phi = 0 and D2 phi - D1 beta = 0
  Slice t = next_slice(slice, first.shift);
  Slice u = next_slice(slice, second.shift);
  Slice bs = prev_slice(u, first.shift);
  Matrix a1 = with_op(first, slice, t, exec);
  Matrix a2 = with_op(second, slice, u, exec);
  Matrix a3 = with_op(first, bs, u, exec);
  Matrix neg(a3.rows(), a3.cols());
  for (std::size_t i = 0; i < a3.rows(); ++i)
    for (std::size_t j = 0; j < a3.cols(); ++j) neg(i, j) = -a3(i, j);
  Matrix system = a1.hstack(Matrix(t.dim(), bs.dim())).vstack(a2.hstack(neg));
  std::vector<Vec> z;
  for (const auto& n : nullspace(system)) z.emplace_back(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(slice.dim()));

  // coboundaries: D2(a) with D1 a = 0, plus D1(c)
  Slice a_slice = prev_slice(slice, second.shift);
  Slice c_slice = prev_slice(slice, first.shift);
  auto gens = images(second, a_slice, kernel_of(first, a_slice, exec));
  for (auto& g : apply_columns(first.op, c_slice, exec)) gens.push_back(std::move(g));
  auto b = combinations_in(gens, slice);
  try {
    return CohomologySpace("double cohomology on " + slice.str(), slice, z, b);
  } catch (const IntegrityError&) {
    throw IntegrityError("induced operator does not square to zero on " + slice.str());
  }
}

CohomologySpace double_cohomology(const ExtensionData& e, const Slice& slice, Exec exec) {
  return double_cohomology(mu_operator(e), dl_operator(e), slice, exec);
}

Matrix induced_matrix(const Operator& d, const CohomologySpace& from, const CohomologySpace& to,
                      Exec) {
  check_operator(d);
  Matrix m(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto c = to.project(bracket(d.op, from.representatives()[j]));
    if (!c) throw IntegrityError("induced operator leaves the cocycles of " + to.slice().str());
    for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
  }
  return m;
}

TripleImage triple_differential(const Operator& first, const Operator& second, const Operator& third,
                                const Cochain& phi, const CohomologySpace& to,
                                const std::optional<Cochain>& beta) {
  auto tv = triple_value(first, second, third, phi, to.slice().k_positive(), beta);
  auto c = to.project(tv.value);
  if (!c) throw IntegrityError("triple differential is not a cocycle of " + to.slice().str());
  return {std::move(tv.beta), std::move(tv.value), std::move(*c)};
}

TripleImage triple_differential_psi(const ExtensionData& e, const Cochain& phi,
                                    const CohomologySpace& to, const std::optional<Cochain>& beta) {
  return triple_differential(mu_operator(e), dl_operator(e), psi_operator(e), phi, to, beta);
}

Matrix triple_matrix(const Operator& first, const Operator& second, const Operator& third,
                     const CohomologySpace& from, const CohomologySpace& to) {
  Matrix m(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto img = triple_differential(first, second, third, from.representatives()[j], to);
    for (std::size_t i = 0; i < img.coords.size(); ++i) m(i, j) = img.coords[i];
  }
  return m;
}

CohomologySpace triple_cohomology(const Operator& first, const Operator& second,
                                  const Operator& third, const Slice& slice, Exec exec) {
  check_operator(third);
  CohomologySpace h = double_cohomology(first, second, slice, exec);
  CohomologySpace hn = double_cohomology(first, second, next_slice(slice, third.shift), exec);
  CohomologySpace hp = double_cohomology(first, second, prev_slice(slice, third.shift), exec);

  std::vector<Vec> z = h.quotient().boundaries();
  for (const auto& x : nullspace(triple_matrix(first, second, third, h, hn)))
    z.push_back(slice.coords(h.lift(x)));

  std::vector<Cochain> incoming;
  for (const auto& r : hp.representatives())
    incoming.push_back(triple_value(first, second, third, r, slice.k_positive(), std::nullopt).value);
  std::vector<Vec> b = h.quotient().boundaries();
  for (auto& v : combinations_in(incoming, slice)) b.push_back(std::move(v));
  try {
    return CohomologySpace("triple cohomology on " + slice.str(), slice, z, b);
  } catch (const IntegrityError&) {
    throw IntegrityError("triple differential does not square to zero on " + slice.str());
  }
}

CohomologySpace triple_cohomology(const ExtensionData& e, const Slice& slice, Exec exec) {
  return triple_cohomology(mu_operator(e), dl_operator(e), psi_operator(e), slice, exec);
}

Matrix composite(const Operator& a, const Operator& b, const Slice& slice, Exec exec) {
  Slice sb = next_slice(slice, b.shift);
  Slice sab = next_slice(sb, a.shift);
  return with_op(a, sb, sab, exec) * with_op(b, slice, sb, exec);
}

Matrix anticommutator(const Operator& a, const Operator& b, const Slice& slice, Exec exec) {
  return sum(composite(a, b, slice, exec), composite(b, a, slice, exec));
}

}  // namespace liext
