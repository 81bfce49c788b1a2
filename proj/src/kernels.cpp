#include "liext/kernels.hpp"

#include <exception>
#include <sstream>

#include "liext/error.hpp"

namespace liext {

Weight weight_of(const TermKey& t, const GradedSpace& space) {
  auto [m, w] = bidegree(t.in, space);
  const bool to_m = space.part(t.out) == Part::M;
  return {static_cast<int>(m) - (to_m ? 1 : 0), static_cast<int>(w) - (to_m ? 0 : 1)};
}

std::optional<Weight> weight_of(const Cochain& c) {
  std::optional<Weight> out;
  for (const auto& [key, coeff] : c.terms()) {
    (void)coeff;
    Weight w = weight_of(key, *c.space());
    if (out && !(*out == w)) throw InputError("cochain is not homogeneous in bidegree: " + c.str());
    out = w;
  }
  return out;
}

namespace {

Weight block_weight(const Block& b) {
  if (b.target == Part::M) return {static_cast<int>(b.m) - 1, static_cast<int>(b.w)};
  return {static_cast<int>(b.m), static_cast<int>(b.w) - 1};
}

}  // namespace

Slice::Slice(SpacePtr space, std::vector<Block> blocks, Parity parity)
    : space_(std::move(space)), blocks_(std::move(blocks)), parity_(parity) {
  if (!space_->has_split()) throw InputError("slices need an M/W split of the space");
  for (const auto& b : blocks_) {
    if (b.m + b.w == 0) throw InputError("slice block of input degree 0");
    if (b.target == Part::W && b.m > 0)
      throw InputError("W-valued cochains with M inputs are not part of the complex");
  }
  // only kept when every block agrees
  if (!blocks_.empty()) weight_ = block_weight(blocks_.front());
  for (const auto& b : blocks_)
    if (weight_ && !(block_weight(b) == *weight_)) weight_.reset();

  for (const auto& b : blocks_) {
    auto targets = space_->indices_in(b.target);
    for (const auto& mono : monomial_basis(*space_, b.m + b.w, std::make_pair(b.m, b.w)))
      for (auto t : targets) {
        if (parity_of(mono, *space_) + space_->parity(t) != parity_) continue;
        TermKey key{mono, static_cast<std::uint32_t>(t)};
        index_.emplace(key, basis_.size());
        basis_.push_back(std::move(key));
      }
  }
}

Parity Slice::default_parity(Weight w) {
  return ((w.p + w.q) % 2 + 2) % 2 ? Parity::Odd : Parity::Even;
}

Slice Slice::hom(SpacePtr space, std::size_t k, std::size_t l, std::optional<Parity> parity,
                 bool k_positive) {
  if (k_positive && k == 0) throw InputError("C^{0,l} is excluded by the k >= 1 restriction");
  Weight w{static_cast<int>(k) - 1, static_cast<int>(l)};
  Slice s(std::move(space), {Block{k, l, Part::M}}, parity.value_or(default_parity(w)));
  s.k_positive_ = k_positive;
  return s;
}

Slice Slice::hom_w(SpacePtr space, std::size_t n, std::optional<Parity> parity, bool k_positive) {
  Weight w{0, static_cast<int>(n) - 1};
  Slice s(std::move(space), {Block{0, n, Part::W}}, parity.value_or(default_parity(w)));
  s.k_positive_ = k_positive;
  return s;
}

Slice Slice::weight(SpacePtr space, Weight w, std::optional<Parity> parity, bool k_positive) {
  std::vector<Block> blocks;
  const int k = w.p + 1, l = w.q;
  if (k >= 0 && l >= 0 && k + l >= 1 && !(k_positive && k == 0))
    blocks.push_back(Block{static_cast<std::size_t>(k), static_cast<std::size_t>(l), Part::M});
  if (w.p == 0 && w.q + 1 >= 1)
    blocks.push_back(Block{0, static_cast<std::size_t>(w.q + 1), Part::W});
  Slice s(std::move(space), std::move(blocks), parity.value_or(default_parity(w)));
  s.weight_ = w;
  s.k_positive_ = k_positive;
  return s;
}

std::optional<std::size_t> Slice::index_of(const TermKey& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Cochain Slice::basis_cochain(std::size_t j) const {
  Cochain c(space_, parity_);
  c.add(basis_.at(j).in, basis_[j].out, Scalar(1));
  return c;
}

Cochain Slice::cochain(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw IntegrityError("coordinate vector has the wrong length");
  Cochain c(space_, parity_);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) c.add(basis_[j].in, basis_[j].out, Scalar(coords[j]));
  return c;
}

Vec Slice::coords(const Cochain& c, Cochain& outside) const {
  Vec v(basis_.size());
  outside = Cochain(c.space(), c.parity());
  for (const auto& [key, coeff] : c.terms()) {
    if (!coeff.is_constant()) throw NeedsInstantiation("parametric coefficient " + coeff.str());
    auto idx = index_of(key);
    if (idx)
      v[*idx] = coeff.constant_value();
    else
      outside.add(key.in, key.out, coeff);
  }
  return v;
}

Vec Slice::coords(const Cochain& c) const {
  Cochain outside(c.space(), c.parity());
  Vec v = coords(c, outside);
  if (!outside.is_zero())
    throw IntegrityError("cochain leaves the slice " + str() + ": " + outside.str());
  return v;
}

std::string Slice::str() const {
  std::ostringstream os;
  if (blocks_.empty()) os << "0";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << "+";
    const auto& b = blocks_[i];
    if (b.target == Part::M)
      os << "C^{" << b.m << "," << b.w << "}";
    else
      os << "C^" << b.w;
  }
  return os.str();
}

namespace {

void require_numeric(const Cochain& alpha) {
  if (!alpha.is_numeric())
    throw NeedsInstantiation("coboundary operator has parametric entries: " + alpha.str());
}

}  // namespace

std::vector<Cochain> apply_columns_serial(const Cochain& alpha, const Slice& domain) {
  require_numeric(alpha);
  std::vector<Cochain> out;
  out.reserve(domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) out.push_back(bracket(alpha, domain.basis_cochain(j)));
  return out;
}

std::vector<Cochain> apply_columns_parallel(const Cochain& alpha, const Slice& domain) {
  require_numeric(alpha);
  const auto n = static_cast<std::ptrdiff_t>(domain.dim());
  std::vector<Cochain> out(domain.dim(), Cochain(domain.space(), domain.parity() + alpha.parity()));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    try {
      out[static_cast<std::size_t>(j)] = bracket(alpha, domain.basis_cochain(static_cast<std::size_t>(j)));
    } catch (...) {
#pragma omp critical(liext_assembly_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Cochain> apply_columns(const Cochain& alpha, const Slice& domain, Exec exec) {
  return exec == Exec::Serial ? apply_columns_serial(alpha, domain)
                              : apply_columns_parallel(alpha, domain);
}

Matrix assemble(const Cochain& alpha, const Slice& domain, const Slice& codomain, Exec exec) {
  auto images = apply_columns(alpha, domain, exec);
  Matrix m(codomain.dim(), domain.dim());
  for (std::size_t j = 0; j < images.size(); ++j) {
    Vec col = codomain.coords(images[j]);
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace liext
