#include "liext/gspace.hpp"

#include <algorithm>
#include <set>

#include "liext/error.hpp"

namespace liext {

const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

GradedSpace::GradedSpace(std::vector<BasisElement> basis, std::optional<std::vector<Part>> parts)
    : basis_(std::move(basis)), parts_(std::move(parts)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.name.empty()) throw InputError("empty basis element name");
    if (!seen.insert(b.name).second) throw InputError("duplicate basis element '" + b.name + "'");
  }
  if (parts_ && parts_->size() != basis_.size())
    throw InputError("M/W split does not cover the basis");
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

Part GradedSpace::part(std::size_t i) const {
  if (!parts_) throw InputError("space has no M/W split");
  return parts_->at(i);
}

std::vector<std::size_t> GradedSpace::indices_in(Part p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (part(i) == p) out.push_back(i);
  return out;
}

std::vector<std::string> GradedSpace::lint() const {
  std::vector<std::string> warnings;
  bool seen_odd = false;
  for (const auto& b : basis_) {
    if (is_odd(b.parity)) {
      seen_odd = true;
    } else if (seen_odd) {
      warnings.push_back("even element '" + b.name + "' listed after an odd one");
      break;
    }
  }
  return warnings;
}

bool GradedSpace::operator==(const GradedSpace& other) const {
  if (parts_ != other.parts_ || basis_.size() != other.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name != other.basis_[i].name || basis_[i].parity != other.basis_[i].parity)
      return false;
  return true;
}

SpacePtr make_space(std::vector<BasisElement> basis, std::optional<std::vector<Part>> parts) {
  return std::make_shared<const GradedSpace>(std::move(basis), std::move(parts));
}

SpacePtr make_space(std::size_t even, std::size_t odd, std::optional<std::vector<Part>> parts) {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < even + odd; ++i)
    basis.push_back({"v" + std::to_string(i + 1), i < even ? Parity::Even : Parity::Odd});
  return make_space(std::move(basis), std::move(parts));
}

bool Monomial::operator<(const Monomial& o) const {
  if (idx.size() != o.idx.size()) return idx.size() < o.idx.size();
  return std::lexicographical_compare(idx.rbegin(), idx.rend(), o.idx.rbegin(), o.idx.rend());
}

Parity parity_of(const Monomial& m, const GradedSpace& space) {
  Parity p = Parity::Even;
  for (auto i : m.idx) p = p + space.parity(i);
  return p;
}

std::pair<std::size_t, std::size_t> bidegree(const Monomial& m, const GradedSpace& space) {
  std::size_t in_m = 0;
  for (auto i : m.idx)
    if (space.part(i) == Part::M) ++in_m;
  return {in_m, m.idx.size() - in_m};
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.idx.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(m.idx[i] + 1);
  }
  return s;
}

std::optional<SignedMonomial> koszul_sign(const std::vector<std::uint32_t>& word,
                                          const GradedSpace& space) {
  for (auto i : word)
    if (i >= space.size()) throw InputError("basis index " + std::to_string(i + 1) + " out of range");
  // Count odd/odd inversions; a stable sort leaves equal even letters alone.
  int sign = 1;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (!is_odd(space.parity(word[p]))) continue;
    for (std::size_t q = p + 1; q < word.size(); ++q) {
      if (!is_odd(space.parity(word[q]))) continue;
      if (word[p] == word[q]) return std::nullopt;
      if (word[p] > word[q]) sign = -sign;
    }
  }
  Monomial m{word};
  std::stable_sort(m.idx.begin(), m.idx.end());
  return SignedMonomial{sign, std::move(m)};
}

std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b,
                                       const GradedSpace& space) {
  std::vector<std::uint32_t> word = a.idx;
  word.insert(word.end(), b.idx.begin(), b.idx.end());
  return koszul_sign(word, space);
}

Shuffles::Shuffles(std::size_t l, std::size_t r) : l_(l), r_(r) {}

Shuffles::iterator::iterator(std::size_t l, std::size_t r) : n_(l + r), done_(false) {
  pick_.resize(l);
  for (std::size_t i = 0; i < l; ++i) pick_[i] = static_cast<std::uint32_t>(i);
  fill();
}

void Shuffles::iterator::fill() {
  current_.first = pick_;
  current_.second.clear();
  std::size_t j = 0;
  for (std::uint32_t p = 0; p < n_; ++p) {
    if (j < pick_.size() && pick_[j] == p)
      ++j;
    else
      current_.second.push_back(p);
  }
}

Shuffles::iterator& Shuffles::iterator::operator++() {
  const std::size_t l = pick_.size();
  // next l-combination of n in lexicographic order
  std::size_t i = l;
  while (i > 0 && pick_[i - 1] == n_ - l + (i - 1)) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  ++pick_[i - 1];
  for (std::size_t j = i; j < l; ++j) pick_[j] = pick_[j - 1] + 1;
  fill();
  return *this;
}

namespace {

void extend(const GradedSpace& space, std::size_t degree, std::uint32_t from,
            std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (cur.size() == degree) {
    out.push_back(Monomial{cur});
    return;
  }
  for (std::uint32_t i = from; i < space.size(); ++i) {
    cur.push_back(i);
    // an odd generator may not be reused
    extend(space, degree, is_odd(space.parity(i)) ? i + 1 : i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const GradedSpace& space, std::size_t degree,
                                     std::optional<std::pair<std::size_t, std::size_t>> restriction) {
  if (restriction && !space.has_split())
    throw InputError("bidegree restriction needs an M/W split");
  if (restriction && restriction->first + restriction->second != degree)
    throw InputError("bidegree does not add up to the degree");
  std::vector<Monomial> all;
  std::vector<std::uint32_t> cur;
  extend(space, degree, 0, cur, all);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (!restriction || bidegree(m, space) == *restriction) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liext
