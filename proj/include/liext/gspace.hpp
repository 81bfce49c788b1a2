#pragma once

// Z2-graded bases, monomials of the symmetric coalgebra S(W), Koszul signs and
// shuffle enumeration.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liext {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
// (-1)^{|a||b|}
inline int sign_of(Parity a, Parity b) { return is_odd(a) && is_odd(b) ? -1 : 1; }
const char* to_string(Parity p);

enum class Part : std::uint8_t { M, W };

struct BasisElement {
  std::string name;
  Parity parity;
};

class GradedSpace {
 public:
  // `parts`, when given, assigns every basis element to M or W.
  explicit GradedSpace(std::vector<BasisElement> basis,
                       std::optional<std::vector<Part>> parts = std::nullopt);

  std::size_t size() const { return basis_.size(); }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool has_split() const { return parts_.has_value(); }
  Part part(std::size_t i) const;
  std::vector<std::size_t> indices_in(Part p) const;

  // Non-fatal convention checks (even elements are expected first).
  std::vector<std::string> lint() const;

  bool operator==(const GradedSpace& other) const;

 private:
  std::vector<BasisElement> basis_;
  std::optional<std::vector<Part>> parts_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<BasisElement> basis,
                    std::optional<std::vector<Part>> parts = std::nullopt);
// Convenience: `even` even elements followed by `odd` odd ones, named v1..vn.
SpacePtr make_space(std::size_t even, std::size_t odd,
                    std::optional<std::vector<Part>> parts = std::nullopt);

// Sorted (non-decreasing) index sequence; 0-based.
struct Monomial {
  std::vector<std::uint32_t> idx;

  std::size_t degree() const { return idx.size(); }
  bool operator==(const Monomial& o) const { return idx == o.idx; }
  bool operator!=(const Monomial& o) const { return idx != o.idx; }
  // Degree first, then colexicographic (last index most significant):
  // w1w2 < w1w3 < w2w3 < w1w4 < ...
  bool operator<(const Monomial& o) const;
};

Parity parity_of(const Monomial& m, const GradedSpace& space);
// (#M factors, #W factors); needs a split.
std::pair<std::size_t, std::size_t> bidegree(const Monomial& m, const GradedSpace& space);
std::string to_string(const Monomial& m);  // 1-based, e.g. "1.2.2"

struct SignedMonomial {
  int sign;
  Monomial mono;
};

// Reorders a word of generators into normal form; nullopt when an odd
// generator repeats (the word is zero in S(W)).
std::optional<SignedMonomial> koszul_sign(const std::vector<std::uint32_t>& word,
                                          const GradedSpace& space);

// Product of two monomials in S(W).
std::optional<SignedMonomial> multiply(const Monomial& a, const Monomial& b,
                                       const GradedSpace& space);

// Shuffles of {0..l+r-1}: the first block holds l ascending positions, the
// second the remaining r. Enumerated lexicographically on the first block.
class Shuffles {
 public:
  struct Split {
    std::vector<std::uint32_t> first;
    std::vector<std::uint32_t> second;
  };

  Shuffles(std::size_t l, std::size_t r);

  class iterator {
   public:
    using value_type = Split;
    iterator() = default;
    const Split& operator*() const { return current_; }
    const Split* operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || pick_ == o.pick_); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    friend class Shuffles;
    iterator(std::size_t l, std::size_t r);
    void fill();
    std::size_t n_ = 0;
    std::vector<std::uint32_t> pick_;
    Split current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(l_, r_); }
  iterator end() const { return iterator(); }

 private:
  std::size_t l_, r_;
};

// All degree-k monomials, ordered by Monomial::operator<. With a restriction
// (m, w) only products of m elements of M and w elements of W are kept.
std::vector<Monomial> monomial_basis(const GradedSpace& space, std::size_t degree,
                                     std::optional<std::pair<std::size_t, std::size_t>> restriction =
                                         std::nullopt);

}  // namespace liext
