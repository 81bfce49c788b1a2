#pragma once

// Bidegree slices of the cochain space and the column assembly of slice
// matrices. Each column is D_a applied to one slice basis cochain; columns
// are independent, so the parallel version splits them over OpenMP threads.
// The serial version is kept as the reference.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liext/cochain.hpp"
#include "liext/linalg.hpp"

namespace liext {

// (p, q) = (#M inputs - [target in M], #W inputs - [target in W]).
// D_mu shifts by (1,0), D_delta and D_lambda by (0,1), D_psi by (-1,2).
struct Weight {
  int p = 0, q = 0;
  bool operator==(const Weight&) const = default;
  Weight operator+(Weight o) const { return {p + o.p, q + o.q}; }
  Weight operator-(Weight o) const { return {p - o.p, q - o.q}; }
};

inline constexpr Weight kMuShift{1, 0};
inline constexpr Weight kDeltaShift{0, 1};
inline constexpr Weight kPsiShift{-1, 2};

Weight weight_of(const TermKey& t, const GradedSpace& space);
// nullopt for the zero cochain; InputError when the terms have mixed weights.
std::optional<Weight> weight_of(const Cochain& c);

// Hom(M^m W^w, target).
struct Block {
  std::size_t m, w;
  Part target;
  bool operator==(const Block&) const = default;
};

class Slice {
 public:
  Slice(SpacePtr space, std::vector<Block> blocks, Parity parity);

  // C^{k,l} = Hom(M^k W^l, M).
  // With k_positive, slices derived from it (prev/next) drop C^{0,l} blocks.
  static Slice hom(SpacePtr space, std::size_t k, std::size_t l, std::optional<Parity> parity = {},
                   bool k_positive = false);
  // C^n = Hom(W^n, W).
  static Slice hom_w(SpacePtr space, std::size_t n, std::optional<Parity> parity = {},
                     bool k_positive = false);
  // Every block of the given weight. With k_positive, M-valued blocks
  // without M inputs are dropped.
  static Slice weight(SpacePtr space, Weight w, std::optional<Parity> parity = {},
                      bool k_positive = false);
  // Parity used when none is given: (p + q) mod 2. For an ordinary Lie
  // algebra this is the only parity that occurs.
  static Parity default_parity(Weight w);

  const SpacePtr& space() const { return space_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  Parity parity() const { return parity_; }
  std::optional<Weight> weight() const { return weight_; }
  bool k_positive() const { return k_positive_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<TermKey>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const TermKey& t) const;
  bool contains(const TermKey& t) const { return index_of(t).has_value(); }

  Cochain basis_cochain(std::size_t j) const;
  Cochain cochain(const Vec& coords) const;
  // Throws IntegrityError when c has a term outside the slice or a
  // parametric coefficient.
  Vec coords(const Cochain& c) const;
  // Coordinates of the part inside the slice; the rest is returned.
  Vec coords(const Cochain& c, Cochain& outside) const;

  std::string str() const;  // e.g. "C^{1,1}", "C^{1,0}+C^1"

 private:
  SpacePtr space_;
  std::vector<Block> blocks_;
  Parity parity_;
  std::optional<Weight> weight_;
  bool k_positive_ = false;
  std::vector<TermKey> basis_;
  std::map<TermKey, std::size_t> index_;
};

enum class Exec { Serial, Parallel };

// D_alpha on every basis cochain of the slice. alpha must be numeric.
std::vector<Cochain> apply_columns(const Cochain& alpha, const Slice& domain, Exec exec);
std::vector<Cochain> apply_columns_serial(const Cochain& alpha, const Slice& domain);
std::vector<Cochain> apply_columns_parallel(const Cochain& alpha, const Slice& domain);

// Matrix of D_alpha from `domain` into `codomain`; IntegrityError when an
// image leaves the codomain.
Matrix assemble(const Cochain& alpha, const Slice& domain, const Slice& codomain,
                Exec exec = Exec::Parallel);

}  // namespace liext
