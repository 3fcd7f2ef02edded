#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

/// Permutation of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  /// `images[k]` is the image of point k+1 (1-based values).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int i, int j);
  /// Parses cycle notation such as `(1,2)(3,4)`; `id` is the identity.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycle notation, `id` for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// `p` then `q`: compose(p, q)(x) == q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

inline constexpr int kMaxClosureDegree = 8;

/// Subgroup generated by `gens`, as a sorted list of elements.
///
/// `degree` is only consulted when `gens` is empty. Throws DimensionMismatch
/// on mixed degrees and DomainError for degree > 8.
std::vector<Permutation> closure(const std::vector<Permutation>& gens, int degree);

/// Closure in breadth-first discovery order from the identity, generators
/// applied on the right in the given order. Element 0 is the identity.
std::vector<Permutation> closure_bfs(const std::vector<Permutation>& gens, int degree);

/// True iff g h g^-1 lies in `h` for all g in `g`. Both must be closed;
/// throws DomainError if `h` is not a subset of `g`.
bool is_normal(const std::vector<Permutation>& h, const std::vector<Permutation>& g);

/// The S_4 action on the pair partitions 12|34, 13|24, 14|23 (labelled 1, 2,
/// 3 in that order); a surjection S_4 -> S_3 with kernel the Klein group.
Permutation quotient_S4_S3(const Permutation& p);
std::function<Permutation(const Permutation&)> quotient_map_S4_S3();

}  // namespace gtkit
