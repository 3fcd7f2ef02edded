#pragma once

#include "gtkit/int_matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

/// A letter is a signed generator index: +i is generator i, -i its inverse
/// (generators are numbered from 1).
using Letter = int;

/// Element of the free group of a given rank, stored freely reduced.
///
/// Reduction happens on construction and after every product, so two words
/// represent the same group element iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  /// Freely reduces `letters`; throws DomainError on an out-of-range letter.
  Word(int rank, std::vector<Letter> letters);

  static Word generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int exponent) const;
  /// Same element viewed in a free group of larger (or equal) rank.
  Word widen(int rank) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

/// Freely reduced product u*v. Throws DimensionMismatch unless ranks agree.
Word multiply(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);

/// Commutator u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

/// Exponent-sum vector, one entry per generator.
std::vector<std::int64_t> abelianize(const Word& w);

/// Generator names used for printing and parsing.
///
/// The default alphabet for rank n is `a b x3 ... xn`; for rank > 26 without
/// a custom alphabet, `g1 ... gn`. Parsing always also accepts `g<i>`.
class Alphabet {
 public:
  explicit Alphabet(int rank);
  explicit Alphabet(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  /// Whitespace-separated tokens: `name`, `name^k` (k may be negative), or an
  /// upper-cased name for the inverse when that spelling is not itself a
  /// generator name. `1` and the empty string denote the identity.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> names_;
};

Word parse_word(std::string_view text, int rank);
std::string to_string(const Word& w);

/// Homomorphism between free groups given by generator images.
class FreeHom {
 public:
  FreeHom() = default;
  /// `images[i]` is the image of generator i+1; every image must have rank
  /// `dst_rank`.
  FreeHom(int src_rank, int dst_rank, std::vector<Word> images);

  static FreeHom identity(int rank);

  int src_rank() const { return src_rank_; }
  int dst_rank() const { return dst_rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_.at(generator - 1); }

  Word operator()(const Word& w) const;

  friend bool operator==(const FreeHom&, const FreeHom&) = default;

 private:
  int src_rank_ = 0;
  int dst_rank_ = 0;
  std::vector<Word> images_;
};

/// Homomorphic extension of the generator images, freely reduced.
Word apply_hom(const FreeHom& f, const Word& w);

/// Diagrammatic composition: `f` first, then `g`.
///
/// compose(f, g)(x) == g(f(x)). Note this is the reverse of the usual
/// function-composition order; e.g. for f = (a -> ab) and g = (b -> ba),
/// compose(f, g)(a) = g(ab) = aba.
FreeHom compose(const FreeHom& f, const FreeHom& g);

/// compose over a sequence, left to right; identity of `rank` when empty.
FreeHom compose_all(std::span<const FreeHom> homs, int rank);

/// True iff f and g are mutually inverse endomorphisms.
bool verify_automorphism(const FreeHom& f, const FreeHom& g);

/// Row i is abelianize(f(generator i)); the induced map on H_1 acting on row
/// vectors, so hom_matrix(compose(f, g)) == hom_matrix(f) * hom_matrix(g).
IntMatrix hom_matrix(const FreeHom& f);

std::string to_string(const FreeHom& f, const Alphabet& alphabet);

/// A free-group automorphism certified by an explicit inverse.
class Automorphism {
 public:
  /// Throws DomainError unless verify_automorphism(forward, inverse).
  Automorphism(FreeHom forward, FreeHom inverse);

  static Automorphism identity(int rank);

  int rank() const { return forward_.src_rank(); }
  const FreeHom& forward() const { return forward_; }
  const FreeHom& inverse_map() const { return inverse_; }

  Automorphism inverse() const { return {inverse_, forward_}; }
  Automorphism pow(int exponent) const;
  Word operator()(const Word& w) const { return apply_hom(forward_, w); }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.forward_ == b.forward_;
  }

 private:
  FreeHom forward_;
  FreeHom inverse_;
};

/// Diagrammatic composition of certified automorphisms (`f` first).
Automorphism compose(const Automorphism& f, const Automorphism& g);

/// Data (l_3, r_3, ..., l_n, r_n, mu) defining an automorphism of
/// F_n = <a, b, x_3, ..., x_n> that acts by mu on <a, b> and sends
/// x_i to l_i^-1 x_i r_i.
struct Kappa {
  int n = 3;
  std::vector<Word> l;  ///< l[i-3], words of rank 2
  std::vector<Word> r;  ///< r[i-3], words of rank 2
  Automorphism mu = Automorphism::identity(2);

  /// Throws DomainError if n < 3, the coordinate counts are wrong, or a
  /// coordinate is not a rank-2 word.
  void validate() const;

  static Kappa identity(int n);
};

/// Group inverse (mu^-1(l_i^-1), mu^-1(r_i^-1), mu^-1).
Kappa inverse(const Kappa& kappa);

/// Semidirect product (l_i mu(l'_i), r_i mu(r'_i), mu o mu').
///
/// The mu component is the usual composite "mu' first, then mu", i.e.
/// compose(kp.mu, k.mu) in diagrammatic notation; this is the product under
/// which build_phi(k * kp) == build_phi(kp) followed by build_phi(k).
Kappa operator*(const Kappa& k, const Kappa& kp);

FreeHom build_phi(const Kappa& kappa);
Automorphism build_phi_automorphism(const Kappa& kappa);

/// Block form of hom_matrix(build_phi(kappa)) assembled directly from the
/// matrix of mu and the abelianized l_i, r_i.
IntMatrix phi_monodromy_matrix(const Kappa& kappa);

}  // namespace gtkit
