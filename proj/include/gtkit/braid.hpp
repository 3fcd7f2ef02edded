#pragma once

#include "gtkit/perm.hpp"
#include "gtkit/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

inline constexpr int kMaxStrands = 6;

/// Word in the Artin generators sigma_1 .. sigma_{n-1} of B_n; a letter +i is
/// sigma_i, -i its inverse. Not reduced: the word is kept as written.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws DomainError on n < 2 or an out-of-range letter.
  BraidWord(int n, std::vector<int> letters);

  static BraidWord sigma(int n, int i, int sign = 1);

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(int exponent) const;
  /// Text form `s1 s2^-1 ...`; `1` when empty.
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 2;
  std::vector<int> letters_;
};

/// Parses `s1 s2^-1 ...` together with the abbreviations `A<p><q>` (Artin
/// pure generator), `l2 l3 l4` (n = 4 only), `Delta`, and `center` (Delta^2).
/// Any token accepts a `^k` suffix.
BraidWord parse_braid(std::string_view text, int n);

/// Garside element: (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
BraidWord delta_word(int n);
/// (s1 s2 ... s_{n-1})^n, which equals Delta^2.
BraidWord full_twist_word(int n);

/// Strand permutation: product of the transpositions (i, i+1) in word order.
Permutation braid_perm(const BraidWord& w);

/// Canonical form Delta^p * x_1 * ... * x_k, each x_i a permutation braid
/// (represented by its permutation) distinct from 1 and Delta, every adjacent
/// pair left-weighted.
struct GarsideNormalForm {
  int n = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;

  /// `Delta^p · [s1 s2] · [s1]`; `Delta^0 ·` for the identity.
  std::string to_string() const;
  BraidWord to_word() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// Left normal form. Throws DomainError for n > 6.
GarsideNormalForm normal_form(const BraidWord& w);

bool braid_equal(const BraidWord& u, const BraidWord& v);

/// Starting set {i : sigma_i is a prefix of x} of a permutation braid.
std::vector<int> starting_set(const Permutation& x);
/// Finishing set {i : sigma_i is a suffix of x} of a permutation braid.
std::vector<int> finishing_set(const Permutation& x);
/// Positive reduced word of a permutation braid.
BraidWord permutation_braid_word(const Permutation& x);

/// Handle reduction (Dehornoy). Returns the fully reduced word; the input is
/// trivial iff the result is empty. Independent of the Garside machinery.
BraidWord handle_reduce(const BraidWord& w);
bool braid_equal_handle(const BraidWord& u, const BraidWord& v);

/// Artin generator A_pq = s_{q-1} ... s_{p+1} s_p^2 s_{p+1}^-1 ... s_{q-1}^-1.
BraidWord pure_gen(int p, int q, int n);

/// Theta_i: delete strand i from a pure braid. Throws NotPure unless
/// braid_perm(w) is the identity.
BraidWord delete_strand(const BraidWord& w, int i);

/// Cardano-Ferrari map B_4 -> B_3: s1 -> s1, s2 -> s2, s3 -> s1.
BraidWord cardano_ferrari(const BraidWord& w);

// ---------------------------------------------------------------------------
// Conjugation action of B_4 on its normal free subgroup <a, b>,
// a = s1 s3^-1, b = s2 s1 s3^-1 s2^-1.

/// Image under g -> s_i^sign g s_i^-sign, as an automorphism of F_2.
FreeHom generator_action(int i, int sign);

/// Rows of the conjugation table, (i, sign) -> FreeHom.
struct ConjugationTable {
  /// Indexed by (i - 1) * 2 + (sign < 0).
  std::vector<FreeHom> rows;
  const FreeHom& at(int i, int sign) const { return rows.at(static_cast<std::size_t>((i - 1) * 2 + (sign < 0 ? 1 : 0))); }
  FreeHom& at(int i, int sign) { return rows.at(static_cast<std::size_t>((i - 1) * 2 + (sign < 0 ? 1 : 0))); }
};

ConjugationTable conjugation_table();

/// Diagrammatic composition of generator_action over the letters of w, so
/// braid_action(u * v) == compose(braid_action(u), braid_action(v)).
FreeHom braid_action(const BraidWord& w);
Automorphism braid_automorphism(const BraidWord& w);

/// The braid words a = s1 s3^-1 and b = s2 s1 s3^-1 s2^-1 in B_4.
BraidWord free_generator_braid(int generator);
/// Substitutes the braid words of a, b into a rank-2 word.
BraidWord expand_free_word(const Word& w);

/// True iff s_i^sign g s_i^-sign equals table.at(i, sign)(g) in B_4 for both
/// g = a and g = b.
bool verify_table_row(int i, int sign);
bool verify_table_row(int i, int sign, const ConjugationTable& table);
/// The same for a single generator g in {1, 2}.
bool verify_table_entry(int i, int sign, int generator, const ConjugationTable& table);

}  // namespace gtkit
