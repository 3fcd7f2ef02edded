#pragma once

#include "gtkit/perm.hpp"
#include "gtkit/word.hpp"

#include <vector>

namespace gtkit {

/// Schreier coset graph of a finite-index subgroup of a free group, with a
/// breadth-first spanning tree and the Schreier basis it determines.
///
/// The tree is grown scanning letters in the order a, b, ..., a^-1, b^-1, ...;
/// basis elements are numbered in the order their edges are first met.
class SubgroupAutomaton {
 public:
  /// Kernel of the map generator g -> images[g-1] onto the permutation group
  /// they generate; states are the group elements, state 0 the identity.
  static SubgroupAutomaton from_quotient(int rank, const std::vector<Permutation>& images);

  int ambient_rank() const { return rank_; }
  std::size_t index() const { return delta_.size(); }
  int transition(int state, Letter x) const;

  /// Tree word from the base state to `state`.
  const Word& representative(int state) const { return reps_.at(static_cast<std::size_t>(state)); }
  const std::vector<Word>& basis() const { return basis_; }
  int basis_rank() const { return static_cast<int>(basis_.size()); }

  bool contains(const Word& w) const;
  /// w as a word in the basis letters. Throws NotMember.
  Word rewrite(const Word& w) const;
  /// Substitutes the basis elements for the letters of u.
  Word expand(const Word& u) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> delta_;   // state x column -> state
  std::vector<std::vector<int>> label_;   // state x generator -> basis letter, 0 on tree edges
  std::vector<Word> reps_;
  std::vector<Word> basis_;
};

bool membership(const SubgroupAutomaton& a, const Word& w);

/// Restriction of an automorphism to the subgroup, in basis coordinates.
/// Throws NotStabilized unless f and f_inv both map every basis element into
/// the subgroup.
FreeHom restrict_hom(const SubgroupAutomaton& a, const FreeHom& f, const FreeHom& f_inv);
FreeHom restrict_hom(const SubgroupAutomaton& a, const Automorphism& f);

}  // namespace gtkit
