#pragma once

#include "gtkit/perm.hpp"
#include "gtkit/word.hpp"
#include "gtkit/zlin.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Freely and cyclically reduced form of w.
Word cyclic_reduce(const Word& w);

/// Finitely presented group <names | relators>. Relators are stored cyclically
/// reduced; trivial relators are dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<Word> relators);
  Presentation(int ngens, std::vector<Word> relators);

  int ngens() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  Alphabet alphabet() const { return Alphabet(names_); }

  Word parse_word(std::string_view text) const { return alphabet().parse(text); }

  /// Text format:
  ///   gens: a b
  ///   rel: a a b A B
  /// Upper-case spelling (or `^-1`) denotes an inverse; `#` starts a comment.
  static Presentation parse(std::string_view text);
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

Presentation read_presentation_file(const std::string& path);

/// <s, t | s^4, (st)^3 s^-2>, s -> S, t -> T.
Presentation sl2z_presentation();
/// Artin presentation of B_4 on s1 s2 s3.
Presentation b4_presentation();
/// B_4 with the extra relator (s1 s2 s3)^4.
Presentation presaut_presentation();
/// <A12, A13, A23 | [A12 A13 A23, A12], [A12 A13 A23, A13]>.
Presentation p3_presentation();
/// <A12, A13, A23 | A12 A13 A23>.
Presentation k3_presentation();

/// Complete coset table; cosets are 0-based, coset 0 is the subgroup.
/// Column 2(g-1) holds the action of generator g, column 2(g-1)+1 its inverse.
class CosetTable {
 public:
  CosetTable(Presentation p, std::vector<Word> subgens, std::vector<std::vector<int>> table);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::size_t ncosets() const { return table_.size(); }

  int act(int coset, Letter x) const;
  int trace(int coset, const Word& w) const;

  /// Every relator closes at every coset and every subgroup generator
  /// fixes coset 0.
  bool is_closed() const;

 private:
  Presentation presentation_;
  std::vector<Word> subgens_;
  std::vector<std::vector<int>> table_;
};

inline int column_of(Letter x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

/// HLT enumeration with lookahead. The table is renumbered in breadth-first
/// order, so results are reproducible. Throws CosetLimitExceeded when more
/// than max_cosets cosets would be live at once.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Coset table of the kernel of the homomorphism generator g -> images[g-1]:
/// the regular right action on the image group. Throws RelatorViolated when a
/// relator does not map to the identity.
CosetTable coset_table_from_quotient(const Presentation& p, const std::vector<Permutation>& images,
                                     std::size_t max_cosets = kDefaultMaxCosets);

/// Presentation of the subgroup on Schreier generators, one per positive
/// table edge outside a breadth-first spanning tree. No Tietze moves.
Presentation reidemeister_schreier(const CosetTable& ct);

/// Z^ngens modulo the abelianized relators.
AbelianStructure abelianization(const Presentation& p);

/// Matrix of the abelianized relators, one row per relator.
IntMatrix relator_matrix(const Presentation& p);

}  // namespace gtkit
