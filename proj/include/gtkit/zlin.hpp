#pragma once

#include "gtkit/int_matrix.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

/// Finitely generated abelian group Z^free_rank + Z_{t_1} + ... with
/// t_1 | t_2 | ... and every t_i > 1.
struct AbelianStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  /// E.g. `Z^2 x Z_2^3`, `Z_12`, `0` for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

struct SmithDecomposition {
  IntMatrix d;  ///< diagonal, d_1 | d_2 | ..., all non-negative
  IntMatrix u;  ///< unimodular, rows x rows
  IntMatrix v;  ///< unimodular, cols x cols
};

/// D = U * A * V with U, V unimodular and D in Smith normal form.
///
/// Pivots on the entry of smallest absolute value in the remaining block.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Z^cols modulo the row space of `a`.
AbelianStructure cokernel(const IntMatrix& a);
AbelianStructure cokernel(const IntMatrix& a, std::size_t cols);

/// Coinvariants of Z^r under the row-vector actions v -> v M_i: the cokernel
/// of the stacked (M_i - I).
AbelianStructure coinvariants(std::span<const IntMatrix> mats, std::size_t r);

/// Integer basis of the common fixed vectors of the transposed actions,
/// {x : x (M_i^T - I) = 0 for all i}, computed by exact kernel intersection.
std::vector<std::vector<BigInt>> invariant_vectors(std::span<const IntMatrix> mats,
                                                   std::size_t r);
std::size_t invariants_rank(std::span<const IntMatrix> mats, std::size_t r);

// ---------------------------------------------------------------------------
// SL_2(Z) in the generators S = [[0,-1],[1,0]], T = [[1,1],[0,1]].

struct STLetter {
  char symbol = 's';  ///< 's' or 't'
  int sign = 1;
  friend bool operator==(const STLetter&, const STLetter&) = default;
};

using STWord = std::vector<STLetter>;

IntMatrix sl2_S();
IntMatrix sl2_T();

/// Matrix product of the letters in word order.
IntMatrix eval_ST(const STWord& word);

/// A word with eval_ST(word) == m. Throws DomainError unless m is 2x2 with
/// determinant 1.
STWord sl2_word(const IntMatrix& m);

/// Tokens `s`, `t`, `S`, `T` with optional `^k`; an upper-case letter is the
/// same generator (not its inverse). Example: `t s t^-1`.
STWord parse_st_word(std::string_view text);
std::string to_string(const STWord& word);

}  // namespace gtkit
