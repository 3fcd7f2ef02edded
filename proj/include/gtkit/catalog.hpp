#pragma once

// Named groups, maps and generating sets shared by the checks, the CLI and
// the tests.

#include "gtkit/braid.hpp"
#include "gtkit/fpres.hpp"
#include "gtkit/perm.hpp"
#include "gtkit/word.hpp"
#include "gtkit/zlin.hpp"

#include <random>
#include <string>
#include <vector>

namespace gtkit {

/// a -> ab, b -> b.
Automorphism lambda_aut();
/// a -> a, b -> ba.
Automorphism rho_aut();

/// Braid words acting on <a, b> as lambda and rho: s2^-1 s3 s2 and s1^-1.
BraidWord lambda_braid();
BraidWord rho_braid();

/// lambda^2, rho, lambda^-1 rho^2 lambda, lambda^-1 rho^-1 lambda rho lambda,
/// products read left to right (diagrammatically).
std::vector<Automorphism> fourgen_automorphisms();
std::vector<BraidWord> fourgen_braids();

/// Letters of a braid word as a word in the generators s1 .. s_{n-1}.
Word braid_to_word(const BraidWord& w);

/// S/T word as a word in the generators s, t of sl2z_presentation().
Word st_to_word(const STWord& w);

/// Kernels of F_2 -> Z_2 (a -> 0, b -> 1) and F_2 -> V_4
/// (a -> (1,2)(3,4), b -> (1,3)(2,4)).
std::vector<Permutation> pi_images();
std::vector<Permutation> xi_images();

/// s, t acting on the right of the six elements of SL_2(Z_2).
std::vector<Permutation> sl2_mod2_images();

/// s_i -> (i, i+1) in S_4, and its composite with S_4 -> S_3.
std::vector<Permutation> b4_to_s4_images();
std::vector<Permutation> b4_to_s3_images();

/// Words in A12, A13, A23 (P3 / K3 generator order) as braid words in B_3.
BraidWord p3_word_to_braid(const Word& w);

/// Generators A_kj (k != j) of the kernel of deleting strand j, in
/// increasing order of k, as (p, q) pairs.
std::vector<std::pair<int, int>> strand_kernel_generators(int j, int n = 4);

/// Monodromy generating set in rank n: for every coordinate one kappa with
/// that l_i or r_i equal to a or b and everything else trivial, plus the two
/// kappas with mu = lambda^2 and mu = rho^2.
std::vector<Kappa> monodromy_generators(int n);

/// Up to max_len independent random letters, freely reduced.
Word random_word(std::mt19937_64& rng, int rank, int max_len);
/// Product of up to max_len automorphisms drawn from lambda, rho and inverses.
Automorphism random_mu(std::mt19937_64& rng, int max_len);
Kappa random_kappa(std::mt19937_64& rng, int n, int max_len = 4);

}  // namespace gtkit
