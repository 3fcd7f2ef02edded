#include "gtkit/catalog.hpp"

#include "gtkit/error.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace gtkit {

namespace {

FreeHom f2(const char* a, const char* b) {
  Alphabet ab(2);
  return FreeHom(2, 2, {ab.parse(a), ab.parse(b)});
}

}  // namespace

Automorphism lambda_aut() { return {f2("a b", "b"), f2("a b^-1", "b")}; }
Automorphism rho_aut() { return {f2("a", "b a"), f2("a", "b a^-1")}; }

BraidWord lambda_braid() { return BraidWord(4, {-2, 3, 2}); }
BraidWord rho_braid() { return BraidWord(4, {-1}); }

std::vector<Automorphism> fourgen_automorphisms() {
  const Automorphism l = lambda_aut();
  const Automorphism r = rho_aut();
  const Automorphism li = l.inverse();
  const Automorphism ri = r.inverse();
  return {
      compose(l, l),
      r,
      compose(compose(compose(li, r), r), l),
      compose(compose(compose(compose(li, ri), l), r), l),
  };
}

std::vector<BraidWord> fourgen_braids() {
  const BraidWord l = lambda_braid();
  const BraidWord r = rho_braid();
  const BraidWord li = l.inverse();
  const BraidWord ri = r.inverse();
  return {l * l, r, li * r * r * l, li * ri * l * r * l};
}

Word braid_to_word(const BraidWord& w) { return Word(w.strands() - 1, w.letters()); }

Word st_to_word(const STWord& w) {
  std::vector<Letter> out;
  for (const auto& x : w) out.push_back((x.symbol == 's' ? 1 : 2) * x.sign);
  return Word(2, std::move(out));
}

std::vector<Permutation> pi_images() {
  return {Permutation::identity(2), Permutation::transposition(2, 1, 2)};
}

std::vector<Permutation> xi_images() {
  return {Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)};
}

std::vector<Permutation> sl2_mod2_images() {
  // Elements of SL_2(Z_2) as (a, b, c, d) with ad - bc = 1 mod 2.
  std::vector<std::array<int, 4>> elems;
  for (int code = 0; code < 16; ++code) {
    std::array<int, 4> m{code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
    if (((m[0] * m[3] - m[1] * m[2]) % 2 + 2) % 2 == 1) elems.push_back(m);
  }
  auto mul = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2,
                              (x[2] * y[0] + x[3] * y[2]) % 2, (x[2] * y[1] + x[3] * y[3]) % 2};
  };
  auto right_action = [&](const std::array<int, 4>& g) {
    std::vector<int> im;
    for (const auto& x : elems) {
      auto y = mul(x, g);
      for (std::size_t k = 0; k < elems.size(); ++k)
        if (elems[k] == y) im.push_back(static_cast<int>(k) + 1);
    }
    return Permutation(std::move(im));
  };
  return {right_action({0, 1, 1, 0}), right_action({1, 1, 0, 1})};
}

std::vector<Permutation> b4_to_s4_images() {
  return {Permutation::transposition(4, 1, 2), Permutation::transposition(4, 2, 3),
          Permutation::transposition(4, 3, 4)};
}

std::vector<Permutation> b4_to_s3_images() {
  std::vector<Permutation> out;
  for (const auto& p : b4_to_s4_images()) out.push_back(quotient_S4_S3(p));
  return out;
}

BraidWord p3_word_to_braid(const Word& w) {
  if (w.rank() != 3) throw DimensionMismatch("expected a word in A12, A13, A23");
  static const std::pair<int, int> gens[] = {{1, 2}, {1, 3}, {2, 3}};
  BraidWord out(3, {});
  for (Letter x : w.letters()) {
    auto [p, q] = gens[std::abs(x) - 1];
    BraidWord a = pure_gen(p, q, 3);
    out = out * (x > 0 ? a : a.inverse());
  }
  return out;
}

std::vector<std::pair<int, int>> strand_kernel_generators(int j, int n) {
  if (j < 1 || j > n) throw DomainError("strand index out of range");
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k)
    if (k != j) out.emplace_back(std::min(k, j), std::max(k, j));
  return out;
}

std::vector<Kappa> monodromy_generators(int n) {
  std::vector<Kappa> out;
  const Word a = Word::generator(2, 1);
  const Word b = Word::generator(2, 2);
  for (int i = 0; i < n - 2; ++i)
    for (bool left : {true, false})
      for (const Word& g : {a, b}) {
        Kappa k = Kappa::identity(n);
        (left ? k.l : k.r)[static_cast<std::size_t>(i)] = g;
        out.push_back(std::move(k));
      }
  for (const Automorphism& mu : {lambda_aut().pow(2), rho_aut().pow(2)}) {
    Kappa k = Kappa::identity(n);
    k.mu = mu;
    out.push_back(std::move(k));
  }
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> out;
  for (int k = len(rng); k > 0; --k) out.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return Word(rank, std::move(out));
}

Automorphism random_mu(std::mt19937_64& rng, int max_len) {
  const Automorphism pool[] = {lambda_aut(), rho_aut(), lambda_aut().inverse(), rho_aut().inverse()};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  Automorphism out = Automorphism::identity(2);
  for (int k = len(rng); k > 0; --k) out = compose(out, pool[pick(rng)]);
  return out;
}

Kappa random_kappa(std::mt19937_64& rng, int n, int max_len) {
  Kappa k = Kappa::identity(n);
  for (auto& w : k.l) w = random_word(rng, 2, max_len);
  for (auto& w : k.r) w = random_word(rng, 2, max_len);
  k.mu = random_mu(rng, max_len);
  return k;
}

}  // namespace gtkit
