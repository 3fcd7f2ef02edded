#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkit/braid.hpp"
#include "gtkit/catalog.hpp"
#include "gtkit/error.hpp"
#include "oracles.hpp"

#include <random>

using namespace gtkit;

namespace {

BraidWord b4(const char* text) { return parse_braid(text, 4); }
BraidWord b3(const char* text) { return parse_braid(text, 3); }

Word w2(const char* text) { return parse_word(text, 2); }

BraidWord random_braid(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<int> letters;
  for (int k = len(rng); k > 0; --k) letters.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return BraidWord(n, letters);
}

// A trivial braid word: a conjugate of a braid relator, or of w w^-1.
BraidWord random_relator(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> gen(1, n - 2), kind(0, 2);
  int i = gen(rng);
  BraidWord r;
  switch (kind(rng)) {
    case 0:
      r = BraidWord(n, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
      break;
    case 1:
      if (n >= 4) {
        r = BraidWord(n, {1, 3, -1, -3});
        break;
      }
      [[fallthrough]];
    default: {
      BraidWord u = random_braid(rng, n, 3);
      r = u * u.inverse();
    }
  }
  BraidWord c = random_braid(rng, n, 2);
  return c * r * c.inverse();
}

bool artin_equal(const BraidWord& u, const BraidWord& v) {
  return oracle::artin_images(u.letters(), u.strands()) == oracle::artin_images(v.letters(), v.strands());
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  for (int x : small)
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("parsing braid words") {
  CHECK(b4("s1 s2^-1 S3").letters() == std::vector<int>{1, -2, -3});
  CHECK(b4("s1^3").letters() == std::vector<int>{1, 1, 1});
  CHECK(b4("1").empty());
  CHECK(b4("A24") == BraidWord(4, {3, 2, 2, -3}));
  CHECK(b4("A12") == BraidWord(4, {1, 1}));
  CHECK(b4("Delta") == delta_word(4));
  CHECK(b4("Delta") == BraidWord(4, {1, 2, 3, 1, 2, 1}));
  CHECK(braid_equal(b4("center"), full_twist_word(4)));
  CHECK(b4("s1 s2").to_string() == "s1 s2");
  CHECK(BraidWord(3, {}).to_string() == "1");
  CHECK_THROWS_AS(b4("s4"), ParseError);
  CHECK_THROWS_AS(b4("q1"), ParseError);
  CHECK_THROWS_AS(b3("l2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1", 7), DomainError);
}

TEST_CASE("strand permutations") {
  CHECK(braid_perm(b4("s1 s3^-1")).to_string() == "(1,2)(3,4)");
  for (int p = 1; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q) CHECK(braid_perm(pure_gen(p, q, 4)).is_identity());
  CHECK(braid_perm(BraidWord(4, {})).is_identity());
  CHECK(braid_perm(b4("A13")).is_identity());
}

TEST_CASE("normal forms") {
  auto trivial = normal_form(b4("s1 s1^-1"));
  CHECK(trivial.delta_power == 0);
  CHECK(trivial.factors.empty());
  CHECK(trivial.to_string() == "Delta^0 ·");
  CHECK(normal_form(b4("s1 s2 s1")) == normal_form(b4("s2 s1 s2")));
  auto twist = normal_form(BraidWord(4, {1, 2, 3}).pow(4));
  CHECK(twist.delta_power == 2);
  CHECK(twist.factors.empty());
  CHECK(handle_reduce(BraidWord(4, {1, 2, 3}).pow(4) * delta_word(4).pow(-2)).empty());
  CHECK(normal_form(b4("s1^-1")).delta_power == -1);
  CHECK_THROWS_AS(normal_form(BraidWord(7, {1})), DomainError);
}

TEST_CASE("equality of pure braid products") {
  CHECK(braid_equal(b4("l4"), b4("A14 A24 A34")));
  CHECK(braid_equal(b4("l3"), b4("A13 A23 A34")));
  CHECK_FALSE(braid_equal(b4("s1"), b4("s2")));
  CHECK(braid_equal_handle(b4("l4"), b4("A14 A24 A34")));
  CHECK(artin_equal(b4("l3"), b4("A13 A23 A34")));
}

TEST_CASE("pure generators") {
  CHECK(pure_gen(1, 2, 4) == BraidWord(4, {1, 1}));
  CHECK(pure_gen(2, 4, 4) == BraidWord(4, {3, 2, 2, -3}));
  CHECK_THROWS_AS(pure_gen(2, 2, 4), DomainError);
  CHECK_THROWS_AS(pure_gen(1, 5, 4), DomainError);
}

TEST_CASE("deleting a strand") {
  CHECK(delete_strand(pure_gen(1, 4, 4), 4).empty());
  CHECK(braid_equal(delete_strand(pure_gen(1, 3, 4), 4), pure_gen(1, 3, 3)));
  CHECK(braid_equal(delete_strand(pure_gen(2, 3, 4), 1), pure_gen(1, 2, 3)));
  CHECK_THROWS_AS(delete_strand(b4("s1"), 2), NotPure);
  // position tracking on random pure braids: the result is a homomorphism
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BraidWord> gens;
    BraidWord u(4, {}), v(4, {});
    std::uniform_int_distribution<int> pick(0, 5);
    const int pq[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int k = 0; k < 3; ++k) {
      auto g = pq[pick(rng)];
      u = u * pure_gen(g[0], g[1], 4);
      g = pq[pick(rng)];
      v = v * pure_gen(g[0], g[1], 4).inverse();
    }
    for (int i = 1; i <= 4; ++i)
      REQUIRE(braid_equal(delete_strand(u * v, i), delete_strand(u, i) * delete_strand(v, i)));
  }
}

TEST_CASE("Cardano-Ferrari map") {
  CHECK(braid_equal(cardano_ferrari(pure_gen(1, 4, 4)), pure_gen(2, 3, 3)));
  CHECK(braid_equal(cardano_ferrari(pure_gen(2, 4, 4)),
                    pure_gen(2, 3, 3).inverse() * pure_gen(1, 3, 3) * pure_gen(2, 3, 3)));
  CHECK(braid_equal(cardano_ferrari(BraidWord(4, {1, 2, 3}).pow(4)), BraidWord(3, {1, 2}).pow(3).pow(2)));
}

TEST_CASE("conjugation action on <a, b>") {
  FreeHom s2 = generator_action(2, 1);
  CHECK(s2.image(1) == w2("b"));
  CHECK(s2.image(2) == w2("b a^-1 b"));
  FreeHom s3inv = generator_action(3, -1);
  CHECK(s3inv.image(1) == w2("a"));
  CHECK(s3inv.image(2) == w2("a b"));
  CHECK(compose(generator_action(1, 1), generator_action(1, -1)) == FreeHom::identity(2));
  for (int i = 1; i <= 3; ++i) {
    CHECK(verify_automorphism(generator_action(i, 1), generator_action(i, -1)));
    CHECK(verify_table_row(i, 1));
    CHECK(verify_table_row(i, -1));
  }
  FreeHom a24 = braid_action(pure_gen(2, 4, 4));
  CHECK(a24.image(1) == w2("a b b"));
  CHECK(a24.image(2) == w2("b"));
  CHECK(braid_action(BraidWord(4, {1, 2, 3}).pow(4)) == FreeHom::identity(2));
  FreeHom a13 = braid_action(pure_gen(1, 3, 4));
  CHECK(a13.image(1) == w2("b a^-2 b a^-1"));
  CHECK(a13.image(2) == w2("b a^-2 b a^-2 b a^-1 b a^-2 b a^-1"));
}

TEST_CASE("table negative control") {
  ConjugationTable t = conjugation_table();
  CHECK(verify_table_row(2, 1, t));
  t.at(2, 1) = FreeHom(2, 2, {w2("b"), w2("b a b^-1")});
  CHECK_FALSE(verify_table_row(2, 1, t));
  ConjugationTable u = conjugation_table();
  u.at(2, -1) = FreeHom(2, 2, {w2("a b a^-1"), w2("a")});
  CHECK_FALSE(verify_table_row(2, -1, u));
}

TEST_CASE("free generators as braids") {
  CHECK(free_generator_braid(1) == BraidWord(4, {1, -3}));
  CHECK(free_generator_braid(2) == BraidWord(4, {2, 1, -3, -2}));
  CHECK(braid_equal(expand_free_word(w2("a b")), free_generator_braid(1) * free_generator_braid(2)));
}

TEST_CASE("property: normal form agrees with handle reduction and the Artin action") {
  std::mt19937_64 rng(32);
  int equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = trial % 2 ? 4 : 3;
    bool unrelated = trial % 3 == 0;
    BraidWord u = random_braid(rng, n, unrelated ? 16 : 6);
    BraidWord v = unrelated ? random_braid(rng, n, 16) : u * random_relator(rng, n);
    REQUIRE(v.length() <= 16);
    bool expected = artin_equal(u, v);
    if (expected) ++equal_pairs;
    REQUIRE(braid_equal(u, v) == expected);
    REQUIRE(braid_equal_handle(u, v) == expected);
    REQUIRE(handle_reduce(u * v.inverse()).empty() == expected);

    GarsideNormalForm nf = normal_form(u);
    REQUIRE(artin_equal(nf.to_word(), u));
    REQUIRE(normal_form(nf.to_word()) == nf);
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
      const auto& x = nf.factors[k];
      REQUIRE_FALSE(x.is_identity());
      REQUIRE(x != braid_perm(delta_word(n)));
      if (k + 1 < nf.factors.size())
        REQUIRE(contains_all(finishing_set(x), starting_set(nf.factors[k + 1])));
    }
  }
  CHECK(equal_pairs >= 600);
}

TEST_CASE("property: conjugation action is a homomorphism on B_4") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    BraidWord u = random_braid(rng, 4, 6), v = random_braid(rng, 4, 6);
    REQUIRE(braid_action(u * v) == compose(braid_action(u), braid_action(v)));
    REQUIRE(braid_perm(u * v) == compose(braid_perm(u), braid_perm(v)));
  }
}
