#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkit/catalog.hpp"
#include "gtkit/error.hpp"
#include "gtkit/fpres.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace gtkit;

namespace {

// Coxeter presentation of S_4, faithful under s_i -> (i, i+1).
Presentation s4_presentation() {
  return Presentation::parse(
      "gens: s1 s2 s3\n"
      "rel: s1 s1\nrel: s2 s2\nrel: s3 s3\n"
      "rel: s1 s2 s1 s2 s1 s2\nrel: s2 s3 s2 s3 s2 s3\nrel: s1 s3 s1 s3\n");
}

Permutation eval_perm(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation p = Permutation::identity(degree);
  for (Letter x : w.letters()) {
    const Permutation& g = images[static_cast<std::size_t>(std::abs(x) - 1)];
    p = p * (x > 0 ? g : g.inverse());
  }
  return p;
}

std::vector<Permutation> commutator_subgroup(const std::set<Permutation>& h, int degree) {
  std::vector<Permutation> comms;
  for (const auto& x : h)
    for (const auto& y : h) comms.push_back(x.inverse() * y.inverse() * x * y);
  auto c = oracle::brute_closure(comms, degree);
  return {c.begin(), c.end()};
}

BigInt order(const AbelianStructure& a) {
  BigInt n = 1;
  for (const auto& t : a.torsion) n *= t;
  return n;
}

std::vector<Word> fourgen_st_words() {
  std::vector<Word> out;
  for (const auto& g : fourgen_automorphisms()) out.push_back(st_to_word(sl2_word(hom_matrix(g.forward()))));
  return out;
}

}  // namespace

TEST_CASE("presentation text format") {
  Presentation p = Presentation::parse("# comment\ngens: a b\nrel: a b A B\nrel: a^3\n");
  CHECK(p.ngens() == 2);
  CHECK(p.relators().size() == 2);
  CHECK(p.relators()[1] == parse_word("a a a", 2));
  Presentation q = Presentation::parse(p.to_text());
  CHECK(q.names() == p.names());
  CHECK(q.relators() == p.relators());
  CHECK_THROWS_AS(Presentation::parse("rel: a\n"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens: a\nrel: b\n"), ParseError);
  CHECK(Presentation::parse("gens: a\nrel: a A\n").relators().empty());
  CHECK(cyclic_reduce(parse_word("b a b^-1", 2)) == parse_word("a", 2));
}

TEST_CASE("presentation files") {
  CHECK(read_presentation_file(GTKIT_DATA_DIR "/sl2z.pres").relators() == sl2z_presentation().relators());
  CHECK(read_presentation_file(GTKIT_DATA_DIR "/presaut.pres").relators().size() == 4);
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/file.pres"), ParseError);
}

TEST_CASE("coset enumeration indices") {
  const Presentation sl2 = sl2z_presentation();
  CHECK(todd_coxeter(sl2, fourgen_st_words()).ncosets() == 3);
  CHECK(todd_coxeter(sl2, {sl2.parse_word("t t"), sl2.parse_word("t s t t s t")}).ncosets() == 12);
  CHECK(todd_coxeter(sl2, {sl2.parse_word("s"), sl2.parse_word("t")}).ncosets() == 1);
  CHECK(todd_coxeter(presaut_presentation(), {Word(3, {1}), Word(3, {2}), Word(3, {3})}).ncosets() == 1);
  CHECK(todd_coxeter(s4_presentation(), {}).ncosets() == 24);
  CHECK(todd_coxeter(Presentation(1, {Word(1, {1, 1, 1, 1, 1})}), {}).ncosets() == 5);
}

TEST_CASE("coset limit") {
  const Presentation sl2 = sl2z_presentation();
  CHECK_THROWS_AS(todd_coxeter(sl2, {sl2.parse_word("t")}, 1000), CosetLimitExceeded);
  CHECK_THROWS_AS(todd_coxeter(sl2, {sl2.parse_word("t t"), sl2.parse_word("t s t t s t")}, 2),
                  CosetLimitExceeded);
  CHECK_THROWS_AS(todd_coxeter(Presentation(2, {}), {}, 50), CosetLimitExceeded);
}

TEST_CASE("tables from finite quotients") {
  CHECK(coset_table_from_quotient(presaut_presentation(), b4_to_s4_images()).ncosets() == 24);
  CHECK(coset_table_from_quotient(sl2z_presentation(), sl2_mod2_images()).ncosets() == 6);
  CHECK(oracle::brute_closure(sl2_mod2_images(), 6).size() == 6);
  std::vector<Permutation> trivial(3, Permutation::identity(2));
  CHECK(coset_table_from_quotient(presaut_presentation(), trivial).ncosets() == 1);
  std::vector<Permutation> bad{Permutation::parse("(1,2,3)", 3), Permutation::parse("(1,2)", 3)};
  CHECK_THROWS_AS(coset_table_from_quotient(sl2z_presentation(), bad), RelatorViolated);
  CHECK_THROWS_AS(coset_table_from_quotient(presaut_presentation(), b4_to_s4_images(), 10), CosetLimitExceeded);
}

TEST_CASE("coset table validation") {
  Presentation z2 = Presentation(1, {Word(1, {1, 1})});
  CosetTable ok(z2, {}, {{1, 1}, {0, 0}});
  CHECK(ok.is_closed());
  CHECK(ok.trace(0, Word(1, {1, 1, 1})) == 1);
  CHECK_THROWS_AS(CosetTable(z2, {}, {{1, -1}, {0, 0}}), IncompleteTable);
  CosetTable wrong(z2, {Word(1, {1})}, {{1, 1}, {0, 0}});
  CHECK_FALSE(wrong.is_closed());
}

TEST_CASE("Reidemeister-Schreier abelianizations") {
  auto k4 = coset_table_from_quotient(presaut_presentation(), b4_to_s4_images());
  CHECK(abelianization(reidemeister_schreier(k4)).to_string() == "Z^5");
  auto g2 = coset_table_from_quotient(sl2z_presentation(), sl2_mod2_images());
  CHECK(abelianization(reidemeister_schreier(g2)).to_string() == "Z^2 x Z_2");
  auto gp = coset_table_from_quotient(presaut_presentation(), b4_to_s3_images());
  CHECK(gp.ncosets() == 6);
  CHECK(abelianization(reidemeister_schreier(gp)).to_string() == "Z^2 x Z_2^3");
  const Presentation sl2 = sl2z_presentation();
  auto whole = todd_coxeter(sl2, {sl2.parse_word("s"), sl2.parse_word("t")});
  CHECK(abelianization(reidemeister_schreier(whole)) == abelianization(sl2));
  CHECK(reidemeister_schreier(whole).ngens() == 2);
}

TEST_CASE("abelianizations of presentations") {
  CHECK(abelianization(Presentation(1, {Word(1, {1, 1})})).torsion == std::vector<BigInt>{2});
  CHECK(abelianization(sl2z_presentation()).to_string() == "Z_12");
  CHECK(abelianization(p3_presentation()).to_string() == "Z^3");
  CHECK(abelianization(k3_presentation()).to_string() == "Z^2");
  CHECK(abelianization(Presentation(3, {})).to_string() == "Z^3");
  CHECK(relator_matrix(sl2z_presentation()) == IntMatrix{{4, 0}, {1, 3}});
}

TEST_CASE("property: enumeration index matches brute-force subgroup order in S_4") {
  std::mt19937_64 rng(41);
  const Presentation s4 = s4_presentation();
  const auto images = b4_to_s4_images();
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Word> gens;
    std::vector<Permutation> perms;
    for (int k = trial % 3; k >= 0; --k) {
      Word w = random_word(rng, 3, 6);
      gens.push_back(w);
      perms.push_back(eval_perm(w, images, 4));
    }
    auto h = oracle::brute_closure(perms, 4);
    CosetTable ct = todd_coxeter(s4, gens);
    REQUIRE(ct.ncosets() * h.size() == 24);
    REQUIRE(ct.is_closed());
    for (const auto& w : gens) REQUIRE(ct.trace(0, w) == 0);
    if (trial % 5 == 0) {
      // |H / [H, H]| from the subgroup presentation and by brute force
      AbelianStructure ab = abelianization(reidemeister_schreier(ct));
      REQUIRE(ab.free_rank == 0);
      REQUIRE(order(ab) * commutator_subgroup(h, 4).size() == h.size());
    }
  }
}
