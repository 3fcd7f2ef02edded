// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria. Every comparison is exact integer or word equality.

#include "gtkit/catalog.hpp"
#include "gtkit/checks.hpp"
#include "gtkit/stallings.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace gtkit;

namespace {

constexpr int kCases = 1000;
constexpr double kPerCriterionMs = 30000;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool check_passes(const std::string& id, Verdict& v, const std::string& summary = "") {
  CheckResult r = run_check(id);
  std::string actual = r.actual.value("summary", "");
  bool ok = r.passed && (summary.empty() || actual == summary);
  v.expect(ok, id + " -> " + actual);
  return ok;
}

std::size_t index_of(const Presentation& p, const std::vector<Word>& gens) { return todd_coxeter(p, gens).ncosets(); }

// 1
void conjugation_tables(Verdict& v) {
  check_passes("appendix.sigma_actions", v, "12/12 rows");
  check_passes("appendix.apq_actions", v, "6/6 rows");
  check_passes("appendix.apq_matrices", v, "6/6 rows");
  check_passes("appendix.st_words", v, "6/6 rows");
  IntMatrix a12{{1, 0}, {-2, 1}};
  STWord tst = parse_st_word("t s t");
  STWord inv_sq;
  for (int k = 0; k < 2; ++k)
    for (auto it = tst.rbegin(); it != tst.rend(); ++it) inv_sq.push_back({it->symbol, -it->sign});
  v.expect(hom_matrix(braid_action(pure_gen(1, 2, 4))) == a12 && eval_ST(inv_sq) == a12, "A12 = (TST)^-2");
  v.expect(hom_matrix(braid_action(pure_gen(2, 4, 4))) == eval_ST(parse_st_word("t t")), "A24 = T^2");
  v.detail << "12 sigma rows, 6 A_pq actions, 6 matrices, 6 S/T words";
}

// 2
void indices(Verdict& v) {
  const Presentation sl2 = sl2z_presentation();
  std::vector<Word> s_gens;
  for (const auto& g : fourgen_automorphisms()) s_gens.push_back(st_to_word(sl2_word(hom_matrix(g.forward()))));
  std::size_t s = index_of(sl2, s_gens);
  std::size_t sanov = index_of(sl2, {sl2.parse_word("t t"), sl2.parse_word("t s t t s t")});
  std::vector<Word> gl_gens;
  for (const auto& b : fourgen_braids()) gl_gens.push_back(braid_to_word(b));
  gl_gens.push_back(braid_to_word(free_generator_braid(1)));
  gl_gens.push_back(braid_to_word(free_generator_braid(2)));
  std::size_t gl = index_of(presaut_presentation(), gl_gens);
  std::size_t k4 = coset_table_from_quotient(presaut_presentation(), b4_to_s4_images()).ncosets();
  std::size_t g2 = coset_table_from_quotient(sl2, sl2_mod2_images()).ncosets();
  v.expect(s == 3, "S index " + std::to_string(s));
  v.expect(sanov == 12, "Sanov index " + std::to_string(sanov));
  v.expect(gl == 3, "congruence index " + std::to_string(gl));
  v.expect(k4 == 24, "K4 cosets " + std::to_string(k4));
  v.expect(g2 == 6, "Gamma(2) cosets " + std::to_string(g2));
  v.detail << "S " << s << ", Sanov " << sanov << ", congruence " << gl << ", K4 " << k4 << ", Gamma(2) " << g2;
}

// 3
void homology(Verdict& v) {
  auto k4 = abelianization(reidemeister_schreier(coset_table_from_quotient(presaut_presentation(), b4_to_s4_images())));
  auto g2 = abelianization(reidemeister_schreier(coset_table_from_quotient(sl2z_presentation(), sl2_mod2_images())));
  auto gp = abelianization(reidemeister_schreier(coset_table_from_quotient(presaut_presentation(), b4_to_s3_images())));
  int h = SubgroupAutomaton::from_quotient(2, pi_images()).basis_rank();
  int j = SubgroupAutomaton::from_quotient(2, xi_images()).basis_rank();
  v.expect(k4.to_string() == "Z^5", "K4 " + k4.to_string());
  v.expect(g2.to_string() == "Z^2 x Z_2", "Gamma(2) " + g2.to_string());
  v.expect(gp.to_string() == "Z^2 x Z_2^3", "Gamma+ " + gp.to_string());
  v.expect(h == 3, "H basis " + std::to_string(h));
  v.expect(j == 5, "J basis " + std::to_string(j));
  v.detail << "K4 " << k4.to_string() << ", Gamma(2) " << g2.to_string() << ", Gamma+ " << gp.to_string()
           << ", |basis H| " << h << ", |basis J| " << j;
}

// 4
void coinvariant_ranks(Verdict& v) {
  auto h = SubgroupAutomaton::from_quotient(2, pi_images());
  std::vector<IntMatrix> on_h;
  for (const auto& f : fourgen_automorphisms()) on_h.push_back(hom_matrix(restrict_hom(h, f)));
  std::size_t rh = coinvariants(on_h, 3).free_rank;
  v.expect(rh == 1, "H coinvariant rank " + std::to_string(rh));
  v.detail << "H rank " << rh << ", monodromy ranks";
  for (int n = 3; n <= 6; ++n) {
    std::vector<IntMatrix> mats;
    for (const auto& k : monodromy_generators(n)) mats.push_back(phi_monodromy_matrix(k));
    std::size_t r = coinvariants(mats, static_cast<std::size_t>(n)).free_rank;
    v.expect(r == static_cast<std::size_t>(n - 2), "n = " + std::to_string(n) + " rank " + std::to_string(r));
    v.detail << " " << r;
  }
  std::mt19937_64 rng(0);
  int bad = 0;
  for (int t = 0; t < kCases; ++t) {
    int n = 3 + t % 6;
    IntMatrix m = phi_monodromy_matrix(random_kappa(rng, n, 6));
    if (rank(m - IntMatrix::identity(static_cast<std::size_t>(n))) > 2) ++bad;
  }
  v.expect(bad == 0, std::to_string(bad) + " random matrices with rank(M - I) > 2");
  v.detail << ", rank(M - I) <= 2 on " << kCases << " random matrices";
}

// 5
void braid_identities(Verdict& v) {
  check_passes("ell.braid_identities", v, "3/3 rows");
  check_passes("cf.generator_table", v, "6/6 rows");
  check_passes("cf.center_square", v);
  check_passes("theta.kernel_gens", v, "24/24 rows");
  check_passes("ell.psi_minus_identity", v, "3/3 rows");
  v.detail << "3 l_i products, 6 Cardano-Ferrari images, full twist, 24 deletions, psi(l_i) = -I";
}

// 6
void surjectivity(Verdict& v) {
  check_passes("thmsec.theta_pairs_surjective", v, "12/12 pairs of index 1");
  check_passes("thmsec.ell_surjective", v, "1");
  check_passes("prosec.cf_frobenius", v, "1");
  check_passes("prosec.theta_pair_infinite", v, "rank 2 < 3");
  v.detail << "12 ordered pairs, l-images and Cardano-Ferrari images of index 1, abelianized rank 2 < 3";
}

// 7
std::uint64_t word_laws(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (int t = 0; t < kCases; ++t) {
    Word u = random_word(rng, 3, 10), w = random_word(rng, 3, 10), x = random_word(rng, 3, 10);
    std::vector<int> cat = u.letters();
    cat.insert(cat.end(), w.letters().begin(), w.letters().end());
    std::vector<Word> imgs{random_word(rng, 2, 5), random_word(rng, 2, 5), random_word(rng, 2, 5)};
    FreeHom f(3, 2, imgs);
    bool ok = (u * w).letters() == oracle::free_reduce(cat) && (u * w) * x == u * (w * x) &&
              (u * u.inverse()).empty() && f(u * w) == f(u) * f(w) && f(u.inverse()) == f(u).inverse();
    if (!ok) ++bad;
  }
  return bad;
}

std::uint64_t matrix_functoriality(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (int t = 0; t < kCases; ++t) {
    std::vector<Word> fi, gi;
    for (int k = 0; k < 3; ++k) fi.push_back(random_word(rng, 2, 6));
    for (int k = 0; k < 2; ++k) gi.push_back(random_word(rng, 3, 6));
    FreeHom f(3, 2, fi), g(2, 3, gi);
    if (hom_matrix(compose(f, g)) != hom_matrix(f) * hom_matrix(g)) ++bad;
  }
  return bad;
}

std::uint64_t garside_vs_handles(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (int t = 0; t < kCases; ++t) {
    int n = 3 + t % 2;
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::bernoulli_distribution inv(0.5);
    auto draw = [&](int max_len) {
      std::vector<int> l;
      for (int k = std::uniform_int_distribution<int>(0, max_len)(rng); k > 0; --k)
        l.push_back(inv(rng) ? -gen(rng) : gen(rng));
      return BraidWord(n, l);
    };
    // equal pairs via a conjugated braid relation, unequal pairs at random;
    // every word has at most 16 letters
    BraidWord u = draw(t % 2 ? 4 : 16), c = draw(3);
    BraidWord v = t % 2 ? u * c * BraidWord(n, {1, 2, 1, -2, -1, -2}) * c.inverse() : draw(16);
    bool artin = oracle::artin_images(u.letters(), n) == oracle::artin_images(v.letters(), n);
    if (braid_equal(u, v) != artin || braid_equal_handle(u, v) != artin) ++bad;
  }
  return bad;
}

std::uint64_t smith_forms(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int t = 0; t < kCases; ++t) {
    std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    IntMatrix a = IntMatrix::zero(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
    SmithDecomposition s = smith_normal_form(a);
    bool ok = s.u * a * s.v == s.d && abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
    auto factors = oracle::invariant_factors(a);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      ok = ok && s.d(k, k) == factors[k];
      if (k + 1 < factors.size() && s.d(k, k) != 0) ok = ok && s.d(k + 1, k + 1) % s.d(k, k) == 0;
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && s.d(i, j) != 0) ok = false;
    if (!ok) ++bad;
  }
  return bad;
}

std::uint64_t sl2_round_trips(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  const oracle::Mat2 gens[] = {{0, -1, 1, 0}, {1, 1, 0, 1}, {0, 1, -1, 0}, {1, -1, 0, 1}};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int t = 0; t < kCases; ++t) {
    oracle::Mat2 m{1, 0, 0, 1};
    for (int k = t % 25; k > 0; --k) m = oracle::mul2(m, gens[pick(rng)]);
    IntMatrix mm{{m[0], m[1]}, {m[2], m[3]}};
    if (eval_ST(sl2_word(mm)) != mm) ++bad;
  }
  return bad;
}

std::uint64_t rewrite_round_trips(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  const SubgroupAutomaton autos[] = {SubgroupAutomaton::from_quotient(2, pi_images()),
                                     SubgroupAutomaton::from_quotient(2, xi_images()),
                                     SubgroupAutomaton::from_quotient(2, sl2_mod2_images())};
  for (int t = 0; t < kCases; ++t) {
    const auto& a = autos[t % 3];
    Word u = random_word(rng, a.basis_rank(), 8);
    Word w = a.expand(u);
    if (!a.contains(w) || a.rewrite(w) != u || a.expand(a.rewrite(w)) != w) ++bad;
  }
  return bad;
}

std::uint64_t phi_law(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (int t = 0; t < kCases; ++t) {
    int n = 3 + t % 4;
    Kappa k = random_kappa(rng, n), kp = random_kappa(rng, n);
    if (compose(build_phi(kp), build_phi(k)) != build_phi(k * kp)) ++bad;
  }
  return bad;
}

void property_suites(Verdict& v) {
  const std::pair<const char*, std::function<std::uint64_t(std::mt19937_64&)>> suites[] = {
      {"word/hom laws", word_laws},
      {"hom_matrix functoriality", matrix_functoriality},
      {"Garside vs handle reduction", garside_vs_handles},
      {"Smith normal form", smith_forms},
      {"sl2_word round trip", sl2_round_trips},
      {"rewrite round trip", rewrite_round_trips},
      {"Phi law", phi_law},
  };
  std::uint64_t seed = 0;
  for (const auto& [name, run] : suites) {
    std::mt19937_64 rng(seed++);
    std::uint64_t bad = run(rng);
    v.expect(bad == 0, std::string(name) + ": " + std::to_string(bad) + " failures");
  }
  v.detail << "7 suites x " << kCases << " seeded cases";
}

// 8
void negative_controls(Verdict& v) {
  std::size_t rejected = 0;
  for (const auto& id : table_check_ids()) {
    bool r = negative_control_rejected(id);
    if (r) ++rejected;
    v.expect(r, id + " accepted a corrupted row");
  }
  v.expect(table_check_ids().size() == 9, "table check count");
  v.detail << rejected << "/" << table_check_ids().size() << " corrupted tables rejected";
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Verdict&)> criteria[] = {
      {"conjugation tables", conjugation_tables},
      {"index claims", indices},
      {"homology claims", homology},
      {"coinvariant ranks", coinvariant_ranks},
      {"braid word identities", braid_identities},
      {"surjectivity and index 1", surjectivity},
      {"property suites", property_suites},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  double total = 0;
  int number = 1;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
      run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    total += ms;
    v.expect(ms < kPerCriterionMs, "over the 30 s budget");
    if (!v.ok) ++failed;
    std::printf("%s %d %s: %s (%.1f ms)\n", v.ok ? "PASS" : "FAIL", number++, name, v.detail.str().c_str(), ms);
  }
  std::printf("%d/8 criteria passed in %.1f ms\n", 8 - failed, total);
  return failed;
}
