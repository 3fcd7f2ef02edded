#include "gtkit/checks.hpp"

#include "gtkit/catalog.hpp"
#include "gtkit/error.hpp"
#include "gtkit/stallings.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <typeinfo>

namespace gtkit {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Evidence helpers

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

json to_json(const AbelianStructure& a) {
  json t = json::array();
  for (const auto& x : a.torsion) t.push_back(x.str());
  return {{"free_rank", a.free_rank}, {"torsion", t}, {"group", a.to_string()}};
}

std::string hom_text(const FreeHom& f) { return to_string(f, Alphabet(f.dst_rank())); }

struct Outcome {
  json expected;
  json actual;
  bool passed = false;
  std::string expected_text;
  std::string actual_text;
};

// Row-by-row comparison; `corrupt` selects a row whose expected value the
// check deliberately falsifies (negative control), -1 for none.
struct Table {
  json expected = json::array();
  json actual = json::array();
  std::size_t rows = 0;
  std::size_t ok = 0;

  void add(const std::string& label, json exp, json act, bool row_ok) {
    expected.push_back({{"row", label}, {"value", std::move(exp)}});
    actual.push_back({{"row", label}, {"value", std::move(act)}, {"ok", row_ok}});
    ++rows;
    if (row_ok) ++ok;
  }

  Outcome finish() const {
    Outcome o;
    o.expected = {{"rows", expected}, {"verified", rows}};
    o.actual = {{"rows", actual}, {"verified", ok}};
    o.passed = ok == rows;
    o.expected_text = std::to_string(rows) + "/" + std::to_string(rows) + " rows";
    o.actual_text = std::to_string(ok) + "/" + std::to_string(rows) + " rows";
    return o;
  }
};

Outcome scalar(json expected, json actual, json evidence = json::object()) {
  Outcome o;
  o.passed = expected == actual;
  o.expected_text = expected.is_string() ? expected.get<std::string>() : expected.dump();
  o.actual_text = actual.is_string() ? actual.get<std::string>() : actual.dump();
  o.expected = {{"value", std::move(expected)}};
  o.actual = {{"value", std::move(actual)}};
  if (!evidence.empty()) o.actual["evidence"] = std::move(evidence);
  return o;
}

// ---------------------------------------------------------------------------
// Reference data

struct SigmaRow {
  int i;
  int sign;
  int generator;
  const char* image;
};

// Conjugation by s_i^sign on a and b. The s2^-1 image of a is listed as
// a b^-1 a; the variant a b a^-1 fails in B_4 and is recorded separately.
const SigmaRow kSigmaRows[] = {
    {1, 1, 1, "a"},       {1, 1, 2, "b A"},    {1, -1, 1, "a"},       {1, -1, 2, "b a"},
    {2, 1, 1, "b"},       {2, 1, 2, "b A b"},  {2, -1, 1, "a B a"},   {2, -1, 2, "a"},
    {3, 1, 1, "a"},       {3, 1, 2, "A b"},    {3, -1, 1, "a"},       {3, -1, 2, "a b"},
};
constexpr const char* kVariantImage = "a b A";

struct ApqRow {
  int p, q;
  const char* a_image;
  const char* b_image;
  IntMatrix matrix;
  const char* st_label;
  const char* st_word;
};

const std::vector<ApqRow>& apq_rows() {
  static const std::vector<ApqRow> rows = {
      {1, 2, "a", "b A A", {{1, 0}, {-2, 1}}, "(TST)^-2", "t^-1 s^-1 t^-1 t^-1 s^-1 t^-1"},
      {1, 3, "b A A b A", "b A A b A A b A b A A b A", {{-3, 2}, {-8, 5}},
       "S^-1 T^-2 S^-1 T S^-1 T^-2 S T^-1", "s^-1 t^-2 s^-1 t s^-1 t^-2 s t^-1"},
      {1, 4, "a b A b A", "b b A b A", {{-1, 2}, {-2, 3}}, "S^-1 T^-2 S^-1 T^-2", "s^-1 t^-2 s^-1 t^-2"},
      {2, 3, "b A b", "b A b A b", {{-1, 2}, {-2, 3}}, "S^-1 T^-2 S^-1 T^-2", "s^-1 t^-2 s^-1 t^-2"},
      {2, 4, "a b b", "b", {{1, 2}, {0, 1}}, "T^2", "t^2"},
      {3, 4, "a", "A A b", {{1, 0}, {-2, 1}}, "(TST)^-2", "t^-1 s^-1 t^-1 t^-1 s^-1 t^-1"},
  };
  return rows;
}

std::string apq_name(int p, int q) { return "A" + std::to_string(p) + std::to_string(q); }

Word corrupt_word(const Word& w) { return w * Word::generator(w.rank(), 1); }

IntMatrix corrupt_matrix(IntMatrix m) {
  m(0, 0) += 1;
  return m;
}

const Alphabet& f2_alphabet() {
  static const Alphabet ab(2);
  return ab;
}

const Presentation& p3() {
  static const Presentation p = p3_presentation();
  return p;
}

const Presentation& k3() {
  static const Presentation p = k3_presentation();
  return p;
}

// Expresses a B_3 braid as one of 1, A12, A13, A23 (K3 / P3 generator order).
// Throws DomainError when it is none of them.
Word identify_p3_generator(const BraidWord& w) {
  for (int g = 0; g <= 3; ++g) {
    Word candidate = g == 0 ? Word(3) : Word::generator(3, g);
    if (braid_equal(w, p3_word_to_braid(candidate))) return candidate;
  }
  throw DomainError("braid " + w.to_string() + " is not 1 or an Artin generator of P_3");
}

BraidWord ell(int i) { return parse_braid("l" + std::to_string(i), 4); }

std::pair<int, int> relabel_after_deletion(int p, int q, int i) {
  return {p > i ? p - 1 : p, q > i ? q - 1 : q};
}

// ---------------------------------------------------------------------------
// Checks

Outcome sigma_action_table(const Config&, int corrupt) {
  Table t;
  ConjugationTable table = conjugation_table();
  int k = 0;
  for (const auto& row : kSigmaRows) {
    Word image = f2_alphabet().parse(row.image);
    if (k == corrupt) image = corrupt_word(image);
    ConjugationTable trial = table;
    std::vector<Word> images = trial.at(row.i, row.sign).images();
    images[static_cast<std::size_t>(row.generator - 1)] = image;
    trial.at(row.i, row.sign) = FreeHom(2, 2, images);
    const bool in_library = table.at(row.i, row.sign).image(row.generator) == image;
    const bool in_b4 = verify_table_entry(row.i, row.sign, row.generator, trial);
    std::string label = "s" + std::to_string(row.i) + (row.sign < 0 ? "^-1" : "") + ": " +
                        (row.generator == 1 ? "a" : "b");
    t.add(label, f2_alphabet().format(image),
          {{"library", f2_alphabet().format(table.at(row.i, row.sign).image(row.generator))},
           {"holds_in_B4", in_b4}},
          in_library && in_b4);
    ++k;
  }
  Outcome o = t.finish();
  ConjugationTable variant = table;
  variant.at(2, -1) = FreeHom(2, 2, {f2_alphabet().parse(kVariantImage), Word::generator(2, 1)});
  const bool variant_holds = verify_table_entry(2, -1, 1, variant);
  o.expected["variant_s2inv_a_to_aba^-1_holds"] = false;
  o.actual["variant_s2inv_a_to_aba^-1_holds"] = variant_holds;
  o.passed = o.passed && !variant_holds;
  return o;
}

Outcome apq_action_table(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : apq_rows()) {
    Word b = f2_alphabet().parse(row.b_image);
    if (k == corrupt) b = corrupt_word(b);
    FreeHom expected(2, 2, {f2_alphabet().parse(row.a_image), b});
    FreeHom actual = braid_action(pure_gen(row.p, row.q, 4));
    t.add(apq_name(row.p, row.q), hom_text(expected), hom_text(actual), expected == actual);
    ++k;
  }
  return t.finish();
}

Outcome apq_matrix_table(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : apq_rows()) {
    IntMatrix expected = k == corrupt ? corrupt_matrix(row.matrix) : row.matrix;
    IntMatrix actual = hom_matrix(braid_action(pure_gen(row.p, row.q, 4)));
    t.add(apq_name(row.p, row.q), to_json(expected), to_json(actual), expected == actual);
    ++k;
  }
  return t.finish();
}

Outcome apq_st_word_table(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : apq_rows()) {
    STWord w = parse_st_word(row.st_word);
    if (k == corrupt) w.push_back({'t', 1});
    IntMatrix value = eval_ST(w);
    IntMatrix action = hom_matrix(braid_action(pure_gen(row.p, row.q, 4)));
    const bool ok = value == row.matrix && value == action;
    t.add(apq_name(row.p, row.q) + " = " + row.st_label, to_json(row.matrix),
          {{"word", to_string(w)}, {"eval", to_json(value)}, {"action_matrix", to_json(action)}}, ok);
    ++k;
  }
  return t.finish();
}

Outcome center_trivial_action(const Config&, int) {
  FreeHom f = braid_action(full_twist_word(4));
  return scalar(hom_text(FreeHom::identity(2)), hom_text(f));
}

Outcome perm_xi_images(const Config&, int) {
  Permutation pa = braid_perm(free_generator_braid(1));
  Permutation pb = braid_perm(free_generator_braid(2));
  auto v4 = closure({pa, pb}, 4);
  auto s4 = closure(b4_to_s4_images(), 4);
  json expected = {{"a", "(1,2)(3,4)"}, {"b", "(1,3)(2,4)"}, {"order", 4}, {"normal_in_S4", true}};
  json actual = {{"a", pa.to_string()}, {"b", pb.to_string()}, {"order", v4.size()},
                 {"normal_in_S4", is_normal(v4, s4)}};
  Outcome o = scalar(expected, actual);
  o.expected_text = "(1,2)(3,4), (1,3)(2,4), order 4, normal";
  o.actual_text = pa.to_string() + ", " + pb.to_string() + ", order " + std::to_string(v4.size()) +
                  (actual["normal_in_S4"].get<bool>() ? ", normal" : ", not normal");
  return o;
}

Outcome sl2_s_index3(const Config& config, int) {
  const Presentation sl2 = sl2z_presentation();
  std::vector<Word> gens;
  json evidence = json::array();
  for (const auto& g : fourgen_automorphisms()) {
    IntMatrix m = hom_matrix(g.forward());
    STWord w = sl2_word(m);
    if (eval_ST(w) != m) throw Error("sl2_word failed to reproduce its matrix");
    gens.push_back(st_to_word(w));
    evidence.push_back({{"matrix", to_json(m)}, {"word", to_string(w)}});
  }
  auto ct = todd_coxeter(sl2, gens, config.max_cosets);
  return scalar(3, ct.ncosets(), {{"generators", evidence}});
}

Outcome sl2_sanov_index12(const Config& config, int) {
  const Presentation sl2 = sl2z_presentation();
  auto ct = todd_coxeter(sl2, {sl2.parse_word("t^2"), sl2.parse_word("t s t t s t")}, config.max_cosets);
  return scalar(12, ct.ncosets(), {{"generators", {"t^2", "(t s t)^2"}}});
}

AbelianStructure gamma2_abelianization(const Config& config, std::size_t* cosets) {
  auto ct = coset_table_from_quotient(sl2z_presentation(), sl2_mod2_images(), config.max_cosets);
  if (cosets) *cosets = ct.ncosets();
  return abelianization(reidemeister_schreier(ct));
}

Outcome sl2_gamma2_ab(const Config& config, int) {
  std::size_t cosets = 0;
  AbelianStructure ab = gamma2_abelianization(config, &cosets);
  Outcome o = scalar(json{{"cosets", 6}, {"abelianization", "Z^2 x Z_2"}},
                     json{{"cosets", cosets}, {"abelianization", ab.to_string()}}, to_json(ab));
  o.expected_text = "Z^2 x Z_2, 6 cosets";
  o.actual_text = ab.to_string() + ", " + std::to_string(cosets) + " cosets";
  return o;
}

Outcome sl2_gamma2_b1(const Config& config, int) {
  AbelianStructure ab = gamma2_abelianization(config, nullptr);
  return scalar(2, ab.free_rank, to_json(ab));
}

Outcome stab_fourgen(const Config&, int) {
  auto h = SubgroupAutomaton::from_quotient(2, pi_images());
  json expected = json::array();
  json actual = json::array();
  const char* names[] = {"lambda^2", "rho", "lambda^-1 rho^2 lambda", "lambda^-1 rho^-1 lambda rho lambda"};
  int k = 0;
  for (const auto& g : fourgen_automorphisms()) {
    bool ok = true;
    std::string image;
    try {
      FreeHom res = restrict_hom(h, g);
      restrict_hom(h, g.inverse());
      image = to_string(res, Alphabet(std::vector<std::string>{"x", "y", "z"}));
    } catch (const NotStabilized&) {
      ok = false;
    }
    expected.push_back({{"element", names[k]}, {"stabilizes", true}});
    actual.push_back({{"element", names[k]}, {"stabilizes", ok}, {"restriction", image}});
    ++k;
  }
  Outcome o;
  o.expected = expected;
  o.actual = actual;
  o.passed = std::all_of(actual.begin(), actual.end(), [](const json& r) { return r["stabilizes"].get<bool>(); });
  o.expected_text = "4/4 stabilize H";
  o.actual_text = std::to_string(std::count_if(actual.begin(), actual.end(), [](const json& r) {
                    return r["stabilizes"].get<bool>();
                  })) + "/4 stabilize H";
  return o;
}

std::vector<IntMatrix> restricted_fourgen_matrices() {
  auto h = SubgroupAutomaton::from_quotient(2, pi_images());
  std::vector<IntMatrix> out;
  for (const auto& g : fourgen_automorphisms()) out.push_back(hom_matrix(restrict_hom(h, g)));
  return out;
}

Outcome h_coinvariants(const Config&, int) {
  auto mats = restricted_fourgen_matrices();
  AbelianStructure c = coinvariants(mats, 3);
  json m = json::array();
  for (const auto& x : mats) m.push_back(to_json(x));
  Outcome o = scalar(1, c.free_rank, {{"coinvariants", to_json(c)}, {"matrices", m}});
  o.actual_text = "free rank " + std::to_string(c.free_rank) + " (" + c.to_string() + ")";
  o.expected_text = "free rank 1";
  return o;
}

Outcome h_invariants(const Config&, int) {
  auto mats = restricted_fourgen_matrices();
  auto vecs = invariant_vectors(mats, 3);
  json v = json::array();
  for (const auto& x : vecs) v.push_back(to_string(x));
  return scalar(1, vecs.size(), {{"basis", v}});
}

AbelianStructure k4_abelianization(const Config& config, std::size_t* cosets) {
  auto ct = coset_table_from_quotient(presaut_presentation(), b4_to_s4_images(), config.max_cosets);
  if (cosets) *cosets = ct.ncosets();
  return abelianization(reidemeister_schreier(ct));
}

Outcome k4_b1_5(const Config& config, int) {
  std::size_t cosets = 0;
  AbelianStructure ab = k4_abelianization(config, &cosets);
  Outcome o = scalar(json{{"cosets", 24}, {"abelianization", "Z^5"}},
                     json{{"cosets", cosets}, {"abelianization", ab.to_string()}}, to_json(ab));
  o.expected_text = "Z^5, 24 cosets";
  o.actual_text = ab.to_string() + ", " + std::to_string(cosets) + " cosets";
  return o;
}

Outcome k4_excessive(const Config& config, int) {
  const std::size_t k4 = k4_abelianization(config, nullptr).free_rank;
  const std::size_t g2 = gamma2_abelianization(config, nullptr).free_rank;
  Outcome o = scalar(json{{"b1_K4", 5}, {"b1_Gamma2", 2}, {"greater", true}},
                     json{{"b1_K4", k4}, {"b1_Gamma2", g2}, {"greater", k4 > g2}});
  o.expected_text = "5 > 2";
  o.actual_text = std::to_string(k4) + (k4 > g2 ? " > " : " <= ") + std::to_string(g2);
  return o;
}

Outcome gammaplus_ab(const Config& config, int) {
  auto ct = coset_table_from_quotient(presaut_presentation(), b4_to_s3_images(), config.max_cosets);
  AbelianStructure ab = abelianization(reidemeister_schreier(ct));
  Outcome o = scalar(json{{"cosets", 6}, {"abelianization", "Z^2 x Z_2^3"}},
                     json{{"cosets", ct.ncosets()}, {"abelianization", ab.to_string()}}, to_json(ab));
  o.expected_text = "Z^2 x Z_2^3, 6 cosets";
  o.actual_text = ab.to_string() + ", " + std::to_string(ct.ncosets()) + " cosets";
  return o;
}

Outcome gammaplus_index3(const Config& config, int) {
  std::vector<Word> gens;
  json words = json::array();
  for (const auto& b : fourgen_braids()) gens.push_back(braid_to_word(b));
  gens.push_back(braid_to_word(free_generator_braid(1)));
  gens.push_back(braid_to_word(free_generator_braid(2)));
  const Presentation pa = presaut_presentation();
  for (const auto& g : gens) words.push_back(pa.alphabet().format(g));
  auto ct = todd_coxeter(pa, gens, config.max_cosets);
  return scalar(3, ct.ncosets(), {{"generators", words}});
}

struct CfRow {
  int p, q;
  const char* image;
};

const CfRow kCfRows[] = {
    {1, 2, "A12"}, {1, 3, "A13"}, {2, 3, "A23"}, {1, 4, "A23"}, {2, 4, "A23^-1 A13 A23"}, {3, 4, "A12"},
};

Outcome cf_generator_table(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : kCfRows) {
    Word expected = p3().parse_word(row.image);
    if (k == corrupt) expected = corrupt_word(expected);
    BraidWord image = cardano_ferrari(pure_gen(row.p, row.q, 4));
    const bool ok = braid_equal(image, p3_word_to_braid(expected));
    t.add(apq_name(row.p, row.q), p3().alphabet().format(expected), normal_form(image).to_string(), ok);
    ++k;
  }
  return t.finish();
}

Outcome cf_center_square(const Config&, int) {
  BraidWord image = cardano_ferrari(full_twist_word(4));
  BraidWord target = full_twist_word(3).pow(2);
  const bool ok = braid_equal(image, target);
  Outcome o = scalar(true, ok, {{"image_normal_form", normal_form(image).to_string()},
                                {"target_normal_form", normal_form(target).to_string()}});
  o.expected_text = "Psi(center) = (s1 s2)^6";
  o.actual_text = ok ? "equal" : "different";
  return o;
}

Outcome theta_kernel_gens(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (int i = 1; i <= 4; ++i)
    for (int p = 1; p <= 4; ++p)
      for (int q = p + 1; q <= 4; ++q) {
        BraidWord expected(3, {});
        std::string text = "1";
        if (p != i && q != i) {
          auto [pp, qq] = relabel_after_deletion(p, q, i);
          expected = pure_gen(pp, qq, 3);
          text = apq_name(pp, qq);
        }
        if (k == corrupt) {
          expected = expected * pure_gen(1, 2, 3);
          text += " A12";
        }
        BraidWord image = delete_strand(pure_gen(p, q, 4), i);
        t.add("Theta" + std::to_string(i) + "(" + apq_name(p, q) + ")", text, image.to_string(),
              braid_equal(image, expected));
        ++k;
      }
  return t.finish();
}

struct EllRow {
  int i;
  const char* artin;
};

const EllRow kEllRows[] = {{4, "A14 A24 A34"}, {3, "A13 A23 A34"}, {2, "A12 A23 A24"}};

Outcome ell_braid_identities(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : kEllRows) {
    BraidWord expected = parse_braid(row.artin, 4);
    std::string text = row.artin;
    if (k == corrupt) {
      expected = expected * pure_gen(1, 2, 4);
      text += " A12";
    }
    BraidWord l = ell(row.i);
    t.add("l" + std::to_string(row.i), text, l.to_string(), braid_equal(l, expected));
    ++k;
  }
  return t.finish();
}

Outcome ell_perm_trivial(const Config&, int) {
  json expected = json::array();
  json actual = json::array();
  for (int i = 2; i <= 4; ++i) {
    expected.push_back("id");
    actual.push_back(braid_perm(ell(i)).to_string());
  }
  Outcome o = scalar(expected, actual);
  o.expected_text = "id, id, id";
  o.actual_text = actual[0].get<std::string>() + ", " + actual[1].get<std::string>() + ", " +
                  actual[2].get<std::string>();
  return o;
}

Outcome ell_psi_minus_identity(const Config&, int corrupt) {
  Table t;
  const IntMatrix minus_id{{-1, 0}, {0, -1}};
  int k = 0;
  for (int i = 2; i <= 4; ++i) {
    IntMatrix expected = k == corrupt ? corrupt_matrix(minus_id) : minus_id;
    IntMatrix actual = hom_matrix(braid_action(ell(i)));
    t.add("psi(l" + std::to_string(i) + ")", to_json(expected), to_json(actual), expected == actual);
    ++k;
  }
  return t.finish();
}

const EllRow kTheta4EllRows[] = {{2, "A12 A23"}, {3, "A13 A23"}, {4, "1"}};

Outcome ell_theta4_images(const Config&, int corrupt) {
  Table t;
  int k = 0;
  for (const auto& row : kTheta4EllRows) {
    Word expected = p3().parse_word(row.artin);
    if (k == corrupt) expected = corrupt_word(expected);
    BraidWord image = delete_strand(ell(row.i), 4);
    t.add("Theta4(l" + std::to_string(row.i) + ")", p3().alphabet().format(expected), image.to_string(),
          braid_equal(image, p3_word_to_braid(expected)));
    ++k;
  }
  return t.finish();
}

Outcome theta_pairs_surjective(const Config& config, int) {
  json actual = json::array();
  std::size_t surjective = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      std::vector<Word> images;
      json names = json::array();
      for (auto [p, q] : strand_kernel_generators(j)) {
        Word w = identify_p3_generator(delete_strand(pure_gen(p, q, 4), i));
        names.push_back(k3().alphabet().format(w));
        images.push_back(std::move(w));
      }
      auto ct = todd_coxeter(k3(), images, config.max_cosets);
      if (ct.ncosets() == 1) ++surjective;
      actual.push_back({{"i", i}, {"j", j}, {"images", names}, {"index", ct.ncosets()}});
    }
  Outcome o;
  o.expected = {{"pairs", 12}, {"index", 1}};
  o.actual = {{"pairs", actual}, {"index_one", surjective}};
  o.passed = surjective == 12;
  o.expected_text = "12/12 pairs of index 1";
  o.actual_text = std::to_string(surjective) + "/12 pairs of index 1";
  return o;
}

Outcome ell_surjective(const Config& config, int) {
  std::vector<Word> images;
  json evidence = json::array();
  for (const auto& row : kTheta4EllRows) {
    Word w = k3().parse_word(row.artin);
    if (!braid_equal(delete_strand(ell(row.i), 4), p3_word_to_braid(w)))
      throw Error("Theta4(l" + std::to_string(row.i) + ") differs from " + row.artin);
    evidence.push_back(row.artin);
    images.push_back(std::move(w));
  }
  auto ct = todd_coxeter(k3(), images, config.max_cosets);
  return scalar(1, ct.ncosets(), {{"images", evidence}});
}

Outcome cf_images_generate_p3(const Config& config, int) {
  std::vector<Word> images;
  json evidence = json::array();
  for (const auto& row : kCfRows) {
    if (row.q != 4) continue;
    Word w = p3().parse_word(row.image);
    if (!braid_equal(cardano_ferrari(pure_gen(row.p, row.q, 4)), p3_word_to_braid(w)))
      throw Error("Psi(" + apq_name(row.p, row.q) + ") differs from " + row.image);
    evidence.push_back(row.image);
    images.push_back(std::move(w));
  }
  auto ct = todd_coxeter(p3(), images, config.max_cosets);
  return scalar(1, ct.ncosets(), {{"images", evidence}});
}

Outcome theta_pair_infinite(const Config&, int) {
  std::vector<std::vector<BigInt>> rows;
  json names = json::array();
  for (auto [p, q] : strand_kernel_generators(3)) {
    Word w = identify_p3_generator(delete_strand(pure_gen(p, q, 4), 4));
    names.push_back(p3().alphabet().format(w));
    std::vector<BigInt> v;
    for (auto x : abelianize(w)) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  const std::size_t image_rank = rank(IntMatrix::from_rows(rows, 3));
  const std::size_t b1 = abelianization(p3()).free_rank;
  Outcome o = scalar(json{{"image_rank", 2}, {"b1_P3", 3}, {"infinite_index", true}},
                     json{{"image_rank", image_rank}, {"b1_P3", b1}, {"infinite_index", image_rank < b1}},
                     {{"images", names}});
  o.expected_text = "rank 2 < 3";
  o.actual_text = "rank " + std::to_string(image_rank) + (image_rank < b1 ? " < " : " >= ") + std::to_string(b1);
  return o;
}

Outcome j_rank5(const Config&, int) {
  auto j = SubgroupAutomaton::from_quotient(2, xi_images());
  json basis = json::array();
  for (const auto& w : j.basis()) basis.push_back(to_string(w));
  Outcome o = scalar(json{{"index", 4}, {"basis_size", 5}},
                     json{{"index", j.index()}, {"basis_size", j.basis().size()}}, {{"basis", basis}});
  o.expected_text = "index 4, basis 5";
  o.actual_text = "index " + std::to_string(j.index()) + ", basis " + std::to_string(j.basis().size());
  return o;
}

Outcome phi_hom_property(const Config& config, int) {
  std::mt19937_64 rng(config.seed);
  std::size_t ok = 0;
  const std::size_t trials = 200;
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = 3 + static_cast<int>(t % 3);
    Kappa k = random_kappa(rng, n);
    Kappa kp = random_kappa(rng, n);
    if (compose(build_phi(kp), build_phi(k)) == build_phi(k * kp))
      ++ok;
    else if (failures.size() < 5)
      failures.push_back({{"trial", t}, {"n", n}});
  }
  Outcome o = scalar(trials, ok, {{"seed", config.seed}, {"failures", failures}});
  o.expected_text = std::to_string(trials) + "/" + std::to_string(trials) + " identities";
  o.actual_text = std::to_string(ok) + "/" + std::to_string(trials) + " identities";
  return o;
}

Outcome phi_monodromy_coinvariants(const Config&, int) {
  json expected = json::array();
  json actual = json::array();
  bool all = true;
  std::string text;
  for (int n = 3; n <= 6; ++n) {
    std::vector<IntMatrix> mats;
    for (const auto& k : monodromy_generators(n)) {
      IntMatrix m = phi_monodromy_matrix(k);
      if (m != hom_matrix(build_phi(k))) throw Error("monodromy block form disagrees with the Phi matrix");
      mats.push_back(std::move(m));
    }
    AbelianStructure c = coinvariants(mats, static_cast<std::size_t>(n));
    expected.push_back({{"n", n}, {"free_rank", n - 2}});
    actual.push_back({{"n", n}, {"free_rank", c.free_rank}, {"coinvariants", c.to_string()}});
    all = all && c.free_rank == static_cast<std::size_t>(n - 2);
    text += (text.empty() ? "" : ", ") + std::to_string(c.free_rank);
  }
  Outcome o;
  o.expected = expected;
  o.actual = actual;
  o.passed = all;
  o.expected_text = "free ranks 1, 2, 3, 4";
  o.actual_text = "free ranks " + text;
  return o;
}

Outcome presentation_sanity(const Config&, int) {
  json expected = {{"SL2", "Z_12"}, {"P3", "Z^3"}, {"K3", "Z^2"}};
  json actual = {{"SL2", abelianization(sl2z_presentation()).to_string()},
                 {"P3", abelianization(p3()).to_string()},
                 {"K3", abelianization(k3()).to_string()}};
  Outcome o = scalar(expected, actual);
  o.expected_text = "Z_12, Z^3, Z^2";
  o.actual_text = actual["SL2"].get<std::string>() + ", " + actual["P3"].get<std::string>() + ", " +
                  actual["K3"].get<std::string>();
  return o;
}

// ---------------------------------------------------------------------------
// Registry

using CheckFn = std::function<Outcome(const Config&, int)>;

struct Entry {
  std::string id;
  std::string claim;
  CheckFn fn;
  bool table = false;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"appendix.sigma_actions", "conjugation by s_i^(+-1) on a, b: 12 tabulated images", sigma_action_table, true},
      {"appendix.apq_actions", "conjugation action of the six A_pq on a, b", apq_action_table, true},
      {"appendix.apq_matrices", "abelianized action matrices of the six A_pq", apq_matrix_table, true},
      {"appendix.st_words", "S/T expressions of the A_pq matrices, e.g. A24 = T^2, A12 = (TST)^-2", apq_st_word_table, true},
      {"braid.center_trivial_action", "the full twist of B_4 acts trivially on <a, b>", center_trivial_action},
      {"perm.xi_images", "a, b map to (1,2)(3,4), (1,3)(2,4), a normal Klein subgroup of S_4", perm_xi_images},
      {"sl2.S_index3", "the four generators span an index-3 subgroup of SL_2(Z)", sl2_s_index3},
      {"sl2.sanov_index12", "<T^2, (TST)^2> has index 12 in SL_2(Z)", sl2_sanov_index12},
      {"sl2.gamma2_ab", "level-2 congruence subgroup abelianizes to Z^2 x Z_2", sl2_gamma2_ab},
      {"sl2.gamma2_b1", "first Betti number of the level-2 congruence subgroup is 2", sl2_gamma2_b1},
      {"stab.fourgen_in_stabH", "the four generators and inverses preserve H = <a, b^2, b a b^-1>", stab_fourgen},
      {"homology.H_coinvariants_rank1", "coinvariants of H_1(H) under the four generators have rank 1", h_coinvariants},
      {"homology.H_invariants_rank1", "invariants of the transposed action have rank 1", h_invariants},
      {"k4.b1_5", "K_4 (index 24 in SAut(F_2)) abelianizes to Z^5", k4_b1_5},
      {"k4.excessive", "b_1(K_4) = 5 exceeds b_1 of the level-2 subgroup = 2", k4_excessive},
      {"gammaplus.ab", "kernel of SAut(F_2) -> S_3 abelianizes to Z^2 x Z_2^3", gammaplus_ab},
      {"gammaplus.index3_gl09", "four generators plus inner automorphisms have index 3", gammaplus_index3},
      {"cf.generator_table", "Cardano-Ferrari images of the six A_pq", cf_generator_table, true},
      {"cf.center_square", "Cardano-Ferrari sends the B_4 full twist to the square of the B_3 full twist", cf_center_square},
      {"theta.kernel_gens", "strand deletion on Artin generators, 24 cases", theta_kernel_gens, true},
      {"ell.braid_identities", "l_2, l_3, l_4 as products of Artin generators", ell_braid_identities, true},
      {"ell.perm_trivial", "l_2, l_3, l_4 are pure", ell_perm_trivial},
      {"ell.psi_minus_identity", "l_2, l_3, l_4 act as -I on H_1(F_2)", ell_psi_minus_identity, true},
      {"ell.theta4_images", "deleting strand 4 from l_2, l_3, l_4", ell_theta4_images, true},
      {"thmsec.theta_pairs_surjective", "Theta_i(Ker Theta_j) = K_3 for all 12 ordered pairs", theta_pairs_surjective},
      {"thmsec.ell_surjective", "Theta_4(<l_2, l_3, l_4>) = K_3", ell_surjective},
      {"prosec.cf_frobenius", "Cardano-Ferrari images of Ker Theta_4 generate P_3", cf_images_generate_p3},
      {"prosec.theta_pair_infinite", "Theta_4(Ker Theta_3) has abelianized rank 2 < 3, so infinite index in P_3", theta_pair_infinite},
      {"j.rank5", "kernel of F_2 -> V_4 has index 4 and is free of rank 5", j_rank5},
      {"phi.hom_property", "Phi is a homomorphism on random kappa pairs, n = 3..5", phi_hom_property},
      {"phi.monodromy_coinvariants", "monodromy coinvariants have free rank n - 2 for n = 3..6", phi_monodromy_coinvariants},
      {"presentation.sanity", "SL_2(Z), P_3, K_3 abelianize to Z_12, Z^3, Z^2", presentation_sanity},
  };
  return r;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw UnknownCheck(id);
}

std::string error_kind_of(const std::exception& e) {
  if (dynamic_cast<const CosetLimitExceeded*>(&e)) return "CosetLimitExceeded";
  if (dynamic_cast<const RelatorViolated*>(&e)) return "RelatorViolated";
  if (dynamic_cast<const IncompleteTable*>(&e)) return "IncompleteTable";
  if (dynamic_cast<const NotMember*>(&e)) return "NotMember";
  if (dynamic_cast<const NotStabilized*>(&e)) return "NotStabilized";
  if (dynamic_cast<const NotPure*>(&e)) return "NotPure";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "std::exception";
}

}  // namespace

json CheckResult::to_json() const {
  json j = {{"id", id},           {"passed", passed},         {"expected", expected},
            {"actual", actual},   {"paper_anchor", claim},    {"elapsed_ms", elapsed_ms}};
  return j;
}

CheckResult CheckResult::from_json(const json& j) {
  CheckResult r;
  r.id = j.at("id").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.expected = j.at("expected");
  r.actual = j.at("actual");
  r.claim = j.at("paper_anchor").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (r.actual.is_object() && r.actual.contains("error_kind"))
    r.error_kind = r.actual["error_kind"].get<std::string>();
  return r;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool is_registered(const std::string& id) {
  return std::find(check_ids().begin(), check_ids().end(), id) != check_ids().end();
}

const std::vector<std::string>& table_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry())
      if (e.table) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool negative_control_rejected(const std::string& id, const Config& config) {
  const Entry& e = find_entry(id);
  if (!e.table) throw DomainError("check '" + id + "' has no table to corrupt");
  return !e.fn(config, 0).passed;
}

CheckResult run_check(const std::string& id, const Config& config) {
  const Entry& e = find_entry(id);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = e.fn(config, -1);
    if (e.table) {
      const bool rejected = negative_control_rejected(id, config);
      o.expected["negative_control"] = "rejected";
      o.actual["negative_control"] = rejected ? "rejected" : "accepted";
      o.passed = o.passed && rejected;
    }
  } catch (const CosetLimitExceeded& ex) {
    throw CosetLimitExceeded(ex.limit(), "check " + id + ": " + ex.what());
  }
  CheckResult r;
  r.id = id;
  r.passed = o.passed;
  r.expected = o.expected.is_object() ? std::move(o.expected) : json{{"value", std::move(o.expected)}};
  r.actual = o.actual.is_object() ? std::move(o.actual) : json{{"value", std::move(o.actual)}};
  r.expected["summary"] = o.expected_text;
  r.actual["summary"] = o.actual_text;
  r.claim = e.claim;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_all(const Config& config) {
  std::vector<CheckResult> out;
  for (const auto& e : registry()) {
    if (!config.filter.empty() &&
        std::none_of(config.filter.begin(), config.filter.end(),
                     [&](const std::string& pat) { return glob_match(pat, e.id); }))
      continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      out.push_back(run_check(e.id, config));
    } catch (const std::exception& ex) {
      CheckResult r;
      r.id = e.id;
      r.passed = false;
      r.claim = e.claim;
      r.error_kind = error_kind_of(ex);
      r.expected = {{"summary", "completed check"}};
      r.actual = {{"error_kind", r.error_kind}, {"error", ex.what()}, {"summary", r.error_kind}};
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

}  // namespace gtkit
