#include "gtkit/cli.hpp"

#include "gtkit/catalog.hpp"
#include "gtkit/checks.hpp"
#include "gtkit/error.hpp"
#include "gtkit/stallings.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gtkit {

namespace {

std::size_t default_max_cosets() {
  const char* env = std::getenv(kMaxCosetsEnv);
  if (!env || !*env) return kDefaultMaxCosets;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw ParseError(std::string(kMaxCosetsEnv) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_words(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      auto b = piece.find_first_not_of(' ');
      if (b == std::string::npos) continue;
      out.push_back(piece.substr(b, piece.find_last_not_of(' ') - b + 1));
    }
  }
  return out;
}

Alphabet basis_alphabet(int k) {
  static const char* short_names[] = {"x", "y", "z", "u", "v"};
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.push_back(k <= 5 ? short_names[i] : "y" + std::to_string(i + 1));
  return Alphabet(names);
}

SubgroupAutomaton automaton_from(const std::string& kernel, const std::vector<std::string>& perms, int degree) {
  if (!kernel.empty()) {
    if (kernel == "pi") return SubgroupAutomaton::from_quotient(2, pi_images());
    if (kernel == "xi") return SubgroupAutomaton::from_quotient(2, xi_images());
    throw ParseError("unknown kernel '" + kernel + "' (expected pi or xi)");
  }
  if (perms.empty()) throw ParseError("give --kernel or one permutation per generator");
  std::vector<Permutation> images;
  for (const auto& p : perms) images.push_back(Permutation::parse(p, degree));
  return SubgroupAutomaton::from_quotient(static_cast<int>(images.size()), images);
}

void print_text(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id
        << "  expected " << r.expected.value("summary", "") << "  actual " << r.actual.value("summary", "");
    if (!r.error_kind.empty()) out << " (" << r.actual.value("error", "") << ")";
    out << "  [" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms]\n";
  }
  out << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-theory verification kit"};
  app.require_subcommand(1);
  int code = kExitOk;

  std::size_t max_cosets = 0;
  std::uint64_t seed = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "run registered checks");
  bool all = false, as_json = false, list = false;
  std::vector<std::string> checks;
  verify->add_flag("--all", all, "run every check (the default)");
  verify->add_option("--check", checks, "check id or glob; repeatable");
  verify->add_flag("--json", as_json, "JSON array output");
  verify->add_flag("--list", list, "list check ids and exit");
  verify->add_option("--max-cosets", max_cosets, "coset limit")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for randomized checks");

  // braid
  auto* braid = app.add_subcommand("braid", "braid words");
  braid->require_subcommand(1);
  int strands = 4;
  std::string w1, w2;
  auto* nf = braid->add_subcommand("nf", "left normal form");
  nf->add_option("-n", strands, "strand count")->check(CLI::Range(2, kMaxStrands));
  nf->add_option("word", w1)->required();
  auto* eq = braid->add_subcommand("eq", "decide equality");
  eq->add_option("-n", strands, "strand count")->check(CLI::Range(2, kMaxStrands));
  eq->add_option("u", w1)->required();
  eq->add_option("v", w2)->required();
  auto* perm = braid->add_subcommand("perm", "strand permutation");
  perm->add_option("-n", strands, "strand count")->check(CLI::Range(2, kMaxStrands));
  perm->add_option("word", w1)->required();

  // tc
  auto* tc = app.add_subcommand("tc", "coset enumeration over a presentation file");
  std::string pres_file;
  std::vector<std::string> subwords;
  bool ab = false;
  tc->add_option("file", pres_file, "presentation file")->required();
  tc->add_option("words", subwords, "subgroup generators (comma separated)");
  tc->add_flag("--ab", ab, "print the subgroup abelianization");
  tc->add_option("--max-cosets", max_cosets, "coset limit")->check(CLI::PositiveNumber);

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string matrix_text;
  snf->add_option("matrix", matrix_text, "e.g. [[2,4],[6,8]]")->required();

  // sl2word
  auto* sl2 = app.add_subcommand("sl2word", "S/T word of a matrix in SL_2(Z)");
  std::string sl2_text;
  sl2->add_option("matrix", sl2_text, "e.g. [[1,2],[0,1]]")->required();

  // subgroup
  auto* sub = app.add_subcommand("subgroup", "finite-index subgroups of free groups");
  sub->require_subcommand(1);
  std::string kernel;
  std::vector<std::string> perms;
  int degree = 0;
  std::string word_text;
  auto* basis = sub->add_subcommand("basis", "Schreier basis of a kernel");
  auto* rewrite = sub->add_subcommand("rewrite", "rewrite a member word in the basis");
  for (auto* c : {basis, rewrite}) {
    c->add_option("--kernel", kernel, "named kernel: pi (F2 -> Z2) or xi (F2 -> V4)");
    c->add_option("--image", perms, "image permutation of the next generator; repeatable");
    c->add_option("--degree", degree, "permutation degree")->check(CLI::Range(1, kMaxClosureDegree));
  }
  rewrite->add_option("word", word_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (max_cosets == 0) max_cosets = default_max_cosets();

    if (*verify) {
      if (list) {
        for (const auto& id : check_ids()) out << id << '\n';
        return kExitOk;
      }
      for (const auto& pat : checks)
        if (std::none_of(check_ids().begin(), check_ids().end(),
                         [&](const std::string& id) { return glob_match(pat, id); })) {
          err << "unknown check: " << pat << '\n';
          return kExitUsage;
        }
      Config config;
      config.max_cosets = max_cosets;
      config.seed = seed;
      config.filter = all ? std::vector<std::string>{} : checks;
      config.output = as_json ? OutputFormat::json : OutputFormat::text;
      auto results = run_all(config);
      if (config.output == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(r.to_json());
        out << arr.dump(2) << '\n';
      } else {
        print_text(results, out);
      }
      bool failed = false, limited = false;
      for (const auto& r : results) {
        if (r.passed) continue;
        if (r.error_kind == "CosetLimitExceeded")
          limited = true;
        else
          failed = true;
      }
      code = failed ? kExitFailure : limited ? kExitLimit : kExitOk;
    } else if (*braid) {
      BraidWord u = parse_braid(w1, strands);
      if (*nf) {
        out << normal_form(u).to_string() << '\n';
      } else if (*eq) {
        out << (braid_equal(u, parse_braid(w2, strands)) ? "equal" : "not equal") << '\n';
      } else {
        out << braid_perm(u).to_string() << '\n';
      }
    } else if (*tc) {
      Presentation p = read_presentation_file(pres_file);
      std::vector<Word> gens;
      for (const auto& w : split_words(subwords)) gens.push_back(p.parse_word(w));
      CosetTable ct = todd_coxeter(p, gens, max_cosets);
      out << "index: " << ct.ncosets() << '\n';
      if (ab) out << "abelianization: " << abelianization(reidemeister_schreier(ct)).to_string() << '\n';
    } else if (*snf) {
      IntMatrix m = IntMatrix::parse(matrix_text);
      SmithDecomposition s = smith_normal_form(m);
      std::string diag;
      for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k)
        diag += (k ? "," : "") + s.d(k, k).str();
      out << "diagonal: [" << diag << "]\n";
      out << "cokernel: " << cokernel(m).to_string() << '\n';
    } else if (*sl2) {
      out << to_string(sl2_word(IntMatrix::parse(sl2_text))) << '\n';
    } else if (*sub) {
      int deg = degree;
      if (deg == 0)
        for (const auto& p : perms)
          for (char c : p)
            if (c >= '1' && c <= '9') deg = std::max(deg, c - '0');
      SubgroupAutomaton a = automaton_from(kernel, perms, std::max(deg, 1));
      Alphabet ambient(a.ambient_rank());
      Alphabet letters = basis_alphabet(a.basis_rank());
      if (*basis) {
        out << "index: " << a.index() << '\n';
        for (int k = 0; k < a.basis_rank(); ++k)
          out << letters.names()[static_cast<std::size_t>(k)] << " = "
              << ambient.format(a.basis()[static_cast<std::size_t>(k)]) << '\n';
      } else {
        out << letters.format(a.rewrite(ambient.parse(word_text))) << '\n';
      }
    }
  } catch (const CosetLimitExceeded& e) {
    err << "CosetLimitExceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotMember& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RelatorViolated& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownCheck& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  return code;
}

}  // namespace gtkit
