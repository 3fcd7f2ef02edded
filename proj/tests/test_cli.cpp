#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkit/checks.hpp"
#include "gtkit/cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace gtkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSl2 = GTKIT_DATA_DIR "/sl2z.pres";
const std::string kPresaut = GTKIT_DATA_DIR "/presaut.pres";

}  // namespace

TEST_CASE("verify") {
  Run all = cli({"verify", "--all", "--json"});
  CHECK(all.code == 0);
  auto arr = nlohmann::json::parse(all.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == check_ids().size());
  for (std::size_t k = 0; k < arr.size(); ++k) CHECK(arr[k]["id"] == check_ids()[k]);

  Run k4 = cli({"verify", "--check", "k4.b1_5"});
  CHECK(k4.code == 0);
  CHECK(k4.out.find("expected Z^5") != std::string::npos);
  CHECK(k4.out.find("1/1 checks passed") != std::string::npos);

  CHECK(cli({"verify", "--check", "bogus"}).code == 2);
  CHECK(cli({"verify", "--check", "sl2.*", "--check", "bogus*"}).code == 2);
  CHECK(cli({"verify", "--check", "k4.*", "--max-cosets", "2"}).code == 3);
  CHECK(cli({"verify", "--max-cosets", "0"}).code == 2);
  CHECK(cli({"verify", "--list"}).out.find("ell.theta4_images") != std::string::npos);
}

TEST_CASE("verify --seed is reproducible") {
  Run a = cli({"verify", "--check", "phi.*", "--json", "--seed", "7"});
  Run b = cli({"verify", "--check", "phi.*", "--json", "--seed", "7"});
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  REQUIRE(ja.size() == jb.size());
  for (std::size_t k = 0; k < ja.size(); ++k) CHECK(ja[k]["actual"] == jb[k]["actual"]);
}

TEST_CASE("environment override of the coset limit") {
  setenv(kMaxCosetsEnv, "2", 1);
  CHECK(cli({"verify", "--check", "sl2.sanov_index12"}).code == 3);
  CHECK(cli({"verify", "--check", "sl2.sanov_index12", "--max-cosets", "1000"}).code == 0);
  setenv(kMaxCosetsEnv, "many", 1);
  CHECK(cli({"verify", "--check", "sl2.sanov_index12"}).code == 2);
  unsetenv(kMaxCosetsEnv);
}

TEST_CASE("braid") {
  Run eq = cli({"braid", "eq", "-n", "4", "l4", "A14 A24 A34"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "equal\n");
  CHECK(cli({"braid", "eq", "-n", "4", "s1", "s2"}).out == "not equal\n");
  CHECK(cli({"braid", "perm", "-n", "4", "s1 s3^-1"}).out == "(1,2)(3,4)\n");
  CHECK(cli({"braid", "nf", "-n", "4", "s1 s1^-1"}).out == "Delta^0 ·\n");
  CHECK(cli({"braid", "nf", "-n", "3", "s1 s2 s1 s1 s2 s1"}).out == "Delta^2 ·\n");
  CHECK(cli({"braid", "nf", "-n", "4", "s7"}).code == 2);
  CHECK(cli({"braid", "nf", "-n", "9", "s1"}).code == 2);
  CHECK(cli({"braid", "twist"}).code == 2);
}

TEST_CASE("tc") {
  Run sanov = cli({"tc", kSl2, "t t, t s t t s t"});
  CHECK(sanov.code == 0);
  CHECK(sanov.out == "index: 12\n");
  CHECK(cli({"tc", kSl2, "t t", "t s t t s t"}).out == "index: 12\n");
  CHECK(cli({"tc", kSl2, "s, t"}).out == "index: 1\n");
  CHECK(cli({"tc", kPresaut, "s1, s2, s3"}).out == "index: 1\n");
  Run ab = cli({"tc", kSl2, "--ab", "s, t"});
  CHECK(ab.out == "index: 1\nabelianization: Z_12\n");
  Run cyc = cli({"tc", kSl2, "t", "--max-cosets", "5000"});
  CHECK(cyc.code == 3);
  CHECK(cyc.err.find("CosetLimitExceeded") != std::string::npos);
  CHECK(cli({"tc", kSl2, "u"}).code == 2);
  CHECK(cli({"tc", "/nonexistent.pres", "s"}).code == 2);
}

TEST_CASE("snf and sl2word") {
  Run snf = cli({"snf", "[[2,0],[0,3]]"});
  CHECK(snf.code == 0);
  CHECK(snf.out == "diagonal: [1,6]\ncokernel: Z_6\n");
  CHECK(cli({"snf", "[[1,2"}).code == 2);
  CHECK(cli({"sl2word", "[[1,2],[0,1]]"}).out == "t t\n");
  CHECK(cli({"sl2word", "[[2,0],[0,1]]"}).code == 2);
}

TEST_CASE("subgroup") {
  Run basis = cli({"subgroup", "basis", "--kernel", "pi"});
  CHECK(basis.code == 0);
  CHECK(basis.out == "index: 2\nx = a\ny = b^2\nz = b a b^-1\n");
  CHECK(cli({"subgroup", "rewrite", "--kernel", "pi", "b a b^-1"}).out == "z\n");
  CHECK(cli({"subgroup", "rewrite", "--kernel", "pi", "b b a"}).out == "y x\n");
  CHECK(cli({"subgroup", "basis", "--kernel", "xi"}).out.rfind("index: 4\n", 0) == 0);
  CHECK(cli({"subgroup", "basis", "--image", "(1,2)", "--image", "()", "--degree", "2"}).out.rfind("index: 2\n", 0) == 0);
  CHECK(cli({"subgroup", "rewrite", "--kernel", "pi", "b"}).code == 2);
  CHECK(cli({"subgroup", "basis", "--kernel", "zeta"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
