#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "sheet_atlas/cli.hpp"
#include "sheet_atlas/serialize.hpp"

using namespace sheet_atlas;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hitchin-dim of sp4") {
  const auto r = call({"hitchin-dim", "--genus", "2", "--kind", "C", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
}

TEST_CASE("sheet-info selects the S_Dix row") {
  const auto r = call({"--json", "sheet-info", "--kind", "C", "--rank", "2", "--levi", "1,1"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["id"] == "C2:S_Dix");
  CHECK(j["d"] == 4);
  CHECK(j["katsylo_order"] == 2);
  CHECK(j == sheet_json(find_sheet("C2:S_Dix")));
}

TEST_CASE("triple-verify") {
  const auto bad = call({"triple-verify", "--case", "sp4-slice", "--as-printed"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("result: FAIL") != std::string::npos);
  const auto good = call({"triple-verify", "--case", "sp4-slice"});
  CHECK(good.code == 0);
  CHECK(good.out.find("result: PASS") != std::string::npos);
  CHECK(call({"triple-verify", "--case", "bcd:C3,1,2"}).code == 0);
  CHECK(call({"triple-verify", "--case", "gl:3,1"}).code == 0);
  CHECK(call({"triple-verify", "--case", "sp4"}).code == 0);
  const auto m = call({"--json", "triple-verify", "--case", "gl:2,1", "--matrices"});
  REQUIRE(m.code == 0);
  CHECK(Json::parse(m.out)["matrices"]["h"][1][1] == "0/1");
}

TEST_CASE("error codes") {
  const auto parse = call({"hitchin-dim", "--genus", "two"});
  CHECK(parse.code == 2);
  CHECK_FALSE(parse.err.empty());
  CHECK(parse.out.empty());
  CHECK(call({}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"triple-verify", "--case", "what"}).code == 2);
  const auto domain = call({"hitchin-dim", "--genus", "1", "--kind", "C", "--rank", "2"});
  CHECK(domain.code == 1);
  CHECK(domain.err.find("genus") != std::string::npos);
  CHECK(call({"sheet-info", "--kind", "D", "--rank", "3", "--levi", "2,2"}).code == 1);
  CHECK(call({"mu-s", "--profile", "2,1,1", "--factors", "1,0"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("environment forces JSON") {
  setenv("SHEET_ATLAS_JSON", "1", 1);
  const auto r = call({"realform", "--label", "SU:3,1", "--genus", "2"});
  unsetenv("SHEET_ATLAS_JSON");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["sheet_partition"] == Json::array({2, 1, 1}));
  CHECK(j["quasi_split"] == false);
  CHECK(j["extra"]["toledo_max"]["value"] == "2/1");
}

TEST_CASE("other subcommands") {
  const auto sheets = call({"--json", "sheets", "--kind", "A", "--rank", "4"});
  REQUIRE(sheets.code == 0);
  CHECK(Json::parse(sheets.out).size() == 5);
  CHECK(call({"sheets", "--kind", "C", "--rank", "2"}).out.find("C2:O_min") != std::string::npos);
  CHECK(call({"sheets", "--kind", "F4"}).out.find("~A2") != std::string::npos);

  const auto mu = call({"--json", "mu-s", "--profile", "2,1,1", "--factors", "1,-2,1;1,1"});
  REQUIRE(mu.code == 0);
  const Json jm = Json::parse(mu.out);
  CHECK(jm["in_heart"] == false);
  CHECK(jm["image"]["text"] == "λ^4 - 2*λ^2 + 1");

  const auto mult = call({"--json", "multiplicity", "--sheet", "C2:S_Dix", "--z", "5"});
  REQUIRE(mult.code == 0);
  const Json jmu = Json::parse(mult.out);
  CHECK(jmu["multiplicity"] == 2);
  CHECK(jmu["inertia_order"] == 1);
  CHECK(jmu["polarisations"] == 2);

  const auto h = call({"--json", "hitchin-dim", "--genus", "2", "--sheet", "C2:S_Dix"});
  REQUIRE(h.code == 0);
  const Json jh = Json::parse(h.out);
  CHECK(jh["dim_base"] == 10);
  CHECK(jh["dim_s_base"] == 2);
  CHECK(jh["components"] == 16);
  CHECK(jh["cameral_degree"] == 2);
  CHECK(jh["weights"] == Json::array({1}));
}

TEST_CASE("fixtures check and regeneration") {
  const std::string src = std::string(SHEET_ATLAS_SOURCE_DIR) + "/fixtures";
  const auto check = call({"fixtures", "--dir", src});
  CHECK(check.code == 0);
  const auto tmp = std::filesystem::temp_directory_path() / "sheet_atlas_fixture_test";
  std::filesystem::remove_all(tmp);
  CHECK(call({"fixtures", "--dir", tmp.string()}).code == 1);
  CHECK(call({"fixtures", "--regen", "--dir", tmp.string()}).code == 0);
  CHECK(call({"fixtures", "--dir", tmp.string()}).code == 0);
  std::filesystem::remove_all(tmp);
}
