#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = numsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

using Ints = std::vector<long long>;

}  // namespace

TEST_CASE("encode") {
  auto j = run_json({"encode", "--gens", "6,16,20,21,29", "--n", "6"});
  CHECK(j["command"] == "encode");
  CHECK(j["status"] == "ok");
  CHECK(j["position_vector"].get<Ints>() == Ints{3, 2, 1, 6, 7});
  CHECK(j["apery_set"].get<Ints>() == Ints{0, 16, 20, 21, 29, 37});
  CHECK(j["positions"].get<Ints>() == Ints{0, 3, 5, 6, 12, 19});

  CHECK(run_json({"encode", "--gens", "1", "--n", "3"})["position_vector"].get<Ints>() == Ints{1, 1});
  j = run_json({"encode", "--gens", "4,7,9", "--n", "4"});
  CHECK(j["position_vector"].get<Ints>() == Ints{2, 2, 4});
  CHECK(j["positions"].get<Ints>() == Ints{0, 2, 4, 8});

  const auto text = run({"encode", "--gens", "4,7,9", "--n", "4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("position_vector: 2,2,4\n") != std::string::npos);
  CHECK(text.out.find("apery_set: 4:{0,7,9,14}\n") != std::string::npos);
}

TEST_CASE("encode errors") {
  auto j = run_json({"encode", "--gens", "4,7,9", "--n", "5"}, 1);
  CHECK(j["status"] == "error");
  CHECK(j["error_message"].get<std::string>().find("n not in semigroup") != std::string::npos);
  j = run_json({"encode", "--gens", "4,6", "--n", "4"}, 1);
  CHECK(j["error_message"].get<std::string>().find("not cofinite") != std::string::npos);
  const auto text = run({"encode", "--gens", "4,6", "--n", "4"});
  CHECK(text.code == 1);
  CHECK(text.err.find("error: not cofinite") == 0);
}

TEST_CASE("decode") {
  auto j = run_json({"decode", "3,2,1,6,7"});
  CHECK(j["n"] == 6);
  CHECK(j["apery_set"].get<Ints>() == Ints{0, 16, 20, 21, 29, 37});
  CHECK(j["is_semigroup"] == true);
  CHECK(j["minimal_generators"].get<Ints>() == Ints{6, 16, 20, 21, 29});
  CHECK(j["multiplicity_is_n"] == true);
  CHECK(j["witness"].is_null());

  j = run_json({"decode", "1,1,1"});
  CHECK(j["minimal_generators"].get<Ints>() == Ints{1});
  CHECK(j["frobenius"] == -1);
  CHECK(j["genus"] == 0);
  CHECK(j["numerical_set"] == "{0→}");
  CHECK(j["multiplicity_is_n"] == false);

  j = run_json({"decode", "2,6"});
  CHECK(j["is_semigroup"] == false);
  CHECK(j["witness"].get<Ints>() == Ints{5, 5});
  CHECK_FALSE(j.contains("minimal_generators"));
  CHECK_FALSE(j.contains("frobenius"));
}

TEST_CASE("decode errors") {
  CHECK(run({"decode", "1,0,2"}).code == 1);
  CHECK(run({"decode", "1,x"}).code == 1);
  CHECK(run_json({"decode", "9223372036854775807,1"}, 3)["status"] == "error");
}

TEST_CASE("check") {
  auto j = run_json({"check", "2,2,4"});
  CHECK(j["is_semigroup"] == true);
  CHECK(j["is_semigroup_closed_form"] == true);
  CHECK(j["multiplicity_is_n"] == true);
  CHECK(j["representative"].get<Ints>() == Ints{1, 2, 1});
  CHECK(j["permutation"].get<Ints>() == Ints{3, 1, 2});
  CHECK(j["u"].get<Ints>() == Ints{1, 0, 1});

  j = run_json({"check", "1,1"});
  CHECK(j["is_semigroup"] == true);
  CHECK(j["multiplicity_is_n"] == false);

  j = run_json({"check", "2,6"});
  CHECK(j["is_semigroup"] == false);
  CHECK(j["is_semigroup_closed_form"] == false);

  j = run_json({"check", "3,2,1,6,7"});
  CHECK_FALSE(j.contains("is_semigroup_closed_form"));
  CHECK(j["gamma"].get<Ints>() == Ints{0, 1, 0, 0, 1});
}

TEST_CASE("enumerate") {
  auto j = run_json({"enumerate", "--n", "2", "--bound", "5", "--filter", "semigroups"});
  CHECK(j["count"] == 5);
  j = run_json({"enumerate", "--n", "3", "--bound", "2", "--filter", "all"});
  CHECK(j["count"] == 4);
  CHECK(j["vectors"][1].get<Ints>() == Ints{1, 2});

  const auto text = run({"enumerate", "--n", "3", "--bound", "2"});
  CHECK(text.out == "1,1\n1,2\n2,1\n2,2\ncount: 4\n");
  CHECK(run({"enumerate", "--n", "3", "--bound", "2", "--filter", "bogus"}).code == 1);
}

TEST_CASE("verify") {
  auto j = run_json({"verify", "tables", "--n", "4", "--bound", "20"});
  CHECK(j["passed"] == true);
  CHECK(j["suites"][0]["checked"] == 8000);

  j = run_json({"verify", "bijection", "--n", "5", "--bound", "6"});
  CHECK(j["suites"][0]["checked"] == 1296);
  CHECK(j["suites"][0]["unit"] == "round trips");

  j = run_json({"verify", "lemma31", "--max-frobenius", "8"});
  CHECK(j["passed"] == true);

  j = run_json({"verify", "all", "--n", "3", "--bound", "5", "--max-frobenius", "5"});
  CHECK(j["suites"].size() == 4);

  const auto text = run({"verify", "thm36", "--n", "3", "--bound", "4"});
  CHECK(text.out == "thm36: PASS, 16 vectors checked\nresult: PASS\n");

  CHECK(run({"verify", "tables", "--n", "6", "--bound", "2"}).code == 1);
  CHECK(run({"verify", "lemma31", "--max-frobenius", "30"}).code == 3);
  CHECK(run({"verify", "thm36", "--n", "12", "--bound", "10"}).code == 3);
}

TEST_CASE("perm") {
  auto j = run_json({"perm", "to-conversion", "4,2,3,5,1"});
  CHECK(j["conversion_vector"].get<Ints>() == Ints{0, 0, 1, 3, 0});
  j = run_json({"perm", "from-conversion", "0,0,1,3,0"});
  CHECK(j["permutation"].get<Ints>() == Ints{4, 2, 3, 5, 1});
  CHECK(run({"perm", "to-conversion", "1,1"}).code == 1);
  CHECK(run({"perm", "from-conversion", "0,2"}).code == 1);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"decode"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const std::vector<std::string> args{"decode", "3,2,1,6,7", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  // JSON mode: exactly one object.
  const auto out = run(args).out;
  CHECK(std::count(out.begin(), out.end(), '\n') == 1);
}
