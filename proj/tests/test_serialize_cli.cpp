#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcore/cli.hpp"
#include "tcore/serialize.hpp"

using namespace tcore;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("json forms") {
  CHECK(Json(Partition{5, 4, 4, 1}).dump() == "[5,4,4,1]");
  CHECK(Json(CountPolynomial{1, 0, 2}).dump() == R"(["1","0","2"])");
  CHECK(Json(AbacusWindow{-2, {1, 0, 1}}).dump() == R"({"bits":"101","start":-2})");
  CHECK(Json(CoreDescriptor{3, {1, 1, -2}}).dump() == "[1,1,-2]");
  DiscreteDistribution d;
  d.support.push_back({0, Rational(1, 3)});
  d.support.push_back({2, Rational(2, 3)});
  CHECK(Json(d).dump() == R"([{"p":"1/3","size":0},{"p":"2/3","size":2}])");

  for (const char* text : {"[5,4,4,1]", "[]"}) CHECK(Json(Json::parse(text).get<Partition>()).dump() == text);
  CHECK(Json(Json::parse(R"(["1","0","2"])").get<CountPolynomial>()).dump() == R"(["1","0","2"])");
  CHECK(Json(Json::parse(R"(["1/2","0/1","1/2"])").get<RationalPolynomial>()).dump() == R"(["1/2","0/1","1/2"])");
  CHECK(Json::parse(R"({"start":-2,"bits":"101"})").get<AbacusWindow>() == AbacusWindow{-2, {1, 0, 1}});
  CHECK(Json::parse("[1,1,-2]").get<CoreDescriptor>() == CoreDescriptor{3, {1, 1, -2}});
  const auto back = Json::parse(R"([{"size":0,"p":"1/3"}])").get<DiscreteDistribution>();
  CHECK(back.support[0].probability == Rational(1, 3));
  CHECK_THROWS(Json::parse("[1,2]").get<Partition>());
  CHECK_THROWS(Json::parse(R"({"start":0,"bits":"012"})").get<AbacusWindow>());
}

TEST_CASE("partition literals") {
  CHECK(parse_partition_list("5,4,4,1") == Partition{5, 4, 4, 1});
  CHECK(parse_partition_list("") == Partition{});
  CHECK_THROWS_AS(parse_partition_list("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_list("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_list("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_list("a"), std::invalid_argument);
}

TEST_CASE("cli examples") {
  CHECK(run({"count-cores", "--r", "2", "--s", "2", "--t", "3"}).out == "{\"count\":\"4\"}\n");
  CHECK(run({"expected-size", "--r", "12", "--s", "12", "--t", "5"}).out == "{\"mean\":\"12/1\"}\n");
  const auto fixed = run({"fixed-core", "--r", "4", "--s", "5", "--t", "3", "--core", "2,2,1,1"});
  REQUIRE(fixed.code == 0);
  const auto j = Json::parse(fixed.out);
  CHECK(j["count"] == "9");
  const CountPolynomial inner{1, 0, 0, 1, 0, 0, 1};
  CHECK(j["genfun"].get<CountPolynomial>() == CountPolynomial::monomial(6) * inner * inner);
  const auto core = Json::parse(run({"core", "--t", "5", "--partition", "5,4,4,1"}).out);
  CHECK(core["core"].get<Partition>() == Partition{3, 1});
  CHECK(core["hooks_removed"] == 2);
}

TEST_CASE("cli output round-trips through json") {
  const std::vector<std::vector<std::string>> commands{
      {"count-cores", "--r", "4", "--s", "5", "--t", "3"},
      {"count-frame", "--r", "4", "--s", "5", "--t", "3"},
      {"large-s-count", "--r", "2", "--t", "3"},
      {"asymptotic", "--t", "3", "--kappa", "2", "--r", "100"},
      {"goddard", "--t", "5", "--tol", "1e-6"},
      {"swanepoel", "--t", "3", "--x", "pi/6", "--terms", "1000"},
      {"core", "--t", "3", "--partition", "5,4,4,1"},
      {"fixed-core", "--r", "4", "--s", "5", "--t", "3", "--core", "2,2,1,1", "--enumerate"},
      {"expected-size", "--r", "7", "--s", "3", "--t", "4"},
      {"exact-distribution", "--r", "6", "--s", "6", "--t", "3"},
      {"pgf", "--r", "3", "--t", "3"},
      {"sample", "--r", "10", "--s", "10", "--t", "3", "--n", "500", "--covariance"},
  };
  for (const auto& args : commands) {
    const auto res = run(args);
    INFO(args[0]);
    CHECK(res.code == 0);
    CHECK(res.err.empty());
    REQUIRE(!res.out.empty());
    CHECK(Json::parse(res.out).dump() + "\n" == res.out);
  }
}

TEST_CASE("cli errors and exit codes") {
  auto res = run({"count-cores", "--r", "2", "--s", "2", "--t", "1"});
  CHECK(res.code == 2);
  CHECK(Json::parse(res.err)["error"] == "validation");
  CHECK(res.err.find('\n') == res.err.size() - 1);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"count-cores", "--r", "2", "--t", "3"}).code == 2);
  CHECK(run({"core", "--t", "3", "--partition", "1,2"}).code == 2);
  res = run({"exact-distribution", "--r", "20", "--s", "20", "--t", "5", "--budget", "10"});
  CHECK(res.code == 1);
  CHECK(Json::parse(res.err)["error"] == "budget");
  CHECK(run({"fixed-core", "--r", "4", "--s", "5", "--t", "3", "--core", "2,1"}).code == 2);
}

TEST_CASE("sample output is byte-identical across runs") {
  const std::vector<std::string> args{"sample", "--r", "30", "--s", "30", "--t", "3", "--n", "3000", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto csv_args = args;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const auto c = run(csv_args);
  CHECK(c.out.rfind("# box=30x30 t=3 seed=42 n=3000\nvalue\n", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 3002);

  const auto dir = std::filesystem::temp_directory_path() / "tcore_cli_test";
  std::filesystem::create_directories(dir);
  const auto prefix = (dir / "run").string();
  auto file_args = args;
  file_args.insert(file_args.end(), {"--output", prefix});
  CHECK(run(file_args).out.empty());
  CHECK(slurp(prefix) == a.out);
  CHECK(slurp(prefix + ".samples.csv") == c.out);
  CHECK(slurp(prefix + ".histogram.csv").rfind("bin_left,bin_right,count,density\n", 0) == 0);
  std::filesystem::remove_all(dir);
}
