#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jds/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "jds");
  std::vector<char *> argv;
  for (auto &a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = jds::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content) {
  const std::string path = "cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("predicate and n0") {
  const auto p = run({"predicate", "9", "2"});
  CHECK(p.code == 0);
  CHECK(p.out.find("not maximal: true") != std::string::npos);
  CHECK(run({"predicate", "8", "2"}).out.find("not maximal: false") != std::string::npos);
  const auto n = run({"n0", "18"});
  CHECK(n.code == 0);
  CHECK(n.out == "6\n");
}

TEST_CASE("invalid arguments exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"n0"}).code == 2);
  CHECK(run({"n0", "abc"}).code == 2);
  CHECK(run({"predicate", "5", "3"}).code == 2);
  CHECK(run({"families", "3", "2"}).code == 2);
  CHECK(run({"classify", "9", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "/nonexistent/file.json", "--m", "2"}).code == 2);
  CHECK(run({"predicate", "9", "2", "--n1", "5"}).code == 2);
}

TEST_CASE("tables --m 5") {
  const auto t = run({"tables", "--m", "5", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("n,m,family,added,total,status\n", 0) == 0);
  for (const char *row : {"16,5,", "18,5,", "25,5,", "49,5,"}) CHECK(t.out.find(row) != std::string::npos);
  for (const char *v : {",560,4928,", ",2466,11034,", ",601,53731,", ",1176,1908060,"})
    CHECK(t.out.find(v) != std::string::npos);
  const auto j = nlohmann::json::parse(run({"tables", "--m", "5", "--format", "json"}).out);
  CHECK(j["kind"] == "table");
  REQUIRE(j["rows"].size() == 4);
  for (const auto &r : j["rows"]) CHECK(r["check"] == "PASS");
}

TEST_CASE("classify reports and budget exhaustion") {
  const auto c = run({"classify", "9", "3", "--format", "json"});
  CHECK(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["kind"] == "classification");
  CHECK(j["total"] == 121);

  const auto b = run({"classify", "9", "4", "--budget", "1000"});
  CHECK(b.code == 3);
  CHECK(b.out.find("total") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"classify", "9", "3", "--format", "json"},
        std::vector<std::string>{"sub2", "9", "--format", "json"},
        std::vector<std::string>{"families", "12", "3", "--format", "csv"},
        std::vector<std::string>{"tables", "--m", "4", "--budget", "20000", "--format", "json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify reads exact point sets") {
  const std::string good = temp_file("good.json", R"([["1","1","0","0"],["1","0","1","0"],["0","0","1","1"]])");
  const auto g = run({"verify", good, "--m", "2"});
  CHECK(g.code == 0);
  CHECK(g.out.find("valid 2-distance set: true") != std::string::npos);

  const std::string bad = temp_file("bad.json", R"([["3","0"],["0","0"],["1","0"]])");
  CHECK(run({"verify", bad, "--m", "2"}).code == 1);

  const std::string quad = temp_file("quad.json", R"j([["1/2+1/2*sqrt(5)", "0"], ["1/2+-1/2*sqrt(5)", "0"]])j");
  const auto q = run({"verify", quad, "--m", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["spectrum"] == nlohmann::json::array({"5"}));
  CHECK(q.code == 1);  // 5 is odd, not a Johnson distance

  const std::string junk = temp_file("junk.json", R"({"not": "a list"})");
  CHECK(run({"verify", junk, "--m", "2"}).code == 2);
  for (const auto &p : {good, bad, quad, junk}) std::remove(p.c_str());
}

TEST_CASE("output file option") {
  const std::string path = "cli_test_out.txt";
  const auto r = run({"n0", "72", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "12");
  std::remove(path.c_str());
}

TEST_CASE("read_point_set") {
  const auto pts = jds::cli::read_point_set(R"j([["1/3", 2], ["sqrt(2)", "-1"]])j");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0][0] == jds::QuadNum(jds::Rational(1, 3)));
  CHECK(pts[1][0] == jds::QuadNum::sqrt_term(1, 2));
  CHECK_THROWS(jds::cli::read_point_set(R"([["1"], ["1", "2"]])"));
  CHECK_THROWS(jds::cli::read_point_set(R"([[1.5]])"));
}
