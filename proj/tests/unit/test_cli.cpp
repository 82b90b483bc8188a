#include <doctest.h>

#include <sstream>

#include "chaindepth/json.hpp"
#include "cli.hpp"

using namespace chaindepth;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  const auto he = run({"depth", "formula", "sporadic:He"});
  CHECK(he.code == 0);
  CHECK(he.out.starts_with("6\n"));
  const auto a5 = run({"depth", "exact", "alt:5"});
  CHECK(a5.code == 0);
  CHECK(a5.out.find("lambda=3 l=4") != std::string::npos);
  CHECK(a5.out.find("60 > 12 > 4 > 2 > 1") != std::string::npos);
  const auto g = run({"goldbach", "17"});
  CHECK(g.out == "17 = 3 + 3 + 11\n");
}

TEST_CASE("cli json output parses") {
  const auto r = run({"--format", "json", "chain", "ap1", "23"});
  REQUIRE(r.code == 0);
  const auto c = Json::parse(r.out).get<ChainDescriptor>();
  CHECK(c == ap1_chain(23));
  const auto t = run({"table", "sporadic", "--format", "json"});
  REQUIRE(t.code == 0);
  CHECK(Json::parse(t.out).at("depths").at("He") == 6);
  const auto w = run({"witness", "prop18", "1", "--format", "json"});
  CHECK(Json::parse(w.out).get<Prop18Witness>() == prop18_witness(1));
  const auto s = run({"search", "depth3-long", "2", "--format", "json"});
  CHECK(Json::parse(s.out).at("p") == 43);
}

TEST_CASE("cli subcommands") {
  CHECK(run({"classify", "depth3", "alt:7"}).out.starts_with("A_7: false"));
  CHECK(run({"bounds", "thm14", "psl:5,4,-"}).out.find("depth <= 40") != std::string::npos);
  CHECK(run({"bounds", "thm38", "psl:3,4,-", "--length", "10"}).out.find("k <= 2") != std::string::npos);
  CHECK(run({"chain", "l2p", "7"}).out.starts_with("L_2(7) > 7:3 > 7 > 1 (length 3)"));
  CHECK(run({"lattice", "sym:3"}).out.starts_with("6 subgroups"));
  const auto dot = run({"lattice", "cyc:4", "--format", "dot"});
  CHECK(dot.out.find("n2 -> n1") != std::string::npos);
  const auto dump = run({"lattice", "alt:4", "--dump", "--format", "json"});
  CHECK(Json::parse(dump.out).at("nodes").size() == 10);
  const auto repro = run({"repro", "all", "--criterion", "1"});
  CHECK(repro.code == 0);
  CHECK(repro.out.starts_with("[PASS] 1 "));
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"depth"}).code == cli::kUsage);
  CHECK(run({"goldbach", "17", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"goldbach", "17", "--format", "dot"}).code == cli::kUsage);
  CHECK(run({"goldbach", "8"}).code == cli::kDomain);
  CHECK(run({"depth", "formula", "psl2:6"}).code == cli::kDomain);
  CHECK(run({"classify", "depth3", "alt:4"}).code == cli::kDomain);
  CHECK(run({"depth", "exact", "alt:7"}).code == cli::kCap);
  CHECK(run({"search", "depth3-long", "6", "--limit", "1000"}).code == cli::kCap);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("environment overrides apply and flags win") {
  CHECK(run({"depth", "exact", "psl2:13"}, {{"DEPTH_MAX_ORDER", "1000"}}).code == cli::kCap);
  CHECK(run({"depth", "exact", "psl2:13", "--max-order", "1100"}, {{"DEPTH_MAX_ORDER", "1000"}}).code == cli::kOk);
  CHECK(run({"goldbach", "9"}, {{"DEPTH_FORMAT", "json"}}).out.starts_with("{"));
  CHECK(run({"goldbach", "9", "--format", "text"}, {{"DEPTH_FORMAT", "json"}}).out == "9 = 3 + 3 + 3\n");
  CHECK(run({"goldbach", "9"}, {{"DEPTH_JOBS", "zero"}}).code == cli::kUsage);
  const auto c = cli::config_from_env({{"DEPTH_MAX_SUBGROUPS", "77"}, {"DEPTH_JOBS", "3"}});
  CHECK(c.max_subgroups == 77);
  CHECK(c.jobs == 3);
}
