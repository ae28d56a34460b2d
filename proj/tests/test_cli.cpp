#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "afflip");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = afflip::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json J(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("gelfand verdicts and exit codes") {
  auto pos = run({"gelfand", "--n", "3", "--k", "0", "--m", "5", "--model", "omega", "--signed"});
  CHECK(pos.code == 0);
  auto jp = J(pos);
  CHECK(jp["multiplicity_free"] == true);
  CHECK(jp["self_paired"] == true);
  CHECK(jp["states"] == 20);
  CHECK_FALSE(jp.contains("witness"));

  auto neg = run({"gelfand", "--n", "3", "--k", "0", "--m", "5"});
  CHECK(neg.code == 1);
  auto jn = J(neg);
  CHECK(jn["multiplicity_free"] == false);
  REQUIRE(jn.contains("witness"));
  CHECK(jn["witness"]["p_ij"] != jn["witness"]["p_ji"]);

  auto b = run({"gelfand", "--n", "2", "--k", "1", "--m", "4", "--signed", "--group", "B"});
  CHECK(b.code == 0);
}

TEST_CASE("counts") {
  auto r = run({"counts", "--model", "arc", "--n", "4"});
  CHECK(r.code == 0);
  auto j = J(r);
  CHECK(j["count"] == 96);
  CHECK(j["formula_match"] == true);
  CHECK(J(run({"counts", "--model", "gc", "--n", "4"}))["count"] == 112);
  CHECK(run({"counts", "--model", "ctft", "--n", "3", "--format", "text"}).out == "56\n");
}

TEST_CASE("usage errors") {
  CHECK(run({"gelfand", "--n", "3", "--k", "3", "--m", "5"}).code == 2);
  CHECK(run({"orbit", "--n", "3"}).code == 2);  // m missing
  CHECK(run({"orbit", "--n", "3", "--m", "4", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gelfand", "--n", "6", "--m", "9", "--max-nodes", "10"}).code == 2);
  auto e = run({"act", "--n", "3", "--word", "0 9"});
  CHECK(e.code == 2);
  CHECK(e.err.find("error") != std::string::npos);
}

TEST_CASE("orbit and act") {
  auto r = run({"orbit", "--n", "2", "--k", "0", "--m", "3"});
  CHECK(r.code == 0);
  auto j = J(r);
  CHECK(j["size"] == 12);
  CHECK(j["transitive"] == true);
  auto t = run({"orbit", "--n", "2", "--k", "1", "--m", "2", "--signed"});
  CHECK(J(t)["signed_classes"] == 4);
  auto a = run({"act", "--n", "2", "--word", "2", "--state", "(1,1;0)", "--format", "text"});
  CHECK(a.out == "(1,-1;1)\n");
  auto w = J(run({"act", "--n", "3", "--word", "0 1 2 3"}));
  CHECK(w["window"] == "[2,3,8]");
  auto lf = run({"act", "--model", "lf", "--n", "2", "--word", "0", "--state", "((2,3),(1,3),(3,5),(3,4))",
                 "--format", "text"});
  CHECK(lf.out == "((1,2),(2,3),(3,5),(3,4))\n");
}

TEST_CASE("equivariance and coset representatives") {
  for (std::string m : {"arc", "ctft", "lf", "gc"}) {
    auto r = run({"equivariance", "--model", m, "--n", "3"});
    CHECK(r.code == 0);
    CHECK(J(r)["failures"] == 0);
  }
  auto c = run({"coset-reps", "--n", "3", "--k", "1", "--group", "B", "--list"});
  CHECK(c.code == 0);
  auto j = J(c);
  CHECK(j["injective"] == true);
  CHECK(j["covering"] == true);
  CHECK(j["list"].size() == j["representatives"].get<std::size_t>());
}

TEST_CASE("schreier export") {
  auto d = run({"schreier", "--model", "arc", "--n", "2", "--format", "dot"});
  CHECK(d.code == 0);
  CHECK(d.out.find("label=\"s0\"") != std::string::npos);
  CHECK(d.out.find("label=\"s2\"") != std::string::npos);
  auto j = J(run({"schreier", "--model", "arc", "--n", "2", "--format", "json"}));
  CHECK(j["nodes"].size() == 16);
  CHECK(j["edges"].size() == 16 * 3);
  CHECK(j["metadata"]["out_degree"] == 3);
  CHECK(j["metadata"]["connected"] == true);
  CHECK(j["metadata"]["diameter"].get<int>() > 0);
}
