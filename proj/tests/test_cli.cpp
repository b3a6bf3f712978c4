#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adlv/cli.hpp"
#include "adlv/serialize.hpp"

using namespace adlv;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("adm on the smallest case") {
  const Run r = run({"adm", "--type", "A", "--rank", "1", "--lambda", "[1]"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["version"] == kToolVersion);
  CHECK(j["datum"]["type"] == "A");
  CHECK(j["datum"]["rank"] == 1);
  CHECK(j["result"]["count"] == 3);
  CHECK(j["result"]["elements"].size() == 3);
  // t^{omega} s and its two neighbours: one length-zero element.
  int omega = 0;
  for (const auto& e : j["result"]["elements"]) omega += e.contains("pi1");
  CHECK(omega == 1);
}

TEST_CASE("invalid input exits with 2 and names the location") {
  Run r = run({"adm", "--type", "A1", "--lambda", "[1,2]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--lambda") != std::string::npos);
  r = run({"adm", "--type", "A1", "--lambda", "[-1]"});
  CHECK(r.code == 2);
  r = run({"adm", "--type", "Q3", "--lambda", "[1,0,0]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--type") != std::string::npos);
  r = run({"classify", "--type", "A2", "--lambda", "[1,1]", "--mu", "[0,0]", "--J", "[5]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--J") != std::string::npos);
  CHECK(run({"adm", "--type", "A1", "--lambda", "[1]", "--format", "dot"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"adm", "--type", "A1", "--lambda", "[1]", "--bogus", "1"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
}

TEST_CASE("verify g2 passes") {
  const Run r = run({"verify", "g2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["datum"]["type"] == "G");
  CHECK(j["result"]["chains"].size() >= 13);
}

TEST_CASE("verifiers report through exit codes") {
  CHECK(run({"verify", "empty", "--type", "D", "--rank", "6"}).code == 0);
  CHECK(run({"verify", "seq", "--type", "D5", "--kmax", "2"}).code == 0);
  const Run r = run({"verify", "o1", "--fold", "A3", "--cmax", "2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["result"][0]["name"] == "o1");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> job = {"verify", "seq", "--type", "A", "--jobs", "3"};
  const Run a = run(job), b = run(job);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::vector<std::string> serial = job;
  serial[5] = "1";
  CHECK(run(serial).out == a.out);
  CHECK(a.out.find("seconds") == std::string::npos);
}

TEST_CASE("connect reports witness paths") {
  const Run r = run({"connect", "--type", "A2", "--lambda", "[1,1]", "--mu", "[0,0]", "--J", "[0,1]"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const Json& rep = j["result"]["report"];
  CHECK(rep["connected"] == true);
  CHECK(rep["witness"].size() == rep["vertices"]);
  CHECK(rep["witness"][0]["path"].empty());
  CHECK(rep["unreached"].empty());
  const Run p = run({"pi0", "--type", "A2", "--lambda", "[1,1]", "--mu", "[0,0]", "--J", "[0,1]"});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["result"]["count"] == 3);
}

TEST_CASE("dot export") {
  CHECK(render_dot({}, {}) == "graph adlv {\n}\n");
  const Run r = run({"export", "--type", "G2", "--lambda", "[1,0]", "--mu", "[0,0]", "--J", "[0,1]",
                     "--format", "dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(ADLV_GOLDEN_DIR "/g2_graph.dot"));
}

TEST_CASE("json round trips") {
  const RootDatum g2 = RootDatum::make('G', 2);
  const ShortDatum sd = *short_datum(g2, g2.all(), Coweight{});
  const AdmOracle adm(g2, g2.fundamental_coweight(0));
  const ConnectivityGraph g(g2, adm, sd);
  const Json j = graph_to_json(g);
  CHECK(j["schema"] == 1);
  CHECK(Json::parse(j.dump()) == j);
  CHECK(j["vertices"].size() == g.vertices().size());

  for (const auto& x : elements_up_to(g2, 4))
    CHECK(element_from_json(g2, Json::parse(to_json(g2, x).dump())) == x);

  const RootDatum a3 = RootDatum::make('A', 3, Isogeny::SimplyConnected);
  const DatumConfig c = datum_config_from_json(Json::parse(to_json(a3.config()).dump()));
  CHECK(c.type == 'A');
  CHECK(c.rank == 3);
  CHECK(c.isogeny == Isogeny::SimplyConnected);
  CHECK_THROWS_AS(datum_config_from_json(Json::parse(R"({"type":"A","rank":2,"extra":1})")),
                  StructuralError);
}

TEST_CASE("--out writes the report") {
  const auto path = std::filesystem::temp_directory_path() / "adlv_test_out.json";
  const Run r = run({"fold", "--fold", "D5", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Json j = Json::parse(slurp(path.string()));
  CHECK(j["result"]["folded_label"] == "B4");
  std::filesystem::remove(path);
}
