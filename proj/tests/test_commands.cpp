#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "greymap/error.hpp"
#include "greymap/commands.hpp"
#include "greymap/corpus.hpp"
#include "greymap/model_io.hpp"

using namespace greymap;
using namespace greymap::cli;
using doctest::Approx;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Scratch directory holding exported corpus models.
struct Workspace {
  fs::path dir = fs::temp_directory_path() / "greymap_commands";
  Workspace() {
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ostringstream err;
    for (corpus::Variant v : corpus::kAllVariants) {
      const std::string id(corpus::to_string(v));
      REQUIRE(cmd_corpus(id, model(id), err) == kOk);
    }
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string model(const std::string& id) const { return (dir / (id + ".json")).string(); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CsvRow {
  std::size_t t, node;
  std::string field;
  double value;
};

std::vector<CsvRow> read_trajectory(const std::string& path) {
  std::vector<CsvRow> rows;
  std::istringstream in(read_file(path));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string t, node, field, value;
    std::getline(ls, t, ',');
    std::getline(ls, node, ',');
    std::getline(ls, field, ',');
    std::getline(ls, value, ',');
    rows.push_back({std::stoul(t), std::stoul(node), field, std::stod(value)});
  }
  return rows;
}

// series[field][node][t]
using Series = std::map<std::string, std::map<std::size_t, std::vector<double>>>;
Series by_series(const std::vector<CsvRow>& rows) {
  Series s;
  for (const auto& r : rows) s[r.field][r.node].push_back(r.value);
  return s;
}

std::vector<std::vector<std::string>> read_summary(const std::string& path) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    out.push_back(cells);
  }
  return out;
}

}  // namespace

TEST_CASE("cmd_corpus") {
  Workspace ws;
  const Model fcm = io::load_model(ws.model("web_fcm"));
  CHECK(fcm.as<double>().weights == corpus::web_weights());
  CHECK(io::load_model(ws.model("web_case2_fggcm")) ==
        corpus::build(corpus::Variant::web_case2_fggcm, 1.0));
  const json doc = json::parse(read_file(ws.model("web_case2_fggcm")));
  int unions = 0;
  for (const auto& row : doc["weights"])
    for (const auto& cell : row) unions += cell.is_object() && cell.contains("union");
  CHECK(unions == 4);

  std::ostringstream err;
  CHECK(cmd_corpus("web_nope", ws.path("x.json"), err) == kUsage);
  CHECK(err.str().find("web_case2_fggcm") != std::string::npos);
  CHECK_FALSE(fs::exists(ws.path("x.json")));
}

TEST_CASE("cmd_simulate") {
  Workspace ws;
  std::ostringstream err;
  SUBCASE("crisp map settles at lambda 0.5") {
    REQUIRE(cmd_simulate({ws.model("web_fcm"), 0.5, 100, ws.path("a.csv")}, err) == kOk);
    const auto rows = read_trajectory(ws.path("a.csv"));
    CHECK(rows.size() == 101 * 7);
    const Series series = by_series(rows);
    for (const auto& [node, v] : series.at("value"))
      for (std::size_t t = 90; t < 100; ++t) CHECK(std::fabs(v[t + 1] - v[t]) <= 1e-8);
  }
  SUBCASE("grey map greyness oscillates at lambda 2") {
    REQUIRE(cmd_simulate({ws.model("web_fggcm"), 2.0, 100, ws.path("b.csv")}, err) == kOk);
    const Series series = by_series(read_trajectory(ws.path("b.csv")));
    const auto& grey = series.at("greyness");
    REQUIRE(grey.size() == 7);
    // Node 7 greyness swings between two levels in the tail.
    const auto& g = grey.at(7);
    for (std::size_t t = 80; t + 2 <= 100; ++t) {
      CHECK(std::fabs(g[t + 1] - g[t]) > 1e-4);
      CHECK(std::fabs(g[t + 2] - g[t]) < 1e-4);
    }
  }
  SUBCASE("errors") {
    CHECK(cmd_simulate({ws.model("web_fcm"), std::nullopt, 0, ws.path("c.csv")}, err) == kUsage);
    CHECK(cmd_simulate({ws.path("absent.json"), std::nullopt, 10, ws.path("c.csv")}, err) ==
          kUsage);
    CHECK(cmd_simulate({ws.model("web_fcm"), -1.0, 10, ws.path("c.csv")}, err) == kUsage);
    std::ofstream(ws.path("bad.json")) << R"({"family":"fcm","lambda":1,"nodes":["a"],
                                             "weights":[[2.0]],"initial":[0]})";
    CHECK(cmd_simulate({ws.path("bad.json"), std::nullopt, 10, ws.path("c.csv")}, err) ==
          kValidation);
  }
}

TEST_CASE("cmd_check") {
  Workspace ws;
  std::ostringstream out, err;
  SUBCASE("crisp map") {
    CheckOptions o;
    o.model_path = ws.model("web_fcm");
    o.lambda = 0.5;
    REQUIRE(cmd_check(o, out, err) == kOk);
    const json r = json::parse(out.str());
    CHECK(r["criterion"].get<double>() == Approx(3.0680).epsilon(5e-5 / 3.068));
    CHECK(r["criterion_display"] == "3.0680");
    CHECK(r["outcome"] == "UniqueFixedPoint");
  }
  SUBCASE("case 1 interval map is inapplicable") {
    CheckOptions o;
    o.model_path = ws.model("web_case1_fgcm");
    REQUIRE(cmd_check(o, out, err) == kInapplicable);
    const json r = json::parse(out.str());
    CHECK(r["error"] == "MixedSignWeight");
    CHECK(r["row"] == 1);
    CHECK(r["col"] == 1);
    CHECK(r["message"].get<std::string>().find("fggcm") != std::string::npos);
  }
  SUBCASE("grey map reports both conditions") {
    CheckOptions o;
    o.model_path = ws.model("web_fggcm");
    o.lambda = 0.5;
    REQUIRE(cmd_check(o, out, err) == kOk);
    const json r = json::parse(out.str());
    CHECK(r["kernel"]["criterion_display"] == "3.0586");
    CHECK(r["greyness_criterion"].get<double>() == Approx(0.10869501353122366).epsilon(1e-12));
    CHECK(r["greyness"]["authoritative"] == true);
    CHECK(r["overall"] == "UniqueFixedPoint");
    CHECK(r["evaluation_state"].contains("provenance"));
  }
  SUBCASE("crisp and zero-greyness grey forms agree") {
    json doc = io::model_to_json(corpus::build(corpus::Variant::web_fcm, 0.7));
    doc["family"] = "fggcm";
    std::ofstream(ws.path("lifted.json")) << doc.dump();
    CheckOptions a, b;
    a.model_path = ws.model("web_fcm");
    a.lambda = 0.7;
    b.model_path = ws.path("lifted.json");
    std::ostringstream oa, ob;
    REQUIRE(cmd_check(a, oa, err) == kOk);
    REQUIRE(cmd_check(b, ob, err) == kOk);
    const double ca = json::parse(oa.str())["criterion"].get<double>();
    const double cb = json::parse(ob.str())["kernel"]["criterion"].get<double>();
    CHECK(std::fabs(ca - cb) <= 1e-12);
  }
  SUBCASE("steps too short for the period search") {
    CheckOptions o;
    o.model_path = ws.model("web_fcm");
    o.steps = 10;
    CHECK(cmd_check(o, out, err) == kUsage);
  }
}

TEST_CASE("parse_lambda_list") {
  CHECK(parse_lambda_list("0.5,1,2,4") == std::vector<double>{0.5, 1, 2, 4});
  CHECK(parse_lambda_list(" 0.25 ") == std::vector<double>{0.25});
  CHECK_THROWS_AS(parse_lambda_list(""), InvalidParameter);
  CHECK_THROWS_AS(parse_lambda_list("0.5,,1"), InvalidParameter);
  CHECK_THROWS_AS(parse_lambda_list("0.5,abc"), InvalidParameter);
}

TEST_CASE("cmd_sweep") {
  Workspace ws;
  std::ostringstream err;
  SUBCASE("crisp map over four slopes") {
    SweepOptions o;
    o.model_path = ws.model("web_fcm");
    o.lambdas = {0.5, 1, 2, 4};
    o.out_dir = ws.path("sweep");
    REQUIRE(cmd_sweep(o, err) == kOk);
    const auto rows = read_summary(ws.path("sweep/summary.csv"));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"lambda", "criterion_kernel", "criterion_greyness",
                                              "classification", "period", "status"});
    CHECK(rows[1][3] == "FixedPoint");
    CHECK(rows[2][3] == "FixedPoint");
    CHECK(rows[3][3] != "FixedPoint");
    CHECK(rows[4][3] == "LimitCycle");
    CHECK(rows[4][4] == "2");
    for (const char* l : {"0.5", "1", "2", "4"}) {
      CHECK(fs::exists(ws.path(std::string("sweep/trajectory_lambda_") + l + ".csv")));
      CHECK(fs::exists(ws.path(std::string("sweep/report_lambda_") + l + ".json")));
    }
    // Repeated runs give the same summary.
    const std::string first = read_file(ws.path("sweep/summary.csv"));
    REQUIRE(cmd_sweep(o, err) == kOk);
    CHECK(read_file(ws.path("sweep/summary.csv")) == first);
  }
  SUBCASE("longer horizon resolves the lambda 2 cycle") {
    SweepOptions o;
    o.model_path = ws.model("web_fcm");
    o.lambdas = {0.5, 1, 2, 4};
    o.steps = 400;
    o.out_dir = ws.path("long");
    REQUIRE(cmd_sweep(o, err) == kOk);
    const auto rows = read_summary(ws.path("long/summary.csv"));
    CHECK(rows[1][3] == "FixedPoint");
    CHECK(rows[2][3] == "FixedPoint");
    CHECK(rows[3][3] == "LimitCycle");
    CHECK(rows[4][3] == "LimitCycle");
  }
  SUBCASE("grey map reports greyness criteria") {
    SweepOptions o;
    o.model_path = ws.model("web_fggcm");
    o.lambdas = {0.5, 1, 2, 4};
    o.out_dir = ws.path("grey");
    REQUIRE(cmd_sweep(o, err) == kOk);
    const auto rows = read_summary(ws.path("grey/summary.csv"));
    CHECK(std::stod(rows[1][2]) == Approx(0.10869501353122366).epsilon(1e-12));
    CHECK(std::stod(rows[2][2]) == Approx(0.34907019526009203).epsilon(1e-12));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK_FALSE(rows[i][2].empty());
  }
  SUBCASE("failures are recorded per lambda") {
    SweepOptions o;
    o.model_path = ws.model("web_case1_fgcm");
    o.lambdas = {0.5, 1};
    o.out_dir = ws.path("case1");
    CHECK(cmd_sweep(o, err) == kInapplicable);
    const auto rows = read_summary(ws.path("case1/summary.csv"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][5].find("spans both signs") != std::string::npos);
    CHECK(rows[1][3] == "FixedPoint");
  }
  SUBCASE("usage errors") {
    SweepOptions o;
    o.model_path = ws.model("web_fcm");
    o.out_dir = ws.path("none");
    CHECK(cmd_sweep(o, err) == kUsage);
    o.lambdas = {0.5, -1};
    CHECK(cmd_sweep(o, err) == kUsage);
    o.lambdas = {0.5};
    o.model_path = ws.path("absent.json");
    CHECK(cmd_sweep(o, err) == kUsage);
  }
}
