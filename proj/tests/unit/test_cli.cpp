#include <polgeom_cli/cli.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using polgeom::cli::run_cli;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;

  std::size_t column(const std::string& name) const {
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] == name) return k;
    }
    throw std::out_of_range("no column " + name);
  }
  double number(std::size_t row, const std::string& name) const {
    return std::stod(rows.at(row).at(column(name)));
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (!line.empty() && line.back() == ',') parts.emplace_back();
  return parts;
}

Csv parse(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / (std::string("polgeom_") + info->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(CliEval, InlinePoints) {
  const CliRun r = run({"eval", "0.5,0.5", "0.333333333,0.333333333"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse(r.out);
  ASSERT_EQ(csv.rows.size(), 2u);
  EXPECT_EQ(csv.rows[0][csv.column("value")], "0.25");
  EXPECT_NEAR(csv.number(1, "value"), 2.0 / 9, 1e-8);
  EXPECT_EQ(csv.header.front(), "eta1");
}

TEST(CliEval, ErrorsNameTheRow) {
  const CliRun bad = run({"eval", "0.5,0.5", "0.2,abc"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("point 2"), std::string::npos);
  TempDir dir;
  const std::string path = dir.write("points.csv", "eta1,eta2\n0.1,0.2\n# note\n0.3,x\n");
  const CliRun file = run({"eval", "--input", path});
  EXPECT_EQ(file.code, 2);
  EXPECT_NE(file.err.find("line 4"), std::string::npos) << file.err;
  EXPECT_EQ(run({"eval", "0.7,0.7"}).code, 3);
  EXPECT_EQ(run({"eval", "--index", "cubic:1,2", "0.2,0.2"}).code, 2);
  EXPECT_EQ(run({"eval", "--index", "cubic:0,1,0,0,0", "0.2,0.2,0.2"}).code, 3);
}

TEST(CliField, GridAndFixedPoint) {
  const CliRun r = run({"field", "--grid", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse(r.out);
  ASSERT_EQ(csv.rows.size(), 9u);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"eta1", "eta2", "g1", "g2", "norm"}));
  EXPECT_EQ(csv.rows[4][0], "0.5");
  EXPECT_EQ(csv.rows[4][1], "0.5");
  EXPECT_EQ(csv.number(4, "norm"), 0.0);
  EXPECT_EQ(run({"field", "--grid", "1"}).code, 2);
  EXPECT_EQ(run({"field", "--extent", "1,0"}).code, 2);
}

TEST(CliField, EuclideanDiffersNearBorder) {
  const Csv nat = parse(run({"field", "--grid", "5"}).out);
  const Csv euc = parse(run({"field", "--grid", "5", "--euclidean"}).out);
  // Row 1 is eta = (0, 0.25): the natural field is tangent to the facet, the Euclidean one is not.
  EXPECT_EQ(nat.number(1, "g1"), 0.0);
  EXPECT_GT(euc.number(1, "g1"), 0.0);
  EXPECT_LT(euc.number(2, "g1"), 0.0);
}

TEST(CliFlow, ConvergesAndAscends) {
  const CliRun r = run({"flow", "--start", "0.4,0.45", "--dt", "0.05", "--tmax", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse(r.out);
  const std::size_t last = csv.rows.size() - 1;
  EXPECT_NEAR(csv.number(last, "eta1"), 0.5, 1e-6);
  EXPECT_NEAR(csv.number(last, "eta2"), 0.5, 1e-6);
  for (std::size_t k = 1; k < csv.rows.size(); ++k) {
    EXPECT_GE(csv.number(k, "value"), csv.number(k - 1, "value") - 1e-9);
  }
  EXPECT_EQ(csv.comments.back(), "# terminal_reason=converged");
}

TEST(CliFlow, VertexAndNonConvergence) {
  const Csv csv = parse(run({"flow", "--start", "0,0"}).out);
  EXPECT_EQ(csv.rows.size(), 1u);
  const CliRun slow = run({"flow", "--start", "0.4,0.45", "--tmax", "0.5"});
  EXPECT_EQ(slow.code, 4);
  EXPECT_EQ(parse(slow.out).comments.back(), "# terminal_reason=max_steps");
  EXPECT_EQ(run({"flow"}).code, 2);
  EXPECT_EQ(run({"flow", "--start", "0.4,0.45", "--dt", "2"}).code, 2);
  EXPECT_EQ(run({"flow", "--start", "0.4,0.45", "--tol", "-1"}).code, 2);
}

TEST(CliFixedPoints, PolAndScaledCubic) {
  const Csv pol = parse(run({"fixedpoints"}).out);
  ASSERT_EQ(pol.rows.size(), 7u);
  int attractors = 0, repellers = 0;
  for (const auto& row : pol.rows) {
    attractors += row.back() == "attractor";
    repellers += row.back() == "repeller";
  }
  EXPECT_EQ(attractors, 3);
  EXPECT_EQ(repellers, 3);
  const Csv cubic = parse(run({"fixedpoints", "--index", "cubic:0,2,0,0,0"}).out);
  ASSERT_EQ(cubic.rows.size(), 7u);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(cubic.rows[k].back(), pol.rows[k].back());
  const CliRun json = run({"fixedpoints", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["rows"].size(), 7u);
  EXPECT_EQ(doc["count"], 7);
}

TEST(CliExpfam, Tables) {
  const Csv counts = parse(run({"expfam", "counts"}).out);
  ASSERT_EQ(counts.rows.size(), 16u);
  const int expected[4][4] = {{1, 3, 3, 1}, {3, 6, 3, 0}, {3, 3, 0, 0}, {1, 0, 0, 0}};
  for (const auto& row : counts.rows) {
    EXPECT_EQ(std::stoi(row[2]), expected[std::stoi(row[0])][std::stoi(row[1])]);
  }
  const Csv border = parse(run({"expfam", "border"}).out);
  ASSERT_EQ(border.rows.size(), 3u);
  for (const auto& row : border.rows) EXPECT_EQ(row[2], "0.75");
  const Csv triples = parse(run({"expfam", "triples"}).out);
  ASSERT_EQ(triples.rows.size(), 27u);
  int flagged = 0;
  for (const auto& row : triples.rows) flagged += row.back() == "1";
  EXPECT_EQ(flagged, 18);
  EXPECT_EQ(run({"expfam", "moments"}).code, 2);
}

TEST(CliReplicator, ConservationAndCharts) {
  const Csv solid = parse(run({"replicator", "--start", "2,1", "--tmax", "10"}).out);
  double c_gap = 0.0;
  for (std::size_t k = 0; k < solid.rows.size(); ++k) {
    c_gap = std::max(c_gap, std::abs(solid.number(k, "C") - solid.number(0, "C")));
  }
  EXPECT_LE(c_gap, 1e-6);
  const Csv expo = parse(run({"replicator", "--chart", "exp", "--tmax", "10"}).out);
  ASSERT_EQ(expo.rows.size(), solid.rows.size());
  EXPECT_EQ(expo.header[1], "theta1");
  for (std::size_t k = 0; k < solid.rows.size(); k += 100) {
    for (const char* col : {"pi0", "pi1", "pi2"}) {
      EXPECT_NEAR(expo.number(k, col), solid.number(k, col), 1e-6);
    }
  }
  const Csv still = parse(run({"replicator", "--start", "1,1", "--tmax", "1"}).out);
  for (std::size_t k = 0; k < still.rows.size(); ++k) {
    EXPECT_NEAR(still.number(k, "pi1"), 1.0 / 3, 1e-15);
  }
  EXPECT_EQ(run({"replicator", "--chart", "polar"}).code, 2);
  EXPECT_EQ(run({"replicator", "--start", "-1,1"}).code, 3);
}

TEST(CliSeries, ReportAndFlags) {
  TempDir dir;
  const std::string flat = dir.write("flat.csv", "t,p0,p1,p2\n0,0.2,0.3,0.5\n1,0.2,0.3,0.5\n2,0.2,0.3,0.5\n");
  const CliRun r = run({"series", "--input", flat});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse(r.out);
  ASSERT_EQ(csv.rows.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    for (const char* col : {"v0", "v1", "v2", "score", "delta"}) EXPECT_EQ(csv.number(k, col), 0.0);
    EXPECT_EQ(csv.rows[k][csv.column("cosine")], "");
  }
  const std::string zero = dir.write("zero.csv", "0,0.5,0.5,0\n1,0.4,0.3,0.3\n2,0.3,0.3,0.4\n");
  const Csv z = parse(run({"series", "--input", zero}).out);
  EXPECT_EQ(z.rows[0][z.column("floored")], "1");
  EXPECT_EQ(z.rows[1][z.column("floored")], "0");
  const std::string bad = dir.write("bad.csv", "0,0.5,0.5,0\n1,0.4,oops,0.3\n");
  const CliRun b = run({"series", "--input", bad});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("line 2"), std::string::npos);
  const std::string ragged = dir.write("ragged.csv", "0,0.5,0.5\n1,0.4,0.3,0.3\n");
  EXPECT_EQ(run({"series", "--input", ragged}).code, 2);
}

TEST(CliSeries, FlowSeriesScoresArePositive) {
  TempDir dir;
  const CliRun flow = run({"flow", "--start", "0.15,0.3", "--dt", "0.1", "--tmax", "5"});
  const Csv f = parse(flow.out);
  std::string series = "t,p0,p1,p2\n";
  for (std::size_t k = 0; k < f.rows.size(); ++k) {
    const double e1 = f.number(k, "eta1"), e2 = f.number(k, "eta2");
    series += f.rows[k][0] + "," + polgeom::cli::format_number(1 - e1 - e2) + "," + f.rows[k][1] +
              "," + f.rows[k][2] + "\n";
  }
  const Csv report = parse(run({"series", "--input", dir.write("flow.csv", series)}).out);
  ASSERT_FALSE(report.rows.empty());
  for (std::size_t k = 0; k < report.rows.size(); ++k) EXPECT_GT(report.number(k, "score"), 0.0);
}

TEST(CliConfig, Precedence) {
  TempDir dir;
  const std::string cfg = dir.write("run.cfg", "# experiment\ngrid = 4\nextent=0,1\n");
  EXPECT_EQ(parse(run({"field", "--config", cfg}).out).rows.size(), 16u);
  EXPECT_EQ(parse(run({"field", "--config", cfg, "--grid", "3"}).out).rows.size(), 9u);
  EXPECT_EQ(parse(run({"field"}).out).rows.size(), 121u);
  const std::string unknown = dir.write("bad.cfg", "speed=4\n");
  EXPECT_EQ(run({"field", "--config", unknown}).code, 2);
  const std::string broken = dir.write("broken.cfg", "grid 4\n");
  const CliRun b = run({"field", "--config", broken});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find(":1:"), std::string::npos);
}

TEST(CliOutput, HeaderOutFileAndDeterminism) {
  const CliRun plain = run({"field", "--grid", "3"});
  EXPECT_EQ(plain.out.rfind("eta1,", 0), 0u);
  const CliRun stamped = run({"field", "--grid", "3", "--header"});
  EXPECT_EQ(stamped.out.rfind("# polgeom ", 0), 0u);
  EXPECT_EQ(run({"field", "--grid", "3"}).out, plain.out);
  TempDir dir;
  const std::string target = dir.file("field.csv");
  EXPECT_EQ(run({"field", "--grid", "3", "--out", target}).out, "");
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), plain.out);
  const auto doc = nlohmann::json::parse(run({"expfam", "border", "--format", "json"}).out);
  EXPECT_EQ(doc["rows"][0]["value"], 0.75);
  EXPECT_EQ(run({"field", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliOutput, NumberRendering) {
  using polgeom::cli::format_number;
  EXPECT_EQ(format_number(0.25), "0.25");
  EXPECT_EQ(format_number(1.0 / 3), "0.33333333333333331");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(NAN), "nan");
}
