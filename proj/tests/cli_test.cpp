#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "siegel/reduction_tables.hpp"

using siegel::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = siegel::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kIdentity4 = R"([[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]])";
const std::string kWitness1 = R"([[10,1,1,1],[1,11,1,1],[1,1,11,1],[1,1,1,12]])";
const std::string kIdentityPoint =
    R"({"g":4,"w":{"re":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],"im":)" + kIdentity4 + "}}";

}  // namespace

TEST(Cli, ReduceW21Inversion) {
  const Outcome o = run({"reduce", "w21"}, R"({"beta":0,"gamma":0,"delta":"1/2"})");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["reduced_params"]["delta"], "2");
  EXPECT_EQ(j["reduced_params"]["gamma"], "0");
  EXPECT_EQ(j["group"], "G");
  EXPECT_TRUE(j["in_domain"].get<bool>());
  EXPECT_TRUE(j["rep_index"].is_null());
}

TEST(Cli, ReduceSym4Identity) {
  const Outcome o = run({"reduce", "sym4"}, kIdentity4);
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["rep_index"], 1);
  EXPECT_EQ(j["group"], "K");
  EXPECT_EQ(j["reduced"], Json::parse(R"([["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]])"));
}

TEST(Cli, ReduceSym2AndW41) {
  const Outcome a = run({"reduce", "sym2", "--point", R"({"phi":5,"chi":4,"psi":5})"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.json()["reduced"], Json::parse(R"([["2","-1"],["-1","5"]])"));
  const Outcome b = run({"reduce", "w41"}, kIdentityPoint);
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.json()["rep_index"], 1);
}

TEST(Cli, DegeneratePointIsNotInLocus) {
  const Outcome o = run({"reduce", "w21"}, R"({"beta":1,"gamma":0,"delta":1})");
  EXPECT_EQ(o.code, siegel::cli::kNotMember);
  EXPECT_NE(o.err.find("not in locus"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"reduce", "w21"}, "{not json").code, siegel::cli::kParse);
  EXPECT_EQ(run({"reduce", "w21"}, R"({"beta":0,"gamma":0.5,"delta":1})").code, siegel::cli::kParse);
  EXPECT_EQ(run({"reduce", "w21"}, R"({"beta":0,"gamma":"1/0","delta":1})").code, siegel::cli::kParse);
  EXPECT_EQ(run({"reduce", "sym4"}, R"([[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,-1]])").code, siegel::cli::kNotMember);
  EXPECT_EQ(run({"bogus"}).code, siegel::cli::kUsage);
  EXPECT_EQ(run({"reduce", "w99"}).code, siegel::cli::kUsage);
  EXPECT_EQ(run({"--tol", "1e-6", "cosets"}).code, siegel::cli::kUsage);
  EXPECT_EQ(run({"cosets", "--dim", "3"}).code, siegel::cli::kUnsupported);
  EXPECT_EQ(run({"cosets", "--dim", "20"}).code, siegel::cli::kUnsupported);
}

TEST(Cli, FloatModeAcceptsDecimals) {
  const Outcome o = run({"--mode", "float", "--tol", "1e-9", "reduce", "w21"}, R"({"beta":0,"gamma":0,"delta":0.5})");
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(o.json()["reduced_params"]["delta"].get<double>(), 2.0, 1e-9);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string point = R"({"beta":"3/7","gamma":"-17/3","delta":"12/5"})";
  const Outcome a = run({"reduce", "w21"}, point);
  const Outcome b = run({"reduce", "w21"}, point);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Outcome p = run({"--pretty", "reduce", "w21"}, point);
  EXPECT_EQ(Json::parse(p.out), a.json());
  EXPECT_NE(p.out, a.out);
}

TEST(Cli, CheckW21Boundary) {
  const Outcome o = run({"check", "w21"}, R"({"beta":0,"gamma":0,"delta":1})");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_TRUE(j["in_domain"].get<bool>());
  EXPECT_TRUE(j["conditions"][0]["boundary"].get<bool>());
  EXPECT_FALSE(j["conditions"][1]["boundary"].get<bool>() && j["conditions"][3]["boundary"].get<bool>());
  EXPECT_TRUE(j["sigma_image"]["symplectic"].get<bool>());
}

TEST(Cli, CheckSym4Witness) {
  const Outcome o = run({"check", "sym4"}, kWitness1);
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_TRUE(j["in_domain"].get<bool>());
  EXPECT_EQ(j["zero_count"], 1);
  EXPECT_TRUE(j["violated"].empty());
}

TEST(Cli, CheckSym2Outside) {
  const Outcome o = run({"check", "sym2"}, R"({"phi":5,"chi":4,"psi":5})");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_FALSE(j["in_domain"].get<bool>());
  EXPECT_EQ(j["violated"], Json::parse(R"(["-2chi"])"));
}

TEST(Cli, CheckMatrixAndW41) {
  const Outcome m = run({"check", "matrix"}, R"([[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]])");
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_TRUE(m.json()["predicates"]["symplectic"].get<bool>());
  EXPECT_EQ(m.json()["determinant"], "1");
  const Outcome w = run({"check", "w41"}, kIdentityPoint);
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(w.json()["in_domain"].get<bool>());
  EXPECT_EQ(w.json()["invariant"], "1");
}

TEST(Cli, Invariant) {
  EXPECT_EQ(run({"invariant", "w21"}, R"({"beta":"3/5","gamma":0,"delta":1})").json(), "1/4");
  EXPECT_EQ(run({"invariant", "w41"}, kIdentityPoint).json(), "1");
  EXPECT_EQ(run({"invariant", "w21"}, R"({"beta":0,"gamma":"7/3","delta":"5/2"})").json(), "1");
}

TEST(Cli, Cosets) {
  EXPECT_EQ(run({"cosets"}).json(), Json::parse(R"({"gl":20160,"sp":720,"index":28})"));
  EXPECT_EQ(run({"cosets", "--dim", "2"}).json(), Json::parse(R"({"gl":6,"sp":6,"index":1})"));
}

TEST(Cli, TablesRoundTrip) {
  const Outcome o = run({"tables"});
  ASSERT_EQ(o.code, 0);
  const Json j = o.json();
  EXPECT_EQ(j["representatives"].size(), 28u);
  EXPECT_EQ(j["checksum"], siegel::table_checksum(j));
}

TEST(Cli, VerifyCommand) {
  const Outcome o = run({"verify-paper", "--samples", "20"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.json()["all_passed"].get<bool>());
  const Outcome f = run({"--mode", "float", "--tol", "1e6", "verify-paper", "--samples", "10"});
  EXPECT_EQ(f.code, 0) << f.err;
}

TEST(Cli, FileInputAndOutput) {
  const std::string in_path = testing::TempDir() + "cli_in.json";
  const std::string out_path = testing::TempDir() + "cli_out.json";
  std::ofstream(in_path) << kIdentity4;
  const Outcome o = run({"--in", in_path, "--out", out_path, "reduce", "sym4"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(out_path);
  EXPECT_EQ(Json::parse(f)["rep_index"], 1);
  EXPECT_EQ(run({"--in", "/nonexistent/x.json", "reduce", "sym4"}).code, siegel::cli::kUsage);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}
