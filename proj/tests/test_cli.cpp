#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "neno/cli.hpp"
#include "neno/families.hpp"
#include "neno/io.hpp"

using namespace neno;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "neno");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("neno_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateWritesFileAndCount) {
  const auto r = run({"generate", "Y:m=4,n=4", "-o", path("y44.pics")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "count=11\n");
  const auto pics = read_pictures(std::filesystem::path(path("y44.pics")));
  EXPECT_EQ(pics.size(), 11u);
  EXPECT_EQ(PictureSet(pics), enumerate({Family::Y, 4, 4, SuffixMode::AnySuffix}));
  EXPECT_TRUE(std::is_sorted(pics.begin(), pics.end()));
}

TEST_F(Cli, GenerateStreamsToStdout) {
  const auto r = run({"generate", "X:m=4,n=4"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  EXPECT_EQ(read_pictures(in).size(), 64u);
  EXPECT_NE(r.out.find("# count=64\n"), std::string::npos);
}

TEST_F(Cli, GeneratedZVerifiesAsY) {
  ASSERT_EQ(run({"generate", "Z:m=4,n=5", "-o", path("z.pics")}).code, kExitOk);
  const auto r = run({"verify", "member:Y", path("z.pics")});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.substr(0, r.out.find(' ')), "property=member:Y");
}

TEST_F(Cli, RoundTripReverifiesMembership) {
  for (const char* spec : {"X:m=5,n=4", "Y:m=4,n=5", "Z:m=5,n=5,suffix=proper"}) {
    ASSERT_EQ(run({"generate", spec, "-o", path("f.pics")}).code, kExitOk);
    const auto pics = read_pictures(std::filesystem::path(path("f.pics")));
    EXPECT_EQ(PictureSet(pics), enumerate(parse_family_spec(spec)));
    EXPECT_EQ(run({"verify", std::string("member:") + spec, path("f.pics")}).code, kExitOk) << spec;
  }
}

TEST_F(Cli, VerifyExitCodes) {
  ASSERT_EQ(run({"generate", "Y:m=4,n=4", "-o", path("y.pics")}).code, kExitOk);
  EXPECT_EQ(run({"verify", "neno-naive", path("y.pics")}).code, kExitOk);
  EXPECT_EQ(run({"verify", "non-overlapping", path("y.pics")}).code, kExitOk);
  EXPECT_EQ(run({"verify", "neno-layered", path("y.pics"), "--against", "X:m=4,n=4"}).code, kExitOk);
  const auto bordered = write("b.pics", "2 2\n11\n11\n");
  const auto r = run({"verify", "unbordered", bordered});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_NE(r.out.find("witness-picture"), std::string::npos);
  EXPECT_EQ(run({"verify", "frobnicate", bordered}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "neno-layered", bordered}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "neno-naive", write("e.pics", "")}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "neno-naive", write("e2.pics", ""), "--size", "2x2"}).code, kExitFails);
  EXPECT_EQ(run({"verify", "neno-naive", path("missing.pics")}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "neno-naive", path("y.pics"), "--work-limit", "100"}).code, kExitWorkLimit);
}

TEST_F(Cli, VerifyOutputIsIndependentOfWorkers) {
  const auto s = write("s.pics", "4 4\n1111\n1010\n0101\n0110\n");
  const auto one = run({"verify", "neno-naive", s, "--workers", "1"});
  const auto many = run({"verify", "neno-naive", s, "--workers", "4"});
  EXPECT_EQ(one.code, kExitFails);
  EXPECT_EQ(one.out, many.out);
}

TEST_F(Cli, OverlapCommand) {
  const auto a = write("a.pic", "2 2\n01\n10\n");
  const auto b = write("b.pic", "2 2\n10\n00\n");
  const auto r = run({"overlap", a, b});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "tl PQ 1 1 proper,frame");
  const auto same = run({"overlap", a, a});
  EXPECT_NE(same.out.find("tl PQ 2 2 h_slide,v_slide\n"), std::string::npos);
  const auto c = write("c.pic", "1 2\n10\n");
  EXPECT_EQ(run({"overlap", c, write("e.pic", "1 1\n1\n")}).code, kExitOk);
  const auto none = run({"overlap", write("z.pic", "1 1\n0\n"), write("o.pic", "1 1\n1\n")});
  EXPECT_EQ(none.code, kExitFails);
  EXPECT_EQ(none.out, "none\n");
  EXPECT_EQ(run({"overlap", c, write("bad.pic", "1 2\n1\n")}).code, kExitUsage);
}

TEST_F(Cli, YMembersHaveNoProperOverlap) {
  const auto y = enumerate({Family::Y, 4, 4, SuffixMode::AnySuffix});
  const auto a = write("a.pic", format_picture(y[0]));
  const auto b = write("b.pic", format_picture(y[5]));
  const auto r = run({"overlap", a, b});
  EXPECT_EQ(r.out.find("proper"), std::string::npos);
}

TEST_F(Cli, CountAndAudit) {
  const auto a = run({"audit", "4", "4"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_NE(a.out.find("closed=18"), std::string::npos);
  EXPECT_NE(a.out.find("closed=65536/7"), std::string::npos);
  const auto p = run({"audit", "4", "4", "--suffix", "proper"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_NE(p.out.find("agree="), std::string::npos);
  const auto c = run({"count", "4", "5"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out.find("check="), std::string::npos);
  EXPECT_EQ(run({"audit", "3", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"audit", "5", "5", "--work-limit", "10"}).code, kExitWorkLimit);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "Q:m=4,n=4"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "Y"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "Y:m=4,n=4", "--suffix", "maybe"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "X:m=6,n=6", "--work-limit", "1000"}).code, kExitWorkLimit);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Repro, TranscriptAndVerdict) {
  std::ostringstream out;
  const bool all = repro_counterexample(out, 2);
  const auto t = out.str();
  // The matrix fails cond2 at (1,3) and overlaps members of X(5,5).
  EXPECT_FALSE(all);
  EXPECT_NE(t.find("in_X=true"), std::string::npos);
  EXPECT_NE(t.find("in_M=false cond1bis-violations=(1,4),(2,1)"), std::string::npos);
  EXPECT_NE(t.find("overlap-free against |X(5,5)|=12288 members"), std::string::npos);
  EXPECT_NE(t.find("|M(5,5)|=0"), std::string::npos);
  EXPECT_NE(t.find("verdict=fails"), std::string::npos);
}
