#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "depth2/duality.hpp"
#include "depth2/io.hpp"
#include "support.hpp"

namespace depth2 {
namespace {

struct CommandResult {
  int code;
  std::string out;
};

CommandResult run(const std::string& args) {
  const std::string cmd = std::string(DEPTH2_KIT) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("depth2-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const nlohmann::json& j) {
    const std::filesystem::path p = dir_ / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Parse) {
  const CommandResult ok = run("parse '  p->  <>p '");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "p -> <>p\n");
  EXPECT_EQ(run("parse '(<p'").code, 2);
}

TEST_F(CliTest, FrameCheck) {
  const std::string f2 = write("f2.json", frame_to_json(testing::f2()));
  const CommandResult b = run("frame check " + f2 + " --axiom B");
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.out.find("p = {0}"), std::string::npos) << b.out;
  EXPECT_EQ(run("frame check " + f2 + " --axiom T").code, 0);
  EXPECT_EQ(run("frame check " + f2 + " --condition transitive").code, 0);
  EXPECT_EQ(run("frame check " + f2 + " --condition symmetric").code, 1);
  EXPECT_EQ(run("frame check " + f2 + " --axiom X9").code, 2);
  const CommandResult json = run("--format json frame check " + f2 + " --axiom B");
  EXPECT_EQ(nlohmann::json::parse(json.out)["counterexample"]["p"], nlohmann::json::parse("[0]"));
}

TEST_F(CliTest, BudgetEnvironment) {
  const std::string f2 = write("f2.json", frame_to_json(testing::f2()));
  EXPECT_EQ(run("frame check " + f2 + " --axiom B").code, 1);
  EXPECT_EQ(std::system(("D2_BUDGET=2 " + std::string(DEPTH2_KIT) + " frame check " + f2 +
                         " --axiom B >/dev/null 2>&1").c_str()) >> 8,
            3);
}

TEST_F(CliTest, DualRoundTrip) {
  const Frame f = make_extremal(ExtremalKind::iu, 2, 1);
  const std::string in = write("f.json", frame_to_json(f));
  const std::string alg = (dir_ / "a.json").string();
  const std::string back = (dir_ / "g.json").string();
  ASSERT_EQ(run("dual cm " + in + " -o " + alg).code, 0);
  ASSERT_EQ(run("dual ult " + alg + " -o " + back).code, 0);
  EXPECT_TRUE(frames_isomorphic(frame_from_json(read_json_file(back)), f));
}

TEST_F(CliTest, Classify) {
  const std::string a = write("a.json", algebra_to_json(testing::f2_plus()));
  const CommandResult r = run("--format json alg classify " + a);
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["labels"].size(), 4U);
  const std::string f = write("f.json", frame_to_json(make_extremal(ExtremalKind::ii, 1, 2)));
  EXPECT_EQ(run("frame classify " + f).code, 0);
}

TEST_F(CliTest, EnumAndEval) {
  const CommandResult e = run("--format json enum --worlds 3 --quasiorder");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out).size(), 9U);
  EXPECT_EQ(run("enum --worlds 9").code, 3);
  const std::string f2 = write("f2.json", frame_to_json(testing::f2()));
  const CommandResult v = run("eval --frame " + f2 + " --formula '<>p' --valuation '{\"p\": [0]}'");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("{0}"), std::string::npos) << v.out;
}

TEST_F(CliTest, Verify) {
  const CommandResult r = run("--format json verify --suite table1 --worlds 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("verify --suite table1 --worlds 9").code, 3);
}

TEST_F(CliTest, MeetAxiom) {
  const CommandResult r = run("meet-axiom 'p -> <>p' '<><>p -> <>p'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[](v0 -> <>v0) | [](<><>v1 -> <>v1)\n");
}

}  // namespace
}  // namespace depth2
