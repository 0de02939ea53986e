#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(DICOL_BIN) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    std::filesystem::path dir;

    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("dicol_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }
};

const char* c3 = "dicol 1\nn 3 s 1\narc 0 1\narc 1 2\narc 2 0\nbudget 0 1 1 1\nbudget 1 1 1 1\nbudget 2 1 1 1\n";
const char* c4 =
    "dicol 1\nn 4 s 2\narc 0 1\narc 1 0\narc 1 2\narc 2 1\narc 2 3\narc 3 2\narc 3 0\narc 0 3\n"
    "budget 0 1 1 1\nbudget 0 2 1 1\nbudget 1 1 1 1\nbudget 1 2 1 1\n"
    "budget 2 1 1 1\nbudget 2 2 1 1\nbudget 3 1 1 1\nbudget 3 2 1 1\n";

}  // namespace

TEST_F(Cli, HardTriangle) {
    const Result r = run("solve " + write("c3.txt", c3));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "HARD\n");
}

TEST_F(Cli, SolveThenVerify) {
    const std::string inst = write("c4.txt", c4);
    const Result r = run("solve --check " + inst);
    ASSERT_EQ(r.status, 0);
    const Result v = run("verify " + inst + " " + write("c4.col", r.out));
    EXPECT_EQ(v.status, 0);
    EXPECT_EQ(v.out, "OK\n");
    const Result bad = run("verify " + inst + " " + write("bad.col", "colour 0 1\ncolour 1 1\ncolour 2 1\ncolour 3 1\n"));
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(bad.out, "REJECTED\n");
}

TEST_F(Cli, InvalidInput) {
    const Result deficit = run("solve " + write("d.txt", "dicol 1\nn 2 s 1\narc 0 1\nbudget 0 1 0 1\n"));
    EXPECT_EQ(deficit.status, 2);
    EXPECT_EQ(deficit.out, "INVALID budget-deficit 1\n");
    EXPECT_EQ(run("solve " + write("p.txt", "dicol 7\n")).status, 2);
    EXPECT_EQ(run("solve " + (dir / "missing.txt").string()).status, 2);
}

TEST_F(Cli, GeneratedHardJoin) {
    const Result g = run("gen hard-join --blocks 3 -s 2 --seed 7");
    ASSERT_EQ(g.status, 0);
    EXPECT_EQ(g.out.rfind("# model hard-join seed 7\n", 0), 0u);
    const Result r = run("solve " + write("hj.txt", g.out));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "HARD\n");
}

TEST_F(Cli, OracleAgreesOnWheel) {
    const Result g = run("gen wheel -k 5 -s 2 --seed 3");
    ASSERT_EQ(g.status, 0);
    const Result o = run("oracle " + write("w.txt", g.out));
    EXPECT_EQ(o.status, 0) << o.out;
    EXPECT_NE(o.out.find("agree"), std::string::npos) << o.out;
}

TEST_F(Cli, Bench) {
    const Result b = run("bench --from 6 --to 7 --reps 1");
    ASSERT_EQ(b.status, 0);
    EXPECT_EQ(b.out.rfind("n,m,nanoseconds,arc_touches\n64,", 0), 0u) << b.out;
}
