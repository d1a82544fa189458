// Runs the built command-line tool and checks exit codes and output shape.

#include <json.hpp>
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + PENTAGRAMMA_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST(Cli, PentagramJson) {
  const auto r = run("--json pentagram --alpha 9 --gamma 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "pentagram");
  EXPECT_NEAR(j["outputs"]["omega"].get<double>(), 20.0, 1e-12);
  EXPECT_EQ(j["outputs"]["alphas"].size(), 5u);
  for (const auto& [name, check] : j["residuals"].items()) {
    EXPECT_LE(std::abs(check["value"].get<double>()), check["tolerance"].get<double>()) << name;
  }
}

TEST(Cli, OutputIsByteIdentical) {
  const auto a = run("--json napier --k 0.6 --u 0.3");
  const auto b = run("--json napier --k 0.6 --u 0.3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("napier --grid 3 --seed 5").out, run("napier --grid 3 --seed 5").out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("pentagram --alpha -1 --gamma 2").code, 2);
  EXPECT_EQ(run("napier --k 1.5").code, 2);
  EXPECT_EQ(run("poncelet --R 1 --r 0.3 --a 0.5").code, 2);
  EXPECT_EQ(run("cubic-roots --omega 5").code, 4);
  EXPECT_EQ(run("bridge --omega 10").code, 4);
  EXPECT_EQ(run("poncelet --solve 5 2 --R 1 --r 0.4").code, 5);
  EXPECT_EQ(run("poncelet --solve 5 2 --R 1 --r 0.3").code, 0);
  EXPECT_EQ(run("bridge --k 0.5").code, 0);
}

TEST(Cli, TightToleranceFails) {
  EXPECT_EQ(run("--tol 1e-16 bridge --k 0.5").code, 1);
  EXPECT_EQ(run("bridge --k 0.5", "PENTAGRAMMA_TOL=1e-16").code, 1);
  EXPECT_EQ(run("--tol 1e-6 bridge --k 0.5", "PENTAGRAMMA_TOL=1e-16").code, 0);
}

TEST(Cli, GridCsvShape) {
  const auto r = run("napier --grid 2");
  ASSERT_EQ(r.code, 0);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 21);
  EXPECT_EQ(r.out.rfind("k,u,alpha_0", 0), 0u);
}

TEST(Cli, SvgIsWritten) {
  const std::string path = "cli_test_poncelet.svg";
  ASSERT_EQ(run("poncelet --solve 5 2 --R 1 --r 0.3 --svg " + path).code, 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
  std::remove(path.c_str());
}
