#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tubelift/serialize.hpp"
#include "tubelift_cli/jobs.hpp"

using namespace tubelift;
using cli::Command;
using cli::JobConfig;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tubelift_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const JobConfig& job, std::string* err_text = nullptr) {
  std::ostringstream log, err;
  const int code = cli::run_job(job, log, err);
  if (err_text) *err_text = err.str();
  return code;
}

JobConfig make(Command c, int weight) {
  JobConfig job;
  job.command = c;
  job.weight = weight;
  return job;
}

}  // namespace

TEST(Cli, ExitCodesAndGateMessages) {
  std::string err;
  auto job = make(Command::kEigenform, 12);
  job.output = scratch("gates");
  EXPECT_EQ(run(job, &err), cli::kExitUsage);
  EXPECT_NE(err.find("parity"), std::string::npos);

  job = make(Command::kLift, 20);
  job.output = scratch("gates");
  EXPECT_EQ(run(job, &err), cli::kExitUsage);
  EXPECT_NE(err.find("parity"), std::string::npos);

  job = make(Command::kLift, 18);
  job.bound = 0;
  EXPECT_EQ(run(job, &err), cli::kExitUsage);
  EXPECT_NE(err.find("empty expansion"), std::string::npos);

  job = make(Command::kFj, 12);
  job.S = 3;
  job.output = scratch("gates");
  EXPECT_EQ(run(job, &err), cli::kExitUsage);
  EXPECT_NE(err.find("scope"), std::string::npos);

  job = make(Command::kLfactor, 0);
  job.group = "G2";
  EXPECT_EQ(run(job, &err), cli::kExitUsage);

  job = make(Command::kEigenform, 30);
  job.output = scratch("gates");
  EXPECT_EQ(run(job, &err), cli::kExitUsage);
  EXPECT_NE(err.find("dimension"), std::string::npos);
}

TEST(Cli, OutputFileNames) {
  auto job = make(Command::kLift, 18);
  EXPECT_EQ(cli::output_files(job).size(), 3u);
  EXPECT_EQ(cli::output_files(job)[0], fs::path("lift_w18_b10.txt"));
  job.format = io::Format::kStructured;
  EXPECT_EQ(cli::output_files(job)[2], fs::path("lift_w18_b10.checks.json"));
  job = make(Command::kFj, 12);
  job.bound = 40;
  EXPECT_EQ(cli::output_files(job).size(), 3u);
}

TEST(Cli, EigenformFileMatchesProductOracle) {
  auto job = make(Command::kEigenform, 18);
  job.prec = 50;
  job.output = scratch("eig");
  ASSERT_EQ(run(job), cli::kExitOk);
  std::ifstream in(job.output / cli::output_files(job)[0]);
  const auto s = io::read_qseries(in);
  EXPECT_EQ(s.truncation(), 50u);
  std::vector<oracle::Q> d;
  for (const auto& z : oracle::delta(50)) d.emplace_back(z);
  const auto ref = oracle::mul(d, oracle::eisenstein(6, 50));
  for (std::size_t n = 0; n <= 50; ++n) EXPECT_EQ(s[n], ref[n]);
}

TEST(Cli, AllLfactorGroupsPass) {
  for (const char* g : {"Sp", "SU", "SUH", "E73", "Miyawaki"}) {
    auto job = make(Command::kLfactor, 0);
    job.group = g;
    job.n = 2;
    job.output = scratch("lfactor");
    EXPECT_EQ(run(job), cli::kExitOk) << g;
  }
}

TEST(Cli, FjOnLiftHasZeroConstantTerms) {
  auto job = make(Command::kFj, 18);
  job.fj_from_lift = true;
  job.bound = 8;
  job.output = scratch("fjlift");
  ASSERT_EQ(run(job), cli::kExitOk);
  const auto files = cli::output_files(job);
  ASSERT_EQ(files.size(), 3u);
  for (std::size_t i = 0; i < 2; ++i) {
    std::ifstream in(job.output / files[i]);
    const auto c = io::read_component(in);
    auto it = c.coefficients.find(0);
    EXPECT_TRUE(it == c.coefficients.end() || it->second == 0);
  }
}

TEST(Cli, GoldenFiles) {
  const fs::path golden = TUBELIFT_GOLDEN_DIR;
  std::vector<JobConfig> jobs;
  {
    auto j = make(Command::kEigenform, 26);
    j.prec = 30;
    jobs.push_back(j);
  }
  {
    auto j = make(Command::kLift, 18);
    j.bound = 5;
    jobs.push_back(j);
  }
  {
    auto j = make(Command::kFj, 10);
    j.bound = 8;
    jobs.push_back(j);
  }
  {
    auto j = make(Command::kLfactor, 0);
    j.group = "Sp";
    j.n = 1;
    jobs.push_back(j);
  }
  for (auto& j : jobs) {
    j.output = scratch("golden");
    ASSERT_EQ(run(j), cli::kExitOk);
    for (const auto& f : cli::output_files(j)) {
      ASSERT_TRUE(fs::exists(golden / f)) << f;
      EXPECT_EQ(slurp(j.output / f), slurp(golden / f)) << f;
    }
  }
}
