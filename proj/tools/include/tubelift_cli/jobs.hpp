#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubelift/serialize.hpp"

namespace tubelift::cli {

enum class Command { kEigenform, kLift, kLfactor, kFj };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobConfig {
  Command command = Command::kEigenform;
  /// eigenform, lift, fj --lift: the elliptic weight 2k. fj: the Siegel weight.
  int weight = 0;
  std::size_t prec = 100;
  std::int64_t bound = 10;
  std::string group;
  int n = 1;
  std::int64_t S = 1;
  bool fj_from_lift = false;
  std::vector<std::int64_t> primes{2, 3};
  std::filesystem::path output = ".";
  io::Format format = io::Format::kText;
  unsigned threads = 0;
};

/// Throws UsageError for missing or out-of-range fields.
void validate(const JobConfig& job);

/// Output file names, relative to job.output, in the order they are written.
std::vector<std::filesystem::path> output_files(const JobConfig& job);

/// Runs the job, writes its files and a summary to `log`, and returns the
/// exit code. Gate and usage errors give kExitUsage, failed checks
/// kExitCheckFailed.
int run_job(const JobConfig& job, std::ostream& log, std::ostream& err);

}  // namespace tubelift::cli
