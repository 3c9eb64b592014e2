#include <iostream>

#include <CLI11.hpp>

#include "tubelift_cli/jobs.hpp"

using tubelift::cli::Command;
using tubelift::cli::JobConfig;

int main(int argc, char** argv) {
  CLI::App app{"Exact Saito-Kurokawa lifts, Siegel Eisenstein data and standard L-factor identities"};
  app.require_subcommand(1);

  JobConfig job;
  std::string format = "table-text";
  auto shared = [&](CLI::App* sub) {
    sub->add_option("--threads", job.threads, "Worker threads (0 = all cores)");
    sub->add_option("--output", job.output, "Output directory")->capture_default_str();
    sub->add_option("--format", format, "table-text or structured")->capture_default_str();
  };

  auto* eig = app.add_subcommand("eigenform", "Normalized eigenform q-expansion");
  eig->add_option("--weight", job.weight, "Weight 2k (18, 22 or 26)")->required();
  eig->add_option("--prec", job.prec, "Number of coefficients")->capture_default_str();
  shared(eig);

  auto* lift = app.add_subcommand("lift", "Degree-2 lift with Phi, Maass and Hecke checks");
  lift->add_option("--weight", job.weight, "Weight 2k of the eigenform")->required();
  lift->add_option("--bound", job.bound, "Trace bound n + m")->capture_default_str();
  lift->add_option("--primes", job.primes, "Hecke primes to check")->capture_default_str();
  shared(lift);

  auto* lf = app.add_subcommand("lfactor", "Symbolic standard L-factor identities");
  lf->add_option("--group", job.group, "Sp, SU, SUH, E73 or Miyawaki")->required();
  lf->add_option("--n", job.n, "Rank parameter n")->capture_default_str();
  shared(lf);

  auto* fj = app.add_subcommand("fj", "Fourier-Jacobi theta components");
  fj->add_option("--weight", job.weight, "Siegel weight (or 2k with --lift)")->required();
  fj->add_option("--S", job.S, "Jacobi index")->capture_default_str();
  fj->add_option("--bound", job.bound, "Largest N compared")->capture_default_str();
  fj->add_flag("--lift", job.fj_from_lift, "Decompose the lift of the weight-2k eigenform");
  shared(fj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tubelift::cli::kExitOk : tubelift::cli::kExitUsage;
  }

  if (eig->parsed()) job.command = Command::kEigenform;
  if (lift->parsed()) job.command = Command::kLift;
  if (lf->parsed()) job.command = Command::kLfactor;
  if (fj->parsed()) job.command = Command::kFj;
  try {
    job.format = tubelift::io::parse_format(format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tubelift::cli::kExitUsage;
  }
  return tubelift::cli::run_job(job, std::cout, std::cerr);
}
