#include "tubelift_cli/jobs.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "tubelift/arithmetic.hpp"
#include "tubelift/elliptic.hpp"
#include "tubelift/errors.hpp"
#include "tubelift/jacobi.hpp"
#include "tubelift/lfactor.hpp"
#include "tubelift/lift.hpp"
#include "tubelift/parallel.hpp"
#include "tubelift/siegel.hpp"

namespace tubelift::cli {

namespace {

std::string ext(const JobConfig& job) { return job.format == io::Format::kText ? ".txt" : ".json"; }

std::string lift_stem(const JobConfig& job) {
  return "lift_w" + std::to_string(job.weight) + "_b" + std::to_string(job.bound);
}

std::string fj_stem(const JobConfig& job) {
  return "fj_w" + std::to_string(job.weight) + "_S" + std::to_string(job.S) + "_b" + std::to_string(job.bound) +
         (job.fj_from_lift ? "_lift" : "");
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

void write_file(const std::filesystem::path& path, const auto& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

io::ReportEntry identity_entry(const lfactor::IdentityReport& r) {
  return {r.name, r.passed,
          {{"degree", std::to_string(r.degree)},
           {"expected_degree", std::to_string(r.expected_degree)},
           {"self_dual", yes_no(r.self_dual)},
           {"first_mismatch", r.first_mismatch.value_or("none")}}};
}

io::ReportEntry degeneration_entry(const lfactor::DegenerationReport& r) {
  return {"Eisenstein degeneration " + r.group, r.passed,
          {{"matching_substitution", yes_no(r.matching_substitution)},
           {"other_substitution_matches", yes_no(r.other_substitution_matches)}}};
}

int finish(const io::Report& report, const std::filesystem::path& path, const JobConfig& job, std::ostream& log) {
  write_file(path, [&](std::ostream& os) { io::write_report(os, report, job.format); });
  for (const auto& e : report.entries) log << pass(e.passed) << "  " << e.check << '\n';
  log << report.title << ": " << pass(report.all_passed()) << '\n';
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_eigenform(const JobConfig& job, std::ostream& log) {
  const auto f = elliptic::eigenform(job.weight, job.prec);
  const auto gate = elliptic::ramanujan_gate(f, static_cast<std::int64_t>(job.prec));
  const auto path = job.output / output_files(job).front();
  write_file(path, [&](std::ostream& os) { io::write_qseries(os, f.series(), job.format); });
  log << "eigenform weight=" << job.weight << " truncation=" << job.prec << " a(2)=" << to_fraction_string(f.ap(2))
      << '\n';
  log << "Ramanujan bound p<=" << job.prec << ": " << pass(gate.passed) << '\n';
  log << "wrote " << path.string() << '\n';
  return gate.passed ? kExitOk : kExitCheckFailed;
}

int run_lift(const JobConfig& job, std::ostream& log) {
  const int k = job.weight / 2;
  const std::int64_t pmax = *std::max_element(job.primes.begin(), job.primes.end());
  const std::int64_t big = job.bound * pmax;
  const auto trunc = std::max<std::int64_t>(static_cast<std::int64_t>(job.prec), lift::required_truncation(big));
  const auto f = elliptic::eigenform(job.weight, static_cast<std::size_t>(trunc));
  const auto full = lift::lift_expand(f, big);

  io::Report report;
  report.title = "lift weight " + std::to_string(k + 1) + " from S_" + std::to_string(job.weight);
  report.entries.push_back({"non-vanishing", !full.expansion.truncated(job.bound).is_zero(),
                            {{"indices", std::to_string(full.expansion.truncated(job.bound).table().size())}}});
  report.entries.push_back({"Phi-operator", siegel::phi_operator(full.expansion).is_zero(), {}});
  const auto maass = lift::calibrate_maass(full.expansion, k);
  report.entries.push_back({"Maass relation", maass.passed,
                            {{"exponent", std::to_string(maass.exponent)},
                             {"expected_exponent", std::to_string(k)},
                             {"relations", std::to_string(maass.relations_checked)},
                             {"first_failure", maass.first_failure ? maass.first_failure->to_string() : "none"}}});
  for (std::int64_t p : job.primes) {
    const auto sub = full.expansion.truncated(job.bound * p);
    const auto ratio = siegel::hecke_eigen_ratio(sub, p);
    const Rational expected = f.ap(p) + Rational(ipow(p, static_cast<unsigned long>(k))) +
                              Rational(ipow(p, static_cast<unsigned long>(k - 1)));
    const bool ok = ratio.constant && ratio.ratio && *ratio.ratio == expected;
    report.entries.push_back({"Hecke T(" + std::to_string(p) + ")", ok,
                              {{"eigenvalue", ratio.ratio ? to_fraction_string(*ratio.ratio) : "none"},
                               {"expected", to_fraction_string(expected)},
                               {"indices", std::to_string(ratio.indices_compared)},
                               {"first_mismatch", ratio.first_mismatch ? ratio.first_mismatch->to_string() : "none"}}});
  }

  lift::LiftResult out;
  out.expansion = full.expansion.truncated(job.bound);
  for (const auto& [t, prov] : full.provenance)
    if (t.trace() <= job.bound) out.provenance.emplace(t, prov);
  const auto files = output_files(job);
  write_file(job.output / files[0], [&](std::ostream& os) { io::write_expansion(os, out.expansion, job.format); });
  write_file(job.output / files[1], [&](std::ostream& os) { io::write_provenance(os, out, job.format); });
  return finish(report, job.output / files[2], job, log);
}

int run_lfactor(const JobConfig& job, std::ostream& log) {
  io::Report report;
  if (job.group == "Miyawaki") {
    report.title = "Miyawaki";
    const auto m = lfactor::miyawaki_check();
    std::string exps;
    for (int e : m.unipotent_exponents) exps += (exps.empty() ? "" : ",") + std::to_string(e);
    report.entries.push_back({"Miyawaki Satake set", m.passed,
                              {{"degree", std::to_string(m.satake_size)},
                               {"identity", yes_no(m.identity)},
                               {"so4", std::to_string(m.so4)},
                               {"so8", std::to_string(m.so8)},
                               {"unipotent_exponents", exps},
                               {"first_mismatch", m.first_mismatch.value_or("none")}}});
  } else {
    const auto g = lfactor::parse_group(job.group);
    report.title = "standard L-factor " + lfactor::group_name(g);
    report.entries.push_back(identity_entry(lfactor::standard_factor_check(g, job.n)));
    if (g == lfactor::Group::kSp4n) {
      report.entries.push_back(identity_entry(lfactor::cap_check(job.n)));
      report.entries.push_back(degeneration_entry(lfactor::degeneration_check(g, job.n)));
    } else if (g == lfactor::Group::kSU2nH) {
      report.entries.push_back(degeneration_entry(lfactor::degeneration_check(g, job.n)));
    } else if (g == lfactor::Group::kE73) {
      const auto a = lfactor::arthur_dims();
      io::ReportEntry e{"Arthur parameter", a.passed, {}};
      for (const auto& c : a.components)
        e.fields.emplace_back(c.name, std::to_string(c.dimension) + (c.symplectic ? " symplectic" : " orthogonal"));
      e.fields.emplace_back("total", std::to_string(a.total));
      e.fields.emplace_back("matches_standard", yes_no(a.matches_standard));
      report.entries.push_back(std::move(e));
      report.entries.push_back(degeneration_entry(lfactor::degeneration_check(g, job.n)));
    }
  }
  return finish(report, job.output / output_files(job).front(), job, log);
}

int run_fj(const JobConfig& job, std::ostream& log) {
  const jacobi::JacobiIndex s(job.S);
  if (s.m != 1)
    throw GateError("fj: index S=" + std::to_string(s.m) + " is outside the supported scope (S=1 only)");
  siegel::SiegelExpansion source;
  io::Report report;
  int k = 0;
  if (job.fj_from_lift) {
    k = job.weight / 2;
    const std::int64_t bound = job.bound + 1;
    const auto f = elliptic::eigenform(job.weight, std::max<std::size_t>(job.prec, lift::required_truncation(bound)));
    source = lift::lift_expand(f, bound).expansion;
    report.title = "Fourier-Jacobi components of the lift of S_" + std::to_string(job.weight);
  } else {
    k = job.weight - 1;
    if (k < 3 || k % 2 == 0) throw UsageError("fj: Siegel weight must be even and at least 4");
    const auto fj_check = jacobi::eisenstein_fj_check(k, s, job.bound);
    for (const auto& c : fj_check.components)
      report.entries.push_back({"Cohen pattern xi=" + to_fraction_string(c.xi), c.proportional && c.ratio == Rational(1),
                                {{"ratio", c.ratio ? to_fraction_string(*c.ratio) : "none"},
                                 {"compared", std::to_string(c.compared)},
                                 {"weight", to_fraction_string(fj_check.weight)},
                                 {"first_mismatch_N", c.first_mismatch_n ? std::to_string(*c.first_mismatch_n) : "none"}}});
    source = siegel::eisenstein_expand(k, job.bound + 1, siegel::EisensteinNormalization::kLValue);
    report.title = "Fourier-Jacobi components of the weight " + std::to_string(job.weight) + " Eisenstein series";
  }

  const auto cosets = jacobi::dual_cosets(s);
  const auto files = output_files(job);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    const auto comp = jacobi::fj_component(source, s, cosets[i]);
    write_file(job.output / files[i], [&](std::ostream& os) { io::write_component(os, comp, job.format); });
    if (job.fj_from_lift) {
      auto it = comp.coefficients.find(0);
      const bool cusp = it == comp.coefficients.end() || it->second == 0;
      report.entries.push_back({"zero constant term xi=" + to_fraction_string(cosets[i]), cusp, {}});
    }
  }
  const auto semi = jacobi::reconstruct_fj(source, s, jacobi::CosetConvention::kSemiIntegral);
  const auto dual = jacobi::reconstruct_fj(source, s, jacobi::CosetConvention::kIntegralDual);
  auto where = [](const jacobi::ReconstructionReport& r) {
    return r.first_mismatch ? "(" + std::to_string(r.first_mismatch->first) + "," + std::to_string(r.first_mismatch->second) + ")"
                            : std::string("none");
  };
  report.entries.push_back({"theta reconstruction", semi.passed,
                            {{"cosets", std::to_string(cosets.size())},
                             {"compared", std::to_string(semi.compared)},
                             {"collisions", std::to_string(semi.collisions)},
                             {"first_mismatch", where(semi)},
                             {"integral_dual_convention", pass(dual.passed)},
                             {"integral_dual_first_mismatch", where(dual)}}});
  return finish(report, job.output / files.back(), job, log);
}

}  // namespace

void validate(const JobConfig& job) {
  switch (job.command) {
    case Command::kEigenform:
      if (job.weight <= 0 || job.weight % 2 != 0) throw UsageError("--weight must be a positive even integer");
      if (job.prec < static_cast<std::size_t>(elliptic::kEigenCheckPrimeBound))
        throw UsageError("--prec must be at least " + std::to_string(elliptic::kEigenCheckPrimeBound));
      break;
    case Command::kLift:
      if (job.weight <= 0 || job.weight % 2 != 0) throw UsageError("--weight must be a positive even integer");
      if (job.bound < 1) throw UsageError("--bound must be positive; bound 0 gives an empty expansion");
      if (job.primes.empty()) throw UsageError("--primes must name at least one prime");
      for (auto p : job.primes)
        if (!arith::is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
      break;
    case Command::kLfactor:
      if (job.group != "Miyawaki") lfactor::parse_group(job.group);
      if (job.n < 1) throw UsageError("--n must be at least 1");
      break;
    case Command::kFj:
      if (job.weight <= 0) throw UsageError("--weight must be positive");
      if (job.S < 1) throw UsageError("--S must be positive");
      if (job.bound < 1) throw UsageError("--bound must be positive");
      break;
  }
}

std::vector<std::filesystem::path> output_files(const JobConfig& job) {
  const std::string e = ext(job);
  switch (job.command) {
    case Command::kEigenform:
      return {"eigenform_w" + std::to_string(job.weight) + "_p" + std::to_string(job.prec) + e};
    case Command::kLift: {
      const std::string stem = lift_stem(job);
      return {stem + e, stem + ".provenance" + e, stem + ".checks" + e};
    }
    case Command::kLfactor:
      if (job.group == "Miyawaki" || job.group == "E73") return {"lfactor_" + job.group + e};
      return {"lfactor_" + job.group + "_n" + std::to_string(job.n) + e};
    case Command::kFj: {
      std::vector<std::filesystem::path> out;
      const std::string stem = fj_stem(job);
      for (std::int64_t j = 0; j < 2 * std::max<std::int64_t>(job.S, 1); ++j)
        out.emplace_back(stem + "_xi" + std::to_string(j) + e);
      out.emplace_back(stem + ".report" + e);
      return out;
    }
  }
  return {};
}

int run_job(const JobConfig& job, std::ostream& log, std::ostream& err) {
  try {
    validate(job);
    parallel::set_max_threads(job.threads);
    std::filesystem::create_directories(job.output);
    switch (job.command) {
      case Command::kEigenform: return run_eigenform(job, log);
      case Command::kLift: return run_lift(job, log);
      case Command::kLfactor: return run_lfactor(job, log);
      case Command::kFj: return run_fj(job, log);
    }
  } catch (const ParityGateError& e) {
    err << "parity gate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionGateError& e) {
    err << "dimension gate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GateError& e) {
    err << "scope gate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace tubelift::cli
