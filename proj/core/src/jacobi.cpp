#include "tubelift/jacobi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tubelift/errors.hpp"
#include "tubelift/parallel.hpp"

namespace tubelift::jacobi {

JacobiIndex::JacobiIndex(std::int64_t m_) : m(m_) {
  if (m < 1) throw std::invalid_argument("JacobiIndex: S must be positive");
}

std::vector<Rational> dual_cosets(const JacobiIndex& s, CosetConvention convention) {
  const std::int64_t denom = convention == CosetConvention::kSemiIntegral ? 2 * s.m : s.m;
  std::vector<Rational> out;
  for (std::int64_t j = 0; j < denom; ++j) out.push_back(make_rational(j, denom));
  return out;
}

namespace {

std::int64_t lattice_residue(const JacobiIndex& s, const Rational& xi) {
  const Rational rho = Rational(2 * s.m) * xi;
  if (rho.get_den() != 1) throw std::invalid_argument("coset " + to_fraction_string(xi) + " is not in (1/2S)Z");
  return rho.get_num().get_si();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

ThetaSeries theta_series(const JacobiIndex& s, const Rational& xi, std::int64_t max_numerator) {
  ThetaSeries out;
  out.index = s;
  out.xi = xi;
  out.max_numerator = max_numerator;
  const std::int64_t rho = lattice_residue(s, xi);
  const std::int64_t step = 2 * s.m;
  for (std::int64_t lattice = floor_mod(rho, step); lattice * lattice <= max_numerator; lattice += step)
    out.terms.push_back({lattice * lattice, lattice, Rational(1)});
  for (std::int64_t lattice = floor_mod(rho, step) - step; lattice * lattice <= max_numerator; lattice -= step)
    out.terms.push_back({lattice * lattice, lattice, Rational(1)});
  std::sort(out.terms.begin(), out.terms.end(), [](const ThetaTerm& a, const ThetaTerm& b) {
    return std::pair(a.numerator_exponent, a.lattice_exponent) < std::pair(b.numerator_exponent, b.lattice_exponent);
  });
  return out;
}

ThetaComponent fj_component(const siegel::SiegelExpansion& f, const JacobiIndex& s, const Rational& xi) {
  ThetaComponent out;
  out.index = s;
  out.xi = xi;
  out.lattice_residue = lattice_residue(s, xi);
  out.offset_denominator = 4 * s.m;
  out.offset = s.sigma(xi, xi);
  out.weight = Rational(f.weight()) - make_rational(JacobiIndex::dim_x, 2);
  const std::int64_t j = out.lattice_residue;
  const std::int64_t den = out.offset_denominator;
  for (std::int64_t n = (j * j + den - 1) / den;; ++n) {
    const auto value = f.at({s.m, j, n});
    if (!value) break;
    const std::int64_t num = den * n - j * j;
    out.coefficients.emplace(num, *value);
    out.max_numerator_exponent = num;
  }
  return out;
}

ComponentMatch compare_with_cohen(const ThetaComponent& component, int k, std::int64_t bound) {
  if (component.index.m != 1) throw GateError("Cohen comparison is only defined for S = 1");
  const std::int64_t j = component.lattice_residue;
  if (j != 0 && j != 1) throw std::invalid_argument("Cohen comparison needs xi in {0, 1/2}");
  ComponentMatch match;
  match.xi = component.xi;
  for (std::int64_t n = j; n <= bound; ++n) {
    const std::int64_t num = 4 * n - j * j;
    if (num > component.max_numerator_exponent)
      throw TruncationError("component at xi=" + to_fraction_string(component.xi) + " stops before N=" + std::to_string(n));
    const Rational target = siegel::cohen_H(k, num);
    auto it = component.coefficients.find(num);
    const Rational value = it == component.coefficients.end() ? Rational(0) : it->second;
    ++match.compared;
    if (!match.ratio && target != 0) match.ratio = value / target;
    const Rational expected = match.ratio ? *match.ratio * target : Rational(0);
    if (value != expected) {
      match.proportional = false;
      match.first_mismatch_n = n;
      return match;
    }
  }
  return match;
}

EisensteinFjReport eisenstein_fj_check(int k, const JacobiIndex& s, std::int64_t bound, siegel::EisensteinNormalization norm) {
  if (s.m != 1)
    throw GateError("theta components of index S=" + std::to_string(s.m) +
                    " carry a nontrivial multiplier; only S=1 is supported");
  EisensteinFjReport report;
  report.k = k;
  report.weight = Rational(k + 1) - make_rational(JacobiIndex::dim_x, 2);
  if (report.weight != Rational(2 * k + 1, 2)) throw CheckFailure("weight bookkeeping: expected k + 1/2");
  const auto e = siegel::eisenstein_expand(k, bound + 1, norm);
  const auto cosets = dual_cosets(s);
  report.components.resize(cosets.size());
  parallel::for_each_index(cosets.size(), [&](std::size_t i) {
    report.components[i] = compare_with_cohen(fj_component(e, s, cosets[i]), k, bound);
  });
  for (const auto& c : report.components) report.passed = report.passed && c.proportional;
  return report;
}

ReconstructionReport reconstruct_fj(const siegel::SiegelExpansion& f, const JacobiIndex& s, CosetConvention convention) {
  ReconstructionReport report;
  report.convention = convention;
  const std::int64_t den = 4 * s.m;
  const std::int64_t n_max = f.trace_bound();

  std::map<std::int64_t, ThetaComponent> by_residue;
  for (const auto& xi : dual_cosets(s, convention)) {
    auto comp = fj_component(f, s, xi);
    by_residue.emplace(comp.lattice_residue, std::move(comp));
  }

  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<Rational, int>> table;
  for (const auto& [residue, comp] : by_residue) {
    const auto theta = theta_series(s, comp.xi, den * n_max);
    for (const auto& [num, c] : comp.coefficients)
      for (const auto& term : theta.terms) {
        const std::int64_t total = num + term.numerator_exponent;
        if (total > den * n_max) continue;
        if (total % den != 0) throw CheckFailure("theta product has a fractional q-exponent");
        auto& slot = table[{total / den, term.lattice_exponent}];
        slot.first += c * term.coefficient;
        ++slot.second;
      }
  }
  for (const auto& [key, slot] : table)
    if (slot.second > 1) ++report.collisions;

  for (std::int64_t n = 0; n <= n_max; ++n) {
    for (std::int64_t r = -2 * n_max - 2 * s.m; r <= 2 * n_max + 2 * s.m; ++r) {
      const std::int64_t num = den * n - r * r;
      if (num < 0) continue;
      const auto actual = f.at({s.m, r, n});
      if (!actual) continue;
      auto comp = by_residue.find(floor_mod(r, 2 * s.m));
      if (comp != by_residue.end() && num > comp->second.max_numerator_exponent) continue;
      auto it = table.find({n, r});
      const Rational rebuilt = it == table.end() ? Rational(0) : it->second.first;
      ++report.compared;
      if (rebuilt != *actual && report.passed) {
        report.passed = false;
        report.first_mismatch = std::pair(n, r);
      }
    }
  }
  if (report.collisions > 0) report.passed = false;
  return report;
}

}  // namespace tubelift::jacobi
