#include "tubelift/siegel.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "tubelift/arithmetic.hpp"
#include "tubelift/elliptic.hpp"
#include "tubelift/errors.hpp"
#include "tubelift/parallel.hpp"

namespace tubelift::siegel {

Rational cohen_H(int r, std::int64_t N) {
  if (r < 1) throw std::invalid_argument("cohen_H: r must be positive");
  if (N < 0) throw std::invalid_argument("cohen_H: N must be nonnegative");
  if (N == 0) return arith::dirichlet_L_neg(static_cast<unsigned>(2 * r), 1);
  const auto split = arith::discriminant_split(r, N);
  if (!split.integral_conductor()) return Rational(0);
  const std::int64_t D = split.fundamental;
  const std::int64_t f = split.conductor.get_num().get_si();
  Integer sum = 0;
  for (auto d : arith::divisors(f)) {
    const int mu = arith::moebius(d);
    if (mu == 0) continue;
    const int chi = (D == 1) ? 1 : arith::kronecker(D, d);
    if (chi == 0) continue;
    sum += mu * chi * ipow(d, static_cast<unsigned long>(r - 1)) *
           arith::divisor_sigma(f / d, static_cast<unsigned>(2 * r - 1));
  }
  return arith::dirichlet_L_neg(static_cast<unsigned>(r), D) * Rational(sum);
}

namespace {

void require_weight(int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("Eisenstein series: weight k+1 = " + std::to_string(k + 1) +
                                " must be even and at least 4");
}

}  // namespace

Rational eisenstein_normalizing_constant(int k) {
  require_weight(k);
  const Rational z1 = arith::dirichlet_L_neg(static_cast<unsigned>(k + 1), 1);      // zeta(1-l)
  const Rational z2 = arith::dirichlet_L_neg(static_cast<unsigned>(2 * k), 1);      // zeta(3-2l)
  return Rational(2) / (z1 * z2);
}

Rational eisenstein_coeff(int k, const FourierIndex& t, EisensteinNormalization norm) {
  require_weight(k);
  if (!t.is_positive_semidefinite())
    throw std::invalid_argument("eisenstein_coeff: " + t.to_string() + " is indefinite");
  const bool unit = norm == EisensteinNormalization::kUnitConstantTerm;
  if (t.is_zero()) return unit ? Rational(1) : 1 / eisenstein_normalizing_constant(k);
  const std::int64_t D = t.discriminant();
  Rational acc = 0;
  for (auto d : arith::divisors(t.content()))
    acc += Rational(ipow(d, static_cast<unsigned long>(k))) * cohen_H(k, D / (d * d));
  return unit ? acc * eisenstein_normalizing_constant(k) : acc;
}

SiegelExpansion::SiegelExpansion(int weight, std::int64_t trace_bound, std::map<FourierIndex, Rational> table)
    : weight_(weight), trace_bound_(trace_bound), table_(std::move(table)) {
  for (const auto& [t, v] : table_) {
    if (!t.is_reduced()) throw std::invalid_argument("SiegelExpansion: key " + t.to_string() + " is not reduced");
    if (t.trace() > trace_bound_)
      throw std::invalid_argument("SiegelExpansion: key " + t.to_string() + " exceeds the trace bound");
  }
}

bool SiegelExpansion::in_range(const FourierIndex& t) const { return reduce_index(t).reduced.trace() <= trace_bound_; }

std::optional<Rational> SiegelExpansion::at(const FourierIndex& t) const {
  const FourierIndex red = reduce_index(t).reduced;
  if (red.trace() > trace_bound_) return std::nullopt;
  auto it = table_.find(red);
  return it == table_.end() ? Rational(0) : it->second;
}

Rational SiegelExpansion::coefficient(const FourierIndex& t) const {
  auto v = at(t);
  if (!v) throw TruncationError("SiegelExpansion: " + t.to_string() + " beyond trace bound " + std::to_string(trace_bound_));
  return *v;
}

bool SiegelExpansion::is_zero() const {
  for (const auto& [t, v] : table_)
    if (v != 0) return false;
  return true;
}

SiegelExpansion SiegelExpansion::truncated(std::int64_t bound) const {
  if (bound > trace_bound_) throw TruncationError("SiegelExpansion: cannot extend the trace bound");
  std::map<FourierIndex, Rational> table;
  for (const auto& [t, v] : table_)
    if (t.trace() <= bound) table.emplace(t, v);
  return SiegelExpansion(weight_, bound, std::move(table));
}

SiegelExpansion eisenstein_expand(int k, std::int64_t trace_bound, EisensteinNormalization norm) {
  require_weight(k);
  const auto indices = reduced_indices(trace_bound);
  std::vector<Rational> values(indices.size());
  parallel::for_each_index(indices.size(), [&](std::size_t i) { values[i] = eisenstein_coeff(k, indices[i], norm); });
  std::map<FourierIndex, Rational> table;
  for (std::size_t i = 0; i < indices.size(); ++i) table.emplace(indices[i], std::move(values[i]));
  return SiegelExpansion(k + 1, trace_bound, std::move(table));
}

QSeries phi_operator(const SiegelExpansion& f) {
  QSeries out(f.weight(), static_cast<std::size_t>(f.trace_bound()));
  for (std::int64_t n = 0; n <= f.trace_bound(); ++n) out[static_cast<std::size_t>(n)] = f.coefficient({n, 0, 0});
  return out;
}

namespace {

// a(T) with T given by 2T-style integer data that may fail semi-integrality.
Rational lookup_scaled(const SiegelExpansion& f, std::int64_t n, std::int64_t r, std::int64_t m, std::int64_t p) {
  if (n % p != 0 || r % p != 0 || m % p != 0) return Rational(0);
  return f.coefficient({n / p, r / p, m / p});
}

}  // namespace

SiegelExpansion hecke_tp_degree2(const SiegelExpansion& f, std::int64_t p) {
  if (!arith::is_prime(p)) throw std::invalid_argument("hecke_tp_degree2: " + std::to_string(p) + " is not prime");
  const std::int64_t out_bound = f.trace_bound() / p;
  const int w = f.weight();
  const Rational middle = Rational(ipow(p, static_cast<unsigned long>(w - 2)));
  const Rational last = Rational(ipow(p, static_cast<unsigned long>(2 * w - 3)));
  std::vector<Unimodular> sublattices;
  for (std::int64_t j = 0; j < p; ++j) sublattices.push_back({1, 0, j, p});
  sublattices.push_back({p, 0, 0, 1});

  const auto indices = reduced_indices(out_bound);
  std::vector<Rational> values(indices.size());
  parallel::for_each_index(indices.size(), [&](std::size_t i) {
    const FourierIndex& t = indices[i];
    Rational acc = f.coefficient({p * t.n, p * t.r, p * t.m});
    Rational inner = 0;
    for (const auto& u : sublattices) {
      const FourierIndex s = transform(t, u);
      inner += lookup_scaled(f, s.n, s.r, s.m, p);
    }
    acc += middle * inner;
    acc += last * lookup_scaled(f, t.n, t.r, t.m, p);
    values[i] = std::move(acc);
  });
  std::map<FourierIndex, Rational> table;
  for (std::size_t i = 0; i < indices.size(); ++i) table.emplace(indices[i], std::move(values[i]));
  return SiegelExpansion(w, out_bound, std::move(table));
}

EigenRatioReport hecke_eigen_ratio(const SiegelExpansion& f, std::int64_t p) {
  const SiegelExpansion image = hecke_tp_degree2(f, p);
  EigenRatioReport report;
  // First pass fixes lambda from any index with f(T) != 0.
  for (const auto& t : reduced_indices(image.trace_bound())) {
    const Rational ft = f.coefficient(t);
    if (ft != 0) {
      report.ratio = image.coefficient(t) / ft;
      break;
    }
  }
  for (const auto& t : reduced_indices(image.trace_bound())) {
    const Rational ft = f.coefficient(t);
    const Rational gt = image.coefficient(t);
    if (ft != 0) ++report.indices_compared;
    const Rational expected = report.ratio ? *report.ratio * ft : Rational(0);
    if (gt != expected) {
      report.constant = false;
      report.first_mismatch = t;
      break;
    }
  }
  return report;
}

}  // namespace tubelift::siegel
