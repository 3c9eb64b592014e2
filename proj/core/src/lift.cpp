#include "tubelift/lift.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linear_solve.hpp"
#include "tubelift/arithmetic.hpp"
#include "tubelift/errors.hpp"
#include "tubelift/parallel.hpp"

namespace tubelift::lift {

namespace {

QuadSurd zero_in(std::int64_t p) { return QuadSurd(p); }

// -D_T = d_T f_T^2 for positive-definite T.
struct NegativeSplit {
  std::int64_t fundamental;
  std::int64_t conductor;
};

NegativeSplit split_index(const FourierIndex& t) {
  if (!t.is_positive_definite())
    throw GateError("index " + t.to_string() + " is not positive definite");
  const auto s = arith::discriminant_split(1, t.discriminant());
  return {s.fundamental, s.conductor.get_num().get_si()};
}

// X = p^{k'-1/2} raised to the power m.
QuadSurd x_power(std::int64_t p, int k, long m) { return QuadSurd::half_power(p, m * (2L * k - 1)); }

std::int64_t strip_prime(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace

SymLaurent::SymLaurent(std::int64_t radicand, std::vector<QuadSurd> coeffs)
    : radicand_(radicand), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(zero_in(radicand_));
}

unsigned SymLaurent::degree() const {
  for (std::size_t m = coeffs_.size(); m-- > 0;)
    if (!coeffs_[m].is_zero()) return static_cast<unsigned>(m);
  return 0;
}

QuadSurd SymLaurent::coefficient(unsigned m) const { return m < coeffs_.size() ? coeffs_[m] : zero_in(radicand_); }

bool SymLaurent::has_rational_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

QuadSurd SymLaurent::evaluate(const QuadSurd& x) const {
  const QuadSurd inv = x.inverse();
  QuadSurd acc = coeffs_[0];
  QuadSurd up = x;
  QuadSurd down = inv;
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    acc += coeffs_[m] * (up + down);
    up *= x;
    down *= inv;
  }
  return acc;
}

QuadSurd SymLaurent::evaluate_power_sums(std::span<const QuadSurd> s) const {
  if (s.size() < coeffs_.size()) throw std::invalid_argument("SymLaurent: too few power sums");
  QuadSurd acc = coeffs_[0];
  for (std::size_t m = 1; m < coeffs_.size(); ++m) acc += coeffs_[m] * s[m];
  return acc;
}

bool operator==(const SymLaurent& a, const SymLaurent& b) {
  const unsigned top = std::max(a.degree_bound(), b.degree_bound());
  for (unsigned m = 0; m <= top; ++m)
    if (!(a.coefficient(m) == b.coefficient(m))) return false;
  return true;
}

std::string SymLaurent::to_string() const {
  std::ostringstream os;
  for (unsigned m = 0; m <= degree(); ++m) {
    if (m > 0) os << " + ";
    os << "(" << coefficient(m).to_string() << ")";
    if (m > 0) os << "*(X^" << m << " + X^-" << m << ")";
  }
  return os.str();
}

LocalKey local_key(const FourierIndex& t, std::int64_t p) {
  if (!arith::is_prime(p)) throw std::invalid_argument("local_key: " + std::to_string(p) + " is not prime");
  const auto split = split_index(t);
  LocalKey key;
  key.p = p;
  key.content_exponent = arith::valuation(t.content(), p);
  key.conductor_exponent = arith::valuation(split.conductor, p);
  key.chi = arith::kronecker(split.fundamental, p);
  return key;
}

std::int64_t canonical_discriminant(std::int64_t p, int chi) {
  for (std::int64_t d = -3;; --d)
    if (arith::is_fundamental_discriminant(d) && arith::kronecker(d, p) == chi) return d;
}

FourierIndex local_sample_index(const LocalKey& key, std::int64_t fundamental) {
  if (fundamental >= 0 || !arith::is_fundamental_discriminant(fundamental))
    throw std::invalid_argument("local_sample_index: need a negative fundamental discriminant");
  if (key.content_exponent > key.conductor_exponent)
    throw std::invalid_argument("local_sample_index: content exponent exceeds conductor exponent");
  const std::int64_t scale = ipow(key.p, static_cast<unsigned long>(key.content_exponent)).get_si();
  const std::int64_t delta =
      -fundamental * ipow(key.p, 2UL * static_cast<unsigned long>(key.conductor_exponent - key.content_exponent)).get_si();
  const FourierIndex principal = (delta % 4 == 0) ? FourierIndex{1, 0, delta / 4} : FourierIndex{1, 1, (delta + 1) / 4};
  return {scale * principal.n, scale * principal.r, scale * principal.m};
}

std::vector<int> weight_ladder(std::size_t count, int first) {
  if (first < 3 || first % 2 == 0) throw std::invalid_argument("weight_ladder: first weight must be odd and >= 3");
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(first + 2 * static_cast<int>(i));
  return out;
}

CompatibleFamilySample sample_family(const FourierIndex& t, std::span<const int> weights) {
  CompatibleFamilySample out;
  out.index = t;
  out.fundamental = split_index(t).fundamental;
  std::set<int> seen;
  for (int k : weights) {
    if (!seen.insert(k).second) throw std::invalid_argument("sample_family: repeated weight " + std::to_string(k));
    out.weight_samples.emplace_back(k, siegel::eisenstein_coeff(k, t, siegel::EisensteinNormalization::kLValue));
  }
  return out;
}

namespace {

// Right-hand sides (A/L) X^{-b} / prod_{q != p} (q-local factor) per sample.
std::vector<QuadSurd> normalized_samples(const CompatibleFamilySample& samples, std::int64_t p,
                                         LocalPolynomialCache& cache) {
  const auto split = split_index(samples.index);
  if (split.fundamental != samples.fundamental)
    throw std::invalid_argument("interpolation: sample discriminant does not match its index");
  const int b = arith::valuation(split.conductor, p);
  std::vector<std::pair<std::int64_t, SymLaurent>> others;
  const std::int64_t rest = strip_prime(split.conductor, p);
  if (rest > 1)
    for (auto [q, e] : arith::factorize(rest)) others.emplace_back(q, cache.get(local_key(samples.index, q)));

  std::vector<QuadSurd> out;
  for (const auto& [k, a] : samples.weight_samples) {
    Rational v = a / arith::dirichlet_L_neg(static_cast<unsigned>(k), samples.fundamental);
    for (const auto& [q, poly] : others) {
      const int bq = arith::valuation(split.conductor, q);
      const QuadSurd factor = x_power(q, k, bq) * poly.evaluate(x_power(q, k, 1));
      if (!factor.is_rational())
        throw CheckFailure("interpolation: local factor at " + std::to_string(q) + " is irrational");
      v /= factor.rational_part();
    }
    out.push_back(x_power(p, k, -b) * v);
  }
  return out;
}

}  // namespace

SymLaurent interpolate_local_poly(const CompatibleFamilySample& samples, std::int64_t p, LocalPolynomialCache& cache) {
  const LocalKey key = local_key(samples.index, p);
  const unsigned M = key.degree_bound();
  if (samples.weight_samples.size() < M + 2)
    throw std::invalid_argument("interpolate_local_poly: need " + std::to_string(M + 2) + " samples, got " +
                                std::to_string(samples.weight_samples.size()));
  auto rhs = normalized_samples(samples, p, cache);
  std::vector<std::vector<QuadSurd>> rows;
  for (const auto& [k, a] : samples.weight_samples) {
    std::vector<QuadSurd> row;
    row.emplace_back(p, 1);
    for (unsigned m = 1; m <= M; ++m) row.push_back(x_power(p, k, m) + x_power(p, k, -static_cast<long>(m)));
    rows.push_back(std::move(row));
  }
  auto solved = detail::solve_exact(std::move(rows), std::move(rhs));
  if (solved.status == detail::SolveStatus::kInconsistent)
    throw CheckFailure("interpolate_local_poly: inconsistent system for " + samples.index.to_string() + " at p=" +
                       std::to_string(p));
  if (solved.status == detail::SolveStatus::kRankDeficient)
    throw CheckFailure("interpolate_local_poly: singular system for " + samples.index.to_string());
  return SymLaurent(p, std::move(solved.x));
}

bool LaurentSolution::is_symmetric() const {
  for (unsigned m = 1; m <= degree_bound; ++m)
    if (!(coeffs[degree_bound + m] == coeffs[degree_bound - m])) return false;
  return true;
}

LaurentSolution interpolate_full_laurent(const CompatibleFamilySample& samples, std::int64_t p,
                                         LocalPolynomialCache& cache) {
  const LocalKey key = local_key(samples.index, p);
  const unsigned M = key.degree_bound();
  if (samples.weight_samples.size() < 2 * M + 2)
    throw std::invalid_argument("interpolate_full_laurent: need " + std::to_string(2 * M + 2) + " samples");
  auto rhs = normalized_samples(samples, p, cache);
  std::vector<std::vector<QuadSurd>> rows;
  for (const auto& [k, a] : samples.weight_samples) {
    std::vector<QuadSurd> row;
    for (long e = -static_cast<long>(M); e <= static_cast<long>(M); ++e) row.push_back(x_power(p, k, e));
    rows.push_back(std::move(row));
  }
  auto solved = detail::solve_exact(std::move(rows), std::move(rhs));
  if (solved.status != detail::SolveStatus::kUnique)
    throw CheckFailure("interpolate_full_laurent: no unique solution for " + samples.index.to_string());
  return {M, std::move(solved.x)};
}

SymLaurent compute_local_polynomial(const LocalKey& key, LocalPolynomialCache& cache) {
  const std::int64_t d = canonical_discriminant(key.p, key.chi);
  const FourierIndex t = local_sample_index(key, d);
  const std::size_t n = key.degree_bound() + 2;
  const auto ladder_a = weight_ladder(n);
  const auto ladder_b = weight_ladder(n, ladder_a.back() + 2);
  SymLaurent a = interpolate_local_poly(sample_family(t, ladder_a), key.p, cache);
  SymLaurent b = interpolate_local_poly(sample_family(t, ladder_b), key.p, cache);
  if (!(a == b))
    throw CheckFailure("local polynomial at " + t.to_string() + ", p=" + std::to_string(key.p) +
                       " differs between weight ladders");
  const auto full = interpolate_full_laurent(sample_family(t, weight_ladder(2 * n - 2)), key.p, cache);
  if (!full.is_symmetric())
    throw CheckFailure("local polynomial at " + t.to_string() + " is not symmetric under X -> 1/X");
  for (unsigned m = 0; m <= full.degree_bound; ++m)
    if (!(full.coeffs[full.degree_bound + m] == a.coefficient(m)))
      throw CheckFailure("symmetric and full Laurent solutions disagree at " + t.to_string());
  return a;
}

namespace {

std::string cache_file_name(const LocalKey& key) {
  std::ostringstream os;
  os << "local_p" << key.p << "_a" << key.content_exponent << "_b" << key.conductor_exponent << "_chi"
     << (key.chi < 0 ? "m1" : std::to_string(key.chi)) << ".txt";
  return os.str();
}

constexpr const char* kCacheHeader = "# tubelift local-polynomial v1";

std::optional<SymLaurent> read_cache_file(const std::filesystem::path& path, const LocalKey& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return std::nullopt;
  std::vector<QuadSurd> coeffs;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream fields(line);
      unsigned m;
      std::string a, b;
      if (!(fields >> m >> a >> b) || m != coeffs.size()) return std::nullopt;
      coeffs.emplace_back(key.p, parse_rational(a), parse_rational(b));
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (coeffs.size() != key.degree_bound() + 1) return std::nullopt;
  return SymLaurent(key.p, std::move(coeffs));
}

void write_cache_file(const std::filesystem::path& path, const SymLaurent& poly) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kCacheHeader << '\n';
    const auto coeffs = poly.coefficients();
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      out << m << ' ' << to_fraction_string(coeffs[m].rational_part()) << ' '
          << to_fraction_string(coeffs[m].surd_part()) << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

LocalPolynomialCache::LocalPolynomialCache(std::optional<std::filesystem::path> directory)
    : directory_(std::move(directory)) {
  if (directory_) std::filesystem::create_directories(*directory_);
}

LocalPolynomialCache& LocalPolynomialCache::global() {
  static LocalPolynomialCache cache([]() -> std::optional<std::filesystem::path> {
    const char* dir = std::getenv("TUBELIFT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
  }());
  return cache;
}

SymLaurent LocalPolynomialCache::get(const LocalKey& key) {
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  std::optional<SymLaurent> poly;
  if (directory_) poly = read_cache_file(*directory_ / cache_file_name(key), key);
  const bool loaded = poly.has_value();
  if (!poly) poly = compute_local_polynomial(key, *this);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = table_.emplace(key, std::move(*poly));
  if (inserted && directory_ && !loaded) write_cache_file(*directory_ / cache_file_name(key), it->second);
  return it->second;
}

std::size_t LocalPolynomialCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

Rational assemble_coefficient(int k, const FourierIndex& t, const PowerSumProvider& power_sums, ProductRange range,
                              LocalPolynomialCache& cache) {
  if (k < 3 || k % 2 == 0) throw ParityGateError("lift formula needs odd k >= 3, got " + std::to_string(k));
  const auto split = split_index(t);
  Rational value = arith::dirichlet_L_neg(static_cast<unsigned>(k), split.fundamental);
  for (auto [p, e] : arith::factorize(t.discriminant())) {
    const LocalKey key = local_key(t, p);
    QuadSurd factor = x_power(p, k, key.conductor_exponent);
    const bool included = range == ProductRange::kDiscriminantPrimes || split.fundamental % p == 0;
    if (included) {
      const SymLaurent poly = cache.get(key);
      factor *= poly.evaluate_power_sums(power_sums(p, poly.degree_bound()));
    }
    if (!factor.is_rational())
      throw CheckFailure("coefficient at " + t.to_string() + ": half-power residue at p=" + std::to_string(p));
    value *= factor.rational_part();
  }
  return value;
}

Rational lift_coeff(const elliptic::Eigenform& f, const FourierIndex& t, ProductRange range,
                    LocalPolynomialCache& cache) {
  const int k = f.k_half();
  if (k % 2 == 0) throw ParityGateError("lift needs odd k, got k=" + std::to_string(k));
  const PowerSumProvider sums = [&](std::int64_t p, unsigned max_m) {
    return elliptic::SatakeSymbol(p, k, f.ap(p)).power_sums(max_m);
  };
  return assemble_coefficient(k, t, sums, range, cache);
}

Rational eisenstein_degeneration(int k, const FourierIndex& t, ProductRange range, LocalPolynomialCache& cache) {
  const PowerSumProvider sums = [k](std::int64_t p, unsigned max_m) {
    const Rational ap = 1 + Rational(ipow(p, 2UL * static_cast<unsigned long>(k) - 1));
    return elliptic::SatakeSymbol(p, k, ap).power_sums(max_m);
  };
  return assemble_coefficient(k, t, sums, range, cache);
}

std::int64_t required_truncation(std::int64_t trace_bound) {
  if (trace_bound < 2) return 1;
  return 4 * (trace_bound / 2) * ((trace_bound + 1) / 2);
}

LiftResult lift_expand(const elliptic::Eigenform& f, std::int64_t trace_bound, LocalPolynomialCache& cache) {
  const int k = f.k_half();
  if (k % 2 == 0) throw ParityGateError("lift needs odd k (weight 2k with k odd), got 2k=" + std::to_string(2 * k));
  const auto indices = siegel::reduced_indices(trace_bound, true);
  if (indices.empty())
    throw GateError("trace bound " + std::to_string(trace_bound) + " leaves no positive-definite index");

  std::set<LocalKey> keys;
  std::int64_t largest_prime = 1;
  for (const auto& t : indices)
    for (auto [p, e] : arith::factorize(t.discriminant())) {
      keys.insert(local_key(t, p));
      largest_prime = std::max(largest_prime, p);
    }
  if (static_cast<std::int64_t>(f.series().truncation()) < largest_prime)
    throw TruncationError("lift_expand: eigenform truncation " + std::to_string(f.series().truncation()) +
                          " is below the largest prime " + std::to_string(largest_prime));
  const auto gate = elliptic::ramanujan_gate(f, largest_prime);
  if (!gate.passed)
    throw CheckFailure("Ramanujan bound fails at p=" + std::to_string(gate.violating_prime.value_or(0)));

  const std::vector<LocalKey> key_list(keys.begin(), keys.end());
  parallel::for_each_index(key_list.size(), [&](std::size_t i) { cache.get(key_list[i]); });

  std::vector<Rational> values(indices.size());
  parallel::for_each_index(indices.size(), [&](std::size_t i) { values[i] = lift_coeff(f, indices[i], ProductRange::kDiscriminantPrimes, cache); });

  LiftResult out;
  std::map<FourierIndex, Rational> table;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto& t = indices[i];
    table.emplace(t, std::move(values[i]));
    auto& prov = out.provenance[t];
    for (auto [p, e] : arith::factorize(t.discriminant())) {
      const LocalKey key = local_key(t, p);
      prov.push_back({p, key.content_exponent, key.conductor_exponent, cache.get(key).degree()});
    }
  }
  out.expansion = SiegelExpansion(k + 1, trace_bound, std::move(table));
  if (out.expansion.is_zero()) throw CheckFailure("lift expansion vanishes up to trace bound " + std::to_string(trace_bound));
  return out;
}

MaassReport maass_check(const SiegelExpansion& f, int exponent) {
  MaassReport report;
  report.exponent = exponent;
  for (const auto& [t, value] : f.table()) {
    if (t.is_zero()) continue;
    Rational rhs = 0;
    bool in_range = true;
    for (auto d : arith::divisors(t.content())) {
      const auto term = f.at({t.n * t.m / (d * d), t.r / d, 1});
      if (!term) {
        in_range = false;
        break;
      }
      rhs += Rational(ipow(d, static_cast<unsigned long>(exponent))) * *term;
    }
    if (!in_range) continue;
    ++report.relations_checked;
    if (rhs != value) {
      report.passed = false;
      report.first_failure = t;
      return report;
    }
  }
  return report;
}

MaassReport calibrate_maass(const SiegelExpansion& f, int expected) {
  const MaassReport primary = maass_check(f, expected);
  if (primary.passed) return primary;
  for (int e : {expected - 1, expected + 1}) {
    MaassReport r = maass_check(f, e);
    if (r.passed) return r;
  }
  return primary;
}

}  // namespace tubelift::lift
