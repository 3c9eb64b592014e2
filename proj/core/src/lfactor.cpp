#include "tubelift/lfactor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tubelift::lfactor {

SymMonomial SymMonomial::operator*(const SymMonomial& o) const {
  return {alpha + o.alpha, beta + o.beta, half_p + o.half_p, k_half_p + o.k_half_p, (chi + o.chi) % 2};
}

SymMonomial SymMonomial::inverse() const { return {-alpha, -beta, -half_p, -k_half_p, chi}; }

std::string SymMonomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto factor = [&](const char* name, int e) {
    if (e == 0) return;
    os << (any ? "*" : "") << name;
    if (e != 1) os << "^" << e;
    any = true;
  };
  factor("alpha", alpha);
  factor("beta", beta);
  factor("chi", chi);
  if (half_p != 0 || k_half_p != 0) {
    os << (any ? "*" : "") << "p^(";
    if (k_half_p != 0) os << k_half_p << "k" << (half_p >= 0 ? "+" : "");
    if (half_p != 0 || k_half_p == 0) os << half_p;
    os << "/2)";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

SatakeMultiset::SatakeMultiset(std::vector<SymMonomial> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

SatakeMultiset SatakeMultiset::inverted() const {
  std::vector<SymMonomial> out;
  for (const auto& m : entries_) out.push_back(m.inverse());
  return SatakeMultiset(std::move(out));
}

SatakeMultiset SatakeMultiset::closed_under_inversion() const { return *this + inverted(); }

SatakeMultiset SatakeMultiset::operator+(const SatakeMultiset& o) const {
  std::vector<SymMonomial> out = entries_;
  out.insert(out.end(), o.entries_.begin(), o.entries_.end());
  return SatakeMultiset(std::move(out));
}

std::string SatakeMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i].to_string();
  os << "}";
  return os.str();
}

EulerFactor::EulerFactor() : coeffs_{{{SymMonomial::one(), Integer(1)}}} {}

EulerFactor::EulerFactor(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void EulerFactor::normalize() {
  for (auto& c : coeffs_) std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  while (coeffs_.size() > 1 && coeffs_.back().empty()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back();
}

EulerFactor EulerFactor::from_multiset(const SatakeMultiset& s) {
  EulerFactor out;
  for (const auto& mu : s.entries()) out = out * EulerFactor({{{SymMonomial::one(), Integer(1)}}, {{mu, Integer(-1)}}});
  return out;
}

bool EulerFactor::has_unit_constant_term() const {
  const auto& c0 = coeffs_.front();
  return c0.size() == 1 && c0.begin()->first == SymMonomial::one() && c0.begin()->second == 1;
}

EulerFactor EulerFactor::operator*(const EulerFactor& o) const {
  std::vector<Coefficient> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (const auto& [m1, c1] : coeffs_[i])
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        for (const auto& [m2, c2] : o.coeffs_[j]) out[i + j][m1 * m2] += c1 * c2;
  return EulerFactor(std::move(out));
}

std::optional<std::size_t> EulerFactor::first_difference(const EulerFactor& a, const EulerFactor& b) {
  const std::size_t top = std::max(a.coeffs_.size(), b.coeffs_.size());
  static const Coefficient empty;
  for (std::size_t d = 0; d < top; ++d) {
    const auto& ca = d < a.coeffs_.size() ? a.coeffs_[d] : empty;
    const auto& cb = d < b.coeffs_.size() ? b.coeffs_[d] : empty;
    if (ca != cb) return d;
  }
  return std::nullopt;
}

Group parse_group(std::string_view tag) {
  if (tag == "Sp" || tag == "Sp4n") return Group::kSp4n;
  if (tag == "SU" || tag == "SU2n+1") return Group::kSU2n1;
  if (tag == "SUH" || tag == "SU2nH") return Group::kSU2nH;
  if (tag == "E73" || tag == "E7,3") return Group::kE73;
  throw std::invalid_argument("unknown group tag '" + std::string(tag) + "'");
}

std::string group_name(Group g) {
  switch (g) {
    case Group::kSp4n: return "Sp4n";
    case Group::kSU2n1: return "SU2n+1";
    case Group::kSU2nH: return "SU2nH";
    case Group::kE73: return "E73";
  }
  return "?";
}

namespace {

void require_rank(Group g, int n) {
  if (g != Group::kE73 && n < 1) throw std::invalid_argument(group_name(g) + ": n must be at least 1");
}

SymMonomial alpha_p(int alpha, int half_p, int chi = 0) { return {alpha, 0, half_p, 0, chi}; }

// alpha^{+-1} times p^{half/2} together with the inverses, i.e. the
// parameters of L(s - half/2, f) and L(s + half/2, f).
void push_pm(std::vector<SymMonomial>& out, int half, int chi = 0, int times = 1) {
  for (int t = 0; t < times; ++t) {
    const SymMonomial m = alpha_p(1, half, chi);
    out.push_back(m);
    out.push_back(m.inverse());
  }
}

EulerFactor linear(const SymMonomial& mu) { return EulerFactor({{{SymMonomial::one(), Integer(1)}}, {{mu, Integer(-1)}}}); }

// Local factor of L(s + c, f) (or twisted by chi), c = c_half / 2:
// 1 - chi (alpha + alpha^{-1}) p^{-c} t + p^{-2c} t^2.
EulerFactor l_factor(int c_half, int chi = 0) {
  EulerFactor::Coefficient t1{{alpha_p(1, -c_half, chi), Integer(-1)}, {alpha_p(-1, -c_half, chi), Integer(-1)}};
  EulerFactor::Coefficient t2{{SymMonomial::p_half(-2 * c_half), Integer(1)}};
  return EulerFactor({{{SymMonomial::one(), Integer(1)}}, t1, t2});
}

// Local factor of zeta(s + c): 1 - p^{-c} t.
EulerFactor zeta_factor(int c_half) { return linear(SymMonomial::p_half(-c_half)); }

// (1 - alpha^3 t)(1 - alpha t)(1 - alpha^{-1} t)(1 - alpha^{-3} t) from its
// elementary symmetric functions.
EulerFactor sym3_factor() {
  auto a = [](int e) { return alpha_p(e, 0); };
  EulerFactor::Coefficient e1{{a(3), Integer(1)}, {a(1), Integer(1)}, {a(-1), Integer(1)}, {a(-3), Integer(1)}};
  EulerFactor::Coefficient e2{{a(4), Integer(1)}, {a(2), Integer(1)}, {a(0), Integer(2)}, {a(-2), Integer(1)}, {a(-4), Integer(1)}};
  EulerFactor::Coefficient minus_e1;
  for (const auto& [m, c] : e1) minus_e1[m] = -c;
  return EulerFactor({{{SymMonomial::one(), Integer(1)}}, minus_e1, e2, minus_e1, {{SymMonomial::one(), Integer(1)}}});
}

std::optional<std::string> describe_difference(const SatakeMultiset& a, const SatakeMultiset& b) {
  if (a == b) return std::nullopt;
  std::ostringstream os;
  if (a.size() != b.size()) {
    os << "sizes " << a.size() << " vs " << b.size();
    return os.str();
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.entries()[i] == b.entries()[i])) {
      os << "entry " << i << ": " << a.entries()[i].to_string() << " vs " << b.entries()[i].to_string();
      break;
    }
  return os.str();
}

}  // namespace

std::size_t standard_degree(Group g, int n) {
  require_rank(g, n);
  switch (g) {
    case Group::kSp4n: return static_cast<std::size_t>(4 * n + 1);
    case Group::kSU2n1: return static_cast<std::size_t>(4 * (2 * n + 1));
    case Group::kSU2nH: return static_cast<std::size_t>(4 * n);
    case Group::kE73: return 56;
  }
  return 0;
}

SatakeMultiset standard_satake(Group g, int n) {
  require_rank(g, n);
  std::vector<SymMonomial> out;
  switch (g) {
    case Group::kSp4n:
      out.push_back(SymMonomial::one());
      for (int i = 1; i <= 2 * n; ++i) push_pm(out, 2 * n + 1 - 2 * i);
      break;
    case Group::kSU2n1:
      for (int i = 1; i <= 2 * n + 1; ++i) {
        push_pm(out, 2 * (n + 1 - i));
        push_pm(out, 2 * (n + 1 - i), 1);
      }
      break;
    case Group::kSU2nH:
      for (int i = 1; i <= 2 * n; ++i) push_pm(out, 2 * n + 1 - 2 * i);
      break;
    case Group::kE73:
      out.push_back(alpha_p(3, 0));
      out.push_back(alpha_p(-3, 0));
      push_pm(out, 0);
      for (int i = 1; i <= 4; ++i) {
        push_pm(out, 2 * i, 0, 2);
        push_pm(out, -2 * i, 0, 2);
      }
      push_pm(out, 0, 0, 2);
      for (int i = 5; i <= 8; ++i) {
        push_pm(out, 2 * i);
        push_pm(out, -2 * i);
      }
      break;
  }
  return SatakeMultiset(std::move(out));
}

EulerFactor factored_rhs(Group g, int n) {
  require_rank(g, n);
  EulerFactor out;
  switch (g) {
    case Group::kSp4n:
      out = zeta_factor(0);
      for (int i = 1; i <= 2 * n; ++i) out = out * l_factor(2 * n + 1 - 2 * i);
      break;
    case Group::kSU2n1:
      for (int i = 1; i <= 2 * n + 1; ++i) out = out * l_factor(2 * (n + 1 - i)) * l_factor(2 * (n + 1 - i), 1);
      break;
    case Group::kSU2nH:
      for (int i = 1; i <= 2 * n; ++i) out = out * l_factor(2 * n + 1 - 2 * i);
      break;
    case Group::kE73:
      out = sym3_factor() * l_factor(0) * l_factor(0);
      for (int i = 1; i <= 4; ++i) {
        const EulerFactor pair = l_factor(2 * i) * l_factor(-2 * i);
        out = out * pair * pair;
      }
      for (int i = 5; i <= 8; ++i) out = out * l_factor(2 * i) * l_factor(-2 * i);
      break;
  }
  return out;
}

IdentityReport standard_factor_check(Group g, int n) {
  IdentityReport r;
  r.name = "standard L-factor " + group_name(g) + (g == Group::kE73 ? "" : " n=" + std::to_string(n));
  const SatakeMultiset s = standard_satake(g, n);
  const EulerFactor lhs = EulerFactor::from_multiset(s);
  const EulerFactor rhs = factored_rhs(g, n);
  r.degree = lhs.degree();
  r.expected_degree = standard_degree(g, n);
  r.self_dual = s.is_self_dual();
  if (auto d = EulerFactor::first_difference(lhs, rhs)) r.first_mismatch = "coefficient of t^" + std::to_string(*d);
  r.passed = !r.first_mismatch && r.degree == r.expected_degree && rhs.degree() == r.expected_degree &&
             s.size() == r.expected_degree && r.self_dual && lhs.has_unit_constant_term();
  return r;
}

IdentityReport cap_check(int n, int shift_error) {
  if (n < 1) throw std::invalid_argument("cap_check: n must be at least 1");
  IdentityReport r;
  r.name = "CAP n=" + std::to_string(n) + (shift_error ? " shift_error=" + std::to_string(shift_error) : "");
  std::vector<SymMonomial> blocks;
  // pi_f |det|^{s_j}, s_j = j - 1/2 for j = n..1, scales both Satake parameters by p^{-s_j}.
  for (int j = n; j >= 1; --j) {
    const int s_half = 2 * j - 1 + shift_error;
    blocks.push_back(alpha_p(1, -s_half));
    blocks.push_back(alpha_p(-1, -s_half));
  }
  const SatakeMultiset induced =
      SatakeMultiset(std::move(blocks)).closed_under_inversion() + SatakeMultiset({SymMonomial::one()});
  const SatakeMultiset standard = standard_satake(Group::kSp4n, n);
  r.degree = induced.size();
  r.expected_degree = standard_degree(Group::kSp4n, n);
  r.self_dual = induced.is_self_dual();
  r.first_mismatch = describe_difference(induced, standard);
  r.passed = !r.first_mismatch && r.degree == r.expected_degree;
  return r;
}

ArthurReport arthur_dims() {
  ArthurReport r;
  // Sym^m of SL_2 is symplectic for odd m and orthogonal for even m; a tensor
  // product is symplectic when exactly one factor is.
  auto symplectic = [](int m) { return m % 2 == 1; };
  struct Piece {
    std::string name;
    int f_power;  // Sym^f_power rho_f
    int sl2;      // Sym^sl2 of the Arthur SL_2
  };
  const Piece pieces[] = {{"Sym^3 rho_f", 3, 0}, {"rho_f x Sym^16", 1, 16}, {"rho_f x Sym^8", 1, 8}};
  std::vector<SymMonomial> params;
  for (const auto& p : pieces) {
    ArthurComponent c;
    c.name = p.name;
    c.dimension = static_cast<std::size_t>((p.f_power + 1) * (p.sl2 + 1));
    c.symplectic = symplectic(p.f_power) != symplectic(p.sl2);
    r.components.push_back(c);
    r.total += c.dimension;
    r.passed = r.passed && c.symplectic;
    for (int a = p.f_power; a >= -p.f_power; a -= 2)
      for (int e = p.sl2; e >= -p.sl2; e -= 2) params.push_back(alpha_p(a, e));
  }
  r.matches_standard = SatakeMultiset(std::move(params)) == standard_satake(Group::kE73, 0);
  r.passed = r.passed && r.total == 56 && r.matches_standard;
  return r;
}

MiyawakiReport miyawaki_check() {
  MiyawakiReport r;
  const SymMonomial ba{1, 1, 0, 0, 0};
  const SymMonomial ba_inv{-1, 1, 0, 0, 0};
  std::vector<SymMonomial> set{ba, ba.inverse(), ba_inv, ba_inv.inverse(), SymMonomial::one(), SymMonomial::one()};
  for (int i = 1; i <= 3; ++i) {
    set.push_back(SymMonomial::p_half(2 * i));
    set.push_back(SymMonomial::p_half(-2 * i));
  }
  const SatakeMultiset satake(set);
  r.satake_size = satake.size();

  // Rankin-Selberg factor of h x f from its elementary symmetric functions:
  // e1 = e3 = (alpha + alpha^{-1})(beta + beta^{-1}), e2 = alpha^2 + alpha^{-2} + beta^2 + beta^{-2} + 2.
  EulerFactor::Coefficient e1, e2;
  for (int a : {1, -1})
    for (int b : {1, -1}) e1[{a, b, 0, 0, 0}] = -1;
  for (int e : {2, -2}) {
    e2[{e, 0, 0, 0, 0}] = 1;
    e2[{0, e, 0, 0, 0}] = 1;
  }
  e2[SymMonomial::one()] = 2;
  EulerFactor lside({{{SymMonomial::one(), Integer(1)}}, e1, e2, e1, {{SymMonomial::one(), Integer(1)}}});
  lside = lside * zeta_factor(0) * zeta_factor(0);
  for (int i = 1; i <= 3; ++i) lside = lside * zeta_factor(2 * i) * zeta_factor(-2 * i);

  const EulerFactor from_set = EulerFactor::from_multiset(satake);
  if (auto d = EulerFactor::first_difference(from_set, lside)) r.first_mismatch = "coefficient of t^" + std::to_string(*d);
  r.identity = !r.first_mismatch;

  for (const auto& m : satake.entries()) {
    if (m.beta != 0) {
      ++r.so4;
    } else {
      ++r.so8;
      r.unipotent_exponents.push_back(m.half_p / 2);
    }
  }
  std::sort(r.unipotent_exponents.begin(), r.unipotent_exponents.end());
  // Partition (7,1): Sym^6 has exponents -3..3, Sym^0 contributes one more 0.
  std::vector<int> expected{0};
  for (int e = -3; e <= 3; ++e) expected.push_back(e);
  std::sort(expected.begin(), expected.end());
  r.passed = r.satake_size == 12 && r.identity && r.so4 == 4 && r.so8 == 8 && r.so4 + r.so8 == 12 &&
             r.unipotent_exponents == expected;
  return r;
}

SatakeMultiset degenerate_principal_series(Group g, int n, int s_half_const, int s_half_k) {
  std::vector<SymMonomial> out;
  auto pm = [&out](int c, int kk) {
    const SymMonomial m{0, 0, c, kk, 0};
    out.push_back(m);
    out.push_back(m.inverse());
  };
  switch (g) {
    case Group::kSp4n:
      require_rank(g, n);
      out.push_back(SymMonomial::one());
      for (int i = 1; i <= 2 * n; ++i) pm(s_half_const + 2 * n + 1 - 2 * i, s_half_k);
      break;
    case Group::kSU2nH:
      require_rank(g, n);
      for (int i = 1; i <= 2 * n; ++i) pm(s_half_const + 2 * n + 1 - 2 * i, s_half_k);
      break;
    case Group::kE73:
      pm(3 * s_half_const, 3 * s_half_k);
      pm(s_half_const, s_half_k);
      for (int j = -8; j <= 8; ++j) pm(s_half_const + 2 * j, s_half_k);
      for (int j = -4; j <= 4; ++j) pm(s_half_const + 2 * j, s_half_k);
      break;
    case Group::kSU2n1:
      throw std::invalid_argument("degenerate principal series: SU2n+1 is not covered");
  }
  return SatakeMultiset(std::move(out));
}

SatakeMultiset substitute_alpha(const SatakeMultiset& s, int half_const, int half_k) {
  std::vector<SymMonomial> out;
  for (auto m : s.entries()) {
    m.half_p += m.alpha * half_const;
    m.k_half_p += m.alpha * half_k;
    m.alpha = 0;
    out.push_back(m);
  }
  return SatakeMultiset(std::move(out));
}

DegenerationReport degeneration_check(Group g, int n) {
  DegenerationReport r;
  r.group = group_name(g);
  // p^{k-1/2} is (-1 + 2k)/2 in half-units, p^{2k-1} is (-2 + 4k)/2.
  const SatakeMultiset standard = standard_satake(g, n);
  const bool doubled = g == Group::kE73;
  const int c = doubled ? -2 : -1, kk = doubled ? 4 : 2;
  const int c_other = doubled ? -1 : -2, kk_other = doubled ? 2 : 4;
  const SatakeMultiset target = degenerate_principal_series(g, n, c, kk);
  r.matching_substitution = substitute_alpha(standard, c, kk) == target;
  r.other_substitution_matches = substitute_alpha(standard, c_other, kk_other) == target;
  r.passed = r.matching_substitution && !r.other_substitution_matches;
  return r;
}

}  // namespace tubelift::lfactor
