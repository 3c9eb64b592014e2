#include "tubelift/fourier_index.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tubelift::siegel {

std::int64_t FourierIndex::content() const { return std::gcd(std::gcd(n, r), m); }

std::string FourierIndex::to_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ")";
}

std::ostream& operator<<(std::ostream& os, const FourierIndex& t) { return os << t.to_string(); }

FourierIndex transform(const FourierIndex& t, const Unimodular& u) {
  auto q = [&](std::int64_t x, std::int64_t y) { return t.n * x * x + t.r * x * y + t.m * y * y; };
  return {q(u.a, u.c), 2 * t.n * u.a * u.b + t.r * (u.a * u.d + u.b * u.c) + 2 * t.m * u.c * u.d, q(u.b, u.d)};
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Reduction reduce_index(const FourierIndex& t) {
  if (!t.is_positive_semidefinite())
    throw std::invalid_argument("reduce_index: " + t.to_string() + " is not positive semi-definite");
  FourierIndex cur = t;
  Unimodular u;
  auto apply = [&](const Unimodular& step) {
    cur = transform(cur, step);
    u = u * step;
  };
  while (true) {
    if (cur.n > cur.m) {
      apply({0, 1, 1, 0});
      continue;
    }
    if (cur.n == 0) break;  // then r = 0 by semi-definiteness
    if (cur.r > cur.n || cur.r < -cur.n) {
      const std::int64_t shift = floor_div(cur.r + cur.n, 2 * cur.n);
      apply({1, -shift, 0, 1});
      continue;
    }
    break;
  }
  if (cur.r < 0) apply({1, 0, 0, -1});
  return {cur, u};
}

std::vector<FourierIndex> reduced_indices(std::int64_t trace_bound, bool positive_definite_only) {
  std::vector<FourierIndex> out;
  for (std::int64_t n = 0; 2 * n <= trace_bound; ++n) {
    for (std::int64_t r = 0; r <= n; ++r) {
      for (std::int64_t m = n; n + m <= trace_bound; ++m) {
        if (n == 0 && m == 0 && positive_definite_only) continue;
        FourierIndex t{n, r, m};
        if (n == 0 && r != 0) continue;
        if (positive_definite_only && !t.is_positive_definite()) continue;
        out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace tubelift::siegel
