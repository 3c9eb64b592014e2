#include "tubelift/octonion.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tubelift::jordan {

namespace {

struct Table {
  std::array<std::array<BasisProduct, 8>, 8> entry{};

  Table() {
    for (int i = 0; i < 8; ++i) {
      entry[0][i] = {1, i};
      entry[i][0] = {1, i};
    }
    for (int i = 1; i < 8; ++i) entry[i][i] = {-1, 0};
    constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& t : triples)
      for (int rot = 0; rot < 3; ++rot) {
        const int a = t[rot], b = t[(rot + 1) % 3], c = t[(rot + 2) % 3];
        entry[a][b] = {1, c};
        entry[b][a] = {-1, c};
      }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

constexpr unsigned kQuads[7] = {
    0b00001111,  // {0,1,2,3}
    0b10010011,  // {0,1,4,7}
    0b01100011,  // {0,1,5,6}
    0b00110101,  // {0,2,4,5}
    0b11000101,  // {0,2,6,7}
    0b01011001,  // {0,3,4,6}
    0b10101001,  // {0,3,5,7}
};

// The F_2-span of the quadruples and their complements.
const std::array<bool, 256>& order_code() {
  static const std::array<bool, 256> code = [] {
    std::array<bool, 256> in{};
    in[0] = true;
    for (unsigned q : kQuads)
      for (unsigned gen : {q, q ^ 0xFFu}) {
        std::array<bool, 256> next = in;
        for (unsigned v = 0; v < 256; ++v)
          if (in[v]) next[v ^ gen] = true;
        in = next;
      }
    return in;
  }();
  return code;
}

}  // namespace

Octonion Octonion::real(const Rational& r) {
  Octonion o;
  o.c_[0] = r;
  return o;
}

Octonion Octonion::unit(int i) {
  if (i < 0 || i > 7) throw std::out_of_range("Octonion::unit: index must be 0..7");
  Octonion o;
  o.c_[static_cast<std::size_t>(i)] = 1;
  return o;
}

Octonion Octonion::conjugate() const {
  Octonion o = -*this;
  o.c_[0] = c_[0];
  return o;
}

Rational Octonion::norm() const { return real_inner(*this, *this); }

bool Octonion::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& q) {
  for (auto& v : c_) v *= q;
  return *this;
}

Octonion Octonion::operator-() const {
  Octonion o = *this;
  for (auto& v : o.c_) v = -v;
  return o;
}

std::string Octonion::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 8; ++i) os << (i ? ", " : "") << to_fraction_string(c_[i]);
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Octonion& x) { return os << x.to_string(); }

BasisProduct basis_product(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7) throw std::out_of_range("basis_product: index must be 0..7");
  return table().entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  const auto& t = table();
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j] == 0) continue;
      const auto& e = t.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.sign > 0)
        out[e.index] += x[i] * y[j];
      else
        out[e.index] -= x[i] * y[j];
    }
  }
  return out;
}

Rational real_inner(const Octonion& x, const Octonion& y) {
  Rational s = 0;
  for (int i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

JordanElement JordanElement::identity() { return diagonal(1, 1, 1); }

JordanElement JordanElement::diagonal(const Rational& a, const Rational& b, const Rational& c) {
  JordanElement v;
  v.a = a;
  v.b = b;
  v.c = c;
  return v;
}

JordanElement& JordanElement::operator*=(const Rational& q) {
  a *= q;
  b *= q;
  c *= q;
  x *= q;
  y *= q;
  z *= q;
  return *this;
}

std::string JordanElement::to_string() const {
  std::ostringstream os;
  os << "[a=" << to_fraction_string(a) << ", b=" << to_fraction_string(b) << ", c=" << to_fraction_string(c)
     << ", x=" << x << ", y=" << y << ", z=" << z << "]";
  return os.str();
}

Rational trace(const JordanElement& v) { return v.a + v.b + v.c; }

Rational jordan_det(const JordanElement& v) {
  const Rational trilinear = oct_mul(oct_mul(v.x, v.z), v.y.conjugate()).real_part();
  return v.a * v.b * v.c - v.a * v.z.norm() - v.b * v.y.norm() - v.c * v.x.norm() + 2 * trilinear;
}

Rational trace_pair(const JordanElement& u, const JordanElement& v) {
  return u.a * v.a + u.b * v.b + u.c * v.c + 2 * (real_inner(u.x, v.x) + real_inner(u.y, v.y) + real_inner(u.z, v.z));
}

bool is_positive(const JordanElement& v) { return v.a > 0 && v.a * v.b - v.x.norm() > 0 && jordan_det(v) > 0; }

bool in_maximal_order(const Octonion& x) {
  unsigned pattern = 0;
  for (int i = 0; i < 8; ++i) {
    const Rational twice = 2 * x[i];
    if (twice.get_den() != 1) return false;
    if (mpz_odd_p(twice.get_num_mpz_t())) pattern |= 1u << i;
  }
  return order_code()[pattern];
}

bool is_integral(const JordanElement& v) {
  return v.a.get_den() == 1 && v.b.get_den() == 1 && v.c.get_den() == 1 && in_maximal_order(v.x) &&
         in_maximal_order(v.y) && in_maximal_order(v.z);
}

}  // namespace tubelift::jordan
