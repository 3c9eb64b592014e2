#include "tubelift/quad_surd.hpp"

#include <ostream>
#include <stdexcept>

namespace tubelift {

QuadSurd::QuadSurd(std::int64_t radicand, Rational rational_part, Rational surd_part)
    : radicand_(radicand), a_(std::move(rational_part)), b_(std::move(surd_part)) {
  if (radicand_ < 2) throw std::invalid_argument("QuadSurd: radicand must be at least 2");
}

QuadSurd QuadSurd::half_power(std::int64_t radicand, long twice_exponent) {
  // p^{e/2} = p^{(e-1)/2} sqrt(p) for odd e
  if (twice_exponent % 2 == 0) return QuadSurd(radicand, rpow(Rational(radicand), twice_exponent / 2), 0);
  const long whole = (twice_exponent - 1) / 2;
  return QuadSurd(radicand, 0, rpow(Rational(radicand), whole));
}

void QuadSurd::check_same_field(const QuadSurd& o) const {
  if (radicand_ != o.radicand_ && b_ != 0 && o.b_ != 0)
    throw std::invalid_argument("QuadSurd: mixing Q(sqrt(" + std::to_string(radicand_) + ")) and Q(sqrt(" +
                                std::to_string(o.radicand_) + "))");
}

QuadSurd QuadSurd::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("QuadSurd: division by zero");
  return QuadSurd(radicand_, a_ / n, -b_ / n);
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  check_same_field(o);
  if (b_ == 0) radicand_ = o.radicand_;
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
  check_same_field(o);
  if (b_ == 0) radicand_ = o.radicand_;
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  check_same_field(o);
  if (b_ == 0) radicand_ = o.radicand_;
  Rational a = a_ * o.a_ + Rational(radicand_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadSurd& QuadSurd::operator*=(const Rational& q) {
  a_ *= q;
  b_ *= q;
  return *this;
}

std::string QuadSurd::to_string() const {
  if (b_ == 0) return to_fraction_string(a_);
  return to_fraction_string(a_) + " + " + to_fraction_string(b_) + "*sqrt(" + std::to_string(radicand_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.to_string(); }

}  // namespace tubelift
