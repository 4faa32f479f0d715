#include "privsim/rational.hpp"

#include <limits>
#include <numeric>

#include "privsim/errors.hpp"

namespace privsim {

namespace {

__int128 gcd_i128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  normalize_i128(num, den);
}

void Rational::normalize_i128(__int128 num, __int128 den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd_i128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = narrow(num);
  den_ = narrow(den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  normalize_i128(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  normalize_i128(num, den);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.num_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  normalize_i128(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw ValidationError("rational division by zero");
  __int128 num = static_cast<__int128>(num_) * rhs.den_;
  __int128 den = static_cast<__int128>(den_) * rhs.num_;
  normalize_i128(num, den);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace privsim
