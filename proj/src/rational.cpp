#include "invconn/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

namespace invconn {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// Reduces n/d (d != 0), normalizes the sign and narrows to 64 bits.
void assign_reduced(i128 n, i128 d, std::int64_t& num, std::int64_t& den) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num = 0;
    den = 1;
    return;
  }
  i128 g = gcd128(n, d);
  num = narrow(n / g);
  den = narrow(d / g);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivideByZeroError("rational with zero denominator");
  assign_reduced(n, d, num_, den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<i128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  i128 n = static_cast<i128>(num_) * o.num_;
  i128 d = static_cast<i128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DivideByZeroError("division by zero rational");
  i128 n = static_cast<i128>(num_) * o.den_;
  i128 d = static_cast<i128>(den_) * o.num_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&](const char* why) {
    return ParseError(std::string("bad rational \"") + std::string(text) + "\": " + why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](i128& out) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw bad("expected digits");
    }
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      if (out > std::numeric_limits<std::int64_t>::max()) throw bad("out of 64-bit range");
      ++pos;
    }
  };
  i128 num = 0;
  read_digits(num);
  i128 den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
    if (den == 0) throw bad("zero denominator");
  }
  if (pos != text.size()) throw bad("trailing characters");
  if (negative) num = -num;
  Rational r;
  std::int64_t n = 0, d = 1;
  assign_reduced(num, den, n, d);
  r = Rational(n, d);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace invconn
