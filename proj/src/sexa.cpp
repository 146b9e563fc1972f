#include "sexakit/sexa.hpp"

#include "sexakit/errors.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace sexakit {

namespace {

BigInt strip_235(BigInt n) {
  for (int p : {2, 3, 5}) {
    while (n % p == 0) n /= p;
  }
  return n;
}

// Smallest prime factor of n (coprime to 30, > 1) by trial division; the
// cofactor itself once the search budget is exhausted.
BigInt offending_factor(const BigInt& n) {
  constexpr std::uint32_t kTrialLimit = 1'000'000;
  for (std::uint32_t p = 7; p < kTrialLimit; p += 2) {
    BigInt pp = BigInt(p) * p;
    if (pp > n) return n;
    if (n % p == 0) return BigInt(p);
  }
  return n;
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::MalformedLiteral,
              "'" + std::string(text) + "': " + why);
}

}  // namespace

Sexa::Sexa(std::int64_t value) : num_(value), den_(1) {}

Sexa::Sexa(BigInt value) : num_(std::move(value)), den_(1) {}

Sexa::Sexa(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "zero denominator");
  normalize();
}

void Sexa::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

int Sexa::sign() const noexcept { return num_.sign(); }

bool Sexa::terminates() const { return is_smooth60(den_); }

Sexa Sexa::parse(std::string_view text) {
  if (text.empty()) malformed(text, "empty literal");
  std::size_t pos = 0;
  int sign = 1;
  if (text[0] == '-') {
    sign = -1;
    ++pos;
  }
  BigInt whole = 0;
  BigInt frac = 0;
  BigInt scale = 1;
  bool in_fraction = false;
  while (true) {
    std::size_t start = pos;
    int group = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      group = group * 10 + (text[pos] - '0');
      ++pos;
      if (pos - start > 2) malformed(text, "digit group longer than two digits");
    }
    if (pos == start) {
      malformed(text, pos < text.size()
                          ? "empty digit group before '" + std::string(1, text[pos]) + "'"
                          : "empty digit group at end");
    }
    if (group > 59) {
      malformed(text, "digit " + std::to_string(group) + " is not below 60");
    }
    if (in_fraction) {
      frac = frac * 60 + group;
      scale *= 60;
    } else {
      whole = whole * 60 + group;
    }
    if (pos == text.size()) break;
    char sep = text[pos];
    if (sep == ';' || sep == ':') {
      if (in_fraction) malformed(text, "more than one radix point");
      in_fraction = true;
    } else if (sep != ',') {
      malformed(text, "unexpected character '" + std::string(1, sep) + "'");
    }
    ++pos;
  }
  return Sexa(sign * (whole * scale + frac), scale);
}

SexaDigits Sexa::to_digits() const {
  if (!terminates()) {
    throw Error(ErrorKind::NonTerminating,
                render_fraction() + " has no finite sexagesimal expansion");
  }
  SexaDigits out;
  out.sign = num_.sign() < 0 ? -1 : 1;
  BigInt mag = boost::multiprecision::abs(num_);
  BigInt whole = mag / den_;
  BigInt rem = mag % den_;

  std::vector<int> int_digits;
  do {
    int_digits.push_back(static_cast<int>(whole % 60));
    whole /= 60;
  } while (!whole.is_zero());
  std::reverse(int_digits.begin(), int_digits.end());
  out.digits = std::move(int_digits);
  out.radix_offset = out.digits.size();

  while (!rem.is_zero()) {
    rem *= 60;
    out.digits.push_back(static_cast<int>(rem / den_));
    rem %= den_;
  }
  if (num_.is_zero()) out.sign = 1;
  return out;
}

Sexa Sexa::from_digits(const SexaDigits& d) {
  BigInt whole = 0;
  BigInt frac = 0;
  BigInt scale = 1;
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    int digit = d.digits[i];
    if (digit < 0 || digit > 59) {
      throw Error(ErrorKind::MalformedLiteral,
                  "digit " + std::to_string(digit) + " outside 0..59");
    }
    if (i < d.radix_offset) {
      whole = whole * 60 + digit;
    } else {
      frac = frac * 60 + digit;
      scale *= 60;
    }
  }
  return Sexa((d.sign < 0 ? -1 : 1) * (whole * scale + frac), scale);
}

std::string Sexa::render() const {
  SexaDigits d = to_digits();
  std::string out;
  if (d.sign < 0) out += '-';
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    if (i == d.radix_offset) {
      out += ';';
    } else if (i > 0) {
      out += ',';
    }
    out += std::to_string(d.digits[i]);
  }
  return out;
}

std::string Sexa::render_fraction() const {
  std::string out = num_.str();
  if (den_ != 1) out += "/" + den_.str();
  return out;
}

std::string Sexa::render_or_fraction() const {
  return terminates() ? render() : render_fraction();
}

Sexa Sexa::operator-() const {
  Sexa out = *this;
  out.num_ = -out.num_;
  return out;
}

Sexa& Sexa::operator+=(const Sexa& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Sexa& Sexa::operator-=(const Sexa& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Sexa& Sexa::operator*=(const Sexa& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Sexa& a, const Sexa& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Sexa& x) {
  return os << x.render_or_fraction();
}

Sexa add(const Sexa& x, const Sexa& y) { return x + y; }
Sexa sub(const Sexa& x, const Sexa& y) { return x - y; }
Sexa mul(const Sexa& x, const Sexa& y) { return x * y; }
Sexa abs(const Sexa& x) { return x.sign() < 0 ? -x : x; }
Sexa square(const Sexa& x) { return x * x; }
Sexa halve(const Sexa& x) { return Sexa(x.numerator(), x.denominator() * 2); }

bool is_smooth60(const BigInt& n) {
  if (n <= 0) return false;
  return strip_235(n) == 1;
}

bool is_regular(const Sexa& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "0 has no reciprocal");
  return is_smooth60(boost::multiprecision::abs(x.numerator())) &&
         is_smooth60(x.denominator());
}

Sexa reciprocal(const Sexa& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "0 has no reciprocal");
  BigInt residue = strip_235(boost::multiprecision::abs(x.numerator()));
  if (residue == 1) residue = strip_235(x.denominator());
  if (residue != 1) {
    throw IrregularDivisorError(x.render_or_fraction(),
                                offending_factor(residue).str());
  }
  return exact_inverse(x);
}

Sexa exact_inverse(const Sexa& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "0 has no reciprocal");
  return Sexa(x.denominator(), x.numerator());
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::NegativeRadicand, n.str() + " < 0");
  return boost::multiprecision::sqrt(n);
}

Sexa sqrt_exact(const Sexa& x) {
  if (x.sign() < 0) {
    throw Error(ErrorKind::NegativeRadicand,
                x.render_or_fraction() + " is negative");
  }
  // In lowest terms, x is a rational square iff both parts are squares.
  BigInt rn = isqrt(x.numerator());
  BigInt rd = isqrt(x.denominator());
  if (rn * rn != x.numerator() || rd * rd != x.denominator()) {
    throw Error(ErrorKind::NotAPerfectSquare,
                x.render_or_fraction() + " is not a perfect square");
  }
  return Sexa(rn, rd);
}

}  // namespace sexakit
