// Exact sexagesimal numbers.
//
// A Sexa is a signed rational kept in lowest terms with the sign on the
// numerator. Literals use the modern transcription of base-60 place value:
// digit groups 0..59 separated by ',' with ';' as the radix point, so
// "1,9;22,30" is 1*60 + 9 + 22/60 + 30/3600. Values are absolute; there is
// no floating place value.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sexakit {

using BigInt = boost::multiprecision::cpp_int;

/// Positional form of a terminating Sexa. `digits` holds the integer digits
/// followed by the fractional ones; the first `radix_offset` entries are the
/// integer part.
struct SexaDigits {
  int sign = 1;
  std::vector<int> digits;
  std::size_t radix_offset = 0;

  friend bool operator==(const SexaDigits&, const SexaDigits&) = default;
};

class Sexa {
 public:
  Sexa() = default;
  Sexa(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Sexa(BigInt value);
  /// Throws ZeroInput when `denominator` is zero.
  Sexa(BigInt numerator, BigInt denominator);

  /// Parses a literal such as "-1,9;22,30". ':' is accepted in place of ';'.
  /// Throws MalformedLiteral.
  static Sexa parse(std::string_view text);

  /// Canonical literal. Throws NonTerminating when the reduced denominator
  /// has a prime factor other than 2, 3 or 5.
  std::string render() const;
  /// "n/d" (or "n" for integers); always succeeds.
  std::string render_fraction() const;
  /// Canonical literal when terminating, fraction form otherwise.
  std::string render_or_fraction() const;

  SexaDigits to_digits() const;
  static Sexa from_digits(const SexaDigits& digits);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept;
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  /// True iff the sexagesimal expansion terminates.
  bool terminates() const;

  Sexa operator-() const;
  Sexa& operator+=(const Sexa& rhs);
  Sexa& operator-=(const Sexa& rhs);
  Sexa& operator*=(const Sexa& rhs);

  friend Sexa operator+(Sexa lhs, const Sexa& rhs) { return lhs += rhs; }
  friend Sexa operator-(Sexa lhs, const Sexa& rhs) { return lhs -= rhs; }
  friend Sexa operator*(Sexa lhs, const Sexa& rhs) { return lhs *= rhs; }

  friend bool operator==(const Sexa& a, const Sexa& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Sexa& a, const Sexa& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Sexa& x);

Sexa add(const Sexa& x, const Sexa& y);
Sexa sub(const Sexa& x, const Sexa& y);
Sexa mul(const Sexa& x, const Sexa& y);
Sexa abs(const Sexa& x);
Sexa square(const Sexa& x);
Sexa halve(const Sexa& x);

/// True when n > 0 has no prime factor other than 2, 3, 5.
bool is_smooth60(const BigInt& n);

/// |x| = 2^a 3^b 5^c with integer exponents. Throws ZeroInput for 0.
bool is_regular(const Sexa& x);

/// Scribal reciprocal: defined for regular x only. Throws ZeroInput or
/// IrregularDivisorError.
Sexa reciprocal(const Sexa& x);

/// Unrestricted 1/x. Not a scribal operation; used by the quotient
/// recognizer and by the unrestricted expression mode. Throws ZeroInput.
Sexa exact_inverse(const Sexa& x);

/// Nonnegative y with y*y == x. Throws NegativeRadicand or NotAPerfectSquare;
/// never approximates.
Sexa sqrt_exact(const Sexa& x);

/// Floor square root of n >= 0.
BigInt isqrt(const BigInt& n);

namespace literals {
inline Sexa operator""_sx(const char* text, std::size_t len) {
  return Sexa::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace sexakit
