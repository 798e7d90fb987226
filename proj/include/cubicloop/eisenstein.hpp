#pragma once

// Arithmetic in K = Z_3[T], T^2 + T + 1 = 0, with uniformizer p = 1 - T.
//
// Elements are exact integer pairs a + bT.  A value that is only known modulo
// p^n carries n as metadata; the pair itself is never silently rounded, so
// reduction to a canonical residue only happens where it is asked for
// (digit expansion, equal_mod, reduced()).

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubicloop/error.hpp"

namespace cubicloop {

using BigInt = boost::multiprecision::cpp_int;

/// Number of known p-adic digits, or Exact.
class Precision {
 public:
  constexpr Precision() = default;
  constexpr explicit Precision(int digits) : digits_(digits) {}

  static constexpr Precision exact() { return Precision(); }

  constexpr bool is_exact() const { return digits_ == kExact; }
  /// INT_MAX for exact values.
  constexpr int digits() const { return digits_; }
  constexpr bool at_least(int n) const { return digits_ >= n; }

  /// Precision left after dividing by p^k.
  constexpr Precision shifted_down(int k) const {
    return is_exact() ? *this : Precision(digits_ - k);
  }

  constexpr auto operator<=>(const Precision&) const = default;

 private:
  static constexpr int kExact = INT_MAX;
  int digits_ = kExact;
};

std::ostream& operator<<(std::ostream& os, Precision p);

/// Additive p-adic valuation.  For a truncated value that vanishes to its
/// known precision n the result is n with below_precision() set.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(0, true, false); }
  static Valuation of(int v) { return Valuation(v, false, false); }
  static Valuation at_least_known(int v) { return Valuation(v, false, true); }

  bool is_infinite() const { return infinite_; }
  bool below_precision() const { return below_; }
  /// Meaningless when is_infinite().
  int value() const { return value_; }

  /// True when the valuation is provably >= n.
  bool at_least(int n) const { return infinite_ || value_ >= n; }
  /// True when the valuation is known exactly (finite and not capped).
  bool is_determined() const { return !infinite_ && !below_; }

  bool operator==(const Valuation&) const = default;

 private:
  Valuation(int v, bool inf, bool below) : value_(v), infinite_(inf), below_(below) {}
  int value_;
  bool infinite_;
  bool below_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

class RingElt {
 public:
  RingElt() = default;
  RingElt(long long a, long long b = 0, Precision prec = Precision::exact())
      : a_(a), b_(b), prec_(prec) {}
  RingElt(BigInt a, BigInt b, Precision prec = Precision::exact())
      : a_(std::move(a)), b_(std::move(b)), prec_(prec) {}

  static RingElt theta() { return RingElt(0, 1); }
  static RingElt uniformizer() { return RingElt(1, -1); }
  /// p^k, exact.
  static RingElt uniformizer_power(int k);
  /// T^k for any integer k (T^3 = 1).
  static RingElt theta_power(int k);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  Precision precision() const { return prec_; }

  bool is_exact() const { return prec_.is_exact(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Same value with precision lowered to min(current, p).
  RingElt truncated(Precision p) const;
  /// Canonical representative modulo 3^ceil(n/2) (which lies inside p^n);
  /// congruent to *this modulo its precision.  No-op for exact values.
  RingElt reduced() const;

  /// a^2 - ab + b^2.
  BigInt norm() const;
  /// Galois conjugate a + bT^2.
  RingElt conjugate() const;

  RingElt pow(unsigned k) const;

  RingElt operator-() const { return RingElt(-a_, -b_, prec_); }
  RingElt& operator+=(const RingElt& o);
  RingElt& operator-=(const RingElt& o);
  RingElt& operator*=(const RingElt& o);

  friend RingElt operator+(RingElt x, const RingElt& y) { return x += y; }
  friend RingElt operator-(RingElt x, const RingElt& y) { return x -= y; }
  friend RingElt operator*(RingElt x, const RingElt& y) { return x *= y; }

  /// Structural equality (pair and precision metadata).
  bool operator==(const RingElt&) const = default;

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
  Precision prec_;
};

std::ostream& operator<<(std::ostream& os, const RingElt& x);

/// Balanced base-p digits d_0..d_{n-1} in {-1, 0, 1}.
class DigitVector {
 public:
  DigitVector() = default;
  explicit DigitVector(std::vector<int> digits);

  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<int>& digits() const { return digits_; }

  /// First n digits.
  DigitVector truncated(std::size_t n) const;
  /// Index of the first nonzero digit, or size() when all digits vanish.
  std::size_t leading_zeros() const;

  /// "[d0,d1,...]".
  std::string to_string() const;
  static DigitVector parse(const std::string& text);

  auto operator<=>(const DigitVector&) const = default;

 private:
  std::vector<int> digits_;
};

std::ostream& operator<<(std::ostream& os, const DigitVector& d);

Valuation valuation(const RingElt& x);

/// 3-adic valuation of a nonzero integer.
int valuation3(const BigInt& n);

/// Exact division by p^k; throws NonIntegralQuotient if p^k does not divide
/// the representative.  Precision drops by k.
RingElt divide_by_uniformizer(const RingElt& x, int k = 1);

DigitVector to_digits(const RingElt& x, int n);
RingElt from_digits(const DigitVector& d);

/// Inverse of a unit modulo p^n.
RingElt invert(const RingElt& x, int n);

/// x / y with v(y) <= v(x), known to at most n digits.
RingElt div_exact(const RingElt& x, const RingElt& y, int n);

bool equal_mod(const RingElt& x, const RingElt& y, int n);

}  // namespace cubicloop
