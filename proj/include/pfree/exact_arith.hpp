#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pfree/error.hpp"

namespace pfree {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Integer floor() const;
  Rational abs() const;
  double to_double() const { return q_.get_d(); }

  /// Always "num/den", including integers ("3/1") and zero ("0/1").
  std::string to_string() const;
  /// Accepts "a/b", "a", with optional leading sign.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// An element of Q/Z, held by its unique representative in [0, 1).
class QmodZ {
public:
  QmodZ() = default;
  explicit QmodZ(const Rational& r);

  const Rational& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    return QmodZ(a.rep_ + b.rep_);
  }
  friend QmodZ operator-(const QmodZ& a, const QmodZ& b) {
    return QmodZ(a.rep_ - b.rep_);
  }
  QmodZ operator-() const { return QmodZ(-rep_); }
  friend QmodZ operator*(const Integer& k, const QmodZ& a) {
    return QmodZ(Rational(k) * a.rep_);
  }
  friend bool operator==(const QmodZ&, const QmodZ&) = default;

private:
  Rational rep_;
};

/// A residue class value mod modulus with 0 <= value < modulus.
class Residue {
public:
  Residue(const Integer& value, const Integer& modulus);

  const Integer& value() const { return value_; }
  const Integer& modulus() const { return modulus_; }

  Residue operator*(const Residue& o) const;
  Residue operator+(const Residue& o) const;
  friend bool operator==(const Residue&, const Residue&) = default;

private:
  Integer value_;
  Integer modulus_;
};

/// Euclidean remainder in [0, |m|).
Integer emod(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, unsigned long exp);

/// Inverse of a in (Z/p)^x by the extended Euclidean algorithm.
/// Throws InvalidModulus when p < 2 and NotInvertible when gcd(a, p) != 1.
Residue mod_inverse(const Integer& a, const Integer& p);

QmodZ qmod_z(const Rational& r);

Integer lcm_all(std::span<const Integer> xs);
Integer gcd_all(std::span<const Integer> xs);

/// Distinct prime divisors of |n| in ascending order (trial division).
std::vector<Integer> prime_divisors(const Integer& n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

}  // namespace pfree
