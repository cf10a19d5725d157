#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "gex/errors.hpp"

namespace gex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Coefficient domain: the rationals, or F_p for an odd prime p.
// Characteristic 2 is rejected at construction; everything downstream may
// assume 2 is invertible.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// An exact field element.  Rational values are kept reduced with positive
// denominator (cpp_rational invariant); modular values as residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}  // zero of Q
  Scalar(Field f, long long n);
  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  // num/den as arbitrary integers; in F_p the denominator must be a unit.
  static Scalar fraction(Field f, const BigInt& num, const BigInt& den);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(field_); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long long e) const;  // negative e inverts first

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational accessors (Q only).
  const BigRational& rational() const;
  // Residue accessor (F_p only).
  std::uint64_t residue() const;

  // "3/2", "-3", "4" (residues print without sign).
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  Field field_;
  BigRational q_;           // value when rational
  std::uint64_t r_ = 0;     // residue when modular
};

inline Scalar operator*(long long n, const Scalar& s) { return Scalar(s.field(), n) * s; }

}  // namespace gex
