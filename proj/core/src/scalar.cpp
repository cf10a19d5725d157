#include "gex/scalar.hpp"

#include <utility>

namespace gex {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_reduce(const BigInt& v, std::uint32_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// Extended Euclid on machine words; p < 2^32 so products fit in 64 bits.
std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
  if (a == 0) throw error("division by zero in F" + std::to_string(p));
  long long t = 0, nt = 1, r = p, nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw error("characteristic 2 is not supported");
  if (!is_prime(p)) throw error("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar::Scalar(Field f, long long n) : field_(f) {
  if (f.is_rational()) {
    q_ = n;
  } else {
    r_ = mod_reduce(BigInt(n), f.characteristic());
  }
}

Scalar Scalar::fraction(Field f, const BigInt& num, const BigInt& den) {
  if (den == 0) throw error("zero denominator");
  Scalar s(f, 0);
  if (f.is_rational()) {
    // cpp_rational rejects negative denominators outright; move the sign up front
    if (den < 0)
      s.q_ = BigRational(-num, -den);
    else
      s.q_ = BigRational(num, den);
  } else {
    std::uint32_t p = f.characteristic();
    std::uint64_t d = mod_reduce(den, p);
    if (d == 0) throw error("denominator divisible by the characteristic");
    s.r_ = mod_reduce(num, p) * mod_inverse(d, p) % p;
  }
  return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_.is_zero() : r_ == 0; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.characteristic() - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ += o.q_;
  } else {
    s.r_ = (r_ + o.r_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ *= o.q_;
  } else {
    s.r_ = r_ * o.r_ % field_.characteristic();
  }
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    if (q_.is_zero()) throw error("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Scalar acc = Scalar::one(field_);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

const BigRational& Scalar::rational() const {
  if (!field_.is_rational()) throw error("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw error("not a modular scalar");
  return r_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.str() : std::to_string(r_);
}

}  // namespace gex
