#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gex/scalar.hpp"
#include "gex/word.hpp"

namespace gex {

// An element of the rank-N exterior algebra over a fixed field: a finite
// linear combination of basis words supported on e_1..e_N.  The term map is
// kept free of zero coefficients, so equality is map equality.
class Element {
 public:
  Element(Field f, std::uint32_t rank);  // zero
  static Element unit(Field f, std::uint32_t rank);
  static Element generator(Field f, std::uint32_t rank, std::uint32_t i);
  static Element term(Field f, std::uint32_t rank, const BasisWord& w, const Scalar& c);

  const Field& field() const { return field_; }
  std::uint32_t rank() const { return rank_; }
  const std::map<BasisWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element scaled(const Scalar& c) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Scalar coefficient(const BasisWord& w) const;  // zero if absent
  void add_term(const BasisWord& w, const Scalar& c);
  BasisWord support() const;  // union of all word supports
  // Every word has the same length parity: 0, 1, or -1 when mixed/zero.
  int parity() const;

  // Canonical text: terms in canonical word order, e.g. "3/2*e1e2 - e3".
  std::string str() const;

 private:
  void check_compatible(const Element& o) const;
  Field field_;
  std::uint32_t rank_;
  std::map<BasisWord, Scalar> terms_;
};

// ab - ba and ab + ba.
Element commutator(const Element& a, const Element& b);
Element anticommutator(const Element& a, const Element& b);
// Left-normed [a1,a2,...,an] = [[a1,a2],...,an]; needs >= 2 entries.
Element commutator(const std::vector<Element>& args);

}  // namespace gex
