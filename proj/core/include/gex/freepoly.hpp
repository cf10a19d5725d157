#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gex/algebra.hpp"
#include "gex/element.hpp"
#include "gex/scalar.hpp"

namespace gex {

// A free-algebra variable with a fixed homogeneous degree.  The same letter
// and index at two different degrees are two different variables.
struct GVar {
  char letter = 'x';
  std::uint32_t index = 1;
  std::int64_t degree = 0;

  // Variable order used everywhere (commutator entries, term order,
  // straightening): by degree, then letter, then index.
  auto operator<=>(const GVar&) const = default;
  std::string str() const {
    return std::string(1, letter) + std::to_string(index) + "@" + std::to_string(degree);
  }
};

// A word in the free algebra: an ordered product of variables.
using Monomial = std::vector<GVar>;

// Term order on monomials: by length, then lexicographically by variable.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// An element of the free associative algebra on graded variables, stored as
// monomial -> coefficient with no zero entries.  Commutators are expanded on
// construction; there is no lazy bracket form here (see rewrite.hpp for
// structured normal forms).
class FreePoly {
 public:
  explicit FreePoly(Field f) : field_(f) {}
  static FreePoly var(Field f, const GVar& v);
  static FreePoly monomial(Field f, const Monomial& m, const Scalar& c);
  static FreePoly constant(Field f, const Scalar& c);

  const Field& field() const { return field_; }
  const std::map<Monomial, Scalar, MonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FreePoly operator-() const;
  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly& operator+=(const FreePoly& o) { return *this = *this + o; }
  FreePoly& operator-=(const FreePoly& o) { return *this = *this - o; }
  FreePoly& operator*=(const FreePoly& o) { return *this = *this * o; }
  FreePoly scaled(const Scalar& c) const;
  FreePoly pow(std::uint32_t e) const;

  bool operator==(const FreePoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  // Distinct variables over all monomials, in variable order.
  std::vector<GVar> variables() const;
  // Every variable occurs exactly once in every monomial.
  bool is_multilinear() const;
  // Every variable occurs with the same multiplicity in every monomial.
  bool is_multihomogeneous() const;
  // Multiplicity of v (requires multihomogeneous; 0 if absent).
  std::uint32_t multiplicity(const GVar& v) const;

  // Canonical text, e.g. "x1@1*x2@1 - x2@1*x1@1"; repeated adjacent variables
  // print as powers.  parse_poly() inverts this exactly.
  std::string str() const;

 private:
  Field field_;
  std::map<Monomial, Scalar, MonomialOrder> terms_;
};

FreePoly commutator(const FreePoly& a, const FreePoly& b);
FreePoly anticommutator(const FreePoly& a, const FreePoly& b);
// Left-normed [a1,...,an].
FreePoly commutator(const std::vector<FreePoly>& args);

// Substitution of algebra elements for variables.  Every assigned value must
// be homogeneous of the variable's degree (after reduce() for quotient
// gradings); zero is legal everywhere, the unit only at degree 0.  Variables
// of f without an assignment are an error.
using Assignment = std::vector<std::pair<GVar, Element>>;
Element substitute(const FreePoly& f, const Assignment& sigma, const Algebra& A);

// Z-degree of a monomial: sum of variable degrees (reduced by the grading).
std::int64_t monomial_degree(const Monomial& m, const GradingSpec& g);

// Rename every variable degree to its residue mod m.  Throws if two distinct
// variables would collide after projection.
FreePoly project_degrees(const FreePoly& f, std::uint32_t m);

}  // namespace gex
