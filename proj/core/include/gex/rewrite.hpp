#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gex/freepoly.hpp"

namespace gex {

// Binary bracketing over variables.  A node's kids are canonically ordered
// (kid0 < kid1 fails only transiently during construction).
struct CommTree {
  GVar leaf{};
  std::vector<CommTree> kids;  // empty (leaf) or size 2

  static CommTree make_leaf(const GVar& v) { return CommTree{v, {}}; }
  static CommTree make_node(CommTree a, CommTree b);

  bool is_leaf() const { return kids.empty(); }
  std::uint32_t size() const;  // number of leaves
  void collect_leaves(std::vector<GVar>& out) const;
  std::string str() const;

  bool operator==(const CommTree& o) const;
  // leaves before nodes; leaves by variable; nodes by (size, kid0, kid1)
  bool operator<(const CommTree& o) const;
};

// Sum of products of bracket factors, each product sorted ascending.  Equal to
// the original polynomial; the basis of such products is linearly independent,
// so this is a normal form.
class PbwForm {
 public:
  explicit PbwForm(Field f) : field_(f) {}

  Field field() const { return field_; }
  const std::map<std::vector<CommTree>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<CommTree>& factors, const Scalar& c);

  FreePoly expand() const;
  // no bare (leaf) factor of degree zero / no bare factor at all
  bool zero_proper() const;
  bool proper() const;
  std::string str() const;

 private:
  Field field_;
  std::map<std::vector<CommTree>, Scalar> terms_;
};

PbwForm to_pbw(const FreePoly& f);

struct Classification {
  bool multilinear = false;
  bool multihomogeneous = false;
  bool zero_proper = false;  // lies in the span of products with every
                             // degree-0 variable inside a bracket
  bool proper = false;       // every variable inside a bracket
};
Classification classify(const FreePoly& f);

// Normal form modulo the ideal generated by triple commutators [x,y,z].
// Modulo it, brackets are central and products of brackets are fully
// alternating in their entries, so each monomial reduces to
// +- (ascending bare part) * [a1,b1]...[ar,br] with a1<b1<a2<...<br.
// The bare part may repeat variables; bracket entries are distinct, since
// [x1,x2][x1,x3] lies in the ideal.
struct ProperKey {
  std::vector<GVar> bare;     // ascending, repeats allowed
  std::vector<GVar> entries;  // strictly ascending; consecutive pairs are the brackets
  auto operator<=>(const ProperKey&) const = default;
};

class ProperForm {
 public:
  explicit ProperForm(Field f) : field_(f) {}

  Field field() const { return field_; }
  const std::map<ProperKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ProperKey& k, const Scalar& c);

  FreePoly expand() const;  // a representative of the class mod the ideal
  std::string str() const;

 private:
  Field field_;
  std::map<ProperKey, Scalar> terms_;
};

ProperForm reduce_mod_I(const FreePoly& f);

// Splits a multilinear polynomial whose reduction carries every degree-0
// variable inside a bracket: with y1<...<yl the degree-0 variables and
// z's the rest, f is (mod the triple-commutator ideal) g * [y.,y.]...[y.,y.]
// with g over the z's (l even), or g' * [y.,y.]... with g' ending in a bracket
// [z., y_min] (l odd).  `tail` lists the factored bracket pairs.
struct GammaSplit {
  FreePoly g;                              // over z's only (l even) or z's and y_min (l odd)
  std::vector<std::pair<GVar, GVar>> tail;
  bool odd = false;                        // l odd
};
GammaSplit gamma_decompose(const FreePoly& f);

// Drops monomials that vanish under every graded substitution because some
// variable repeats beyond the algebra's nilpotency.  Only valid over a
// uniform grading of step `step`, where degree d forces word length d/step:
// variables of odd word length square to zero, and in characteristic p those
// of even positive word length have zero p-th powers.  Degrees not divisible
// by step sit in empty components, killing their monomials outright.  Not
// sound for gradings with several blocks; callers must ensure the shape.
FreePoly power_reduce(const FreePoly& f, std::uint32_t charp, std::int64_t step = 1);

}  // namespace gex
