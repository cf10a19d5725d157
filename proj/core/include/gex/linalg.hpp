#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gex/scalar.hpp"

namespace gex {

using Vec = std::vector<Scalar>;

// Row space in reduced row echelon form over an exact field.  Rows are kept
// normalized (pivot 1, pivot column cleared elsewhere), so two subspaces are
// equal iff their row lists are equal.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  // Reduces v against the rows; returns true if v enlarged the space.
  bool insert(Vec v);
  bool contains(Vec v) const;
  bool contains(const Subspace& other) const;
  // Residue of v after reduction (zero iff contained).
  Vec reduce(Vec v) const;

  bool operator==(const Subspace& o) const;

  static Subspace full(Field f, std::size_t ambient);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;          // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// Solution space of rows * x = 0 (each row a functional on coordinates).
Subspace kernel(Field f, std::size_t ambient, const std::vector<Vec>& rows);

Subspace sum(const Subspace& a, const Subspace& b);
// Zassenhaus: glue (v,v) for a and (w,0) for b; rows with zero left half give
// the intersection in the right half.
Subspace intersection(const Subspace& a, const Subspace& b);

// First basis vector of `big` outside `small`, if any.
std::optional<Vec> gap_vector(const Subspace& big, const Subspace& small);

}  // namespace gex
