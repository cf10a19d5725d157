#include "gex/linalg.hpp"

#include <algorithm>

#include "gex/errors.hpp"

namespace gex {

namespace {
std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}
}  // namespace

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw error("vector has the wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Scalar f = c;  // pivots are normalized to 1
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      v[j] = v[j] - f * rows_[r][j];
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  const std::size_t p = first_nonzero(v);
  if (p == v.size()) return false;
  const Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j) v[j] = v[j] * inv;
  // clear the new pivot column from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][p];
    if (c.is_zero()) continue;
    const Scalar f = c;
    for (std::size_t j = p; j < ambient_; ++j) rows_[r][j] = rows_[r][j] - f * v[j];
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(Vec v) const { return first_nonzero(reduce(std::move(v))) == ambient_; }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw error("subspaces live in different spaces");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, Scalar(f, 0));
    v[i] = Scalar(f, 1);
    s.insert(std::move(v));
  }
  return s;
}

Subspace kernel(Field f, std::size_t ambient, const std::vector<Vec>& rows) {
  Subspace rowspace(f, ambient);
  for (const auto& r : rows) rowspace.insert(r);
  std::vector<bool> is_pivot(ambient, false);
  std::vector<std::size_t> pivot_of_row(rowspace.dim());
  for (std::size_t r = 0; r < rowspace.dim(); ++r) {
    const std::size_t p = first_nonzero(rowspace.rows()[r]);
    pivot_of_row[r] = p;
    is_pivot[p] = true;
  }
  Subspace ker(f, ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    if (is_pivot[j]) continue;
    Vec x(ambient, Scalar(f, 0));
    x[j] = Scalar(f, 1);
    for (std::size_t r = 0; r < rowspace.dim(); ++r)
      x[pivot_of_row[r]] = -rowspace.rows()[r][j];
    ker.insert(std::move(x));
  }
  return ker;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw error("subspaces live in different spaces");
  Subspace s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw error("subspaces live in different spaces");
  const std::size_t n = a.ambient();
  const Field f = a.field();
  Subspace glued(f, 2 * n);
  for (const auto& v : a.rows()) {
    Vec w(2 * n, Scalar(f, 0));
    for (std::size_t j = 0; j < n; ++j) w[j] = w[n + j] = v[j];
    glued.insert(std::move(w));
  }
  for (const auto& v : b.rows()) {
    Vec w(2 * n, Scalar(f, 0));
    for (std::size_t j = 0; j < n; ++j) w[j] = v[j];
    glued.insert(std::move(w));
  }
  Subspace meet(f, n);
  for (const auto& r : glued.rows()) {
    if (first_nonzero(r) < n) continue;
    Vec right(r.begin() + n, r.end());
    meet.insert(std::move(right));
  }
  return meet;
}

std::optional<Vec> gap_vector(const Subspace& big, const Subspace& small) {
  for (const auto& r : big.rows())
    if (!small.contains(r)) return r;
  return std::nullopt;
}

}  // namespace gex
