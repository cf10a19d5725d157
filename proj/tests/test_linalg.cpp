#include <vector>

#include "doctest.h"
#include "gex/linalg.hpp"
#include "util.hpp"

using namespace gex;

namespace {
const Field Q = Field::rationals();

Vec vec(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Scalar(Q, x));
  return v;
}
}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("insert reports growth and reduces to echelon form") {
  Subspace s(Q, 3);
  CHECK(s.insert(vec({1, 2, 0})));
  CHECK(s.insert(vec({0, 1, 1})));
  CHECK(!s.insert(vec({1, 3, 1})));  // the sum of the first two
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({2, 5, 1})));
  CHECK(!s.contains(vec({0, 0, 1})));
  CHECK(!s.insert(vec({0, 0, 0})));
  CHECK(s.reduce(vec({1, 3, 1})) == vec({0, 0, 0}));
  CHECK(s.reduce(vec({1, 2, 1})) != vec({0, 0, 0}));
}

TEST_CASE("row order does not matter: canonical equality") {
  Subspace a(Q, 3), b(Q, 3);
  a.insert(vec({1, 1, 0}));
  a.insert(vec({0, 0, 2}));
  b.insert(vec({3, 3, 6}));
  b.insert(vec({2, 2, 2}));
  CHECK(a == b);
  CHECK(a.contains(b));
  CHECK(b.contains(a));
  b.insert(vec({0, 1, 0}));
  CHECK(!(a == b));
  CHECK(b.contains(a));
  CHECK(!a.contains(b));
}

TEST_CASE("kernel of a functional matrix") {
  // x1 + x2 = 0, x3 = 0 over Q^3
  const Subspace k = kernel(Q, 3, {vec({1, 1, 0}), vec({0, 0, 1})});
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({1, -1, 0})));
  CHECK(!k.contains(vec({1, 1, 0})));
  CHECK(kernel(Q, 3, {}).dim() == 3);
  CHECK(kernel(Q, 2, {vec({1, 0}), vec({0, 1})}).dim() == 0);
}

TEST_CASE("sum and intersection") {
  Subspace a(Q, 3), b(Q, 3);
  a.insert(vec({1, 0, 0}));
  a.insert(vec({0, 1, 0}));
  b.insert(vec({0, 1, 0}));
  b.insert(vec({0, 0, 1}));
  CHECK(sum(a, b).dim() == 3);
  const Subspace meet = intersection(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(vec({0, 1, 0})));
  CHECK(Subspace::full(Q, 4).dim() == 4);
}

TEST_CASE("gap vector finds a missing direction") {
  Subspace big(Q, 3), small(Q, 3);
  big.insert(vec({1, 0, 0}));
  big.insert(vec({0, 1, 0}));
  small.insert(vec({1, 1, 0}));
  const auto g = gap_vector(big, small);
  REQUIRE(g.has_value());
  CHECK(big.contains(*g));
  CHECK(!small.contains(*g));
  CHECK(!gap_vector(small, big).has_value());
}

TEST_CASE("modular fields eliminate with inverses") {
  const Field F5 = Field::prime(5);
  Subspace s(F5, 2);
  Vec r1{Scalar(F5, 2), Scalar(F5, 1)};
  Vec r2{Scalar(F5, 4), Scalar(F5, 2)};  // twice r1
  CHECK(s.insert(r1));
  CHECK(!s.insert(r2));
  CHECK(s.rows()[0][0].is_one());  // normalized pivot
}

}  // TEST_SUITE
