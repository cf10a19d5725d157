#include <vector>

#include "doctest.h"
#include "gex/errors.hpp"
#include "gex/freepoly.hpp"
#include "util.hpp"

using namespace gex;

namespace {
const Field Q = Field::rationals();
GVar X(std::uint32_t i, std::int64_t d) { return GVar{'x', i, d}; }
FreePoly V(const GVar& v) { return FreePoly::var(Q, v); }
}  // namespace

TEST_SUITE("freepoly") {

TEST_CASE("variable order: degree, then letter, then index") {
  CHECK(GVar{'z', 9, 0} < GVar{'x', 1, 1});
  CHECK(GVar{'x', 2, 1} < GVar{'y', 1, 1});
  CHECK(GVar{'x', 1, 1} < GVar{'x', 2, 1});
  CHECK(X(1, 1).str() == "x1@1");
  CHECK(GVar{'z', 4, -2}.str() == "z4@-2");
}

TEST_CASE("commutators expand to monomials") {
  const FreePoly c = commutator(V(X(1, 1)), V(X(2, 1)));
  CHECK(c.term_count() == 2);
  CHECK(c.coefficient({X(1, 1), X(2, 1)}) == Scalar(Q, 1));
  CHECK(c.coefficient({X(2, 1), X(1, 1)}) == Scalar(Q, -1));
  const FreePoly a = anticommutator(V(X(1, 1)), V(X(2, 1)));
  CHECK(a.coefficient({X(2, 1), X(1, 1)}) == Scalar(Q, 1));
  // left-normed nesting
  const FreePoly t = commutator({V(X(1, 1)), V(X(2, 1)), V(X(3, 1))});
  CHECK(t == commutator(commutator(V(X(1, 1)), V(X(2, 1))), V(X(3, 1))));
  CHECK(t.term_count() == 4);
  CHECK_THROWS_AS(commutator({V(X(1, 1))}), error);
}

TEST_CASE("ring operations and zero cleanup") {
  const FreePoly f = V(X(1, 1)) * V(X(2, 2)) - V(X(2, 2)) * V(X(1, 1));
  CHECK(f.term_count() == 2);
  CHECK((f - f).is_zero());
  CHECK((f + (-f)).is_zero());
  const FreePoly g = V(X(1, 1)).pow(3);
  CHECK(g.term_count() == 1);
  CHECK(g.coefficient({X(1, 1), X(1, 1), X(1, 1)}).is_one());
  CHECK(V(X(1, 1)).pow(0) == FreePoly::constant(Q, Scalar(Q, 1)));
  CHECK(f.scaled(Scalar(Q, 0)).is_zero());
  CHECK_THROWS_AS(f + FreePoly::var(Field::prime(3), X(1, 1)), error);
}

TEST_CASE("multilinearity and multihomogeneity flags") {
  const FreePoly ml = commutator(V(X(1, 1)), V(X(2, 5)));
  CHECK(ml.is_multilinear());
  CHECK(ml.is_multihomogeneous());
  const FreePoly sq = V(X(1, 2)).pow(2) * V(X(2, 1));
  CHECK(!sq.is_multilinear());
  CHECK(sq.is_multihomogeneous());
  CHECK(sq.multiplicity(X(1, 2)) == 2);
  CHECK(sq.multiplicity(X(2, 1)) == 1);
  CHECK(sq.multiplicity(X(9, 9)) == 0);
  const FreePoly mixed = V(X(1, 1)) + V(X(1, 1)) * V(X(2, 1));
  CHECK(!mixed.is_multihomogeneous());
  CHECK_THROWS_AS(mixed.multiplicity(X(1, 1)), error);
  const auto vars = sq.variables();
  REQUIRE(vars.size() == 2);
  CHECK(vars[0] == X(2, 1));  // degree 1 before degree 2
  CHECK(vars[1] == X(1, 2));
}

TEST_CASE("canonical text form with powers") {
  const FreePoly f = commutator(V(X(1, 1)), V(X(2, 1)));
  CHECK(f.str() == "x1@1*x2@1 - x2@1*x1@1");
  CHECK(V(X(1, 2)).pow(2).str() == "x1@2^2");
  const FreePoly c = FreePoly::monomial(Q, {X(1, 1), X(1, 1), X(2, 0)}, Scalar::fraction(Q, -3, 2));
  CHECK(c.str() == "-3/2*x1@1^2*x2@0");
  CHECK(FreePoly(Q).str() == "0");
}

TEST_CASE("substitution respects homogeneity") {
  const Algebra A{Q, 6, grading_preset("can")};
  const auto e = [&](std::uint32_t i) { return Element::generator(Q, 6, i); };
  const FreePoly f = commutator(V(X(1, 1)), V(X(2, 1)));
  Assignment ok{{X(1, 1), e(1)}, {X(2, 1), e(2)}};
  CHECK(substitute(f, ok, A) == commutator(e(1), e(2)));

  Assignment wrong_degree{{X(1, 1), e(1) * e(2)}, {X(2, 1), e(3)}};
  CHECK_THROWS_AS(substitute(f, wrong_degree, A), error);
  Assignment missing{{X(1, 1), e(1)}};
  CHECK_THROWS_AS(substitute(f, missing, A), error);

  // the unit is legal exactly at degree 0
  const Algebra K{Q, 6, grading_preset("k", {2})};
  Assignment unit0{{GVar{'y', 1, 0}, Element::unit(Q, 6)}};
  CHECK(substitute(FreePoly::var(Q, GVar{'y', 1, 0}), unit0, K) == Element::unit(Q, 6));
  Assignment unit1{{X(1, 1), Element::unit(Q, 6)}};
  CHECK_THROWS_AS(substitute(V(X(1, 1)), unit1, K), error);
  // zero is legal everywhere
  Assignment zero1{{X(1, 1), Element(Q, 6)}, {X(2, 1), e(3)}};
  CHECK(substitute(f, zero1, K).is_zero());
}

TEST_CASE("substitution is linear and multiplicative") {
  gextest::Rng rng(31);
  const Algebra A{Q, 8, grading_preset("infinity")};
  const std::vector<GVar> vars{X(1, 0), X(2, 1), X(3, 2)};
  for (int t = 0; t < 40; ++t) {
    const FreePoly f = gextest::rand_multilinear(Q, vars, rng);
    const FreePoly g = gextest::rand_multilinear(Q, vars, rng);
    const Assignment sigma = gextest::rand_assignment(A, vars, rng);
    CHECK(substitute(f + g, sigma, A) == substitute(f, sigma, A) + substitute(g, sigma, A));
    CHECK(substitute(f * g, sigma, A) == substitute(f, sigma, A) * substitute(g, sigma, A));
    CHECK(substitute(f.scaled(Scalar(Q, 3)), sigma, A) == substitute(f, sigma, A).scaled(Scalar(Q, 3)));
  }
}

TEST_CASE("quotient gradings admit matching-residue values") {
  const Algebra A{Q, 6, grading_preset("can").quotient(2)};
  // a degree-3 word has residue 1, legal for a variable of degree 1
  Assignment sigma{{X(1, 1), Element::term(Q, 6, BasisWord::from_indices({1, 2, 3}), Scalar(Q, 1))}};
  CHECK(!substitute(V(X(1, 1)), sigma, A).is_zero());
}

TEST_CASE("monomial degree and projection") {
  const GradingSpec g = grading_preset("can");
  CHECK(monomial_degree({X(1, 2), X(2, 3)}, g) == 5);
  CHECK(monomial_degree({}, g) == 0);
  CHECK(monomial_degree({X(1, 5)}, grading_preset("can").quotient(2)) == 1);

  const FreePoly f = commutator(V(X(1, 3)), V(X(2, 2)));
  const FreePoly p = project_degrees(f, 2);
  CHECK(p == commutator(V(X(1, 1)), V(X(2, 0))));
  // distinct variables that collide after projection are rejected
  const FreePoly bad = V(X(1, 1)) * V(X(1, 3));
  CHECK_THROWS_AS(project_degrees(bad, 2), error);
}

}  // TEST_SUITE
