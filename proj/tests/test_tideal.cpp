#include <vector>

#include "doctest.h"
#include "gex/families.hpp"
#include "gex/tideal.hpp"
#include "util.hpp"

using namespace gex;

namespace {
const Field Q = Field::rationals();
GVar X(std::uint32_t i, std::int64_t d) { return GVar{'x', i, d}; }
FreePoly V(const GVar& v) { return FreePoly::var(Q, v); }
}  // namespace

TEST_SUITE("tideal") {

TEST_CASE("signature space coordinates round-trip") {
  const SignatureSpace S(Q, {X(1, 1), X(2, 1), X(3, 2)});
  CHECK(S.dim() == 6);  // 3! arrangements
  const FreePoly f = commutator(V(X(1, 1)), V(X(2, 1))) * V(X(3, 2));
  const Vec v = S.to_vec(f);
  CHECK(S.to_poly(v) == f);
  CHECK(S.index_of(S.basis()[4]) == 4);
  // non-multilinear coordinates are rejected
  CHECK_THROWS_AS(S.to_vec(V(X(1, 1)).pow(2)), error);
}

TEST_CASE("identity space of the trivial grading has codimension 2^(n-1)") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    std::vector<GVar> vars;
    for (std::uint32_t i = 1; i <= n; ++i) vars.push_back(X(i, 0));
    const SignatureSpace S(Q, vars);
    const Algebra A{Q, 16, GradingSpec::trivial()};
    const Subspace ids = identity_space(A, S);
    CHECK(S.dim() - ids.dim() == (std::size_t(1) << (n - 1)));
    CHECK(ungraded_codim(Q, n) == (std::size_t(1) << (n - 1)));
  }
  CHECK(sampled_codim(Q, 4, 12, 400, 42) == 8);
}

TEST_CASE("full linearization splits repeated variables") {
  const FreePoly sq = V(X(1, 1)).pow(2);
  const FreePoly lin = full_linearization(sq);
  CHECK(lin.is_multilinear());
  CHECK(lin.variables().size() == 2);
  CHECK(lin.term_count() == 2);  // x'x'' + x''x'
  // multilinear inputs pass through with renamed-to-same shape
  const FreePoly ml = commutator(V(X(1, 1)), V(X(2, 2)));
  const FreePoly back = full_linearization(ml);
  CHECK(back.is_multilinear());
  CHECK(back.term_count() == 2);
  CHECK(back.variables().size() == 2);
}

TEST_CASE("consequence span matches identities on small canonical signatures") {
  const Algebra A{Q, 12, grading_preset("can")};
  const auto gens = ecan_list(Q, -3, 3);
  const SignatureSpace S(Q, {X(1, 1), X(2, 1)});
  const Subspace ids = identity_space(A, S);
  const Subspace span = consequence_span(A, gens, S);
  CHECK(ids.dim() == 1);  // the anticommutator
  CHECK(span == ids);
  CHECK(ids.contains(S.to_vec(anticommutator(V(X(1, 1)), V(X(2, 1))))));
}

TEST_CASE("span honors the target dimension cap") {
  const Algebra A{Q, 12, grading_preset("can")};
  const auto gens = ecan_list(Q, -3, 3);
  const SignatureSpace S(Q, {X(1, 1), X(2, 1), X(3, 1)});
  SpanOptions opt;
  opt.target_dim = 1;
  CHECK(consequence_span(A, gens, S, opt).dim() == 1);
  SpanOptions starved;
  starved.max_rows = 1;
  CHECK_THROWS_AS(consequence_span(A, gens, S, starved), budget_error);
}

TEST_CASE("composite slot monomials instantiate single-variable generators") {
  // over the one-degree-1-generator grading the degree-2 component is zero,
  // so x@2 is a listed generator; the slot monomial z1z2 turns it into the
  // bare product identity, which no bracket generator produces
  const Algebra A{Q, 12, grading_preset("k_star", {1})};
  const auto gens = ekstar_list(Q, 1, -2, 4);
  const SignatureSpace S(Q, {GVar{'z', 1, 1}, GVar{'z', 2, 1}});
  const Subspace ids = identity_space(A, S);
  const Subspace span = consequence_span(A, gens, S);
  CHECK(span == ids);
  CHECK(ids.dim() == 2);  // z1z2 and z2z1 both vanish: degree 2 > k
}

TEST_CASE("zero-proper subspace spans bracket-covered arrangements") {
  const SignatureSpace S(Q, {GVar{'y', 1, 0}, GVar{'z', 1, 1}});
  const Subspace zp = zero_proper_subspace(S);
  CHECK(zp.dim() == 1);
  CHECK(zp.contains(S.to_vec(commutator(V(GVar{'y', 1, 0}), V(GVar{'z', 1, 1})))));
  const SignatureSpace S2(Q, {GVar{'z', 1, 1}, GVar{'z', 2, 1}});
  CHECK(zero_proper_subspace(S2).dim() == 2);  // no degree-0 variables: everything
}

TEST_CASE("generation report flags gaps honestly") {
  const Algebra A{Q, 12, grading_preset("can")};
  // deliberately starved generator list: negatives only
  std::vector<FreePoly> gens{V(X(1, -1))};
  const GenerationReport rep =
      verify_generation(A, gens, {{X(1, 1), X(2, 1)}}, SpanOptions{}, CheckBudget{});
  CHECK(!rep.ok);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].contained);
  CHECK(!rep.rows[0].generated);
  REQUIRE(rep.rows[0].gap.has_value());
  // the reported gap is an identity outside the span
  const SignatureSpace S(Q, {X(1, 1), X(2, 1)});
  CHECK(identity_space(A, S).contains(S.to_vec(*rep.rows[0].gap)));
  // the full list closes the gap
  CHECK(verify_generation(A, ecan_list(Q, -3, 3), {{X(1, 1), X(2, 1)}}).ok);
}

TEST_CASE("proper generation restricts to the zero-proper part") {
  // with a single degree-0 generator the degree-0 component is {1, e1} and
  // commutes, so [y1,y2] is a proper identity the chain family must cover
  const Algebra A{Q, 12, grading_preset("k", {1})};
  const auto gens = ek_list(Q, 1, 3);
  const std::vector<std::vector<GVar>> sigs{
      {GVar{'y', 1, 0}, GVar{'y', 2, 0}},
      {GVar{'y', 1, 0}, GVar{'y', 2, 0}, GVar{'z', 1, 1}},
  };
  const GenerationReport rep = verify_generation_proper(A, gens, sigs);
  CHECK(rep.ok);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].dim_space == 1);       // zero-proper part is spanned by [y1,y2]
  CHECK(rep.rows[0].dim_identities == 1);  // and it vanishes identically
}

TEST_CASE("relabel rows tie graded to plain identities over the alternating grading") {
  const Algebra A{Q, 16, grading_preset("infinity")};
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (const RelabelRow& row : relabel_check(A, n, 3))
      CHECK(row.equal);
}

TEST_CASE("multihomogeneous spaces and generation") {
  MhSignature sig;
  sig.vars = {X(1, 1)};
  sig.exps = {2};
  const MhSpace M(Q, sig);
  CHECK(M.dim() == 1);
  const FreePoly sq = V(X(1, 1)).pow(2);
  CHECK(M.to_poly(M.to_vec(sq)) == sq);

  const Algebra A{Q, 10, grading_preset("can")};
  const Subspace ids = identity_space_mh(A, sig);
  CHECK(ids.dim() == 1);  // odd squares vanish
  const Subspace span = consequence_span_mh(A, ecan_list(Q, -2, 2), sig);
  CHECK(span == ids);

  const MhGenerationReport rep = verify_generation_mh(A, ecan_list(Q, -2, 2), {sig});
  CHECK(rep.ok);

  // two variables, one squared
  MhSignature sig2;
  sig2.vars = {X(1, 1), X(2, 1)};
  sig2.exps = {2, 1};
  const MhSpace M2(Q, sig2);
  CHECK(M2.dim() == 3);  // xxy, xyx, yxx
  const MhGenerationReport rep2 = verify_generation_mh(A, ecan_list(Q, -2, 2), {sig2});
  CHECK(rep2.ok);
}

TEST_CASE("char-p generation at a power signature") {
  const Field F3 = Field::prime(3);
  const Algebra A{F3, 10, grading_preset("can")};
  MhSignature sig;
  sig.vars = {GVar{'x', 1, 2}};
  sig.exps = {2};  // below the characteristic
  const Subspace ids = identity_space_mh(A, sig);
  CHECK(ids.dim() == 0);  // (x@2)^2 is not an identity in char 3
  const MhGenerationReport rep = verify_generation_mh(A, ecan_list(F3, -2, 2, 3), {sig});
  CHECK(rep.ok);
}

}  // TEST_SUITE
