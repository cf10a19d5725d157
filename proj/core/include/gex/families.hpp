#pragma once

#include <optional>
#include <vector>

#include "gex/freepoly.hpp"

namespace gex {

// Named polynomial families.  Conventions: z-variables carry caller-chosen
// (usually positive) degrees, y-variables are degree 0, u-variables carry even
// degrees, x-variables are free.  Indices run from 1 in argument order.

// Sum over all permutations with sign.
FreePoly standard_poly(Field f, const std::vector<GVar>& vars);

// [z1,z2][z3,z4]...[z_{2n-1},z_{2n}]; zdegs supplies the 2n degrees.
FreePoly t_chain(Field f, std::uint32_t n, const std::vector<std::int64_t>& zdegs);

// Bare product of the complement times consecutive brackets over T (even |T|,
// ascending 1-based positions into zdegs):
//   z_{i1}...z_{ir} [z_{j1},z_{j2}]...[z_{j_{t-1}},z_{j_t}]
FreePoly f_subset(Field f, const std::vector<std::int64_t>& zdegs,
                  const std::vector<std::uint32_t>& T);

// Same but with odd |T| and a trailing bracket into an extra variable:
//   z_{i1}...z_{ir} [z_{j1},z_{j2}]...[z_{j_t}, tail]
FreePoly f_subset_tail(Field f, const std::vector<std::int64_t>& zdegs,
                       const std::vector<std::uint32_t>& T, const GVar& tail);

// g_1(z) = z and g_m = sum over even subsets T of (-2)^{-|T|/2} f_subset(T);
// 2^{m-1} summands.
FreePoly g_poly(Field f, const std::vector<std::int64_t>& zdegs);

// One monomial x1...xn with counts[i] variables of degree i+1, ascending.
FreePoly capacity_monomial(Field f, const std::vector<std::uint32_t>& counts);

// [u1,u2][u3,u4]...[u_k,u_{k+1}]; udegs supplies the k+1 degrees, all even
// and nonnegative (degree 0 plays the role of the classical y variables),
// k odd.
FreePoly even_chain(Field f, const std::vector<std::int64_t>& udegs);
// [u1,u2]...[u_{k-1},u_k][u_{k+1}, x]; udegs supplies the k+1 even degrees,
// k even, x of arbitrary degree xdeg.
FreePoly even_chain_bracket(Field f, const std::vector<std::int64_t>& udegs, std::int64_t xdeg);

// g(z1..zm) [u1,u2]...[u_{l-1},u_l], |udegs| = l even (possibly 0).
FreePoly g_times_brackets(Field f, const std::vector<std::int64_t>& zdegs,
                          const std::vector<std::int64_t>& udegs);
// [g(z1..zm), u1][u2,u3]...[u_{l-1},u_l], |udegs| = l odd.
FreePoly g_bracket_first(Field f, const std::vector<std::int64_t>& zdegs,
                         const std::vector<std::int64_t>& udegs);
// g(z1..z_{m-1})[z_m, u1][u2,u3]...[u_{l-1},u_l], |udegs| = l odd.
FreePoly g_times_extra_bracket(Field f, const std::vector<std::int64_t>& zdegs,
                               const std::vector<std::int64_t>& udegs);

// Graded identity lists over a degree window, one list per grading shape.
// charp = 0 means characteristic zero (no power identities appended).

// canonical grading: negative variables, brackets with an even entry,
// anticommutators of two odds; char p adds x^p at even degrees >= 2.
std::vector<FreePoly> ecan_list(Field f, std::int64_t dmin, std::int64_t dmax,
                                std::uint32_t charp = 0);
// alternating grading: negative variables and triple commutators; char p adds
// x^p at degrees >= 1.
std::vector<FreePoly> einf_list(Field f, std::int64_t dmin, std::int64_t dmax,
                                std::uint32_t charp = 0);
// first-k-degree-1 grading: variables outside 0..k and triple commutators;
// char p adds (x@t)^p whenever p*t <= k.
std::vector<FreePoly> ekstar_list(Field f, std::uint32_t k, std::int64_t dmin,
                                  std::int64_t dmax, std::uint32_t charp = 0);
// first-k-degree-0 grading: negative variables, triple commutators, the
// zero-chain of matching parity, and the three g-based shapes for l <= k.
std::vector<FreePoly> ek_list(Field f, std::uint32_t k, std::int64_t dmax);
// uniform degree-r grading.
std::vector<FreePoly> rinf_list(Field f, std::int64_t r, std::int64_t dmax,
                                std::uint32_t charp = 0);
// two-primes gradings; k = 1 and general k < p < q.
std::vector<FreePoly> pq1_list(Field f, std::int64_t p, std::int64_t q, std::int64_t dmax);
std::vector<FreePoly> pqk_list(Field f, std::int64_t p, std::int64_t q, std::uint32_t k,
                               std::int64_t dmax, std::uint32_t nmax = 4);

// Writes d = p*x + q*y with 0 <= x <= k, y >= 0 (unique when k < p < q);
// nullopt when d is not of that shape.  The component of degree d is central
// exactly when x + y is even.
std::optional<std::pair<std::int64_t, std::int64_t>> pq_split(std::int64_t d, std::int64_t p,
                                                              std::int64_t q, std::int64_t k);

}  // namespace gex
