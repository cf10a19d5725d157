#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gex/algebra.hpp"
#include "gex/freepoly.hpp"

namespace gex {

// How a tuple of pairwise-disjoint words draws generators from the grading's
// blocks: usage[i][j] generators of block j go into the word for variable i.
// parity[i] is the word length mod 2.
struct ShapeProfile {
  std::vector<std::vector<std::uint32_t>> usage;
  std::vector<std::uint8_t> parity;
  std::string str() const;
};

struct CheckBudget {
  std::uint64_t max_profiles = 200000;
  // per-cell cap when infinite blocks of both signs occur; enumeration is
  // complete in every other case and this is reported
  std::uint32_t mixed_sign_cap = 64;
};

// Single-variable block usages for one degree (complete unless mixed-sign
// infinite blocks exist); `complete` reports that.
struct RowSet {
  std::vector<std::vector<std::uint32_t>> rows;
  bool complete = true;
};
RowSet degree_rows(const GradingSpec& g, std::int64_t d, const CheckBudget& budget = {});

struct ProfileSet {
  std::vector<ShapeProfile> profiles;
  bool complete = true;
};
// All realizable shapes for variables of the given degrees, respecting finite
// block capacities across the whole tuple.
ProfileSet enumerate_profiles(const GradingSpec& g, const std::vector<std::int64_t>& degs,
                              const CheckBudget& budget = {});

// Signed coefficient sum of a multilinear polynomial under given variable
// parities: each monomial contributes its coefficient times -1 per inversion
// of two odd-parity variables.  This is the value's coefficient when the
// variables are replaced by disjoint words of those parities.
Scalar parity_functional(const FreePoly& f, const std::vector<GVar>& vars,
                         const std::vector<std::uint8_t>& parity);

struct Witness {
  Assignment assignment;
  Element value = Element(Field::rationals(), 1);  // replaced on construction
  std::uint32_t rank = 0;
  std::string str() const;
};

struct MultilinearReport {
  bool identity = false;
  bool complete = true;  // enumeration coverage (see CheckBudget)
  // one representative profile per parity class with the functional's value
  std::vector<std::pair<ShapeProfile, Scalar>> certificates;
  std::size_t profile_count = 0;
  std::optional<Witness> witness;
  std::string note;
};

// Decides whether a multilinear polynomial vanishes under every graded
// substitution, by the disjoint-word reduction.  Needs a list grading.
MultilinearReport is_identity_multilinear(const FreePoly& f, const Algebra& A,
                                          const CheckBudget& budget = {});

struct MhBudget {
  std::uint32_t rank = 0;          // 0: derive from the signature
  std::uint64_t max_terms = 4000000;
  std::uint32_t max_words_per_var = 20000;
};

struct MhReport {
  bool identity = false;
  std::uint32_t rank_used = 0;
  std::string note;  // how the rank was derived; the verdict is "at this rank"
  std::optional<Witness> witness;
};

// Substitutes a generic element (full word basis at a derived rank, one
// commuting indeterminate per word) for each variable and checks that every
// coefficient vanishes.  "identity" means: no graded substitution from the
// rank-`rank_used` algebra distinguishes f from zero.  Refutations come with
// a concrete witness found by specializing indeterminates to 0/1.
MhReport is_identity_multihomogeneous(const FreePoly& f, const Algebra& A,
                                      const MhBudget& budget = {});

struct SearchBudget {
  std::uint32_t rank = 12;
  std::uint32_t max_len = 3;
  std::uint64_t max_tuples = 2000000;
};
// Brute-force search over single-word substitutions; works for any grading
// including the index rule.  nullopt is inconclusive, not a verdict.
std::optional<Witness> witness_search(const FreePoly& f, const Algebra& A,
                                      const SearchBudget& budget = {});

// Scripted witnesses with checked closed-form values.

// [z1,z2]...[z_{2n-1},z_{2n}] at z_i = e_{base+i} (all of degree 0) evaluates
// to 2^n e_{base+1}...e_{base+2n}.
Witness witness_t_chain(const Algebra& A, std::uint32_t base, std::uint32_t n);

// prod_t (x_t)^{r_t} with x_t of degree i_t, evaluated at sums of r_t disjoint
// words built from degree-1 generators (plus a fresh even-degree-completing
// star per odd-length word), gives (prod_t r_t!) times one word.  Needs
// sum i_t r_t <= k degree-1 generators and r_t below the characteristic.
struct PowerSpec {
  std::int64_t degree;
  std::uint32_t exponent;
};
Witness witness_power_products(const Algebra& A, std::uint32_t k,
                               const std::vector<PowerSpec>& specs);

// Each variable of the (single-monomial) input gets a block of consecutive
// fresh generators matching its degree; the value is plus/minus one word.
Witness witness_sorted_blocks(const Algebra& A, const FreePoly& monomial);

}  // namespace gex
