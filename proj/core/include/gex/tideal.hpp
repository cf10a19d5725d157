#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gex/checker.hpp"
#include "gex/linalg.hpp"

namespace gex {

// Coordinates on the multilinear polynomials over a fixed variable set: one
// coordinate per arrangement, arrangements in monomial order.
class SignatureSpace {
 public:
  SignatureSpace(Field f, std::vector<GVar> vars);

  Field field() const { return field_; }
  const std::vector<GVar>& vars() const { return vars_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t index_of(const Monomial& m) const;

  Vec to_vec(const FreePoly& f) const;
  FreePoly to_poly(const Vec& v) const;

 private:
  Field field_;
  std::vector<GVar> vars_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// Multilinear graded identities with this signature: kernel of the parity
// functionals attached to the realizable substitution shapes.
Subspace identity_space(const Algebra& A, const SignatureSpace& S, const CheckBudget& b = {});

struct SpanOptions {
  std::uint32_t max_monomial_len = 3;  // signature variables packed into one slot
  std::uint64_t max_rows = 2000000;
  // Stop growing once this dimension is reached (the generation checks pass
  // the identity-space dimension here: the span can then only equal it, and
  // containment is still verified separately).  SIZE_MAX = no cap.
  std::size_t target_dim = SIZE_MAX;
};

// Replaces every variable of multiplicity r by r fresh copies and sums over
// all assignments of copies to occurrences.  The result is multilinear and
// lies in the T-ideal of f; conversely every multilinear consequence of f
// with distinct substituted monomials factors through it.
FreePoly full_linearization(const FreePoly& f);

// Span of the multilinear consequences u0 * g(m_1,...,m_s) * u1 of the
// generators, where the m_j are monomials in the signature variables (degrees
// matching the generator's variables; a degree-0 slot may also take the unit)
// and u0, u1 monomials in the leftovers.  Non-multilinear (multihomogeneous)
// generators enter via full_linearization.
Subspace consequence_span(const Algebra& A, const std::vector<FreePoly>& gens,
                          const SignatureSpace& S, const SpanOptions& opt = {});

// Span of the multilinear polynomials whose every degree-0 variable sits
// inside a commutator (products of a bare word in the other variables and
// left-normed brackets covering the rest).
Subspace zero_proper_subspace(const SignatureSpace& S);

struct GenerationRow {
  std::vector<GVar> vars;
  std::size_t dim_space = 0;
  std::size_t dim_identities = 0;
  std::size_t dim_span = 0;
  bool contained = false;  // span inside the identities
  bool generated = false;  // and dimensions agree
  std::optional<FreePoly> gap;  // identity outside the span, when not generated
};

struct GenerationReport {
  std::vector<GenerationRow> rows;
  bool ok = true;
  std::string text() const;
};

GenerationReport verify_generation(const Algebra& A, const std::vector<FreePoly>& gens,
                                   const std::vector<std::vector<GVar>>& signatures,
                                   const SpanOptions& opt = {}, const CheckBudget& b = {});

// Same comparison with both sides cut down to the zero-proper part.
GenerationReport verify_generation_proper(const Algebra& A, const std::vector<FreePoly>& gens,
                                          const std::vector<std::vector<GVar>>& signatures,
                                          const SpanOptions& opt = {}, const CheckBudget& b = {});

// The graded identities at a target signature against the plain (degree-0
// everywhere, one infinite block) identities relabeled onto it.  Lists every
// nondecreasing degree tuple in [0, n]^n, optionally capped by total weight.
struct RelabelRow {
  std::vector<GVar> target;
  std::size_t dim_plain = 0;
  std::size_t dim_graded = 0;
  bool equal = false;
};
std::vector<RelabelRow> relabel_check(const Algebra& A, std::uint32_t n,
                                      std::int64_t max_weight = -1, const CheckBudget& b = {});

// Multilinear identities of the whole (trivially graded) algebra in n
// variables have codimension 2^{n-1}.
std::size_t ungraded_codim(Field f, std::uint32_t n);
// Lower bound on the codimension from random word substitutions; meets
// ungraded_codim with overwhelming probability at sufficient rank.
std::size_t sampled_codim(Field f, std::uint32_t n, std::uint32_t rank, std::uint32_t samples,
                          std::uint64_t seed);

// Multihomogeneous route (used for the characteristic-p statements).

struct MhSignature {
  std::vector<GVar> vars;           // ascending, distinct
  std::vector<std::uint32_t> exps;  // multiplicities, same order
};

// Coordinates on the multihomogeneous component: one per distinct arrangement
// of the variable multiset.
class MhSpace {
 public:
  MhSpace(Field f, MhSignature sig);

  Field field() const { return field_; }
  const MhSignature& signature() const { return sig_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t index_of(const Monomial& m) const;

  Vec to_vec(const FreePoly& f) const;
  FreePoly to_poly(const Vec& v) const;

 private:
  Field field_;
  MhSignature sig_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// Identities and consequence spans in the multihomogeneous component, both
// computed at the polarized (fully multilinear) signature and pushed down by
// identifying the copies again.  Faithful when every exponent is below the
// characteristic (always in characteristic zero).
Subspace identity_space_mh(const Algebra& A, const MhSignature& sig, const CheckBudget& b = {});
Subspace consequence_span_mh(const Algebra& A, const std::vector<FreePoly>& gens,
                             const MhSignature& sig, const SpanOptions& opt = {});

struct MhGenerationRow {
  MhSignature sig;
  std::size_t dim_space = 0;
  std::size_t dim_identities = 0;
  std::size_t dim_span = 0;
  bool contained = false;
  bool generated = false;
  std::optional<FreePoly> gap;
};

struct MhGenerationReport {
  std::vector<MhGenerationRow> rows;
  bool ok = true;
  std::string text() const;
};

MhGenerationReport verify_generation_mh(const Algebra& A, const std::vector<FreePoly>& gens,
                                        const std::vector<MhSignature>& signatures,
                                        const SpanOptions& opt = {}, const CheckBudget& b = {});

}  // namespace gex
