#pragma once

// Shared test helpers: deterministic randomness, random algebra values and
// polynomials, and the independent sign oracle for word products.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gex/algebra.hpp"
#include "gex/element.hpp"
#include "gex/freepoly.hpp"

namespace gextest {

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline gex::Scalar rand_scalar(gex::Field f, Rng& rng, bool nonzero = false) {
  if (f.is_rational()) {
    std::int64_t n = rand_int(rng, -6, 6);
    if (nonzero && n == 0) n = 1;
    return gex::Scalar(f, n);
  }
  return gex::Scalar(f, rand_int(rng, nonzero ? 1 : 0, f.characteristic() - 1));
}

// Random homogeneous element of the given degree: up to max_words basis words
// with random coefficients.  May come out zero; empty component gives zero.
inline gex::Element rand_homogeneous(const gex::Algebra& A, std::int64_t degree, Rng& rng,
                                     std::uint32_t max_words = 2) {
  const auto basis = A.grading.component_basis(degree, A.rank, A.rank);
  gex::Element v(A.field, A.rank);
  if (basis.empty()) return v;
  for (std::uint32_t t = 0; t < max_words; ++t) {
    const auto& w = basis[std::size_t(rand_int(rng, 0, std::int64_t(basis.size()) - 1))];
    v.add_term(w, rand_scalar(A.field, rng));
  }
  return v;
}

inline gex::Assignment rand_assignment(const gex::Algebra& A, const std::vector<gex::GVar>& vars,
                                       Rng& rng, std::uint32_t max_words = 2) {
  gex::Assignment sigma;
  for (const auto& v : vars) sigma.emplace_back(v, rand_homogeneous(A, v.degree, rng, max_words));
  return sigma;
}

// Random multilinear polynomial: a few arrangements of the variables with
// random nonzero coefficients (never the zero polynomial).
inline gex::FreePoly rand_multilinear(gex::Field f, const std::vector<gex::GVar>& vars, Rng& rng,
                                      std::uint32_t terms = 3) {
  gex::Monomial m(vars.begin(), vars.end());
  gex::FreePoly out(f);
  for (std::uint32_t t = 0; t < terms; ++t) {
    std::shuffle(m.begin(), m.end(), rng);
    out.add_term(m, rand_scalar(f, rng, true));
  }
  if (out.is_zero()) out.add_term(m, gex::Scalar::one(f));
  return out;
}

// Sign of the merge by bubble-sorting the concatenated index sequences;
// nullopt when an index repeats (the product is zero).
inline std::optional<int> bubble_sign(std::vector<std::uint32_t> s,
                                      const std::vector<std::uint32_t>& tail) {
  s.insert(s.end(), tail.begin(), tail.end());
  int sign = 1;
  for (std::size_t pass = 0; pass + 1 < s.size(); ++pass)
    for (std::size_t j = 0; j + 1 < s.size() - pass; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return std::nullopt;
  return sign;
}

}  // namespace gextest
