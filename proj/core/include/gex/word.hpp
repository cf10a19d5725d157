#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gex/errors.hpp"

namespace gex {

// A basis word of the exterior algebra: an ordered product of distinct
// generators e_{i1}...e_{im}, i1 < ... < im, stored as the set {i1,...,im}.
// Indices are 1-based.  Bit i-1 of the mask holds index i; ranks up to 64 live
// entirely in limb 0, larger ranks (up to 256) spill into further limbs.
class BasisWord {
 public:
  static constexpr std::uint32_t kMaxRank = 256;

  BasisWord() = default;  // the empty word, i.e. the unit
  static BasisWord single(std::uint32_t i);
  static BasisWord from_indices(const std::vector<std::uint32_t>& idx);

  bool contains(std::uint32_t i) const;
  std::uint32_t length() const;                 // number of generators
  bool empty() const { return length() == 0; }
  std::uint32_t max_index() const;              // 0 for the unit
  bool disjoint(const BasisWord& o) const;
  BasisWord unite(const BasisWord& o) const;    // assumes disjoint
  std::vector<std::uint32_t> indices() const;   // ascending

  // Concatenation product u * v.  nullopt when a generator repeats (value 0);
  // otherwise the sign (-1)^{inversions} and the merged word.
  static std::optional<std::pair<int, BasisWord>> mul(const BasisWord& u, const BasisWord& v);

  // Canonical term order: lexicographic on the ascending index sequences,
  // a proper prefix sorting first (1 < e1 < e1e2 < e3).
  bool operator<(const BasisWord& o) const;
  bool operator==(const BasisWord& o) const { return bits_ == o.bits_; }

  std::string str() const;  // "e1e2e10"; unit prints "1"

 private:
  std::uint32_t count_below(std::uint32_t i) const;  // set bits with index < i
  std::array<std::uint64_t, 4> bits_{};
};

}  // namespace gex
