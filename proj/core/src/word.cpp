#include "gex/word.hpp"

#include <bit>

namespace gex {

BasisWord BasisWord::single(std::uint32_t i) {
  if (i == 0 || i > kMaxRank)
    throw error("generator index " + std::to_string(i) + " out of range 1.." +
                std::to_string(kMaxRank));
  BasisWord w;
  w.bits_[(i - 1) / 64] = 1ull << ((i - 1) % 64);
  return w;
}

BasisWord BasisWord::from_indices(const std::vector<std::uint32_t>& idx) {
  BasisWord w;
  for (std::uint32_t i : idx) {
    BasisWord s = single(i);
    if (!w.disjoint(s)) throw error("repeated generator index " + std::to_string(i));
    w = w.unite(s);
  }
  return w;
}

bool BasisWord::contains(std::uint32_t i) const {
  if (i == 0 || i > kMaxRank) return false;
  return bits_[(i - 1) / 64] >> ((i - 1) % 64) & 1;
}

std::uint32_t BasisWord::length() const {
  std::uint32_t n = 0;
  for (auto b : bits_) n += std::popcount(b);
  return n;
}

std::uint32_t BasisWord::max_index() const {
  for (int w = 3; w >= 0; --w)
    if (bits_[w]) return w * 64 + 64 - std::countl_zero(bits_[w]);
  return 0;
}

bool BasisWord::disjoint(const BasisWord& o) const {
  for (int w = 0; w < 4; ++w)
    if (bits_[w] & o.bits_[w]) return false;
  return true;
}

BasisWord BasisWord::unite(const BasisWord& o) const {
  BasisWord r;
  for (int w = 0; w < 4; ++w) r.bits_[w] = bits_[w] | o.bits_[w];
  return r;
}

std::vector<std::uint32_t> BasisWord::indices() const {
  std::vector<std::uint32_t> out;
  for (int w = 0; w < 4; ++w) {
    std::uint64_t b = bits_[w];
    while (b) {
      out.push_back(w * 64 + std::countr_zero(b) + 1);
      b &= b - 1;
    }
  }
  return out;
}

std::uint32_t BasisWord::count_below(std::uint32_t i) const {
  // set bits with 1-based index strictly less than i
  std::uint32_t pos = i - 1;  // bit position of index i
  std::uint32_t full = pos / 64, rem = pos % 64;
  std::uint32_t n = 0;
  for (std::uint32_t w = 0; w < full; ++w) n += std::popcount(bits_[w]);
  if (rem) n += std::popcount(bits_[full] & ((1ull << rem) - 1));
  return n;
}

std::optional<std::pair<int, BasisWord>> BasisWord::mul(const BasisWord& u, const BasisWord& v) {
  if (!u.disjoint(v)) return std::nullopt;
  // Merging v into u: each v-generator walks left past the u-generators above
  // it, one transposition per crossing.
  std::uint32_t un = u.length();
  std::uint32_t inversions = 0;
  for (std::uint32_t j : v.indices()) inversions += un - u.count_below(j);
  int sign = inversions % 2 ? -1 : 1;
  return std::make_pair(sign, u.unite(v));
}

bool BasisWord::operator<(const BasisWord& o) const {
  // Lexicographic on the ascending index sequences, shorter prefix first,
  // so 1 < e1 < e1e2 < e3.
  for (int w = 0; w < 4; ++w) {
    std::uint64_t d = bits_[w] ^ o.bits_[w];
    if (!d) continue;
    std::uint64_t low = d & -d;  // lowest index where the supports differ
    bool mine = bits_[w] & low;
    // Owning that index wins unless the other word is a proper prefix,
    // i.e. has no support past it.
    const std::uint64_t* rest = mine ? o.bits_ : bits_;
    std::uint64_t above = rest[w] & ~((low << 1) - 1);
    bool tail = above != 0;
    for (int w2 = w + 1; !tail && w2 < 4; ++w2) tail = rest[w2] != 0;
    return mine ? tail : !tail;
  }
  return false;
}

std::string BasisWord::str() const {
  if (empty()) return "1";
  std::string s;
  for (std::uint32_t i : indices()) s += "e" + std::to_string(i);
  return s;
}

}  // namespace gex
