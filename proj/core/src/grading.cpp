#include "gex/grading.hpp"

#include <algorithm>
#include <map>

namespace gex {
namespace {

bool is_prime64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GradingSpec GradingSpec::from_blocks(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw error("grading needs at least one block");
  bool any_infinite = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0 && blocks[i].degree <= blocks[i - 1].degree)
      throw error("block degrees must be strictly increasing");
    if (!blocks[i].infinite() && *blocks[i].capacity == 0)
      throw error("finite block capacity must be positive");
    any_infinite |= blocks[i].infinite();
  }
  if (!any_infinite) throw error("at least one block must be infinite");
  GradingSpec g;
  for (const Block& b : blocks) {
    if (b.infinite())
      g.cycle_.push_back(b.degree);
    else
      g.prefix_.insert(g.prefix_.end(), *b.capacity, b.degree);
  }
  g.rebuild_blocks();
  return g;
}

GradingSpec GradingSpec::prefix_rest(std::int64_t d1, std::uint32_t count, std::int64_t d2) {
  if (count == 0) throw error("prefix length must be positive");
  if (d1 == d2) throw error("prefix and rest degrees must differ");
  GradingSpec g;
  g.prefix_.assign(count, d1);
  g.cycle_ = {d2};
  g.rebuild_blocks();
  return g;
}

GradingSpec GradingSpec::uniform(std::int64_t r) {
  GradingSpec g;
  g.cycle_ = {r};
  g.rebuild_blocks();
  return g;
}

GradingSpec GradingSpec::alternating() {
  GradingSpec g;
  g.cycle_ = {1, 0};  // e_1 odd -> 1, e_2 even -> 0
  g.rebuild_blocks();
  return g;
}

GradingSpec GradingSpec::index_graded() {
  GradingSpec g;
  g.index_rule_ = true;
  return g;
}

GradingSpec GradingSpec::quotient(std::uint32_t m) const {
  if (m == 0) throw error("quotient modulus must be >= 1");
  if (index_rule_ && modulus_ == 0) {
    // ||e_i|| = i mod m is the cycle (1, 2, ..., m-1, 0).
    GradingSpec g;
    g.modulus_ = m;
    for (std::uint32_t i = 1; i <= m; ++i) g.cycle_.push_back(i % m);
    g.rebuild_blocks();
    return g;
  }
  GradingSpec g = *this;
  g.modulus_ = m;
  for (auto& d : g.prefix_) d = ((d % m) + m) % m;
  for (auto& d : g.cycle_) d = ((d % m) + m) % m;
  g.rebuild_blocks();
  return g;
}

std::int64_t GradingSpec::reduce(std::int64_t d) const {
  if (modulus_ == 0) return d;
  std::int64_t r = d % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::int64_t GradingSpec::generator_degree(std::uint32_t i) const {
  if (i == 0) throw error("generator indices are 1-based");
  if (index_rule_) return i;
  if (i <= prefix_.size()) return prefix_[i - 1];
  return cycle_[(i - prefix_.size() - 1) % cycle_.size()];
}

std::int64_t GradingSpec::word_degree(const BasisWord& w) const {
  std::int64_t d = 0;
  for (std::uint32_t i : w.indices()) d += generator_degree(i);
  return reduce(d);
}

void GradingSpec::rebuild_blocks() {
  blocks_.clear();
  std::map<std::int64_t, Block> table;
  for (std::int64_t d : prefix_) {
    auto [it, fresh] = table.emplace(d, Block{d, 0});
    if (it->second.capacity) ++*it->second.capacity;
  }
  for (std::int64_t d : cycle_) {
    auto [it, fresh] = table.emplace(d, Block{d, std::nullopt});
    it->second.capacity = std::nullopt;
  }
  for (auto& [d, b] : table) blocks_.push_back(b);
}

const std::vector<Block>& GradingSpec::blocks() const {
  if (index_rule_) throw error("the index grading has no finite block table");
  return blocks_;
}

std::vector<std::uint32_t> GradingSpec::block_generators(std::size_t j, std::uint32_t count,
                                                         const BasisWord& used) const {
  const std::vector<Block>& bl = blocks();
  if (j >= bl.size()) throw error("block index out of range");
  std::vector<std::uint32_t> out;
  std::int64_t want = bl[j].degree;
  for (std::uint32_t i = 1; out.size() < count; ++i) {
    if (i > BasisWord::kMaxRank)
      throw error("ran out of generators in block of degree " + std::to_string(want));
    if (generator_degree(i) == want && !used.contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<BasisWord> GradingSpec::component_basis(std::int64_t n, std::uint32_t max_len,
                                                    std::uint32_t rank) const {
  std::int64_t target = reduce(n);
  std::vector<BasisWord> out;
  std::vector<std::uint32_t> picked;
  // DFS over ascending generator indices, at most max_len of them.
  auto rec = [&](auto&& self, std::uint32_t next, std::int64_t deg) -> void {
    if (reduce(deg) == target) out.push_back(BasisWord::from_indices(picked));
    if (picked.size() == max_len) return;
    for (std::uint32_t i = next; i <= rank; ++i) {
      picked.push_back(i);
      self(self, i + 1, deg + generator_degree(i));
      picked.pop_back();
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::int64_t> GradingSpec::support(std::int64_t lo, std::int64_t hi, std::uint32_t rank,
                                            std::uint32_t max_len) const {
  std::set<std::int64_t> found;
  std::vector<std::uint32_t> picked;
  auto rec = [&](auto&& self, std::uint32_t next, std::int64_t deg) -> void {
    std::int64_t d = reduce(deg);
    if (d >= lo && d <= hi) found.insert(d);
    if (picked.size() == max_len) return;
    for (std::uint32_t i = next; i <= rank; ++i) {
      picked.push_back(i);
      self(self, i + 1, deg + generator_degree(i));
      picked.pop_back();
    }
  };
  rec(rec, 1, 0);
  return found;
}

std::string GradingSpec::describe(std::uint32_t first) const {
  std::string s;
  if (modulus_) s += "Z" + std::to_string(modulus_) + "-grading; ";
  if (index_rule_) {
    s += "||e_i|| = i";
  } else {
    s += "blocks:";
    for (const Block& b : blocks_) {
      s += " (" + std::to_string(b.degree) + ",";
      s += b.infinite() ? "inf" : std::to_string(*b.capacity);
      s += ")";
    }
  }
  s += "; degrees:";
  for (std::uint32_t i = 1; i <= first; ++i)
    s += " ||e" + std::to_string(i) + "||=" + std::to_string(generator_degree(i));
  return s;
}

GradingSpec grading_preset(const std::string& name, const std::vector<std::int64_t>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw error("preset " + name + " expects " + std::to_string(n) + " parameter(s)");
  };
  auto positive = [&](std::int64_t v, const char* what) {
    if (v <= 0) throw error(std::string(what) + " must be positive in preset " + name);
    return v;
  };
  if (name == "can") {
    need(0);
    return GradingSpec::uniform(1);
  }
  if (name == "k") {
    need(1);
    return GradingSpec::prefix_rest(0, static_cast<std::uint32_t>(positive(params[0], "k")), 1);
  }
  if (name == "k_star") {
    need(1);
    return GradingSpec::prefix_rest(1, static_cast<std::uint32_t>(positive(params[0], "k")), 0);
  }
  if (name == "infinity") {
    need(0);
    return GradingSpec::alternating();
  }
  if (name == "r_infinity") {
    need(1);
    return GradingSpec::uniform(positive(params[0], "r"));
  }
  if (name == "pq_1_infinity" || name == "pq_k_infinity") {
    bool with_k = name == "pq_k_infinity";
    need(with_k ? 3 : 2);
    std::int64_t p = params[0], q = params[1];
    std::int64_t k = with_k ? params[2] : 1;
    if (!is_prime64(p) || !is_prime64(q) || p >= q)
      throw error("preset " + name + " needs primes p < q");
    if (k < 1 || k >= p) throw error("preset " + name + " needs 1 <= k < p");
    return GradingSpec::prefix_rest(p, static_cast<std::uint32_t>(k), q);
  }
  if (name == "index") {
    need(0);
    return GradingSpec::index_graded();
  }
  throw error("unknown grading preset: " + name);
}

}  // namespace gex
