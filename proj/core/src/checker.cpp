#include "gex/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "gex/errors.hpp"
#include "gex/families.hpp"

namespace gex {

std::string ShapeProfile::str() const {
  std::string out;
  for (std::size_t i = 0; i < usage.size(); ++i) {
    if (i) out += " ";
    out += "(";
    for (std::size_t j = 0; j < usage[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(usage[i][j]);
    }
    out += ")";
    out += parity[i] ? "-" : "+";
  }
  return out;
}

std::string Witness::str() const {
  std::string out;
  for (const auto& [v, e] : assignment) out += v.str() + " -> " + e.str() + "\n";
  out += "value: " + value.str();
  return out;
}

RowSet degree_rows(const GradingSpec& g, std::int64_t d, const CheckBudget& budget) {
  const auto& bs = g.blocks();
  const std::uint32_t m = g.modulus();
  const std::int64_t target = g.reduce(d);
  bool has_pos = false, has_neg = false;
  std::int64_t finite_swing = 0;
  for (const auto& b : bs) {
    if (!b.capacity) {
      if (b.degree > 0) has_pos = true;
      if (b.degree < 0) has_neg = true;
    } else {
      finite_swing += std::int64_t(*b.capacity) * std::llabs(b.degree);
    }
  }
  RowSet out;
  const bool mixed = (m == 0) && has_pos && has_neg;
  if (mixed) out.complete = false;
  std::vector<std::uint32_t> cur(bs.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t sum) {
    if (out.rows.size() > budget.max_profiles)
      throw budget_error("block usage enumeration exceeded the profile budget");
    if (j == bs.size()) {
      if (g.reduce(sum) == target) out.rows.push_back(cur);
      return;
    }
    const Block& b = bs[j];
    std::uint64_t cap;
    if (b.capacity)
      cap = *b.capacity;
    else if (m > 0)
      cap = 2ull * m - 1;  // residues repeat beyond that
    else if (b.degree == 0)
      cap = 1;  // only parity matters and 0-degree usage beyond one is redundant
    else if (mixed)
      cap = budget.mixed_sign_cap;
    else
      cap = std::uint64_t((std::llabs(target) + finite_swing) / std::llabs(b.degree)) + 1;
    for (std::uint64_t a = 0; a <= cap; ++a) {
      cur[j] = std::uint32_t(a);
      rec(j + 1, sum + std::int64_t(a) * b.degree);
    }
    cur[j] = 0;
  };
  rec(0, 0);
  return out;
}

ProfileSet enumerate_profiles(const GradingSpec& g, const std::vector<std::int64_t>& degs,
                              const CheckBudget& budget) {
  const auto& bs = g.blocks();
  ProfileSet out;
  std::vector<RowSet> rowsets;
  rowsets.reserve(degs.size());
  for (auto d : degs) {
    rowsets.push_back(degree_rows(g, d, budget));
    out.complete = out.complete && rowsets.back().complete;
  }
  std::vector<std::uint32_t> used(bs.size(), 0);
  std::vector<std::size_t> pick(degs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.profiles.size() >= budget.max_profiles)
      throw budget_error("profile enumeration exceeded the budget");
    if (i == degs.size()) {
      ShapeProfile p;
      p.usage.reserve(degs.size());
      p.parity.reserve(degs.size());
      for (std::size_t t = 0; t < degs.size(); ++t) {
        const auto& row = rowsets[t].rows[pick[t]];
        p.usage.push_back(row);
        std::uint64_t len = 0;
        for (auto a : row) len += a;
        p.parity.push_back(std::uint8_t(len % 2));
      }
      out.profiles.push_back(std::move(p));
      return;
    }
    for (std::size_t r = 0; r < rowsets[i].rows.size(); ++r) {
      const auto& row = rowsets[i].rows[r];
      bool ok = true;
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (bs[j].capacity && used[j] + row[j] > *bs[j].capacity) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < bs.size(); ++j) used[j] += row[j];
      pick[i] = r;
      rec(i + 1);
      for (std::size_t j = 0; j < bs.size(); ++j) used[j] -= row[j];
    }
  };
  rec(0);
  return out;
}

Scalar parity_functional(const FreePoly& f, const std::vector<GVar>& vars,
                         const std::vector<std::uint8_t>& parity) {
  std::map<GVar, std::size_t> idx;
  for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
  Scalar total(f.field(), 0);
  for (const auto& [m, c] : f.terms()) {
    int sign = 1;
    for (std::size_t s = 0; s < m.size(); ++s) {
      const std::size_t a = idx.at(m[s]);
      if (!parity[a]) continue;
      for (std::size_t t = s + 1; t < m.size(); ++t) {
        const std::size_t b = idx.at(m[t]);
        if (parity[b] && a > b) sign = -sign;
      }
    }
    total = total + (sign > 0 ? c : -c);
  }
  return total;
}

namespace {

Witness realize_profile(const FreePoly& f, const Algebra& A, const std::vector<GVar>& vars,
                        const ShapeProfile& prof) {
  BasisWord used;
  std::vector<BasisWord> words(vars.size());
  std::uint32_t top = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < prof.usage[i].size(); ++j) {
      if (prof.usage[i][j] == 0) continue;
      for (auto g : A.grading.block_generators(j, prof.usage[i][j], used)) {
        words[i] = words[i].unite(BasisWord::single(g));
        used = used.unite(BasisWord::single(g));
        top = std::max(top, g);
      }
    }
  }
  Witness w;
  w.rank = std::max({A.rank, top, 1u});
  for (std::size_t i = 0; i < vars.size(); ++i)
    w.assignment.emplace_back(vars[i], Element::term(A.field, w.rank, words[i], Scalar(A.field, 1)));
  Algebra big{A.field, w.rank, A.grading};
  w.value = substitute(f, w.assignment, big);
  if (w.value.is_zero()) throw error("internal: realized profile evaluated to zero");
  return w;
}

}  // namespace

MultilinearReport is_identity_multilinear(const FreePoly& f, const Algebra& A,
                                          const CheckBudget& budget) {
  if (!f.is_multilinear()) throw error("the disjoint-word check needs a multilinear polynomial");
  if (!A.grading.is_list()) throw error("the disjoint-word check needs a list grading");
  MultilinearReport rep;
  if (f.is_zero()) {
    rep.identity = true;
    rep.note = "zero polynomial";
    return rep;
  }
  const std::vector<GVar> vars = f.variables();
  std::vector<std::int64_t> degs;
  degs.reserve(vars.size());
  for (const auto& v : vars) degs.push_back(v.degree);
  ProfileSet ps = enumerate_profiles(A.grading, degs, budget);
  rep.complete = ps.complete;
  rep.profile_count = ps.profiles.size();
  if (ps.profiles.empty()) {
    rep.identity = true;
    rep.note = "no realizable substitution shape (empty components or exhausted capacity)";
    return rep;
  }
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& prof : ps.profiles) {
    if (!seen.insert(prof.parity).second) continue;
    Scalar s = parity_functional(f, vars, prof.parity);
    rep.certificates.emplace_back(prof, s);
    if (!s.is_zero()) {
      rep.identity = false;
      rep.witness = realize_profile(f, A, vars, prof);
      rep.note = "refuted on parity class " + prof.str();
      return rep;
    }
  }
  rep.identity = true;
  rep.note = rep.complete ? "all parity classes vanish"
                          : "all enumerated parity classes vanish (mixed-sign blocks: capped)";
  return rep;
}

namespace {

using LKey = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (var, word) picks, sorted

bool all_zero(const std::map<LKey, Element>& m) {
  for (const auto& [k, e] : m)
    if (!e.is_zero()) return false;
  return true;
}

std::map<LKey, Element> specialize(const std::map<LKey, Element>& P,
                                   const std::pair<std::uint32_t, std::uint32_t>& lam, int val) {
  std::map<LKey, Element> out;
  for (const auto& [k, e] : P) {
    if (e.is_zero()) continue;
    const auto it = std::find(k.begin(), k.end(), lam);
    if (it == k.end()) {
      auto [pos, fresh] = out.emplace(k, e);
      if (!fresh) pos->second = pos->second + e;
    } else if (val != 0) {
      LKey k2;
      k2.reserve(k.size() - 1);
      k2.insert(k2.end(), k.begin(), it);
      k2.insert(k2.end(), it + 1, k.end());
      auto [pos, fresh] = out.emplace(std::move(k2), e);
      if (!fresh) pos->second = pos->second + e;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// generators of block j available at rank n (list gradings)
std::vector<std::uint32_t> block_counts(const GradingSpec& g, std::uint32_t n) {
  const auto& bs = g.blocks();
  std::vector<std::uint32_t> cnt(bs.size(), 0);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::int64_t d = g.generator_degree(i);
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (bs[j].degree == d) {
        ++cnt[j];
        break;
      }
  }
  return cnt;
}

}  // namespace

MhReport is_identity_multihomogeneous(const FreePoly& f, const Algebra& A,
                                      const MhBudget& budget) {
  if (!f.is_multihomogeneous())
    throw error("the generic-element check needs a multihomogeneous polynomial");
  if (!A.grading.is_list()) throw error("the generic-element check needs a list grading");
  MhReport rep;
  if (f.is_zero()) {
    rep.identity = true;
    rep.rank_used = std::max(A.rank, 1u);
    rep.note = "zero polynomial";
    return rep;
  }
  const std::vector<GVar> vars = f.variables();
  std::vector<std::uint32_t> exps;
  for (const auto& v : vars) exps.push_back(f.multiplicity(v));
  const auto& bs = A.grading.blocks();

  // per-variable achievable lengths: keep rows within one step of the minimum
  std::vector<std::uint32_t> demand(bs.size(), 0);
  CheckBudget cb;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    RowSet rs = degree_rows(A.grading, vars[i].degree, cb);
    if (rs.rows.empty()) {
      rep.identity = true;
      rep.rank_used = std::max(A.rank, 1u);
      rep.note = "component of " + vars[i].str() + " is empty: every substitution vanishes";
      return rep;
    }
    std::uint64_t minlen = ~0ull;
    for (const auto& r : rs.rows) {
      std::uint64_t len = 0;
      for (auto a : r) len += a;
      minlen = std::min(minlen, len);
    }
    std::vector<std::uint32_t> need(bs.size(), 0);
    for (const auto& r : rs.rows) {
      std::uint64_t len = 0;
      for (auto a : r) len += a;
      if (len > minlen + 1) continue;
      for (std::size_t j = 0; j < bs.size(); ++j) need[j] = std::max(need[j], r[j]);
    }
    for (std::size_t j = 0; j < bs.size(); ++j) demand[j] += exps[i] * need[j];
  }
  std::uint32_t N = budget.rank;
  if (N == 0) {
    // cover every finite block, then grow until each infinite block meets demand
    std::uint32_t base = 0;
    for (const auto& b : bs)
      if (b.capacity) base += *b.capacity;
    N = std::max(base, 1u);
    for (;; ++N) {
      if (N > BasisWord::kMaxRank) throw budget_error("derived rank exceeds the supported maximum");
      auto cnt = block_counts(A.grading, N);
      bool ok = true;
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (!bs[j].capacity && cnt[j] < demand[j]) ok = false;
      if (ok) break;
    }
  }
  rep.rank_used = N;
  rep.note = budget.rank != 0
                 ? "verdict at rank " + std::to_string(N) + " (caller-specified)"
                 : "verdict at rank " + std::to_string(N) +
                       " (covers finite blocks and one extra word step per variable)";

  std::vector<std::vector<BasisWord>> words(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    words[i] = A.grading.component_basis(vars[i].degree, N, N);
    if (words[i].size() > budget.max_words_per_var)
      throw budget_error("component basis exceeds the word budget");
    if (words[i].empty()) throw error("internal: empty component after rank derivation");
  }
  std::map<GVar, std::size_t> vidx;
  for (std::size_t i = 0; i < vars.size(); ++i) vidx[vars[i]] = i;

  std::map<LKey, Element> acc;
  std::uint64_t work = 0;
  for (const auto& [mono, c] : f.terms()) {
    LKey picks;
    picks.reserve(mono.size());
    std::function<void(std::size_t, int, const BasisWord&)> rec = [&](std::size_t t, int sign,
                                                                      const BasisWord& w) {
      if (++work > budget.max_terms)
        throw budget_error("generic substitution exceeded the term budget");
      if (t == mono.size()) {
        LKey key = picks;
        std::sort(key.begin(), key.end());
        auto [pos, fresh] = acc.emplace(std::move(key), Element(A.field, N));
        pos->second.add_term(w, sign > 0 ? c : -c);
        return;
      }
      const std::size_t vi = vidx.at(mono[t]);
      for (std::uint32_t wi = 0; wi < words[vi].size(); ++wi) {
        auto prod = BasisWord::mul(w, words[vi][wi]);
        if (!prod) continue;
        picks.emplace_back(std::uint32_t(vi), wi);
        rec(t + 1, prod->first % 2 ? -sign : sign, prod->second);
        picks.pop_back();
      }
    };
    rec(0, 1, BasisWord());
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);

  if (acc.empty()) {
    rep.identity = true;
    return rep;
  }
  // refute: specialize indeterminates to 0/1, keeping the sum nonzero
  std::set<std::pair<std::uint32_t, std::uint32_t>> lambdas;
  for (const auto& [k, e] : acc)
    for (const auto& p : k) lambdas.insert(p);
  std::map<LKey, Element> P = acc;
  std::set<std::pair<std::uint32_t, std::uint32_t>> chosen;
  for (const auto& lam : lambdas) {
    auto P1 = specialize(P, lam, 1);
    if (!all_zero(P1)) {
      P = std::move(P1);
      chosen.insert(lam);
    } else {
      P = specialize(P, lam, 0);
    }
  }
  if (P.size() != 1 || !P.begin()->first.empty() || P.begin()->second.is_zero())
    throw error("internal: specialization lost the refutation");
  Witness w;
  w.rank = N;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Element v(A.field, N);
    for (std::uint32_t wi = 0; wi < words[i].size(); ++wi)
      if (chosen.count({std::uint32_t(i), wi}))
        v.add_term(words[i][wi], Scalar(A.field, 1));
    w.assignment.emplace_back(vars[i], std::move(v));
  }
  w.value = P.begin()->second;
  Algebra big{A.field, N, A.grading};
  if (!(substitute(f, w.assignment, big) == w.value))
    throw error("internal: witness re-evaluation disagrees");
  rep.identity = false;
  rep.witness = std::move(w);
  rep.note = "refuted at rank " + std::to_string(N);
  return rep;
}

std::optional<Witness> witness_search(const FreePoly& f, const Algebra& A,
                                      const SearchBudget& budget) {
  if (f.is_zero()) return std::nullopt;
  const std::vector<GVar> vars = f.variables();
  for (const auto& [m, c] : f.terms()) {
    std::set<GVar> seen(m.begin(), m.end());
    if (seen.size() != m.size())
      throw error("single-word search needs squarefree monomials");
  }
  std::vector<std::vector<BasisWord>> words(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    words[i] = A.grading.component_basis(vars[i].degree, budget.max_len, budget.rank);
    if (words[i].empty()) return std::nullopt;
  }
  std::uint64_t tried = 0;
  std::vector<std::size_t> pick(vars.size(), 0);
  std::function<std::optional<Witness>(std::size_t)> rec =
      [&](std::size_t i) -> std::optional<Witness> {
    if (i == vars.size()) {
      if (++tried > budget.max_tuples) return std::nullopt;
      Witness w;
      w.rank = std::max(A.rank, budget.rank);
      for (std::size_t t = 0; t < vars.size(); ++t)
        w.assignment.emplace_back(vars[t],
                                  Element::term(A.field, w.rank, words[t][pick[t]], Scalar(A.field, 1)));
      Algebra big{A.field, w.rank, A.grading};
      w.value = substitute(f, w.assignment, big);
      if (!w.value.is_zero()) return w;
      return std::nullopt;
    }
    for (pick[i] = 0; pick[i] < words[i].size(); ++pick[i]) {
      if (tried > budget.max_tuples) return std::nullopt;
      if (auto w = rec(i + 1)) return w;
    }
    return std::nullopt;
  };
  return rec(0);
}

Witness witness_t_chain(const Algebra& A, std::uint32_t base, std::uint32_t n) {
  if (n == 0) throw error("t-chain witness needs n >= 1");
  for (std::uint32_t i = 1; i <= 2 * n; ++i)
    if (A.grading.reduce(A.grading.generator_degree(base + i)) != A.grading.reduce(0))
      throw error("t-chain witness needs degree-0 generators after the base");
  Field f = A.field;
  std::vector<std::int64_t> degs(2 * n, 0);
  FreePoly t = t_chain(f, n, degs);
  Witness w;
  w.rank = std::max(A.rank, base + 2 * n);
  BasisWord all;
  for (std::uint32_t i = 1; i <= 2 * n; ++i) {
    w.assignment.emplace_back(GVar{'z', i, 0}, Element::generator(f, w.rank, base + i));
    all = all.unite(BasisWord::single(base + i));
  }
  Algebra big{f, w.rank, A.grading};
  w.value = substitute(t, w.assignment, big);
  Scalar two_n(f, 1);
  for (std::uint32_t i = 0; i < n; ++i) two_n = two_n * Scalar(f, 2);
  if (!(w.value == Element::term(f, w.rank, all, two_n)))
    throw error("internal: t-chain value mismatch");
  return w;
}

Witness witness_power_products(const Algebra& A, std::uint32_t k,
                               const std::vector<PowerSpec>& specs) {
  Field f = A.field;
  const std::uint32_t p = A.field.characteristic();
  std::int64_t weight = 0;
  for (const auto& s : specs) {
    if (s.degree < 1 || s.exponent < 1) throw error("power spec needs degree and exponent >= 1");
    if (p != 0 && s.exponent >= p)
      throw error("power spec exponents must stay below the characteristic");
    weight += s.degree * std::int64_t(s.exponent);
  }
  if (weight > std::int64_t(k)) throw error("power specs exceed the degree-1 budget");
  for (std::uint32_t i = 1; i <= k; ++i)
    if (A.grading.generator_degree(i) != 1)
      throw error("power-product witness needs degree-1 generators e_1..e_k");

  // first pass: lay out the generators and the expected value
  std::uint32_t next_special = 1, next_star = k + 1;
  FreePoly mono = FreePoly::constant(f, Scalar(f, 1));
  BasisWord all;
  Scalar coeff(f, 1);
  std::uint32_t top = std::max(k, 1u);
  for (std::size_t t = 0; t < specs.size(); ++t) {
    const auto& s = specs[t];
    const GVar xv{'x', std::uint32_t(t + 1), s.degree};
    mono = mono * FreePoly::var(f, xv).pow(s.exponent);
    for (std::uint32_t c = 0; c < s.exponent; ++c) {
      for (std::int64_t i = 0; i < s.degree; ++i)
        all = all.unite(BasisWord::single(next_special++));
      if (s.degree % 2 == 1) {
        if (A.grading.generator_degree(next_star) != 0)
          throw error("power-product witness needs degree-0 generators beyond e_k");
        all = all.unite(BasisWord::single(next_star));
        top = std::max(top, next_star);
        ++next_star;
      }
    }
    Scalar fact(f, 1);
    for (std::uint32_t c = 2; c <= s.exponent; ++c) fact = fact * Scalar(f, c);
    coeff = coeff * fact;
  }
  Witness w;
  w.rank = std::max(A.rank, top);
  // second pass: build the values at the final rank
  next_special = 1;
  next_star = k + 1;
  for (std::size_t t = 0; t < specs.size(); ++t) {
    const auto& s = specs[t];
    Element val(f, w.rank);
    for (std::uint32_t c = 0; c < s.exponent; ++c) {
      BasisWord word;
      for (std::int64_t i = 0; i < s.degree; ++i)
        word = word.unite(BasisWord::single(next_special++));
      if (s.degree % 2 == 1) word = word.unite(BasisWord::single(next_star++));
      val.add_term(word, Scalar(f, 1));
    }
    w.assignment.emplace_back(GVar{'x', std::uint32_t(t + 1), s.degree}, std::move(val));
  }
  Algebra big{f, w.rank, A.grading};
  w.value = substitute(mono, w.assignment, big);
  if (!(w.value == Element::term(f, w.rank, all, coeff)))
    throw error("internal: power-product value mismatch");
  return w;
}

Witness witness_sorted_blocks(const Algebra& A, const FreePoly& monomial) {
  if (monomial.terms().size() != 1) throw error("block witness needs a single monomial");
  const auto& [m, c] = *monomial.terms().begin();
  std::set<GVar> seen(m.begin(), m.end());
  if (seen.size() != m.size()) throw error("block witness needs a squarefree monomial");
  Witness w;
  std::uint32_t next = 1;
  std::vector<GVar> vars(seen.begin(), seen.end());
  std::vector<std::pair<GVar, BasisWord>> words;
  for (const auto& v : vars) {
    if (v.degree < 0) throw error("block witness needs nonnegative degrees");
    BasisWord word;
    for (std::int64_t i = 0; i < v.degree; ++i) word = word.unite(BasisWord::single(next++));
    words.emplace_back(v, word);
  }
  w.rank = std::max(A.rank, next - 1);
  w.rank = std::max(w.rank, 1u);
  for (const auto& [v, word] : words)
    w.assignment.emplace_back(v, Element::term(A.field, w.rank, word, Scalar(A.field, 1)));
  Algebra big{A.field, w.rank, A.grading};
  w.value = substitute(monomial, w.assignment, big);
  if (w.value.is_zero()) throw error("internal: block witness vanished");
  return w;
}

}  // namespace gex
