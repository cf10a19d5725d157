#include "gex/rewrite.hpp"

#include <algorithm>

#include "gex/errors.hpp"

namespace gex {

CommTree CommTree::make_node(CommTree a, CommTree b) {
  if (!(a < b)) throw error("bracket kids must be strictly ascending");
  CommTree t;
  t.kids.reserve(2);
  t.kids.push_back(std::move(a));
  t.kids.push_back(std::move(b));
  return t;
}

std::uint32_t CommTree::size() const {
  if (is_leaf()) return 1;
  return kids[0].size() + kids[1].size();
}

void CommTree::collect_leaves(std::vector<GVar>& out) const {
  if (is_leaf()) {
    out.push_back(leaf);
    return;
  }
  kids[0].collect_leaves(out);
  kids[1].collect_leaves(out);
}

std::string CommTree::str() const {
  if (is_leaf()) return leaf.str();
  return "[" + kids[0].str() + "," + kids[1].str() + "]";
}

bool CommTree::operator==(const CommTree& o) const {
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return leaf == o.leaf;
  return kids[0] == o.kids[0] && kids[1] == o.kids[1];
}

bool CommTree::operator<(const CommTree& o) const {
  if (is_leaf() != o.is_leaf()) return is_leaf();
  if (is_leaf()) return leaf < o.leaf;
  const auto s = size(), t = o.size();
  if (s != t) return s < t;
  if (kids[0] < o.kids[0]) return true;
  if (o.kids[0] < kids[0]) return false;
  return kids[1] < o.kids[1];
}

void PbwForm::add(const std::vector<CommTree>& factors, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(factors, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
FreePoly expand_tree(Field f, const CommTree& t) {
  if (t.is_leaf()) return FreePoly::var(f, t.leaf);
  return commutator(expand_tree(f, t.kids[0]), expand_tree(f, t.kids[1]));
}
}  // namespace

FreePoly PbwForm::expand() const {
  FreePoly out(field_);
  for (const auto& [fs, c] : terms_) {
    FreePoly p = FreePoly::constant(field_, c);
    for (const auto& t : fs) p = p * expand_tree(field_, t);
    out = out + p;
  }
  return out;
}

bool PbwForm::zero_proper() const {
  for (const auto& [fs, c] : terms_)
    for (const auto& t : fs)
      if (t.is_leaf() && t.leaf.degree == 0) return false;
  return true;
}

bool PbwForm::proper() const {
  for (const auto& [fs, c] : terms_)
    for (const auto& t : fs)
      if (t.is_leaf()) return false;
  return true;
}

std::string PbwForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [fs, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (const auto& t : fs) out += "*" + t.str();
  }
  return out;
}

PbwForm to_pbw(const FreePoly& f) {
  PbwForm out(f.field());
  struct Item {
    std::vector<CommTree> fs;
    Scalar c;
  };
  std::vector<Item> work;
  for (const auto& [m, c] : f.terms()) {
    std::vector<CommTree> fs;
    fs.reserve(m.size());
    for (const auto& v : m) fs.push_back(CommTree::make_leaf(v));
    work.push_back({std::move(fs), c});
  }
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    bool sorted = true;
    for (; i + 1 < it.fs.size(); ++i)
      if (it.fs[i + 1] < it.fs[i]) {
        sorted = false;
        break;
      }
    if (sorted) {
      out.add(it.fs, it.c);
      continue;
    }
    // a*b = b*a + [a,b] with a > b; [a,b] = -[b,a] canonically
    Item swapped = it;
    std::swap(swapped.fs[i], swapped.fs[i + 1]);
    Item bracket;
    bracket.c = -it.c;
    bracket.fs.reserve(it.fs.size() - 1);
    for (std::size_t j = 0; j < it.fs.size(); ++j) {
      if (j == i) {
        bracket.fs.push_back(CommTree::make_node(it.fs[i + 1], it.fs[i]));
        ++j;  // skip the consumed i+1
      } else {
        bracket.fs.push_back(it.fs[j]);
      }
    }
    work.push_back(std::move(swapped));
    work.push_back(std::move(bracket));
  }
  return out;
}

Classification classify(const FreePoly& f) {
  Classification c;
  c.multilinear = f.is_multilinear();
  c.multihomogeneous = f.is_multihomogeneous();
  PbwForm p = to_pbw(f);
  c.zero_proper = p.zero_proper();
  c.proper = p.proper();
  return c;
}

void ProperForm::add(const ProperKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreePoly ProperForm::expand() const {
  FreePoly out(field_);
  for (const auto& [k, c] : terms_) {
    FreePoly p = FreePoly::constant(field_, c);
    if (!k.bare.empty()) p = p * FreePoly::monomial(field_, k.bare, Scalar(field_, 1));
    for (std::size_t i = 0; i + 1 < k.entries.size(); i += 2)
      p = p * commutator(FreePoly::var(field_, k.entries[i]),
                         FreePoly::var(field_, k.entries[i + 1]));
    out = out + p;
  }
  return out;
}

std::string ProperForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (const auto& v : k.bare) out += "*" + v.str();
    for (std::size_t i = 0; i + 1 < k.entries.size(); i += 2)
      out += "*[" + k.entries[i].str() + "," + k.entries[i + 1].str() + "]";
  }
  return out;
}

namespace {
using Red = std::map<ProperKey, long long>;

const Red& reduce_rec(const Monomial& m, std::map<Monomial, Red>& memo) {
  auto hit = memo.find(m);
  if (hit != memo.end()) return hit->second;
  Red r;
  std::size_t i = 0;
  for (; i + 1 < m.size(); ++i)
    if (m[i + 1] < m[i]) break;
  if (i + 1 >= m.size()) {
    ProperKey k;
    k.bare = m;
    r[k] = 1;
  } else {
    const GVar a = m[i], b = m[i + 1];  // a > b
    Monomial swapped = m;
    std::swap(swapped[i], swapped[i + 1]);
    r = reduce_rec(swapped, memo);
    Monomial rest;
    rest.reserve(m.size() - 2);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i && j != i + 1) rest.push_back(m[j]);
    // prefix*a*b*suffix = prefix*b*a*suffix - [b,a]*prefix*suffix (brackets
    // central mod the ideal); merging the pair (b,a) into the sorted entry
    // list costs the usual alternating sign, and a repeated entry kills the
    // key ([x1,x2][x1,x3] lies in the ideal)
    for (const auto& [k, c] : reduce_rec(rest, memo)) {
      bool dup = false;
      long long above = 0;
      for (const auto& e : k.entries) {
        if (e == a || e == b) {
          dup = true;
          break;
        }
        if (b < e) ++above;
        if (a < e) ++above;
      }
      if (dup) continue;
      ProperKey k2;
      k2.bare = k.bare;
      k2.entries.reserve(k.entries.size() + 2);
      const GVar pair[2] = {b, a};
      std::merge(k.entries.begin(), k.entries.end(), pair, pair + 2,
                 std::back_inserter(k2.entries));
      const long long s = (above % 2 == 0) ? -c : c;
      r[k2] += s;
      if (r[k2] == 0) r.erase(k2);
    }
  }
  return memo.emplace(m, std::move(r)).first->second;
}
}  // namespace

ProperForm reduce_mod_I(const FreePoly& f) {
  ProperForm out(f.field());
  std::map<Monomial, Red> memo;
  for (const auto& [m, c] : f.terms())
    for (const auto& [k, n] : reduce_rec(m, memo)) out.add(k, c * Scalar(f.field(), n));
  return out;
}

namespace {
long long cross_inversions(const std::vector<GVar>& seq) {
  long long inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) ++inv;
  return inv;
}
}  // namespace

GammaSplit gamma_decompose(const FreePoly& f) {
  const Field fl = f.field();
  if (!f.is_multilinear()) throw error("gamma decomposition needs a multilinear polynomial");
  GammaSplit out{FreePoly(fl), {}, false};
  ProperForm red = reduce_mod_I(f);
  if (red.is_zero()) return out;
  std::vector<GVar> ys, zs;
  for (const auto& v : f.variables())
    (v.degree == 0 ? ys : zs).push_back(v);
  const std::size_t l = ys.size();
  out.odd = (l % 2 == 1);
  for (std::size_t i = (out.odd ? 1 : 0); i + 1 < l; i += 2)
    out.tail.emplace_back(ys[i], ys[i + 1]);
  for (const auto& [k, c] : red.terms()) {
    for (const auto& v : k.bare)
      if (v.degree == 0)
        throw error("polynomial is not zero-proper modulo the triple-commutator ideal");
    std::vector<GVar> zent;
    for (const auto& e : k.entries)
      if (e.degree != 0) zent.push_back(e);
    // reorder entries to: z-entries ascending, then y's ascending; the
    // alternating structure charges the permutation sign
    std::vector<GVar> target = zent;
    target.insert(target.end(), ys.begin(), ys.end());
    const long long sign = cross_inversions(target);
    Scalar coeff = (sign % 2 == 0) ? c : -c;
    FreePoly p = FreePoly::constant(fl, coeff);
    if (!k.bare.empty()) p = p * FreePoly::monomial(fl, k.bare, Scalar(fl, 1));
    std::size_t zi = 0;
    for (; zi + 1 < zent.size(); zi += 2)
      p = p * commutator(FreePoly::var(fl, zent[zi]), FreePoly::var(fl, zent[zi + 1]));
    if (out.odd) {
      if (zi >= zent.size()) throw error("internal: odd split lacks a z entry for the mixed bracket");
      p = p * commutator(FreePoly::var(fl, zent[zi]), FreePoly::var(fl, ys[0]));
    } else if (zi != zent.size()) {
      throw error("internal: even split left an unpaired z entry");
    }
    out.g = out.g + p;
  }
  // sanity: g times the factored tail reproduces f modulo the ideal
  FreePoly check = out.g;
  for (const auto& [a, b] : out.tail)
    check = check * commutator(FreePoly::var(fl, a), FreePoly::var(fl, b));
  ProperForm back = reduce_mod_I(check);
  if (!(back.terms() == red.terms()))
    throw error("internal: gamma decomposition failed to reproduce the input");
  return out;
}

FreePoly power_reduce(const FreePoly& f, std::uint32_t charp, std::int64_t step) {
  if (step <= 0) throw error("power reduction needs a positive step");
  FreePoly out(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::map<GVar, std::uint32_t> cnt;
    for (const auto& v : m) ++cnt[v];
    bool keep = true;
    for (const auto& [v, n] : cnt) {
      if (v.degree % step != 0) {
        keep = false;  // empty component
        break;
      }
      const std::int64_t len = v.degree / step;
      if (len % 2 != 0 && n >= 2) {
        keep = false;
        break;
      }
      if (charp != 0 && len % 2 == 0 && len != 0 && n >= charp) {
        keep = false;
        break;
      }
    }
    if (keep) out.add_term(m, c);
  }
  return out;
}

}  // namespace gex
