#include "gex/tideal.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "gex/errors.hpp"

namespace gex {

namespace {

int eps_sign(const Monomial& m, const std::map<GVar, std::size_t>& idx,
             const std::vector<std::uint8_t>& parity) {
  int s = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t a = idx.at(m[i]);
    if (!parity[a]) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const std::size_t b = idx.at(m[j]);
      if (parity[b] && a > b) s = -s;
    }
  }
  return s;
}

}  // namespace

SignatureSpace::SignatureSpace(Field f, std::vector<GVar> vars)
    : field_(f), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw error("signature variables must be distinct");
  if (vars_.empty()) throw error("signature needs at least one variable");
  if (vars_.size() > 8) throw error("signatures beyond 8 variables are not supported");
  Monomial m = vars_;
  do {
    index_[m] = basis_.size();
    basis_.push_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
}

std::size_t SignatureSpace::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw error("monomial outside the signature space");
  return it->second;
}

Vec SignatureSpace::to_vec(const FreePoly& f) const {
  if (!(f.field() == field_)) throw error("field mismatch");
  Vec v(dim(), Scalar(field_, 0));
  for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
  return v;
}

FreePoly SignatureSpace::to_poly(const Vec& v) const {
  if (v.size() != dim()) throw error("vector has the wrong length");
  FreePoly f(field_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) f.add_term(basis_[i], v[i]);
  return f;
}

Subspace identity_space(const Algebra& A, const SignatureSpace& S, const CheckBudget& b) {
  std::vector<std::int64_t> degs;
  for (const auto& v : S.vars()) degs.push_back(v.degree);
  ProfileSet ps = enumerate_profiles(A.grading, degs, b);
  std::set<std::vector<std::uint8_t>> parities;
  for (const auto& p : ps.profiles) parities.insert(p.parity);
  std::map<GVar, std::size_t> idx;
  for (std::size_t i = 0; i < S.vars().size(); ++i) idx[S.vars()[i]] = i;
  std::vector<Vec> rows;
  for (const auto& par : parities) {
    Vec row(S.dim(), Scalar(S.field(), 0));
    for (std::size_t a = 0; a < S.dim(); ++a)
      row[a] = Scalar(S.field(), eps_sign(S.basis()[a], idx, par));
    rows.push_back(std::move(row));
  }
  return kernel(S.field(), S.dim(), rows);
}

FreePoly full_linearization(const FreePoly& f) {
  if (!f.is_multihomogeneous()) throw error("linearization needs a multihomogeneous polynomial");
  if (f.is_multilinear()) return f;
  const Field fl = f.field();
  // fresh copies: v with multiplicity r becomes v^(1)..v^(r) on new indices
  std::map<GVar, std::vector<GVar>> copies;
  std::uint32_t next = 1;
  for (const auto& v : f.variables()) {
    const std::uint32_t r = f.multiplicity(v);
    for (std::uint32_t c = 0; c < r; ++c)
      copies[v].push_back(GVar{v.letter, 1000 + next++, v.degree});
  }
  FreePoly out(fl);
  for (const auto& [m, c] : f.terms()) {
    // positions of each variable inside the monomial
    std::map<GVar, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]].push_back(i);
    Monomial built = m;
    std::function<void(std::map<GVar, std::vector<std::size_t>>::iterator)> rec =
        [&](std::map<GVar, std::vector<std::size_t>>::iterator it) {
          if (it == pos.end()) {
            out.add_term(built, c);
            return;
          }
          auto next_it = std::next(it);
          std::vector<GVar> cs = copies.at(it->first);
          std::sort(cs.begin(), cs.end());
          do {
            for (std::size_t i = 0; i < cs.size(); ++i) built[it->second[i]] = cs[i];
            rec(next_it);
          } while (std::next_permutation(cs.begin(), cs.end()));
        };
    rec(pos.begin());
  }
  return out;
}

Subspace consequence_span(const Algebra& A, const std::vector<FreePoly>& gens,
                          const SignatureSpace& S, const SpanOptions& opt) {
  Subspace span(S.field(), S.dim());
  const auto& vars = S.vars();
  const std::size_t n = vars.size();
  const std::size_t cap = std::min(opt.target_dim, S.dim());
  std::uint64_t rows = 0;
  for (const auto& g0 : gens) {
    if (g0.is_zero()) continue;
    if (span.dim() >= cap) break;
    const FreePoly g = g0.is_multilinear() ? g0 : full_linearization(g0);
    const std::vector<GVar> gv = g.variables();
    const std::size_t s = gv.size();
    if (s > n) continue;

    // eagerly skip generators with an unmatchable slot degree (degree-0 slots
    // always accept the unit)
    bool plausible = true;
    for (const auto& u : gv) {
      bool hit = A.grading.reduce(u.degree) == 0;
      std::function<void(std::size_t, std::int64_t, std::uint32_t)> sub =
          [&](std::size_t i, std::int64_t d, std::uint32_t len) {
            if (hit) return;
            if (len > 0 && len <= opt.max_monomial_len &&
                A.grading.reduce(d) == A.grading.reduce(u.degree)) {
              hit = true;
              return;
            }
            if (i == n || len >= opt.max_monomial_len) return;
            sub(i + 1, d, len);
            sub(i + 1, d + vars[i].degree, len + 1);
          };
      sub(0, 0, 0);
      if (!hit) {
        plausible = false;
        break;
      }
    }
    if (!plausible) continue;

    std::vector<std::vector<std::size_t>> groups(s + 2);  // slots, then prefix, suffix
    auto emit = [&]() {
      std::vector<std::vector<std::size_t>> perm = groups;
      std::function<void(std::size_t)> orders = [&](std::size_t gi) {
        if (span.dim() >= cap) return;
        if (gi == perm.size()) {
          if (++rows > opt.max_rows) throw budget_error("consequence span exceeded the row budget");
          Monomial pre, suf;
          for (auto t : perm[s]) pre.push_back(vars[t]);
          for (auto t : perm[s + 1]) suf.push_back(vars[t]);
          FreePoly poly(S.field());
          for (const auto& [gm, gc] : g.terms()) {
            Monomial out = pre;
            for (const auto& u : gm) {
              const std::size_t j =
                  std::size_t(std::find(gv.begin(), gv.end(), u) - gv.begin());
              for (auto t : perm[j]) out.push_back(vars[t]);
            }
            out.insert(out.end(), suf.begin(), suf.end());
            poly.add_term(out, gc);
          }
          if (!poly.is_zero()) span.insert(S.to_vec(poly));
          return;
        }
        std::vector<std::size_t>& grp = perm[gi];
        std::sort(grp.begin(), grp.end());
        do {
          orders(gi + 1);
        } while (std::next_permutation(grp.begin(), grp.end()));
      };
      orders(0);
    };
    std::function<void(std::size_t)> roles = [&](std::size_t i) {
      if (span.dim() >= cap) return;
      if (i == n) {
        // an empty slot substitutes the unit, legal exactly at degree 0
        for (std::size_t j = 0; j < s; ++j) {
          std::int64_t d = 0;
          for (auto t : groups[j]) d += vars[t].degree;
          if (A.grading.reduce(d) != A.grading.reduce(gv[j].degree)) return;
        }
        emit();
        return;
      }
      for (std::size_t r = 0; r < s + 2; ++r) {
        if (r < s && groups[r].size() >= opt.max_monomial_len) continue;
        groups[r].push_back(i);
        roles(i + 1);
        groups[r].pop_back();
      }
    };
    roles(0);
  }
  return span;
}

namespace {

// set partitions of elems into blocks of size >= 2, blocks opened by their
// smallest element
void partitions_min2(std::vector<std::size_t> elems,
                     const std::function<void(const std::vector<std::vector<std::size_t>>&)>& cb) {
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> rest) {
    if (rest.empty()) {
      cb(blocks);
      return;
    }
    const std::size_t head = rest.front();
    std::vector<std::size_t> tail(rest.begin() + 1, rest.end());
    const std::size_t t = tail.size();
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
      std::vector<std::size_t> block{head}, left;
      for (std::size_t i = 0; i < t; ++i)
        (mask & (1u << i) ? block : left).push_back(tail[i]);
      blocks.push_back(block);
      rec(left);
      blocks.pop_back();
    }
  };
  rec(std::move(elems));
}

FreePoly left_normed(Field f, const std::vector<GVar>& seq) {
  std::vector<FreePoly> args;
  args.reserve(seq.size());
  for (const auto& v : seq) args.push_back(FreePoly::var(f, v));
  return commutator(args);
}

}  // namespace

Subspace zero_proper_subspace(const SignatureSpace& S) {
  const Field f = S.field();
  const auto& vars = S.vars();
  std::vector<std::size_t> zs;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].degree != 0) zs.push_back(i);
  Subspace out(f, S.dim());
  const std::size_t zn = zs.size();
  for (std::uint32_t bmask = 0; bmask < (1u << zn); ++bmask) {
    std::set<std::size_t> bare;
    for (std::size_t i = 0; i < zn; ++i)
      if (bmask & (1u << i)) bare.insert(zs[i]);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!bare.count(i)) rest.push_back(i);
    if (rest.size() == 1) continue;  // a lone variable cannot be bracketed
    Monomial pre;
    for (auto i : bare) pre.push_back(vars[i]);
    auto handle = [&](const std::vector<std::vector<std::size_t>>& blocks) {
      // all arrangements within each block
      std::vector<std::vector<std::size_t>> arr = blocks;
      std::function<void(std::size_t)> go = [&](std::size_t bi) {
        if (bi == arr.size()) {
          FreePoly poly = pre.empty() ? FreePoly::constant(f, Scalar(f, 1))
                                      : FreePoly::monomial(f, pre, Scalar(f, 1));
          for (const auto& blk : arr) {
            std::vector<GVar> seq;
            for (auto t : blk) seq.push_back(vars[t]);
            poly = poly * left_normed(f, seq);
          }
          out.insert(S.to_vec(poly));
          return;
        }
        std::vector<std::size_t>& blk = arr[bi];
        std::sort(blk.begin(), blk.end());
        do {
          go(bi + 1);
        } while (std::next_permutation(blk.begin(), blk.end()));
      };
      go(0);
    };
    if (rest.empty()) {
      if (!pre.empty())
        out.insert(S.to_vec(FreePoly::monomial(f, pre, Scalar(f, 1))));
      continue;
    }
    partitions_min2(rest, handle);
  }
  return out;
}

namespace {

GenerationRow make_row(const Algebra& A, const std::vector<FreePoly>& gens,
                       const std::vector<GVar>& sig, const SpanOptions& opt,
                       const CheckBudget& b, bool proper_cut) {
  SignatureSpace S(A.field, sig);
  Subspace ids = identity_space(A, S, b);
  // the span cannot exceed the identities (checked below), so growing it past
  // their dimension is wasted work
  SpanOptions capped = opt;
  capped.target_dim = std::min(capped.target_dim, ids.dim());
  Subspace span = consequence_span(A, gens, S, capped);
  GenerationRow row;
  row.vars = S.vars();
  if (proper_cut) {
    Subspace cut = zero_proper_subspace(S);
    ids = intersection(ids, cut);
    span = intersection(span, cut);
    row.dim_space = cut.dim();
  } else {
    row.dim_space = S.dim();
  }
  row.dim_identities = ids.dim();
  row.dim_span = span.dim();
  row.contained = ids.contains(span);
  row.generated = row.contained && ids.dim() == span.dim();
  if (!row.generated)
    if (auto g = gap_vector(ids, span)) row.gap = S.to_poly(*g);
  return row;
}

GenerationReport run_generation(const Algebra& A, const std::vector<FreePoly>& gens,
                                const std::vector<std::vector<GVar>>& signatures,
                                const SpanOptions& opt, const CheckBudget& b, bool proper_cut) {
  GenerationReport rep;
  for (const auto& sig : signatures) {
    rep.rows.push_back(make_row(A, gens, sig, opt, b, proper_cut));
    rep.ok = rep.ok && rep.rows.back().generated;
  }
  return rep;
}

std::string vars_str(const std::vector<GVar>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += " ";
    out += v.str();
  }
  return out;
}

}  // namespace

std::string GenerationReport::text() const {
  std::string out;
  for (const auto& r : rows) {
    out += vars_str(r.vars) + ": space " + std::to_string(r.dim_space) + ", identities " +
           std::to_string(r.dim_identities) + ", span " + std::to_string(r.dim_span) +
           (r.generated ? " [generated]" : (r.contained ? " [gap]" : " [not contained]"));
    if (r.gap) out += " missing: " + r.gap->str();
    out += "\n";
  }
  out += ok ? "all signatures generated\n" : "generation FAILED\n";
  return out;
}

GenerationReport verify_generation(const Algebra& A, const std::vector<FreePoly>& gens,
                                   const std::vector<std::vector<GVar>>& signatures,
                                   const SpanOptions& opt, const CheckBudget& b) {
  return run_generation(A, gens, signatures, opt, b, false);
}

GenerationReport verify_generation_proper(const Algebra& A, const std::vector<FreePoly>& gens,
                                          const std::vector<std::vector<GVar>>& signatures,
                                          const SpanOptions& opt, const CheckBudget& b) {
  return run_generation(A, gens, signatures, opt, b, true);
}

std::vector<RelabelRow> relabel_check(const Algebra& A, std::uint32_t n,
                                      std::int64_t max_weight, const CheckBudget& b) {
  const Field f = A.field;
  std::vector<GVar> src;
  for (std::uint32_t i = 0; i < n; ++i) src.push_back(GVar{'x', i + 1, 0});
  SignatureSpace S0(f, src);
  Algebra plain{f, A.rank, GradingSpec::trivial()};
  const Subspace P0 = identity_space(plain, S0, b);

  std::vector<RelabelRow> out;
  std::vector<std::int64_t> degs(n, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i,
                                                                         std::int64_t lo,
                                                                         std::int64_t weight) {
    if (i == n) {
      std::vector<GVar> tgt;
      for (std::uint32_t t = 0; t < n; ++t) tgt.push_back(GVar{'x', t + 1, degs[t]});
      SignatureSpace S1(f, tgt);
      const Subspace G = identity_space(A, S1, b);
      // transport the plain space along the positional relabeling
      std::vector<std::size_t> colmap(S0.dim());
      std::map<GVar, GVar> varmap;
      for (std::size_t t = 0; t < n; ++t) varmap[S0.vars()[t]] = S1.vars()[t];
      for (std::size_t a = 0; a < S0.dim(); ++a) {
        Monomial m;
        for (const auto& v : S0.basis()[a]) m.push_back(varmap.at(v));
        colmap[a] = S1.index_of(m);
      }
      Subspace T(f, S1.dim());
      for (const auto& r : P0.rows()) {
        Vec v(S1.dim(), Scalar(f, 0));
        for (std::size_t a = 0; a < S0.dim(); ++a) v[colmap[a]] = r[a];
        T.insert(std::move(v));
      }
      out.push_back(RelabelRow{S1.vars(), P0.dim(), G.dim(), T == G});
      return;
    }
    for (std::int64_t d = lo; d <= std::int64_t(n); ++d) {
      if (max_weight >= 0 && weight + d > max_weight) break;
      degs[i] = d;
      rec(i + 1, d, weight + d);
    }
  };
  rec(0, 0, 0);
  return out;
}

std::size_t ungraded_codim(Field f, std::uint32_t n) {
  std::vector<GVar> src;
  for (std::uint32_t i = 0; i < n; ++i) src.push_back(GVar{'x', i + 1, 0});
  SignatureSpace S(f, src);
  Algebra plain{f, 1, GradingSpec::trivial()};
  return S.dim() - identity_space(plain, S).dim();
}

std::size_t sampled_codim(Field f, std::uint32_t n, std::uint32_t rank, std::uint32_t samples,
                          std::uint64_t seed) {
  std::vector<GVar> src;
  for (std::uint32_t i = 0; i < n; ++i) src.push_back(GVar{'x', i + 1, 0});
  SignatureSpace S(f, src);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> len_dist(1, 3);
  std::uniform_int_distribution<std::uint32_t> gen_dist(1, rank);
  Subspace functionals(f, S.dim());
  for (std::uint32_t s = 0; s < samples && functionals.dim() < S.dim(); ++s) {
    std::vector<BasisWord> words(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t len = len_dist(rng);
      BasisWord w;
      while (w.length() < len) w = w.unite(BasisWord::single(gen_dist(rng)));
      words[i] = w;
    }
    std::map<GVar, std::size_t> idx;
    for (std::uint32_t i = 0; i < n; ++i) idx[src[i]] = i;
    std::map<BasisWord, Vec> rows;
    for (std::size_t a = 0; a < S.dim(); ++a) {
      int sign = 1;
      BasisWord acc;
      bool dead = false;
      for (const auto& v : S.basis()[a]) {
        auto prod = BasisWord::mul(acc, words[idx.at(v)]);
        if (!prod) {
          dead = true;
          break;
        }
        if (prod->first % 2) sign = -sign;
        acc = prod->second;
      }
      if (dead) continue;
      auto [it, fresh] = rows.emplace(acc, Vec(S.dim(), Scalar(f, 0)));
      it->second[a] = it->second[a] + Scalar(f, sign);
    }
    for (auto& [w, row] : rows) functionals.insert(std::move(row));
  }
  return functionals.dim();
}

MhSpace::MhSpace(Field f, MhSignature sig) : field_(f), sig_(std::move(sig)) {
  if (sig_.vars.size() != sig_.exps.size() || sig_.vars.empty())
    throw error("multihomogeneous signature needs matching variables and exponents");
  if (!std::is_sorted(sig_.vars.begin(), sig_.vars.end()) ||
      std::adjacent_find(sig_.vars.begin(), sig_.vars.end()) != sig_.vars.end())
    throw error("multihomogeneous signature variables must be ascending and distinct");
  Monomial m;
  for (std::size_t i = 0; i < sig_.vars.size(); ++i) {
    if (sig_.exps[i] == 0) throw error("exponents must be positive");
    for (std::uint32_t c = 0; c < sig_.exps[i]; ++c) m.push_back(sig_.vars[i]);
  }
  if (m.size() > 10) throw error("components beyond total degree 10 are not supported");
  do {
    index_[m] = basis_.size();
    basis_.push_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
}

std::size_t MhSpace::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw error("monomial outside the component");
  return it->second;
}

Vec MhSpace::to_vec(const FreePoly& f) const {
  if (!(f.field() == field_)) throw error("field mismatch");
  Vec v(dim(), Scalar(field_, 0));
  for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
  return v;
}

FreePoly MhSpace::to_poly(const Vec& v) const {
  if (v.size() != dim()) throw error("vector has the wrong length");
  FreePoly f(field_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) f.add_term(basis_[i], v[i]);
  return f;
}

namespace {

struct Polarization {
  SignatureSpace slotted;
  MhSpace merged;
  std::vector<std::size_t> colmap;  // slotted basis index -> merged basis index
};

Polarization polarize(Field f, const MhSignature& sig) {
  const std::uint32_t p = f.characteristic();
  for (auto e : sig.exps)
    if (p != 0 && e >= p)
      throw error("polarization needs exponents below the characteristic");
  std::vector<GVar> slots;
  std::map<GVar, GVar> owner;
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < sig.vars.size(); ++i)
    for (std::uint32_t c = 0; c < sig.exps[i]; ++c) {
      GVar s{'x', next++, sig.vars[i].degree};
      slots.push_back(s);
      owner[s] = sig.vars[i];
    }
  Polarization out{SignatureSpace(f, slots), MhSpace(f, sig), {}};
  out.colmap.resize(out.slotted.dim());
  for (std::size_t a = 0; a < out.slotted.dim(); ++a) {
    Monomial m;
    for (const auto& v : out.slotted.basis()[a]) m.push_back(owner.at(v));
    out.colmap[a] = out.merged.index_of(m);
  }
  return out;
}

Subspace push_down(const Polarization& pol, const Subspace& up) {
  Subspace out(pol.merged.field(), pol.merged.dim());
  for (const auto& r : up.rows()) {
    Vec v(pol.merged.dim(), Scalar(pol.merged.field(), 0));
    for (std::size_t a = 0; a < r.size(); ++a)
      if (!r[a].is_zero()) v[pol.colmap[a]] = v[pol.colmap[a]] + r[a];
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

Subspace identity_space_mh(const Algebra& A, const MhSignature& sig, const CheckBudget& b) {
  Polarization pol = polarize(A.field, sig);
  return push_down(pol, identity_space(A, pol.slotted, b));
}

Subspace consequence_span_mh(const Algebra& A, const std::vector<FreePoly>& gens,
                             const MhSignature& sig, const SpanOptions& opt) {
  Polarization pol = polarize(A.field, sig);
  return push_down(pol, consequence_span(A, gens, pol.slotted, opt));
}

std::string MhGenerationReport::text() const {
  std::string out;
  for (const auto& r : rows) {
    std::string head;
    for (std::size_t i = 0; i < r.sig.vars.size(); ++i) {
      if (i) head += " ";
      head += r.sig.vars[i].str() + "^" + std::to_string(r.sig.exps[i]);
    }
    out += head + ": space " + std::to_string(r.dim_space) + ", identities " +
           std::to_string(r.dim_identities) + ", span " + std::to_string(r.dim_span) +
           (r.generated ? " [generated]" : (r.contained ? " [gap]" : " [not contained]"));
    if (r.gap) out += " missing: " + r.gap->str();
    out += "\n";
  }
  out += ok ? "all components generated\n" : "generation FAILED\n";
  return out;
}

MhGenerationReport verify_generation_mh(const Algebra& A, const std::vector<FreePoly>& gens,
                                        const std::vector<MhSignature>& signatures,
                                        const SpanOptions& opt, const CheckBudget& b) {
  MhGenerationReport rep;
  for (const auto& sig : signatures) {
    Polarization pol = polarize(A.field, sig);
    Subspace up_ids = identity_space(A, pol.slotted, b);
    SpanOptions capped = opt;
    capped.target_dim = std::min(capped.target_dim, up_ids.dim());
    Subspace up_span = consequence_span(A, gens, pol.slotted, capped);
    Subspace ids = push_down(pol, up_ids);
    Subspace span = push_down(pol, up_span);
    MhGenerationRow row;
    row.sig = sig;
    row.dim_space = pol.merged.dim();
    row.dim_identities = ids.dim();
    row.dim_span = span.dim();
    row.contained = up_ids.contains(up_span) && ids.contains(span);
    row.generated = row.contained && ids.dim() == span.dim();
    if (!row.generated)
      if (auto g = gap_vector(ids, span)) row.gap = pol.merged.to_poly(*g);
    rep.rows.push_back(std::move(row));
    rep.ok = rep.ok && rep.rows.back().generated;
  }
  return rep;
}

}  // namespace gex
