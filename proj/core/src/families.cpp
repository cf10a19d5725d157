#include "gex/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "gex/errors.hpp"

namespace gex {
namespace {

GVar zv(std::uint32_t i, std::int64_t d) { return GVar{'z', i, d}; }
GVar uv(std::uint32_t i, std::int64_t d) { return GVar{'u', i, d}; }
GVar xv(std::uint32_t i, std::int64_t d) { return GVar{'x', i, d}; }

std::vector<GVar> zvars(const std::vector<std::int64_t>& degs) {
  std::vector<GVar> out;
  out.reserve(degs.size());
  for (std::size_t i = 0; i < degs.size(); ++i) out.push_back(zv(std::uint32_t(i + 1), degs[i]));
  return out;
}

void check_odd_positive(const std::vector<std::int64_t>& degs) {
  for (auto d : degs)
    if (d <= 0 || d % 2 == 0) throw error("z-degrees must be odd and positive");
}

void check_even(const std::vector<std::int64_t>& degs) {
  for (auto d : degs)
    if (d < 0 || d % 2 != 0) throw error("u-degrees must be even and nonnegative");
}

// All tuples of the given length with entries from pool, invoking f on each.
void tuples(const std::vector<std::int64_t>& pool, std::size_t len,
            const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> cur(len);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      f(cur);
      return;
    }
    for (auto v : pool) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<std::int64_t> range_list(std::int64_t lo, std::int64_t hi,
                                     std::int64_t step = 1, std::int64_t start_rem = -1) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d)
    if (start_rem < 0 || ((d % step) + step) % step == start_rem) out.push_back(d);
  return out;
}

}  // namespace

FreePoly standard_poly(Field f, const std::vector<GVar>& vars) {
  if (vars.empty()) throw error("standard polynomial needs at least one variable");
  std::vector<std::size_t> perm(vars.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  FreePoly out(f);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Monomial m;
    m.reserve(vars.size());
    for (auto p : perm) m.push_back(vars[p]);
    out.add_term(m, Scalar(f, sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FreePoly t_chain(Field f, std::uint32_t n, const std::vector<std::int64_t>& zdegs) {
  if (n == 0) throw error("t-chain needs n >= 1");
  if (zdegs.size() != 2 * std::size_t(n)) throw error("t-chain needs 2n degrees");
  auto z = zvars(zdegs);
  FreePoly out = FreePoly::constant(f, Scalar(f, 1));
  for (std::uint32_t i = 0; i < n; ++i)
    out = out * commutator(FreePoly::var(f, z[2 * i]), FreePoly::var(f, z[2 * i + 1]));
  return out;
}

FreePoly f_subset(Field f, const std::vector<std::int64_t>& zdegs,
                  const std::vector<std::uint32_t>& T) {
  if (T.size() % 2 != 0) throw error("bracket subset must have even size");
  if (!std::is_sorted(T.begin(), T.end()) ||
      std::adjacent_find(T.begin(), T.end()) != T.end())
    throw error("bracket subset must be strictly ascending");
  for (auto j : T)
    if (j < 1 || j > zdegs.size()) throw error("bracket subset position out of range");
  auto z = zvars(zdegs);
  FreePoly out = FreePoly::constant(f, Scalar(f, 1));
  Monomial bare;
  std::size_t ti = 0;
  for (std::size_t i = 1; i <= z.size(); ++i) {
    if (ti < T.size() && T[ti] == i)
      ++ti;
    else
      bare.push_back(z[i - 1]);
  }
  if (!bare.empty()) out = out * FreePoly::monomial(f, bare, Scalar(f, 1));
  for (std::size_t i = 0; i + 1 < T.size(); i += 2)
    out = out * commutator(FreePoly::var(f, z[T[i] - 1]), FreePoly::var(f, z[T[i + 1] - 1]));
  return out;
}

FreePoly f_subset_tail(Field f, const std::vector<std::int64_t>& zdegs,
                       const std::vector<std::uint32_t>& T, const GVar& tail) {
  if (T.size() % 2 == 0) throw error("tailed bracket subset must have odd size");
  if (!std::is_sorted(T.begin(), T.end()) ||
      std::adjacent_find(T.begin(), T.end()) != T.end())
    throw error("bracket subset must be strictly ascending");
  for (auto j : T)
    if (j < 1 || j > zdegs.size()) throw error("bracket subset position out of range");
  auto z = zvars(zdegs);
  Monomial bare;
  std::size_t ti = 0;
  for (std::size_t i = 1; i <= z.size(); ++i) {
    if (ti < T.size() && T[ti] == i)
      ++ti;
    else
      bare.push_back(z[i - 1]);
  }
  FreePoly res = FreePoly::constant(f, Scalar(f, 1));
  if (!bare.empty()) res = res * FreePoly::monomial(f, bare, Scalar(f, 1));
  for (std::size_t i = 0; i + 1 < T.size() - 1; i += 2)
    res = res * commutator(FreePoly::var(f, z[T[i] - 1]), FreePoly::var(f, z[T[i + 1] - 1]));
  res = res * commutator(FreePoly::var(f, z[T.back() - 1]), FreePoly::var(f, tail));
  return res;
}

FreePoly g_poly(Field f, const std::vector<std::int64_t>& zdegs) {
  const std::size_t m = zdegs.size();
  if (m == 0) throw error("g needs at least one variable");
  if (m > 30) throw error("g with more than 30 variables is not supported");
  FreePoly out(f);
  const Scalar half = Scalar::fraction(f, -1, 2);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int t = std::popcount(mask);
    if (t % 2 != 0) continue;
    std::vector<std::uint32_t> T;
    for (std::uint32_t i = 0; i < m; ++i)
      if (mask & (1u << i)) T.push_back(i + 1);
    out = out + f_subset(f, zdegs, T).scaled(half.pow(t / 2));
  }
  return out;
}

FreePoly capacity_monomial(Field f, const std::vector<std::uint32_t>& counts) {
  Monomial m;
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::uint32_t c = 0; c < counts[i]; ++c) m.push_back(xv(next++, std::int64_t(i) + 1));
  if (m.empty()) throw error("capacity monomial needs at least one variable");
  return FreePoly::monomial(f, m, Scalar(f, 1));
}

FreePoly even_chain(Field f, const std::vector<std::int64_t>& udegs) {
  if (udegs.size() < 2 || udegs.size() % 2 != 0)
    throw error("even chain needs an even entry count, at least two");
  check_even(udegs);
  FreePoly out = FreePoly::constant(f, Scalar(f, 1));
  for (std::size_t i = 0; i + 1 < udegs.size(); i += 2)
    out = out * commutator(FreePoly::var(f, uv(std::uint32_t(i + 1), udegs[i])),
                           FreePoly::var(f, uv(std::uint32_t(i + 2), udegs[i + 1])));
  return out;
}

FreePoly even_chain_bracket(Field f, const std::vector<std::int64_t>& udegs, std::int64_t xdeg) {
  if (udegs.size() < 3 || udegs.size() % 2 != 1)
    throw error("bracketed even chain needs an odd entry count, at least three");
  check_even(udegs);
  FreePoly out = FreePoly::constant(f, Scalar(f, 1));
  for (std::size_t i = 0; i + 1 < udegs.size(); i += 2)
    out = out * commutator(FreePoly::var(f, uv(std::uint32_t(i + 1), udegs[i])),
                           FreePoly::var(f, uv(std::uint32_t(i + 2), udegs[i + 1])));
  out = out * commutator(FreePoly::var(f, uv(std::uint32_t(udegs.size()), udegs.back())),
                         FreePoly::var(f, xv(1, xdeg)));
  return out;
}

namespace {
FreePoly bracket_tail(Field f, const std::vector<std::int64_t>& udegs, std::size_t from) {
  FreePoly out = FreePoly::constant(f, Scalar(f, 1));
  for (std::size_t i = from; i + 1 < udegs.size(); i += 2)
    out = out * commutator(FreePoly::var(f, uv(std::uint32_t(i + 1), udegs[i])),
                           FreePoly::var(f, uv(std::uint32_t(i + 2), udegs[i + 1])));
  return out;
}
}  // namespace

FreePoly g_times_brackets(Field f, const std::vector<std::int64_t>& zdegs,
                          const std::vector<std::int64_t>& udegs) {
  if (udegs.size() % 2 != 0) throw error("bracket tail needs an even number of u's");
  check_odd_positive(zdegs);
  check_even(udegs);
  return g_poly(f, zdegs) * bracket_tail(f, udegs, 0);
}

FreePoly g_bracket_first(Field f, const std::vector<std::int64_t>& zdegs,
                         const std::vector<std::int64_t>& udegs) {
  if (udegs.size() % 2 != 1) throw error("leading bracket needs an odd number of u's");
  check_odd_positive(zdegs);
  check_even(udegs);
  FreePoly head = commutator(g_poly(f, zdegs), FreePoly::var(f, uv(1, udegs[0])));
  return head * bracket_tail(f, udegs, 1);
}

FreePoly g_times_extra_bracket(Field f, const std::vector<std::int64_t>& zdegs,
                               const std::vector<std::int64_t>& udegs) {
  if (udegs.size() % 2 != 1) throw error("extra bracket needs an odd number of u's");
  if (zdegs.size() < 2) throw error("extra bracket needs at least two z's");
  check_odd_positive(zdegs);
  check_even(udegs);
  std::vector<std::int64_t> head(zdegs.begin(), zdegs.end() - 1);
  FreePoly g = g_poly(f, head);
  GVar last = zv(std::uint32_t(zdegs.size()), zdegs.back());
  FreePoly out = g * commutator(FreePoly::var(f, last), FreePoly::var(f, uv(1, udegs[0])));
  return out * bracket_tail(f, udegs, 1);
}

namespace {
void append_negative_vars(std::vector<FreePoly>& out, Field f, std::int64_t dmin) {
  for (std::int64_t d = dmin; d <= -1; ++d) out.push_back(FreePoly::var(f, xv(1, d)));
}

void append_triples(std::vector<FreePoly>& out, Field f, std::int64_t dmin, std::int64_t dmax) {
  for (std::int64_t a = dmin; a <= dmax; ++a)
    for (std::int64_t b = dmin; b <= dmax; ++b)
      for (std::int64_t c = dmin; c <= dmax; ++c)
        out.push_back(commutator({FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b)),
                                  FreePoly::var(f, xv(3, c))}));
}

FreePoly power(Field f, const GVar& v, std::uint32_t e) {
  return FreePoly::var(f, v).pow(e);
}
}  // namespace

std::vector<FreePoly> ecan_list(Field f, std::int64_t dmin, std::int64_t dmax,
                                std::uint32_t charp) {
  std::vector<FreePoly> out;
  append_negative_vars(out, f, dmin);
  for (std::int64_t a = std::max<std::int64_t>(dmin, 0); a <= dmax; ++a)
    for (std::int64_t b = a; b <= dmax; ++b) {
      FreePoly xa = FreePoly::var(f, xv(1, a)), xb = FreePoly::var(f, xv(2, b));
      if (a % 2 == 0 || b % 2 == 0)
        out.push_back(commutator(xa, xb));
      else
        out.push_back(anticommutator(xa, xb));
    }
  if (charp != 0)
    for (std::int64_t d = 2; d <= dmax; d += 2) out.push_back(power(f, xv(1, d), charp));
  return out;
}

std::vector<FreePoly> einf_list(Field f, std::int64_t dmin, std::int64_t dmax,
                                std::uint32_t charp) {
  std::vector<FreePoly> out;
  append_negative_vars(out, f, dmin);
  append_triples(out, f, std::max<std::int64_t>(dmin, 0), dmax);
  if (charp != 0)
    for (std::int64_t d = 1; d <= dmax; ++d) out.push_back(power(f, xv(1, d), charp));
  return out;
}

std::vector<FreePoly> ekstar_list(Field f, std::uint32_t k, std::int64_t dmin,
                                  std::int64_t dmax, std::uint32_t charp) {
  std::vector<FreePoly> out;
  for (std::int64_t d = dmin; d <= dmax; ++d)
    if (d < 0 || d > std::int64_t(k)) out.push_back(FreePoly::var(f, xv(1, d)));
  append_triples(out, f, std::max<std::int64_t>(dmin, 0),
                 std::min<std::int64_t>(dmax, std::int64_t(k)));
  if (charp != 0)
    for (std::int64_t t = 1; t * std::int64_t(charp) <= std::int64_t(k); ++t)
      out.push_back(power(f, xv(1, t), charp));
  return out;
}

std::vector<FreePoly> ek_list(Field f, std::uint32_t k, std::int64_t dmax) {
  if (k == 0) throw error("ek list needs k >= 1");
  std::vector<FreePoly> out;
  append_negative_vars(out, f, -dmax);
  append_triples(out, f, 0, dmax);
  const auto odds = range_list(1, dmax, 2, 1);
  const auto evens = range_list(0, dmax, 2, 0);
  if (k % 2 == 0) {
    tuples(evens, std::size_t(k) + 1, [&](const std::vector<std::int64_t>& ud) {
      for (std::int64_t d = -dmax; d <= dmax; ++d) out.push_back(even_chain_bracket(f, ud, d));
    });
  } else {
    tuples(evens, std::size_t(k) + 1,
           [&](const std::vector<std::int64_t>& ud) { out.push_back(even_chain(f, ud)); });
  }
  for (std::uint32_t l = 0; l <= k; ++l) {
    const std::size_t zcount = std::size_t(k) - l + 2;
    if (l % 2 == 0) {
      tuples(odds, zcount, [&](const std::vector<std::int64_t>& zd) {
        tuples(evens, l, [&](const std::vector<std::int64_t>& ud) {
          out.push_back(g_times_brackets(f, zd, ud));
        });
      });
    } else {
      tuples(odds, zcount, [&](const std::vector<std::int64_t>& zd) {
        tuples(evens, l, [&](const std::vector<std::int64_t>& ud) {
          out.push_back(g_bracket_first(f, zd, ud));
        });
      });
      tuples(odds, zcount + 1, [&](const std::vector<std::int64_t>& zd) {
        tuples(evens, l, [&](const std::vector<std::int64_t>& ud) {
          out.push_back(g_times_extra_bracket(f, zd, ud));
        });
      });
    }
  }
  return out;
}

std::vector<FreePoly> rinf_list(Field f, std::int64_t r, std::int64_t dmax,
                                std::uint32_t charp) {
  if (r <= 0) throw error("uniform grading step must be positive");
  std::vector<FreePoly> out;
  for (std::int64_t d = -dmax; d <= dmax; ++d)
    if (d < 0 || d % r != 0) out.push_back(FreePoly::var(f, xv(1, d)));
  for (std::int64_t a = 0; 2 * r * a <= dmax; ++a)
    for (std::int64_t b = 0; r * b <= dmax; ++b)
      out.push_back(commutator(FreePoly::var(f, xv(1, 2 * r * a)), FreePoly::var(f, xv(2, r * b))));
  for (std::int64_t a = 1; r * a <= dmax; a += 2)
    for (std::int64_t b = a; r * b <= dmax; b += 2)
      out.push_back(anticommutator(FreePoly::var(f, xv(1, r * a)), FreePoly::var(f, xv(2, r * b))));
  if (charp != 0)
    for (std::int64_t a = 2; r * a <= dmax; a += 2) out.push_back(power(f, xv(1, r * a), charp));
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> pq_split(std::int64_t d, std::int64_t p,
                                                              std::int64_t q, std::int64_t k) {
  if (d < 0) return std::nullopt;
  for (std::int64_t x = 0; x <= k && p * x <= d; ++x)
    if ((d - p * x) % q == 0) return std::make_pair(x, (d - p * x) / q);
  return std::nullopt;
}

std::vector<FreePoly> pq1_list(Field f, std::int64_t p, std::int64_t q, std::int64_t dmax) {
  std::vector<FreePoly> out;
  std::vector<std::int64_t> central, anti, odd_x;  // x+y even, x=0 & y odd or x=1 & y even, x=1
  for (std::int64_t d = -dmax; d <= dmax; ++d) {
    auto s = pq_split(d, p, q, 1);
    if (!s) {
      out.push_back(FreePoly::var(f, xv(1, d)));
      continue;
    }
    if ((s->first + s->second) % 2 == 0)
      central.push_back(d);
    else
      anti.push_back(d);
    if (s->first == 1) odd_x.push_back(d);
  }
  for (auto a : central) {
    for (auto b : central) out.push_back(commutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
    for (auto b : anti) out.push_back(commutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
  }
  for (auto a : anti)
    for (auto b : anti)
      if (a <= b)
        out.push_back(anticommutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
  for (auto a : odd_x)
    for (auto b : odd_x)
      if (a <= b) {
        Monomial m{xv(1, a), xv(2, b)};
        out.push_back(FreePoly::monomial(f, m, Scalar(f, 1)));
      }
  return out;
}

std::vector<FreePoly> pqk_list(Field f, std::int64_t p, std::int64_t q, std::uint32_t k,
                               std::int64_t dmax, std::uint32_t nmax) {
  std::vector<FreePoly> out;
  std::vector<std::int64_t> central, anti;
  std::vector<std::pair<std::int64_t, std::int64_t>> mixed;  // (degree, x-part >= 1)
  for (std::int64_t d = -dmax; d <= dmax; ++d) {
    auto s = pq_split(d, p, q, k);
    if (!s) {
      out.push_back(FreePoly::var(f, xv(1, d)));
      continue;
    }
    if ((s->first + s->second) % 2 == 0)
      central.push_back(d);
    else
      anti.push_back(d);
    if (s->first >= 1) mixed.emplace_back(d, s->first);
  }
  for (auto a : central) {
    for (auto b : central) out.push_back(commutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
    for (auto b : anti) out.push_back(commutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
  }
  for (auto a : anti)
    for (auto b : anti)
      if (a <= b)
        out.push_back(anticommutator(FreePoly::var(f, xv(1, a)), FreePoly::var(f, xv(2, b))));
  // monomials in variables of positive x-part with total x-part exceeding k;
  // nondecreasing degree tuples up to nmax variables
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t xsum) {
    if (xsum > std::int64_t(k)) {
      Monomial m;
      for (std::size_t i = 0; i < pick.size(); ++i)
        m.push_back(xv(std::uint32_t(i + 1), mixed[pick[i]].first));
      out.push_back(FreePoly::monomial(f, m, Scalar(f, 1)));
      return;  // minimal violating tuples suffice; longer ones are consequences
    }
    if (pick.size() == nmax) return;
    for (std::size_t i = from; i < mixed.size(); ++i) {
      pick.push_back(i);
      rec(i, xsum + mixed[i].second);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace gex
