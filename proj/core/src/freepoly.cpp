#include "gex/freepoly.hpp"

#include <algorithm>
#include <set>

namespace gex {

FreePoly FreePoly::var(Field f, const GVar& v) { return monomial(f, {v}, Scalar::one(f)); }

FreePoly FreePoly::monomial(Field f, const Monomial& m, const Scalar& c) {
  FreePoly p(f);
  p.add_term(m, c);
  return p;
}

FreePoly FreePoly::constant(Field f, const Scalar& c) { return monomial(f, {}, c); }

void FreePoly::add_term(const Monomial& m, const Scalar& c) {
  if (!(c.field() == field_)) throw error("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar FreePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

FreePoly FreePoly::operator-() const {
  FreePoly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  if (!(field_ == o.field_)) throw error("field mismatch");
  FreePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const { return *this + (-o); }

FreePoly FreePoly::operator*(const FreePoly& o) const {
  if (!(field_ == o.field_)) throw error("field mismatch");
  FreePoly r(field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
  FreePoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

FreePoly FreePoly::pow(std::uint32_t e) const {
  FreePoly acc = constant(field_, Scalar::one(field_));
  for (std::uint32_t i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::vector<GVar> FreePoly::variables() const {
  std::set<GVar> vs;
  for (const auto& [m, c] : terms_) vs.insert(m.begin(), m.end());
  return {vs.begin(), vs.end()};
}

bool FreePoly::is_multilinear() const {
  if (terms_.empty()) return true;
  std::vector<GVar> vs = variables();
  for (const auto& [m, c] : terms_) {
    if (m.size() != vs.size()) return false;
    std::set<GVar> seen(m.begin(), m.end());
    if (seen.size() != m.size()) return false;
  }
  return true;
}

bool FreePoly::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  std::map<GVar, std::uint32_t> ref;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::map<GVar, std::uint32_t> counts;
    for (const GVar& v : m) ++counts[v];
    if (first) {
      ref = counts;
      first = false;
    } else if (counts != ref) {
      return false;
    }
  }
  return true;
}

std::uint32_t FreePoly::multiplicity(const GVar& v) const {
  if (!is_multihomogeneous()) throw error("multiplicity of a non-multihomogeneous polynomial");
  if (terms_.empty()) return 0;
  const Monomial& m = terms_.begin()->first;
  return static_cast<std::uint32_t>(std::count(m.begin(), m.end(), v));
}

std::string FreePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!ms.empty()) ms += "*";
      ms += m[i].str();
      if (j - i > 1) ms += "^" + std::to_string(j - i);
      i = j;
    }
    if (ms.empty())
      out += cs;
    else if (cs == "1")
      out += ms;
    else
      out += cs + "*" + ms;
  }
  return out;
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly anticommutator(const FreePoly& a, const FreePoly& b) { return a * b + b * a; }

FreePoly commutator(const std::vector<FreePoly>& args) {
  if (args.size() < 2) throw error("commutator needs at least two entries");
  FreePoly acc = commutator(args[0], args[1]);
  for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

Element substitute(const FreePoly& f, const Assignment& sigma, const Algebra& A) {
  if (!(f.field() == A.field)) throw error("polynomial field differs from algebra field");
  std::map<GVar, const Element*> table;
  for (const auto& [v, e] : sigma) {
    if (!(e.field() == A.field)) throw error("assigned value field mismatch");
    if (e.rank() != A.rank) throw error("assigned value rank mismatch");
    for (const auto& [w, c] : e.terms())
      if (A.grading.word_degree(w) != A.grading.reduce(v.degree))
        throw error("value for " + v.str() + " is not homogeneous of its degree");
    table[v] = &e;
  }
  Element acc(A.field, A.rank);
  for (const auto& [m, c] : f.terms()) {
    Element prod = Element::unit(A.field, A.rank);
    for (const GVar& v : m) {
      auto it = table.find(v);
      if (it == table.end()) throw error("no value assigned to " + v.str());
      prod *= *it->second;
      if (prod.is_zero()) break;
    }
    acc += prod.scaled(c);
  }
  return acc;
}

std::int64_t monomial_degree(const Monomial& m, const GradingSpec& g) {
  std::int64_t d = 0;
  for (const GVar& v : m) d += v.degree;
  return g.reduce(d);
}

FreePoly project_degrees(const FreePoly& f, std::uint32_t m) {
  if (m == 0) throw error("projection modulus must be >= 1");
  auto red = [&](std::int64_t d) {
    std::int64_t r = d % m;
    return r < 0 ? r + m : r;
  };
  // distinct variables must stay distinct
  std::vector<GVar> vs = f.variables();
  std::set<GVar> image;
  for (GVar v : vs) {
    v.degree = red(v.degree);
    if (!image.insert(v).second)
      throw error("degree projection collides on " + v.str());
  }
  FreePoly out(f.field());
  for (const auto& [mon, c] : f.terms()) {
    Monomial pm = mon;
    for (GVar& v : pm) v.degree = red(v.degree);
    out.add_term(pm, c);
  }
  return out;
}

}  // namespace gex
