#include "gex/element.hpp"

namespace gex {

Element::Element(Field f, std::uint32_t rank) : field_(f), rank_(rank) {
  if (rank == 0 || rank > BasisWord::kMaxRank)
    throw error("rank " + std::to_string(rank) + " out of range 1.." +
                std::to_string(BasisWord::kMaxRank));
}

Element Element::unit(Field f, std::uint32_t rank) {
  return term(f, rank, BasisWord(), Scalar::one(f));
}

Element Element::generator(Field f, std::uint32_t rank, std::uint32_t i) {
  if (i == 0 || i > rank)
    throw error("generator e" + std::to_string(i) + " exceeds rank " + std::to_string(rank));
  return term(f, rank, BasisWord::single(i), Scalar::one(f));
}

Element Element::term(Field f, std::uint32_t rank, const BasisWord& w, const Scalar& c) {
  Element e(f, rank);
  e.add_term(w, c);
  return e;
}

void Element::add_term(const BasisWord& w, const Scalar& c) {
  if (w.max_index() > rank_)
    throw error("word " + w.str() + " exceeds rank " + std::to_string(rank_));
  if (!(c.field() == field_)) throw error("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& o) const {
  if (!(field_ == o.field_)) throw error("element field mismatch");
  if (rank_ != o.rank_)
    throw error("element rank mismatch: " + std::to_string(rank_) + " vs " +
                std::to_string(o.rank_));
}

Element Element::operator-() const {
  Element r(field_, rank_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Element Element::operator+(const Element& o) const {
  check_compatible(o);
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
  check_compatible(o);
  Element r(field_, rank_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) {
      auto prod = BasisWord::mul(u, v);
      if (!prod) continue;
      Scalar c = a * b;
      if (prod->first < 0) c = -c;
      r.add_term(prod->second, c);
    }
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(field_, rank_);
  if (c.is_zero()) return r;
  for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
  return r;
}

bool Element::operator==(const Element& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

Scalar Element::coefficient(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

BasisWord Element::support() const {
  BasisWord s;
  for (const auto& [w, c] : terms_) {
    for (std::uint32_t i : w.indices())
      if (!s.contains(i)) s = s.unite(BasisWord::single(i));
  }
  return s;
}

int Element::parity() const {
  int p = -1;
  for (const auto& [w, c] : terms_) {
    int wp = w.length() % 2;
    if (p == -1)
      p = wp;
    else if (p != wp)
      return -1;
  }
  return p;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.empty())
      out += cs;
    else if (cs == "1")
      out += w.str();
    else
      out += cs + "*" + w.str();
  }
  return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

Element commutator(const std::vector<Element>& args) {
  if (args.size() < 2) throw error("commutator needs at least two entries");
  Element acc = commutator(args[0], args[1]);
  for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

}  // namespace gex
