#include "gex/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "gex/errors.hpp"
#include "gex/families.hpp"

namespace gex {

namespace {

// Hand-rolled recursive descent over a raw string.  Positions are byte
// offsets into the original text and end up in parse_error::pos.
class PolyParser {
 public:
  PolyParser(Field f, const std::string& text) : f_(f), s_(text) {}

  FreePoly run() {
    FreePoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  BigInt nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return BigInt(s_.substr(start, pos_ - start));
  }

  std::int64_t small_int(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (s_[i] - '0');
      if (v > (std::int64_t(1) << 40)) fail("integer out of range");
    }
    return neg ? -v : v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // Registers a variable occurrence; the same letter+index may not switch
  // degrees inside one expression.
  GVar make_var(char letter, std::uint32_t index, std::int64_t degree, std::size_t at) {
    const auto key = std::make_pair(letter, index);
    auto it = degrees_.find(key);
    if (it == degrees_.end()) {
      degrees_.emplace(key, degree);
    } else if (it->second != degree) {
      throw parse_error(
          "conflicting degree for " + std::string(1, letter) + std::to_string(index), at);
    }
    return GVar{letter, index, degree};
  }

  FreePoly variable(const std::string& id, std::size_t at) {
    if (!std::isalpha(static_cast<unsigned char>(id[0])))
      throw parse_error("bad variable name '" + id + "'", at);
    std::uint64_t idx = 0;
    for (std::size_t i = 1; i < id.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(id[i])))
        throw parse_error("bad variable name '" + id + "' (want letter then digits)", at);
      idx = idx * 10 + std::uint64_t(id[i] - '0');
      if (idx > 0xffffffffull) throw parse_error("variable index out of range", at);
    }
    if (id.size() < 2) throw parse_error("variable '" + id + "' needs an index", at);
    expect('@', "after the variable name");
    // no whitespace between a sign and its digits
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected digits after '-'");
    }
    std::int64_t d = small_int(false);
    if (neg) d = -d;
    return FreePoly::var(f_, make_var(id[0], std::uint32_t(idx), d, at));
  }

  std::vector<std::int64_t> int_group() {
    std::vector<std::int64_t> out;
    if (peek() == ';' || peek() == ')') return out;  // empty group
    out.push_back(small_int(true));
    while (eat(',')) out.push_back(small_int(true));
    return out;
  }

  // Macro argument list: '(' group (';' group)* ')'.
  std::vector<std::vector<std::int64_t>> macro_args() {
    expect('(', "to open the macro arguments");
    std::vector<std::vector<std::int64_t>> groups;
    groups.push_back(int_group());
    while (eat(';')) groups.push_back(int_group());
    expect(')', "to close the macro arguments");
    return groups;
  }

  void register_poly_vars(const FreePoly& p, std::size_t at) {
    for (const auto& v : p.variables()) make_var(v.letter, v.index, v.degree, at);
  }

  FreePoly macro(const std::string& id, std::size_t at) {
    const auto groups = macro_args();
    auto need_groups = [&](std::size_t n) {
      if (groups.size() != n)
        throw parse_error(id + " takes " + std::to_string(n) + " argument groups", at);
    };
    auto count_arg = [&](const std::vector<std::int64_t>& g, const char* what) {
      if (g.size() != 1 || g[0] < 1)
        throw parse_error(std::string("expected ") + what + " as a single positive integer", at);
      return std::uint32_t(g[0]);
    };
    FreePoly out(f_);
    if (id == "s_n") {
      need_groups(2);
      const std::uint32_t n = count_arg(groups[0], "n");
      if (groups[1].size() != n) throw parse_error("s_n needs n degrees", at);
      std::vector<GVar> vars;
      for (std::uint32_t i = 0; i < n; ++i) vars.push_back(GVar{'x', i + 1, groups[1][i]});
      out = standard_poly(f_, vars);
    } else if (id == "t_2n") {
      need_groups(2);
      const std::uint32_t n = count_arg(groups[0], "n");
      if (groups[1].size() != 2 * std::size_t(n)) throw parse_error("t_2n needs 2n degrees", at);
      out = t_chain(f_, n, groups[1]);
    } else if (id == "g_m") {
      need_groups(2);
      const std::uint32_t m = count_arg(groups[0], "m");
      if (groups[1].size() != m) throw parse_error("g_m needs m degrees", at);
      out = g_poly(f_, groups[1]);
    } else if (id == "C_D") {
      need_groups(2);
      const std::uint32_t k = count_arg(groups[0], "k");
      if (groups[1].size() != k) throw parse_error("C_D needs k counts", at);
      std::vector<std::uint32_t> counts;
      for (std::int64_t l : groups[1]) {
        if (l < 0) throw parse_error("C_D counts must be nonnegative", at);
        counts.push_back(std::uint32_t(l));
      }
      out = capacity_monomial(f_, counts);
    } else if (id == "P_k") {
      out = pk_macro(groups, at);
    } else {
      throw parse_error("unknown macro '" + id + "'", at);
    }
    register_poly_vars(out, at);
    return out;
  }

  FreePoly pk_macro(const std::vector<std::vector<std::int64_t>>& groups, std::size_t at) {
    if (groups.size() < 2 || groups[0].size() != 1 || groups[1].size() != 1)
      throw parse_error("P_k wants (k; item; ...)", at);
    if (groups[0][0] < 1) throw parse_error("P_k needs k >= 1", at);
    const std::uint32_t k = std::uint32_t(groups[0][0]);
    const std::int64_t item = groups[1][0];
    auto more = [&](std::size_t n) {
      if (groups.size() != 2 + n)
        throw parse_error("P_k item " + std::to_string(item) + " takes " + std::to_string(n) +
                              " extra argument groups",
                          at);
    };
    switch (item) {
      case 1: {
        more(1);
        if (groups[2].size() != 1 || groups[2][0] >= 0)
          throw parse_error("P_k item 1 wants one negative degree", at);
        return FreePoly::var(f_, GVar{'x', 1, groups[2][0]});
      }
      case 2: {
        more(1);
        if (groups[2].size() != 3) throw parse_error("P_k item 2 wants three degrees", at);
        return commutator({FreePoly::var(f_, GVar{'x', 1, groups[2][0]}),
                           FreePoly::var(f_, GVar{'x', 2, groups[2][1]}),
                           FreePoly::var(f_, GVar{'x', 3, groups[2][2]})});
      }
      case 3: {
        more(2);
        if (k % 2 != 0) throw parse_error("P_k item 3 needs even k", at);
        if (groups[2].size() != std::size_t(k) + 1)
          throw parse_error("P_k item 3 wants k+1 even degrees", at);
        if (groups[3].size() != 1) throw parse_error("P_k item 3 wants one x-degree", at);
        return even_chain_bracket(f_, groups[2], groups[3][0]);
      }
      case 4: {
        more(1);
        if (k % 2 != 1) throw parse_error("P_k item 4 needs odd k", at);
        if (groups[2].size() != std::size_t(k) + 1)
          throw parse_error("P_k item 4 wants k+1 even degrees", at);
        return even_chain(f_, groups[2]);
      }
      case 5:
      case 6:
      case 7: {
        more(2);
        const auto& zd = groups[2];
        const auto& ud = groups[3];
        const std::size_t l = ud.size();
        if (l > k) throw parse_error("P_k items 5-7 need l <= k", at);
        const std::size_t want_z = std::size_t(k) - l + (item == 7 ? 3 : 2);
        if (zd.size() != want_z)
          throw parse_error("P_k item " + std::to_string(item) + " wants " +
                                std::to_string(want_z) + " z-degrees here",
                            at);
        if (item == 5) {
          if (l % 2 != 0) throw parse_error("P_k item 5 needs an even number of u's", at);
          return g_times_brackets(f_, zd, ud);
        }
        if (l % 2 != 1)
          throw parse_error("P_k item " + std::to_string(item) + " needs an odd number of u's",
                            at);
        return item == 6 ? g_bracket_first(f_, zd, ud) : g_times_extra_bracket(f_, zd, ud);
      }
      default:
        throw parse_error("P_k item must be 1..7", at);
    }
  }

  FreePoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = nat();
      BigInt den = 1;
      if (eat('/')) {
        den = nat();
        if (den == 0) fail("zero denominator");
      }
      return FreePoly::constant(f_, Scalar::fraction(f_, num, den));
    }
    if (c == '(') {
      ++pos_;
      FreePoly p = expr();
      expect(')', "to close the parenthesis");
      return p;
    }
    if (c == '[') {
      ++pos_;
      std::vector<FreePoly> args;
      args.push_back(expr());
      while (eat(',')) args.push_back(expr());
      expect(']', "to close the commutator");
      if (args.size() < 2) fail("a commutator needs at least two entries");
      return commutator(args);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string id = ident();
      if (id == "g_m" || id == "t_2n" || id == "s_n" || id == "P_k" || id == "C_D")
        return macro(id, at);
      return variable(id, at);
    }
    fail("expected a number, variable, '(', or '['");
  }

  FreePoly factor() {
    FreePoly p = primary();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      std::int64_t e = small_int(false);
      if (e > 64) fail("exponent out of range");
      p = p.pow(std::uint32_t(e));
    }
    return p;
  }

  // A factor can follow another without '*'.
  bool starts_factor() {
    const char c = peek();
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c));
  }

  FreePoly term() {
    FreePoly p = factor();
    for (;;) {
      if (eat('*')) {
        p *= factor();
      } else if (starts_factor()) {
        p *= factor();
      } else {
        return p;
      }
    }
  }

  FreePoly expr() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    FreePoly p = term();
    if (neg) p = -p;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return p;
      ++pos_;
      FreePoly t = term();
      p = c == '+' ? p + t : p - t;
    }
  }

  Field f_;
  const std::string& s_;
  std::size_t pos_ = 0;
  std::map<std::pair<char, std::uint32_t>, std::int64_t> degrees_;
};

}  // namespace

FreePoly parse_poly(Field f, const std::string& text) { return PolyParser(f, text).run(); }

Element parse_element(Field f, std::uint32_t rank, const std::string& text) {
  Element out(f, rank);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto nat = [&]() -> BigInt {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number", pos);
    return BigInt(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos == text.size()) throw parse_error("empty element", pos);
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", pos);
    }
    first = false;
    skip_ws();
    Scalar c = Scalar::one(f);
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      BigInt num = nat();
      BigInt den = 1;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = nat();
        if (den == 0) throw parse_error("zero denominator", pos);
      }
      c = Scalar::fraction(f, num, den);
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    BasisWord w;
    bool saw_word = false;
    while (pos < text.size() && text[pos] == 'e') {
      ++pos;
      std::size_t start = pos;
      std::uint64_t idx = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        idx = idx * 10 + std::uint64_t(text[pos] - '0');
        if (idx > BasisWord::kMaxRank) throw parse_error("generator index out of range", start);
        ++pos;
      }
      if (pos == start) throw parse_error("expected a generator index after 'e'", pos);
      if (idx == 0 || idx > rank) throw parse_error("generator index out of range", start);
      if (w.contains(std::uint32_t(idx))) throw parse_error("repeated generator", start);
      w = w.unite(BasisWord::single(std::uint32_t(idx)));
      saw_word = true;
    }
    if (!saw_coeff && !saw_word) throw parse_error("expected a term", pos);
    if (neg) c = -c;
    out = out + Element::term(f, rank, w, c);
    skip_ws();
  }
  return out;
}

GradingSpec parse_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw parse_error(std::string("expected '") + c + "' in block list", pos);
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip_ws();
    bool neg = pos < text.size() && text[pos] == '-';
    if (neg) ++pos;
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::int64_t(1) << 40)) throw parse_error("degree out of range", start);
      ++pos;
    }
    if (pos == start) throw parse_error("expected an integer", pos);
    return neg ? -v : v;
  };
  for (;;) {
    expect('(');
    Block b;
    b.degree = integer();
    expect(',');
    skip_ws();
    if (text.compare(pos, 3, "inf") == 0) {
      pos += 3;
      b.capacity.reset();
    } else {
      std::int64_t c = integer();
      if (c <= 0) throw parse_error("block capacity must be positive or 'inf'", pos);
      b.capacity = std::uint32_t(c);
    }
    expect(')');
    blocks.push_back(b);
    skip_ws();
    if (pos == text.size()) break;
    expect(';');
    skip_ws();
    if (pos == text.size()) break;  // trailing ';' tolerated
  }
  return GradingSpec::from_blocks(blocks);
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("config line " + std::to_string(lineno) + " has no '='", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw parse_error("config line " + std::to_string(lineno) + " has no key", lineno);
    out[key] = val;
  }
  return out;
}

}  // namespace gex
