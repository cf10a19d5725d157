// gex: graded exterior (Grassmann) algebra toolkit.
//
// Subcommands:
//   eval      evaluate a polynomial under an explicit assignment
//   check     decide whether a polynomial is a graded identity
//   witness   same decision, focused on producing a counterexample
//   span      compare identity space vs generator consequences at one signature
//   verify    run a preconfigured theorem-scale verification
//   gradings  list the built-in grading presets
//
// Exit codes: 0 verified / identity, 1 refuted (witness printed), 2 budget
// exceeded or inconclusive, 3 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gex/checker.hpp"
#include "gex/families.hpp"
#include "gex/parse.hpp"
#include "gex/tideal.hpp"

namespace {

using namespace gex;

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kBudget = 2;
constexpr int kUsage = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Report destination: stdout, or a file when --out is given.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw error("cannot write " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

struct Options {
  std::string field_spec = "q";
  std::uint32_t rank = 0;  // 0: per-command default
  std::string preset;
  std::string blocks;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::uint32_t mod = 0;
  std::string poly;
  std::string poly_file;
  std::string assign;
  std::string vars;
  std::vector<std::string> gens;
  bool proper = false;
  std::string theorem;
  std::uint32_t n_max = 4;
  std::int64_t deg_max = 3;
  std::uint64_t max_profiles = 200000;
  std::uint64_t max_rows = 2000000;
  std::uint32_t max_len = 3;
  std::string out_path;
  std::string config_path;
};

// Maps config-file keys onto the same variables the flags write; a key only
// applies when its flag was not given on the command line.
class Binder {
 public:
  template <typename T>
  void bind(CLI::Option* opt, const std::string& key, T& ref) {
    setters_[key] = {opt, [&ref, key](const std::string& text) {
                       if (!CLI::detail::lexical_cast(text, ref))
                         throw error("bad config value for " + key + ": " + text);
                     }};
  }
  void apply(const std::string& path) const {
    if (path.empty()) return;
    for (const auto& [key, value] : parse_config(slurp(path))) {
      auto it = setters_.find(key);
      if (it == setters_.end()) throw error("unknown config key: " + key);
      if (it->second.first->count() == 0) it->second.second(value);
    }
  }

 private:
  std::map<std::string, std::pair<CLI::Option*, std::function<void(const std::string&)>>>
      setters_;
};

struct Sub {
  CLI::App* app = nullptr;
  Options o;
  Binder binder;
};

void add_field_rank(Sub& s) {
  s.binder.bind(s.app->add_option("--field", s.o.field_spec, "coefficient field: q or fp:<p>"),
                "field", s.o.field_spec);
  s.binder.bind(s.app->add_option("--rank", s.o.rank, "number of algebra generators"), "rank",
                s.o.rank);
}

void add_grading(Sub& s) {
  s.binder.bind(
      s.app->add_option("--grading", s.o.preset, "grading preset name (see `gex gradings`)"),
      "grading", s.o.preset);
  s.binder.bind(s.app->add_option("--blocks", s.o.blocks,
                                  "custom list grading \"(d,c);(d,c);...\", c a count or inf"),
                "blocks", s.o.blocks);
  s.binder.bind(s.app->add_option("--k", s.o.k, "preset parameter k"), "k", s.o.k);
  s.binder.bind(s.app->add_option("--r", s.o.r, "preset parameter r"), "r", s.o.r);
  s.binder.bind(s.app->add_option("--p", s.o.p, "preset parameter p"), "p", s.o.p);
  s.binder.bind(s.app->add_option("--q", s.o.q, "preset parameter q"), "q", s.o.q);
  s.binder.bind(s.app->add_option("--mod", s.o.mod, "quotient the grading degrees mod m"), "mod",
                s.o.mod);
}

void add_poly(Sub& s) {
  s.binder.bind(s.app->add_option("--poly", s.o.poly, "polynomial expression"), "poly", s.o.poly);
  s.binder.bind(s.app->add_option("--poly-file", s.o.poly_file, "file holding the expression"),
                "poly-file", s.o.poly_file);
}

void add_budgets(Sub& s) {
  s.binder.bind(s.app->add_option("--n-max", s.o.n_max, "largest signature size"), "n-max",
                s.o.n_max);
  s.binder.bind(s.app->add_option("--deg-max", s.o.deg_max, "degree window bound"), "deg-max",
                s.o.deg_max);
  s.binder.bind(s.app->add_option("--max-profiles", s.o.max_profiles,
                                  "substitution shape enumeration cap"),
                "max-profiles", s.o.max_profiles);
  s.binder.bind(s.app->add_option("--max-rows", s.o.max_rows, "consequence row cap"), "max-rows",
                s.o.max_rows);
  s.binder.bind(
      s.app->add_option("--max-len", s.o.max_len, "longest monomial packed into one slot"),
      "max-len", s.o.max_len);
}

void add_out_config(Sub& s) {
  s.binder.bind(s.app->add_option("--out", s.o.out_path, "write the report to this file"), "out",
                s.o.out_path);
  s.app->add_option("--config", s.o.config_path, "key=value defaults; flags take precedence");
}

Field make_field(const Options& o) {
  if (o.field_spec == "q" || o.field_spec == "Q") return Field::rationals();
  if (o.field_spec.rfind("fp:", 0) == 0) {
    std::uint32_t p = 0;
    if (!CLI::detail::lexical_cast(o.field_spec.substr(3), p))
      throw error("bad field spec: " + o.field_spec);
    return Field::prime(p);
  }
  throw error("field must be q or fp:<p>, got " + o.field_spec);
}

GradingSpec make_grading(const Options& o, bool allow_default_trivial = false) {
  GradingSpec g = GradingSpec::trivial();
  if (!o.blocks.empty()) {
    g = parse_blocks(o.blocks);
  } else if (!o.preset.empty()) {
    if (o.preset == "trivial") {
      g = GradingSpec::trivial();
    } else {
      std::vector<std::int64_t> params;
      if (o.preset == "k" || o.preset == "k_star") {
        if (o.k <= 0) throw error("preset " + o.preset + " needs --k");
        params = {o.k};
      } else if (o.preset == "r_infinity") {
        if (o.r == 0) throw error("preset r_infinity needs --r");
        params = {o.r};
      } else if (o.preset == "pq_1_infinity") {
        if (o.p <= 0 || o.q <= 0) throw error("preset pq_1_infinity needs --p and --q");
        params = {o.p, o.q};
      } else if (o.preset == "pq_k_infinity") {
        if (o.p <= 0 || o.q <= 0 || o.k <= 0)
          throw error("preset pq_k_infinity needs --p, --q and --k");
        params = {o.p, o.q, o.k};
      }
      g = grading_preset(o.preset, params);
    }
  } else if (!allow_default_trivial) {
    throw error("a grading is required (--grading or --blocks)");
  }
  if (o.mod > 0) g = g.quotient(o.mod);
  return g;
}

FreePoly load_poly(const Options& o, Field f) {
  if (!o.poly.empty() && !o.poly_file.empty())
    throw error("give either --poly or --poly-file, not both");
  if (!o.poly.empty()) return parse_poly(f, o.poly);
  if (!o.poly_file.empty()) return parse_poly(f, slurp(o.poly_file));
  throw error("a polynomial is required (--poly or --poly-file)");
}

// ---------------------------------------------------------------------------
// eval

std::uint32_t derive_rank(const std::string& assign_text) {
  std::uint32_t best = 1;
  for (std::size_t i = 0; i + 1 < assign_text.size(); ++i) {
    if (assign_text[i] != 'e' || !std::isdigit(static_cast<unsigned char>(assign_text[i + 1])))
      continue;
    std::uint32_t v = 0;
    std::size_t j = i + 1;
    while (j < assign_text.size() && std::isdigit(static_cast<unsigned char>(assign_text[j])))
      v = v * 10 + static_cast<std::uint32_t>(assign_text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

GVar single_variable(Field f, const std::string& text) {
  const FreePoly p = parse_poly(f, text);
  if (p.term_count() != 1) throw error("not a single variable: " + text);
  const auto& [m, c] = *p.terms().begin();
  if (m.size() != 1 || !c.is_one()) throw error("not a single variable: " + text);
  return m[0];
}

Assignment parse_assignment(Field f, std::uint32_t rank, const std::string& text) {
  Assignment sigma;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t stop = text.find(';', pos);
    if (stop == std::string::npos) stop = text.size();
    const std::string piece = text.substr(pos, stop - pos);
    pos = stop + 1;
    if (piece.find_first_not_of(" \t\n") == std::string::npos) continue;
    const std::size_t eq = piece.find('=');
    if (eq == std::string::npos) throw error("assignment needs var=value, got: " + piece);
    sigma.emplace_back(single_variable(f, piece.substr(0, eq)),
                       parse_element(f, rank, piece.substr(eq + 1)));
  }
  if (sigma.empty()) throw error("empty assignment");
  return sigma;
}

int run_eval(Sub& s) {
  s.binder.apply(s.o.config_path);
  const Field f = make_field(s.o);
  const GradingSpec g = make_grading(s.o, /*allow_default_trivial=*/true);
  const std::uint32_t rank = s.o.rank ? s.o.rank : derive_rank(s.o.assign);
  const Algebra A{f, rank, g};
  const FreePoly poly = load_poly(s.o, f);
  const Assignment sigma = parse_assignment(f, rank, s.o.assign);
  Sink sink;
  sink.open(s.o.out_path);
  sink.stream() << substitute(poly, sigma, A).str() << "\n";
  return kVerified;
}

// ---------------------------------------------------------------------------
// check / witness

std::vector<FreePoly> mh_components(const FreePoly& f) {
  std::map<std::map<GVar, std::uint32_t>, FreePoly> comp;
  for (const auto& [m, c] : f.terms()) {
    std::map<GVar, std::uint32_t> key;
    for (const auto& v : m) ++key[v];
    comp.try_emplace(key, f.field()).first->second.add_term(m, c);
  }
  std::vector<FreePoly> out;
  out.reserve(comp.size());
  for (auto& [key, p] : comp) out.push_back(std::move(p));
  return out;
}

// Turns a witness of one multihomogeneous component into a witness for the
// whole polynomial by scaling each assigned value; distinct multiplicity
// vectors cannot cancel for every choice of scales (characteristic 0).
std::optional<Witness> rescale_witness(const FreePoly& f, const Algebra& A, const Witness& w) {
  Assignment base = w.assignment;
  for (const auto& v : f.variables()) {
    bool have = false;
    for (const auto& [u, val] : base) have = have || u == v;
    if (!have) base.emplace_back(v, Element(A.field, w.rank));
  }
  const Algebra Aw{A.field, w.rank, A.grading};
  for (long long t = 1; t <= 64; ++t) {
    Assignment sigma;
    long long i = 0;
    for (const auto& [v, val] : base)
      sigma.emplace_back(v, val.scaled(Scalar(A.field, 1 + (t * ++i) % 97)));
    Element value = substitute(f, sigma, Aw);
    if (!value.is_zero()) return Witness{sigma, value, w.rank};
  }
  return std::nullopt;
}

struct Decision {
  int code = kBudget;
  bool identity = false;
  std::optional<Witness> witness;
};

Decision decide_component(const FreePoly& f, const Algebra& A, const Options& o,
                          std::ostream& os) {
  Decision d;
  if (f.is_zero()) {
    d = {kVerified, true, std::nullopt};
    return d;
  }
  if (A.grading.is_list() && f.is_multilinear()) {
    CheckBudget b;
    b.max_profiles = o.max_profiles;
    const MultilinearReport rep = is_identity_multilinear(f, A, b);
    os << "profiles: " << rep.profile_count << (rep.complete ? "" : " (incomplete enumeration)")
       << "\n";
    if (rep.identity) {
      for (const auto& [prof, val] : rep.certificates)
        os << "  " << prof.str() << " -> " << val.str() << "\n";
      if (!rep.note.empty()) os << "note: " << rep.note << "\n";
      d.identity = true;
      d.code = rep.complete ? kVerified : kBudget;
      return d;
    }
    if (!rep.note.empty()) os << "note: " << rep.note << "\n";
    d.witness = rep.witness;
    d.code = rep.witness ? kRefuted : kBudget;
    return d;
  }
  if (A.grading.is_list() && f.is_multihomogeneous()) {
    MhBudget b;
    b.rank = o.rank;
    const MhReport rep = is_identity_multihomogeneous(f, A, b);
    os << "multihomogeneous check at rank " << rep.rank_used << "\n";
    if (!rep.note.empty()) os << "note: " << rep.note << "\n";
    d.identity = rep.identity;
    d.witness = rep.witness;
    d.code = rep.identity ? kVerified : (rep.witness ? kRefuted : kBudget);
    return d;
  }
  if (A.grading.is_list() && A.field.is_rational()) {
    const std::vector<FreePoly> comps = mh_components(f);
    os << "split into " << comps.size()
       << " multihomogeneous components (sound in characteristic 0)\n";
    for (const auto& c : comps) {
      Decision dc = decide_component(c, A, o, os);
      if (dc.code == kVerified) continue;
      if (dc.code == kRefuted && dc.witness) {
        os << "component refuted: " << c.str() << "\n";
        d.witness = rescale_witness(f, A, *dc.witness);
        d.code = d.witness ? kRefuted : kBudget;
        return d;
      }
      d.code = kBudget;
      return d;
    }
    d = {kVerified, true, std::nullopt};
    return d;
  }
  // no complete procedure (index-rule grading, or mixed components over F_p):
  // brute search can only refute
  SearchBudget b;
  if (o.rank) b.rank = o.rank;
  b.max_len = o.max_len;
  os << "no decision procedure for this input; brute-force search (rank " << b.rank
     << ", words up to length " << b.max_len << ")\n";
  d.witness = witness_search(f, A, b);
  d.code = d.witness ? kRefuted : kBudget;
  return d;
}

int run_decide(Sub& s, bool witness_mode) {
  s.binder.apply(s.o.config_path);
  const Field f = make_field(s.o);
  const GradingSpec g = make_grading(s.o);
  const Algebra A{f, s.o.rank ? s.o.rank : 12, g};
  const FreePoly poly = load_poly(s.o, f);
  Sink sink;
  sink.open(s.o.out_path);
  std::ostream& os = sink.stream();
  os << "polynomial: " << poly.str() << "\n";
  os << "grading: " << g.describe() << "\n";
  os << "field: " << f.name() << "\n";
  Decision d = decide_component(poly, A, s.o, os);
  if (d.code == kVerified) {
    os << "verdict: graded identity\n";
    if (witness_mode) os << "no witness exists\n";
  } else if (d.code == kRefuted) {
    os << "verdict: not a graded identity\n";
    if (d.witness) os << d.witness->str() << "\n";
  } else {
    os << "verdict: inconclusive within budget\n";
  }
  return d.code;
}

// ---------------------------------------------------------------------------
// span / verify

std::vector<std::int64_t> parse_degree_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::int64_t d = 0;
    if (!CLI::detail::lexical_cast(piece, d)) throw error("bad degree: " + piece);
    out.push_back(d);
  }
  if (out.empty()) throw error("empty degree list");
  return out;
}

std::vector<GVar> signature_from_degrees(std::vector<std::int64_t> degs) {
  std::sort(degs.begin(), degs.end());
  std::vector<GVar> vars;
  for (std::size_t i = 0; i < degs.size(); ++i)
    vars.push_back(GVar{'x', static_cast<std::uint32_t>(i + 1), degs[i]});
  return vars;
}

// all nondecreasing degree tuples over the pool, sizes 1..n_max
std::vector<std::vector<GVar>> plain_signatures(const std::vector<std::int64_t>& pool,
                                                std::uint32_t n_max) {
  std::vector<std::vector<GVar>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t lo, std::uint32_t left) {
    if (left == 0) {
      out.push_back(signature_from_degrees(cur));
      return;
    }
    for (std::size_t i = lo; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  for (std::uint32_t n = 1; n <= n_max; ++n) rec(0, n);
  return out;
}

// 0-proper signatures: l variables of degree 0 and m of positive degrees
std::vector<std::vector<GVar>> gamma_signatures(std::uint32_t l_max, std::uint32_t m_max,
                                                std::uint32_t n_max, std::int64_t deg_max) {
  std::vector<std::vector<GVar>> out;
  for (std::uint32_t l = 0; l <= l_max; ++l) {
    for (std::uint32_t m = 0; m <= m_max; ++m) {
      if (l + m < 1 || l + m > n_max) continue;
      std::vector<std::int64_t> zdegs(m, 1);
      auto emit = [&]() {
        std::vector<GVar> vars;
        for (std::uint32_t i = 1; i <= l; ++i) vars.push_back(GVar{'y', i, 0});
        for (std::uint32_t i = 1; i <= m; ++i) vars.push_back(GVar{'z', i, zdegs[i - 1]});
        out.push_back(vars);
      };
      std::function<void(std::uint32_t, std::int64_t)> rec = [&](std::uint32_t i,
                                                                 std::int64_t lo) {
        if (i == m) {
          emit();
          return;
        }
        for (std::int64_t d = lo; d <= deg_max; ++d) {
          zdegs[i] = d;
          rec(i + 1, d);
        }
      };
      if (m == 0)
        emit();
      else
        rec(0, 1);
    }
  }
  return out;
}

std::vector<std::int64_t> range_pool(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

// The consequence engine only instantiates generators from the list, so the
// enumeration window has to reach the degree of any slot monomial a signature
// can produce: the sum of the signature's degrees, not the per-variable cap.
std::int64_t signature_weight(const std::vector<std::vector<GVar>>& sigs) {
  std::int64_t w = 0;
  for (const auto& sig : sigs) {
    std::int64_t s = 0;
    for (const GVar& v : sig) s += std::abs(v.degree);
    w = std::max(w, s);
  }
  return w;
}

std::vector<FreePoly> default_generators(Field f, const Options& o, std::int64_t weight) {
  const std::uint32_t charp = f.characteristic();
  const std::int64_t w = std::max(o.deg_max, weight);
  if (o.preset == "can") return ecan_list(f, -o.deg_max, w, charp);
  if (o.preset == "infinity") return einf_list(f, -o.deg_max, w, charp);
  if (o.preset == "k_star")
    return ekstar_list(f, static_cast<std::uint32_t>(o.k), -o.deg_max, w, charp);
  if (o.preset == "k") return ek_list(f, static_cast<std::uint32_t>(o.k), w);
  if (o.preset == "r_infinity") return rinf_list(f, o.r, std::max(w, 2 * o.r), charp);
  if (o.preset == "pq_1_infinity") return pq1_list(f, o.p, o.q, std::max(w, o.p + o.q));
  if (o.preset == "pq_k_infinity")
    return pqk_list(f, o.p, o.q, static_cast<std::uint32_t>(o.k), std::max(w, o.p + o.q),
                    o.n_max);
  throw error("no default generator list for this grading; pass --gen");
}

int generation_result(std::ostream& os, const Algebra& A, const std::vector<FreePoly>& gens,
                      const std::vector<std::vector<GVar>>& sigs, bool proper,
                      const Options& o) {
  os << "grading: " << A.grading.describe() << "\n";
  os << "field: " << A.field.name() << "\n";
  os << "generators: " << gens.size() << ", signatures: " << sigs.size() << "\n";
  SpanOptions opt;
  std::size_t longest = 0;
  for (const auto& sig : sigs) longest = std::max(longest, sig.size());
  opt.max_monomial_len = std::max(o.max_len, static_cast<std::uint32_t>(longest));
  opt.max_rows = o.max_rows;
  CheckBudget b;
  b.max_profiles = o.max_profiles;
  const GenerationReport rep = proper ? verify_generation_proper(A, gens, sigs, opt, b)
                                      : verify_generation(A, gens, sigs, opt, b);
  os << rep.text();
  os << (rep.ok ? "RESULT: verified\n" : "RESULT: FAILED\n");
  return rep.ok ? kVerified : kRefuted;
}

int run_span(Sub& s) {
  s.binder.apply(s.o.config_path);
  const Field f = make_field(s.o);
  const GradingSpec g = make_grading(s.o);
  const Algebra A{f, s.o.rank ? s.o.rank : 16, g};
  if (s.o.vars.empty()) throw error("span needs --vars \"d1,d2,...\"");
  const std::vector<GVar> sig = signature_from_degrees(parse_degree_list(s.o.vars));
  std::vector<FreePoly> gens;
  if (s.o.gens.empty()) {
    gens = default_generators(f, s.o, signature_weight({sig}));
  } else {
    for (const auto& text : s.o.gens) gens.push_back(parse_poly(f, text));
  }
  Sink sink;
  sink.open(s.o.out_path);
  return generation_result(sink.stream(), A, gens, {sig}, s.o.proper, s.o);
}

std::string degree_tuple(const std::vector<GVar>& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i)
    out += (i ? "," : "") + std::to_string(vars[i].degree);
  return out + ")";
}

int psi_result(std::ostream& os, const Algebra& A, std::uint32_t n_max, std::int64_t max_weight,
               const Options& o) {
  os << "grading: " << A.grading.describe() << "\n";
  os << "relabeled plain identities vs graded identities"
     << (max_weight >= 0 ? " (weight <= " + std::to_string(max_weight) + ")" : "") << "\n";
  CheckBudget b;
  b.max_profiles = o.max_profiles;
  bool ok = true;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (const RelabelRow& row : relabel_check(A, n, max_weight, b)) {
      os << "  " << degree_tuple(row.target) << " plain " << row.dim_plain << " graded "
         << row.dim_graded << (row.equal ? "" : "  MISMATCH") << "\n";
      ok = ok && row.equal;
    }
  }
  os << (ok ? "RESULT: verified\n" : "RESULT: FAILED\n");
  return ok ? kVerified : kRefuted;
}

bool negative_single_variable(const FreePoly& g) {
  if (g.term_count() != 1) return false;
  const auto& [m, c] = *g.terms().begin();
  return m.size() == 1 && m[0].degree < 0;
}

int quotient_result(std::ostream& os, Field f, std::uint32_t k, const Options& o) {
  const GradingSpec gq = grading_preset("k", {static_cast<std::int64_t>(k)}).quotient(2);
  const Algebra A{f, 16, gq};
  os << "grading: " << gq.describe() << "\n";
  os << "projecting the degree-graded generator list mod 2; single variables of negative\n"
     << "degree are skipped (their degree class is nonzero mod 2, so they do not project\n"
     << "to identities)\n";
  CheckBudget b;
  b.max_profiles = o.max_profiles;
  std::size_t checked = 0, skipped = 0;
  bool ok = true;
  for (const FreePoly& g : ek_list(f, k, o.deg_max)) {
    if (negative_single_variable(g)) {
      ++skipped;
      continue;
    }
    const FreePoly gp = project_degrees(g, 2);
    const MultilinearReport rep = is_identity_multilinear(gp, A, b);
    ++checked;
    if (!(rep.identity && rep.complete)) {
      ok = false;
      os << "  NOT AN IDENTITY: " << gp.str() << "\n";
    }
  }
  os << "projected generators verified: " << checked << " (skipped " << skipped << ")\n";
  os << (ok ? "RESULT: verified\n" : "RESULT: FAILED\n");
  return ok ? kVerified : kRefuted;
}

int codim_result(std::ostream& os, Field f, std::uint32_t n_max) {
  bool ok = true;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const std::size_t c = ungraded_codim(f, n);
    const std::size_t expect = std::size_t(1) << (n - 1);
    os << "  n=" << n << " codim " << c << " expected " << expect
       << (c == expect ? "" : "  MISMATCH") << "\n";
    ok = ok && c == expect;
  }
  os << (ok ? "RESULT: verified\n" : "RESULT: FAILED\n");
  return ok ? kVerified : kRefuted;
}

std::int64_t need_param(std::int64_t v, const std::string& flag, const std::string& id) {
  if (v <= 0) throw error(id + " needs " + flag);
  return v;
}

int run_verify(Sub& s) {
  s.binder.apply(s.o.config_path);
  const Options& o = s.o;
  const std::string& id = o.theorem;
  const Field f = make_field(o);
  Sink sink;
  sink.open(o.out_path);
  std::ostream& os = sink.stream();
  os << "theorem: " << id << "\n";

  if (id == "Ecan-main") {
    const Algebra A{f, 16, grading_preset("can")};
    return generation_result(os, A, ecan_list(f, -o.deg_max, o.deg_max, f.characteristic()),
                             plain_signatures(range_pool(0, o.deg_max), o.n_max), false, o);
  }
  if (id == "Einf-main") {
    const Algebra A{f, 16, grading_preset("infinity")};
    const auto sigs = plain_signatures(range_pool(0, o.deg_max), o.n_max);
    return generation_result(
        os, A, einf_list(f, -o.deg_max, signature_weight(sigs), f.characteristic()), sigs, false,
        o);
  }
  if (id == "Ekstar-main") {
    const std::int64_t k = need_param(o.k, "--k", id);
    const Algebra A{f, 16, grading_preset("k_star", {k})};
    const auto sigs = plain_signatures(range_pool(0, o.deg_max), o.n_max);
    return generation_result(
        os, A,
        ekstar_list(f, static_cast<std::uint32_t>(k), -o.deg_max, signature_weight(sigs),
                    f.characteristic()),
        sigs, false, o);
  }
  if (id == "Ek-main") {
    const std::int64_t k = need_param(o.k, "--k", id);
    const Algebra A{f, 16, grading_preset("k", {k})};
    return generation_result(os, A, ek_list(f, static_cast<std::uint32_t>(k), o.deg_max),
                             gamma_signatures(3, 2, o.n_max, o.deg_max), true, o);
  }
  if (id == "Rinf-main") {
    const std::int64_t r = need_param(o.r, "--r", id);
    const Algebra A{f, 16, grading_preset("r_infinity", {r})};
    std::vector<std::int64_t> pool{0, r, 2 * r};
    if (r > 1) pool.push_back(1);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return generation_result(os, A,
                             rinf_list(f, r, std::max(o.deg_max, 2 * r), f.characteristic()),
                             plain_signatures(pool, o.n_max), false, o);
  }
  if (id == "Pq1-main" || id == "Pqk-main") {
    const std::int64_t p = need_param(o.p, "--p", id);
    const std::int64_t q = need_param(o.q, "--q", id);
    const std::int64_t k = id == "Pqk-main" ? need_param(o.k, "--k", id) : 1;
    const GradingSpec g = id == "Pqk-main" ? grading_preset("pq_k_infinity", {p, q, k})
                                           : grading_preset("pq_1_infinity", {p, q});
    const Algebra A{f, 16, g};
    std::vector<std::int64_t> pool{1};  // not representable: p < q are odd primes
    for (std::int64_t d = 0; d <= p + q; ++d)
      if (pq_split(d, p, q, k)) pool.push_back(d);
    std::sort(pool.begin(), pool.end());
    const auto gens = id == "Pqk-main"
                          ? pqk_list(f, p, q, static_cast<std::uint32_t>(k),
                                     std::max(o.deg_max, p + q), o.n_max)
                          : pq1_list(f, p, q, std::max(o.deg_max, p + q));
    return generation_result(os, A, gens, plain_signatures(pool, o.n_max), false, o);
  }
  if (id == "Psi-einf") {
    const Algebra A{f, 16, grading_preset("infinity")};
    return psi_result(os, A, o.n_max, -1, o);
  }
  if (id == "Psi-ekstar") {
    const std::int64_t k = need_param(o.k, "--k", id);
    const Algebra A{f, 16, grading_preset("k_star", {k})};
    return psi_result(os, A, o.n_max, k, o);
  }
  if (id == "Quotient-mod2") {
    const std::int64_t k = need_param(o.k, "--k", id);
    return quotient_result(os, f, static_cast<std::uint32_t>(k), o);
  }
  if (id == "Codim-classical") return codim_result(os, f, o.n_max);

  throw error("unknown theorem id: " + id +
              " (known: Ecan-main, Einf-main, Ekstar-main, Ek-main, Rinf-main, Pq1-main, "
              "Pqk-main, Psi-einf, Psi-ekstar, Quotient-mod2, Codim-classical)");
}

int run_gradings(Sub& s) {
  s.binder.apply(s.o.config_path);
  Sink sink;
  sink.open(s.o.out_path);
  std::ostream& os = sink.stream();
  struct Row {
    const char* name;
    const char* params;
    GradingSpec g;
  };
  const std::vector<Row> rows = {
      {"can", "", grading_preset("can")},
      {"k", "--k K", grading_preset("k", {2})},
      {"k_star", "--k K", grading_preset("k_star", {2})},
      {"infinity", "", grading_preset("infinity")},
      {"r_infinity", "--r R", grading_preset("r_infinity", {2})},
      {"pq_1_infinity", "--p P --q Q", grading_preset("pq_1_infinity", {3, 5})},
      {"pq_k_infinity", "--p P --q Q --k K", grading_preset("pq_k_infinity", {3, 5, 2})},
      {"index", "", grading_preset("index")},
      {"trivial", "", GradingSpec::trivial()},
  };
  for (const Row& row : rows) {
    os << row.name;
    if (*row.params) os << "  (" << row.params << ")";
    os << "\n    " << row.g.describe(12) << "\n";
  }
  os << "custom:  --blocks \"(d,c);(d,c);...\"  with c a generator count or inf\n";
  os << "quotient: any of the above with --mod m (degrees taken mod m)\n";
  return kVerified;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Grassmann algebra identity toolkit"};
  app.require_subcommand(1);

  Sub ev, ch, wi, sp, ve, gr;

  ev.app = app.add_subcommand("eval", "evaluate a polynomial under an assignment");
  add_field_rank(ev);
  add_grading(ev);
  add_poly(ev);
  add_out_config(ev);
  ev.binder.bind(
      ev.app->add_option("--assign", ev.o.assign, "substitution \"x1@1=e1+e2; x2@0=1\""),
      "assign", ev.o.assign);

  ch.app = app.add_subcommand("check", "decide whether a polynomial is a graded identity");
  add_field_rank(ch);
  add_grading(ch);
  add_poly(ch);
  add_budgets(ch);
  add_out_config(ch);

  wi.app = app.add_subcommand("witness", "find a refuting substitution");
  add_field_rank(wi);
  add_grading(wi);
  add_poly(wi);
  add_budgets(wi);
  add_out_config(wi);

  sp.app = app.add_subcommand("span", "identity space vs consequence span at one signature");
  add_field_rank(sp);
  add_grading(sp);
  add_budgets(sp);
  add_out_config(sp);
  sp.binder.bind(sp.app->add_option("--vars", sp.o.vars, "signature degrees \"d1,d2,...\""),
                 "vars", sp.o.vars);
  sp.app->add_option("--gen", sp.o.gens, "generator expression (repeatable; default: preset list)");
  sp.binder.bind(sp.app->add_flag("--proper", sp.o.proper, "cut both sides to the 0-proper part"),
                 "proper", sp.o.proper);

  ve.app = app.add_subcommand("verify", "run a preconfigured theorem verification");
  add_field_rank(ve);
  add_budgets(ve);
  add_out_config(ve);
  ve.app->add_option("id", ve.o.theorem, "theorem id (see `gex verify x` for the list)")
      ->required();
  ve.binder.bind(ve.app->add_option("--k", ve.o.k, "parameter k"), "k", ve.o.k);
  ve.binder.bind(ve.app->add_option("--r", ve.o.r, "parameter r"), "r", ve.o.r);
  ve.binder.bind(ve.app->add_option("--p", ve.o.p, "parameter p"), "p", ve.o.p);
  ve.binder.bind(ve.app->add_option("--q", ve.o.q, "parameter q"), "q", ve.o.q);

  gr.app = app.add_subcommand("gradings", "list the built-in grading presets");
  gr.app->add_option("--out", gr.o.out_path, "write the list to this file");
  gr.app->add_option("--config", gr.o.config_path, "accepted for symmetry; unused");

  int rc = kVerified;
  ev.app->callback([&]() { rc = guarded([&]() { return run_eval(ev); }); });
  ch.app->callback([&]() { rc = guarded([&]() { return run_decide(ch, false); }); });
  wi.app->callback([&]() { rc = guarded([&]() { return run_decide(wi, true); }); });
  sp.app->callback([&]() { rc = guarded([&]() { return run_span(sp); }); });
  ve.app->callback([&]() { rc = guarded([&]() { return run_verify(ve); }); });
  gr.app->callback([&]() { rc = guarded([&]() { return run_gradings(gr); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  return rc;
}
