#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <variant>

#include "witt/suites.hpp"
#include "witt/witt.hpp"

namespace witt::cli {

namespace {

using json = nlohmann::ordered_json;

using AnyRing = std::variant<Integers, Rationals, GaussianField, CyclotomicField, IntegersModPM, PerfPolyRing>;

struct Options {
  long p = 0;
  std::string ring;
  std::string b;
  int depth = -1;
  int precision = 0;
  std::uint64_t seed = 1;
  bool as_json = false;
};

// usage-class failure: exit code 2
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\n\r") - a + 1);
}

// n = q^k with q prime
std::pair<long, int> prime_power(long n) {
  for (long q = 2; q <= n; ++q)
    if (n % q == 0) {
      int k = 0;
      while (n % q == 0) {
        n /= q;
        ++k;
      }
      if (n != 1) throw Usage("not a prime power");
      return {q, k};
    }
  throw Usage("not a prime power");
}

long agree(long p, long q, const std::string& desc) {
  if (p != 0 && p != q) throw Usage("ring '" + desc + "' is incompatible with --p " + std::to_string(p));
  return q;
}

AnyRing make_ring(const std::string& desc, long p) {
  std::smatch m;
  const std::string s = trim(desc);
  auto num = [&](int i) { return std::stol(m[i].str()); };
  auto prime = [&] { return p == 0 ? 2 : p; };
  if (s == "Z") return Integers(prime());
  if (s == "Q") return Rationals(prime());
  if (s == "Qi" || s == "Q(i)") return GaussianField(prime());
  if (std::regex_match(s, m, std::regex(R"(Q\(zeta_(\d+)\))"))) {
    auto [q, k] = prime_power(num(1));
    return CyclotomicField(q, k, prime());
  }
  if (std::regex_match(s, m, std::regex(R"(Z/(\d+)\^(\d+))")))
    return IntegersModPM(agree(p, num(1), s), static_cast<int>(num(2)));
  if (std::regex_match(s, m, std::regex(R"(Z\[zeta_(\d+)\]/(\d+)\^(\d+))"))) {
    auto [q, k] = prime_power(num(1));
    const long pp = agree(p, num(2), s);
    if (q != pp) throw Usage("Z[zeta_n]/p^M needs n a power of p");
    return IntegersModPM(pp, static_cast<int>(num(3)), k);
  }
  if (std::regex_match(s, m, std::regex(R"(F_(\d+)\[x\^\(1/(\d+)\^(\d+)\)\])"))) {
    const long pp = agree(p, num(1), s);
    if (num(2) != pp) throw Usage("root exponents must be powers of the characteristic");
    return PerfPolyRing(pp, 1, static_cast<int>(num(3)));
  }
  throw Usage("unknown ring '" + s + "' (try Z, Q, Qi, Q(zeta_8), Z/2^6, Z[zeta_4]/2^3, F_2[x^(1/2^4)])");
}

// --ring names a JSON file or an inline ring; a file may also carry defaults for the flags.
void load_ring_config(Options& o, const CLI::App& app) {
  std::ifstream in(o.ring);
  if (!in) return;
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw Usage("malformed config " + o.ring + ": " + e.what());
  }
  if (!cfg.contains("ring") || !cfg["ring"].is_string()) throw Usage("config " + o.ring + " lacks a \"ring\" string");
  o.ring = cfg["ring"];
  auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  if (cfg.contains("p") && unset("--p")) o.p = cfg["p"];
  if (cfg.contains("b") && unset("--b")) o.b = cfg["b"].is_string() ? cfg["b"].get<std::string>() : cfg["b"].dump();
  if (cfg.contains("depth") && unset("--depth")) o.depth = cfg["depth"];
  if (cfg.contains("precision") && unset("--precision")) o.precision = cfg["precision"];
  if (cfg.contains("seed") && unset("--seed")) o.seed = cfg["seed"];
}

// ---------------------------------------------------------------- expression tokens

struct Token {
  std::string text;
  size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    int depth = 0;
    while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '(' || s[i] == '[') ++depth;
      if (s[i] == ')' || s[i] == ']') --depth;
      if (depth < 0) throw Usage("unbalanced bracket at column " + std::to_string(i + 1));
      ++i;
    }
    if (depth != 0) throw Usage("unbalanced bracket starting at column " + std::to_string(start + 1));
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

// "(a, b, c)" split at top-level commas
std::vector<std::string> split_tuple(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Usage("expected a tuple '(a, b, ...)', got '" + t + "'");
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  if (parts.size() == 1 && parts[0].empty()) throw Usage("empty tuple");
  return parts;
}

template <class R>
typename R::Elem parse_elem(const R& r, const std::string& s, size_t col) {
  try {
    return r.parse(s);
  } catch (const Error& e) {
    throw Usage("at column " + std::to_string(col) + ": " + e.what());
  }
}

template <class R>
std::vector<typename R::Elem> parse_comps(const R& r, const Token& tok) {
  std::vector<typename R::Elem> out;
  for (const auto& part : split_tuple(tok.text)) out.push_back(parse_elem(r, part, tok.col));
  return out;
}

template <class R>
WittVec<R> parse_witt(const R& r, const Token& tok) {
  auto c = parse_comps(r, tok);
  return WittVec<R>(r, std::move(c));
}

template <class R>
json elems_json(const R& r, const std::vector<typename R::Elem>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(r.format(x));
  return a;
}

template <class R>
std::string tuple_str(const R& r, const std::vector<typename R::Elem>& xs) {
  std::string s = "(";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + r.format(xs[i]);
  return s + ")";
}

json norm_json(const ExtNorm& n) {
  json j;
  j["text"] = n.str();
  // the norm is p^{-val}; log_p is the exponent itself
  j["log_p"] = n.is_zero() ? json("-inf") : json(mpq_class(-n.val()).get_str());
  return j;
}

json envelope(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.as_json)
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

mpq_class parse_b(const Options& o, const mpq_class& dflt) {
  if (o.b.empty()) return dflt;
  try {
    return parse_rational(o.b);
  } catch (const Error& e) {
    throw Usage(std::string("--b: ") + e.what());
  }
}

// ---------------------------------------------------------------- compute

int cmd_compute(const Options& o, const std::string& expr, std::ostream& out) {
  auto toks = tokenize(expr);
  if (toks.empty()) throw Usage("empty expression");
  const std::string op = toks[0].text;
  const AnyRing ring = make_ring(o.ring.empty() ? "Z" : o.ring, o.p);
  auto need = [&](size_t n) {
    if (toks.size() != n + 1)
      throw Usage("'" + op + "' takes " + std::to_string(n) + " argument(s), got " + std::to_string(toks.size() - 1));
  };
  return std::visit(
      [&](const auto& r) -> int {
        using R = std::decay_t<decltype(r)>;
        json j = envelope("compute");
        j["op"] = op;
        j["ring"] = r.name();
        j["p"] = r.prime();
        auto vec_out = [&](const WittVec<R>& w) {
          j["value"] = elems_json(r, w.components());
          emit(out, o, j, tuple_str(r, w.components()));
          return kPass;
        };
        auto norm_out = [&](const ExtNorm& n) {
          j["norm"] = norm_json(n);
          emit(out, o, j, n.str());
          return kPass;
        };
        if (op == "ghost") {
          need(1);
          auto g = ghost(parse_witt(r, toks[1]));
          j["value"] = elems_json(r, g.components());
          emit(out, o, j, to_string(g));
          return kPass;
        }
        if (op == "unghost") {
          need(1);
          return vec_out(unghost(GhostVec<R>(r, parse_comps(r, toks[1]))));
        }
        if (op == "add" || op == "sub" || op == "mul") {
          need(2);
          auto x = parse_witt(r, toks[1]), y = parse_witt(r, toks[2]);
          return vec_out(op == "add" ? add(x, y) : op == "sub" ? sub(x, y) : mul(x, y));
        }
        if (op == "neg" || op == "frob" || op == "ver") {
          need(1);
          auto x = parse_witt(r, toks[1]);
          return vec_out(op == "neg" ? neg(x) : op == "frob" ? frobenius(x) : verschiebung(x));
        }
        if (op == "teich") {
          need(2);
          int n = 0;
          try {
            n = std::stoi(toks[2].text);
          } catch (const std::exception&) {
            throw Usage("at column " + std::to_string(toks[2].col) + ": expected a length exponent");
          }
          return vec_out(teichmuller(r, parse_elem(r, toks[1].text, toks[1].col), n));
        }
        if (op == "wnorm") {
          need(1);
          return norm_out(witt_norm(parse_witt(r, toks[1])));
        }
        if (op == "norm") {
          need(1);
          return norm_out(r.norm(parse_elem(r, toks[1].text, toks[1].col)));
        }
        throw Usage("at column " + std::to_string(toks[0].col) + ": unknown operation '" + op +
                    "' (ghost, unghost, add, sub, mul, neg, frob, ver, teich, wnorm, norm)");
      },
      ring);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, const std::string& suite, int samples, const std::string& group, bool timing,
               std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.p = o.p;
  cfg.seed = o.seed;
  cfg.samples = samples;
  cfg.group = group;
  if (!o.b.empty()) cfg.b = parse_b(o, 1);
  cfg.depth = std::max(o.depth, 0);
  cfg.precision = o.precision;
  SuiteReport rep;
  try {
    rep = run_suite(suite, cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownSuite || e.kind() == ErrorKind::MalformedConfig ||
        e.kind() == ErrorKind::BOutOfRange)
      throw Usage(e.what());
    throw;
  }
  const long pass = rep.count(CaseStatus::Pass), failed = rep.count(CaseStatus::Fail),
             inconc = rep.count(CaseStatus::Inconclusive);
  if (o.as_json) {
    json j = envelope("verify");
    j["suite"] = rep.suite;
    j["seed"] = o.seed;
    j["p"] = o.p;
    json cases = json::array();
    for (const auto& c : rep.cases)
      cases.push_back({{"key", c.key},
                       {"status", status_name(c.status)},
                       {"samples", c.samples},
                       {"failures", c.failures},
                       {"detail", c.detail}});
    j["cases"] = cases;
    j["summary"] = {{"cases", rep.cases.size()}, {"pass", pass}, {"fail", failed}, {"inconclusive", inconc}};
    if (timing) j["seconds"] = rep.seconds;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.cases) {
      out << std::left << std::setw(13) << status_name(c.status) << c.key << "  [" << c.samples << " samples";
      if (c.failures) out << ", " << c.failures << " failed";
      out << "]";
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
    out << "suite " << rep.suite << ": " << rep.cases.size() << " cases, " << pass << " pass, " << failed << " fail, "
        << inconc << " inconclusive\n";
  }
  if (timing) err << "elapsed " << std::fixed << std::setprecision(3) << rep.seconds << " s\n";
  return rep.ok() ? kPass : kFailures;
}

// ---------------------------------------------------------------- universal

int cmd_universal_dump(const Options& o, const std::string& kind, int i, std::ostream& out) {
  const long p = o.p == 0 ? 2 : o.p;
  require_prime(p);
  if (i < 0 || i > universal_cap(p)) throw Usage("index must lie in [0, " + std::to_string(universal_cap(p)) + "]");
  const UnivPoly* f = nullptr;
  if (kind == "sum") f = &sum_poly(p, i);
  else if (kind == "prod") f = &prod_poly(p, i);
  else if (kind == "frob") f = &frob_poly(p, i);
  else if (kind == "frob-component") f = &frob_component(p, i);
  else throw Usage("--kind must be sum, prod, frob or frob-component");
  json j = envelope("universal dump");
  j["p"] = p;
  j["kind"] = kind;
  j["index"] = i;
  j["poly"] = format(*f);
  emit(out, o, j, format(*f));
  return kPass;
}

// ---------------------------------------------------------------- arrow

template <class R>
json arrow_json(const ArrowElt<R>& a) {
  json j;
  j["p"] = a.ring().prime();
  j["ring"] = a.ring().name();
  j["depth"] = a.depth();
  json lv = json::array();
  for (const auto& w : a.levels()) lv.push_back(elems_json(a.ring(), w.components()));
  j["levels"] = lv;
  j["certificate"] = a.tail_bound() ? json(norm_json(*a.tail_bound())) : json(nullptr);
  return j;
}

template <class R>
std::string arrow_text(const ArrowElt<R>& a) {
  std::ostringstream os;
  for (int n = 0; n <= a.depth(); ++n) os << "level " << n << ": " << tuple_str(a.ring(), a.level(n).components()) << "\n";
  os << "tail certificate: " << (a.tail_bound() ? a.tail_bound()->str() : "none");
  return os.str();
}

bool is_integer_literal(const std::string& s) { return std::regex_match(trim(s), std::regex(R"([+-]?\d+)")); }

// An integer gives its image at the requested depth; a tuple is a top level (Z/p^M) or a perfect vector.
template <class R>
ArrowElt<R> parse_arrow(const R& r, const std::string& value, int depth) {
  if (is_integer_literal(value)) return arrow_from_integer(r, mpz_class(trim(value)), depth);
  Token tok{value, 1};
  if constexpr (std::is_same_v<R, IntegersModPM>) {
    auto top = parse_witt(r, tok);
    return arrow_from_top(top);
  } else if constexpr (std::is_same_v<R, PerfPolyRing>) {
    return arrow_from_perfect(parse_witt(r, tok), depth);
  } else {
    throw Usage("over " + r.name() + " only integers can be entered as inverse-limit elements");
  }
}

int cmd_arrow(const Options& o, const std::string& action, const std::string& value, std::ostream& out) {
  const AnyRing ring = make_ring(o.ring.empty() ? "Q" : o.ring, o.p);
  const int depth = o.depth < 0 ? 3 : o.depth;
  return std::visit(
      [&](const auto& r) -> int {
        using R = std::decay_t<decltype(r)>;
        json j = envelope("arrow " + action);
        if (action == "norm") {
          auto a = parse_arrow(r, value, depth);
          const mpq_class b = parse_b(o, 1);
          auto n = arrow_norm(a, b);
          j["b"] = b.get_str();
          j["element"] = arrow_json(a);
          j["norm"] = norm_json(n.value);
          j["exact"] = n.exact;
          j["argmax"] = n.argmax;
          std::ostringstream os;
          os << "|x|_{W," << b.get_str() << "} = " << n.value.str() << (n.exact ? " (certified" : " (lower bound")
             << ", attained at level " << n.argmax << ")";
          emit(out, o, j, os.str());
          return kPass;
        }
        if (action == "lift") {
          if constexpr (std::is_same_v<R, IntegersModPM>) {
            const int target = o.depth < 0 ? 1 : o.depth;
            auto a = parse_arrow(r, value, target + r.digits() + 2);
            auto y = lift_mod_p_power(a, target);
            j["input"] = arrow_json(a);
            j["lift"] = arrow_json(y);
            emit(out, o, j, arrow_text(y));
            return kPass;
          } else {
            throw Usage("arrow lift needs a ring Z/p^M or Z[zeta]/p^M");
          }
        }
        if (action == "theta") {
          auto a = parse_arrow(r, value, depth);
          auto t = theta(a);
          j["element"] = arrow_json(a);
          j["theta"] = r.format(t);
          emit(out, o, j, r.format(t));
          return kPass;
        }
        throw Usage("arrow action must be norm, lift or theta");
      },
      ring);
}

// ---------------------------------------------------------------- perfect

std::string join_coeffs(const Trunc& t) {
  std::string s;
  for (size_t i = 0; i < t.c.size(); ++i) s += (i ? ", " : "") + t.c[i].get_str();
  return s;
}

int cmd_perfect_test(const Options& o, int tower_base, std::ostream& out) {
  const std::string desc = o.ring.empty() ? "Z" : trim(o.ring);
  long p = o.p == 0 ? 2 : o.p;
  int k = 0;
  std::smatch m;
  if (std::regex_match(desc, m, std::regex(R"(Z\[zeta_(\d+)\])"))) {
    auto [q, kk] = prime_power(std::stol(m[1].str()));
    p = agree(o.p, q, desc);
    k = kk;
  } else if (desc != "Z") {
    throw Usage("perfect test takes --ring Z or Z[zeta_n] with n a prime power");
  }
  PerfectVerdict v = tower_base >= 0 ? witt_perfect_tower_test(p, tower_base, o.depth < 0 ? 0 : o.depth)
                                     : witt_perfect_test(p, k);
  json j = envelope("perfect test");
  j["ring"] = v.ring;
  j["p"] = p;
  j["verdict"] = v.verdict();
  j["failed_condition"] = v.failed_condition;
  j["counterexample"] = v.counterexample ? json("(" + join_coeffs(*v.counterexample) + ")") : json(nullptr);
  json ws = json::array();
  for (const auto& w : v.witnesses)
    ws.push_back({{"a", "(" + join_coeffs(w.a) + ")"}, {"b", "(" + join_coeffs(w.b) + ")"}, {"condition", w.condition}});
  j["witnesses"] = ws;
  std::ostringstream os;
  os << v.ring << ": " << v.verdict();
  if (v.counterexample) os << " (condition " << v.failed_condition << " fails at " << join_coeffs(*v.counterexample) << ")";
  os << ", " << v.witnesses.size() << " witnesses";
  emit(out, o, j, os.str());
  return kPass;
}

int cmd_perfect_solve(const Options& o, const std::string& value, std::ostream& out) {
  const AnyRing ring = make_ring(o.ring.empty() ? "Z/2^6" : o.ring, o.p);
  const auto* r = std::get_if<IntegersModPM>(&ring);
  if (!r) throw Usage("perfect solve-frob needs a ring Z/p^M or Z[zeta]/p^M");
  auto x = parse_witt(*r, Token{value, 1});
  auto y = solve_frobenius(x);
  json j = envelope("perfect solve-frob");
  j["ring"] = r->name();
  j["x"] = elems_json(*r, x.components());
  j["y"] = elems_json(*r, y.components());
  emit(out, o, j, tuple_str(*r, y.components()));
  return kPass;
}

// ---------------------------------------------------------------- tilt

int cmd_tilt(const Options& o, const std::string& action, const std::vector<std::string>& values, std::ostream& out) {
  const AnyRing ring = make_ring(o.ring.empty() ? "Z/2^3" : o.ring, o.p);
  const auto* base = std::get_if<IntegersModPM>(&ring);
  if (!base) throw Usage("tilt needs a base ring Z/p^M or Z[zeta]/p^M");
  json j = envelope("tilt " + action);
  j["base"] = base->name();
  auto seq_json = [&](const TiltRing& t, const TiltElt& e) { return elems_json(t.base(), e.seq); };
  if (action == "add" || action == "mul" || action == "norm") {
    const TiltRing t(*base, o.depth < 0 ? 3 : o.depth);
    const size_t want = action == "norm" ? 1 : 2;
    if (values.size() != want) throw Usage("tilt " + action + " takes " + std::to_string(want) + " element(s)");
    std::vector<TiltElt> xs;
    for (const auto& v : values) xs.push_back(t.parse(v));
    j["depth"] = t.depth();
    if (action == "norm") {
      ExtNorm n = t.norm(xs[0]);
      j["norm"] = norm_json(n);
      emit(out, o, j, n.str());
    } else {
      TiltElt z = action == "add" ? t.add(xs[0], xs[1]) : t.mul(xs[0], xs[1]);
      j["value"] = seq_json(t, z);
      emit(out, o, j, t.format(z));
    }
    return kPass;
  }
  if (action == "untilt") {
    if (values.size() != 1) throw Usage("tilt untilt takes one Witt vector of tilt elements");
    const auto parts = split_tuple(values[0]);
    const int N = o.depth < 0 ? 2 : o.depth;
    const int len = static_cast<int>(parts.size()) - 1;
    const TiltRing t(*base, N + len);
    std::vector<TiltElt> comps;
    for (const auto& s : parts) comps.push_back(t.parse(s));
    WittVec<TiltRing> x(t, comps);
    auto a = untilt(x, N);
    j["untilt"] = arrow_json(a);
    std::string text = arrow_text(a);
    if (!o.b.empty()) {
      const mpq_class b = parse_b(o, 1);
      auto ns = untilt_norms(x, N, b);
      j["b"] = b.get_str();
      j["arrow_norm"] = norm_json(ns.arrow.value);
      j["exact"] = ns.arrow.exact;
      j["charp_norm"] = norm_json(ns.charp);
      text += "\n|untilt(x)|_{W," + b.get_str() + "} = " + ns.arrow.value.str() +
              (ns.arrow.exact ? " (certified)" : " (lower bound)") + ", char p norm " + ns.charp.str();
    }
    emit(out, o, j, text);
    return kPass;
  }
  throw Usage("tilt action must be add, mul, norm or untilt");
}

// ---------------------------------------------------------------- kernel

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

int cmd_kernel(const Options& o, int j_len, const std::string& samples_file, std::vector<std::string> values,
               std::ostream& out) {
  if (!samples_file.empty())
    for (auto& l : read_lines(samples_file)) values.push_back(l);
  if (values.empty()) throw Usage("kernel verify needs values of w_1 (positional or --samples)");
  const AnyRing ring = make_ring(o.ring.empty() ? "Q" : o.ring, o.p);
  return std::visit(
      [&](const auto& r) -> int {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Rationals> || std::is_same_v<R, CyclotomicField> ||
                      std::is_same_v<R, GaussianField>) {
          json j = envelope("kernel verify");
          j["ring"] = r.name();
          j["p"] = r.prime();
          j["j"] = j_len;
          json rows = json::array();
          std::ostringstream os;
          bool all = true;
          for (size_t i = 0; i < values.size(); ++i) {
            auto t = parse_elem(r, values[i], 1);
            auto rep = verify_kernel_norm(r, t, j_len);
            all = all && rep.equal;
            rows.push_back({{"t", r.format(t)},
                            {"w1", norm_json(rep.w1)},
                            {"witt", norm_json(rep.witt)},
                            {"bound", norm_json(rep.bound)},
                            {"c", rep.c_exp.get_str()},
                            {"equal", rep.equal}});
            os << (rep.equal ? "pass  " : "FAIL  ") << "t=" << r.format(t) << "  |w_1| = " << rep.w1.str()
               << "  p^(-" << rep.c_exp.get_str() << ")|x|_W = " << rep.bound.str() << "\n";
          }
          j["samples"] = rows;
          j["ok"] = all;
          std::string text = os.str();
          text.pop_back();
          emit(out, o, j, text);
          return all ? kPass : kFailures;
        } else {
          throw Usage("kernel verify needs a Q-algebra: Q, Qi or Q(zeta_n)");
        }
      },
      ring);
}

// ---------------------------------------------------------------- artin

int cmd_artin(const Options& o, const std::string& field, const std::string& f, std::ostream& out) {
  const long p = o.p == 0 ? 5 : o.p;
  std::string desc = trim(field), expr = f;
  if (desc == "Qi" || desc == "Q(i)") {
    desc = "Q(zeta_4)";
    expr = std::regex_replace(expr, std::regex(R"(\bi\b)"), "z");
  }
  const AnyRing ring = make_ring(desc, p);
  const auto* F = std::get_if<CyclotomicField>(&ring);
  if (!F) throw Usage("--field must be Q, Qi or Q(zeta_n)");
  const int N = o.depth < 0 ? 4 : o.depth;
  auto c = invariant_classify(*F, parse_elem(*F, expr, 1), N);
  json j = envelope("artin classify");
  j["field"] = c.report.field;
  j["p"] = c.report.p;
  j["f"] = c.report.element;
  j["depth"] = c.report.depth;
  json prof = json::array();
  for (const auto& n : c.report.profile) prof.push_back(norm_json(n));
  j["profile"] = prof;
  j["bounded"] = c.report.bounded;
  j["verdict"] = c.report.verdict();
  j["predicted_bounded"] = c.predicted_bounded;
  j["matches"] = c.matches;
  std::ostringstream os;
  os << c.report.field << ", p=" << p << ", f=" << c.report.element << ": " << c.report.verdict()
     << "; prediction " << (c.predicted_bounded ? "bounded" : "unbounded") << (c.matches ? " (agrees)" : " (DISAGREES)");
  emit(out, o, j, os.str());
  return c.matches ? kPass : kFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt vectors over normed rings: arithmetic, norms and verification suites", "witt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--p", o.p, "prime");
  app.add_option("--ring", o.ring, "ring desc (Z, Q, Qi, Q(zeta_8), Z/2^6, Z[zeta_4]/2^3, F_2[x^(1/2^4)]) or JSON file");
  app.add_option("--b", o.b, "radius parameter, a positive rational");
  app.add_option("--depth", o.depth, "inverse-limit, tilt or ghost depth");
  app.add_option("--precision", o.precision, "precision M for suites over Z/p^M");
  app.add_option("--seed", o.seed, "seed for every random choice");
  app.add_flag("--json", o.as_json, "machine-readable output");

  std::string expr;
  auto* compute = app.add_subcommand("compute", "evaluate '<op> <args>' over --ring");
  compute->add_option("expr", expr, "e.g. \"ghost (1,1)\"")->required();

  std::string suite, group;
  int samples = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "ghost, universal, norms, arrow, perfect, tilt, kernel, artin or all")->required();
  verify->add_option("--samples", samples, "override per-group sample counts");
  verify->add_option("--group", group, "only cases whose key starts with this prefix");
  verify->add_flag("--timing", timing, "report wall-clock time");

  std::string kind = "sum";
  int index = 0;
  auto* universal = app.add_subcommand("universal", "structure polynomials");
  universal->require_subcommand(1);
  auto* dump = universal->add_subcommand("dump", "print a structure polynomial");
  dump->add_option("--kind", kind, "sum, prod, frob or frob-component");
  dump->add_option("--i", index, "index i (component p^i)");

  std::string value;
  auto* arrow = app.add_subcommand("arrow", "inverse-limit Witt vectors");
  arrow->require_subcommand(1);
  std::vector<CLI::App*> arrow_cmds;
  for (const char* a : {"norm", "lift", "theta"}) {
    auto* s = arrow->add_subcommand(a, std::string("arrow ") + a);
    s->add_option("value", value, "an integer, or a top level '(x0, x1, ...)'")->required();
    arrow_cmds.push_back(s);
  }

  int tower = -1;
  auto* perfect = app.add_subcommand("perfect", "Witt-perfectness");
  perfect->require_subcommand(1);
  auto* ptest = perfect->add_subcommand("test", "exhaustive test of Z or Z[zeta_n] modulo p^2");
  ptest->add_option("--tower-base", tower, "test the tower from Z[zeta_{p^base}] up --depth levels");
  auto* psolve = perfect->add_subcommand("solve-frob", "y with F(y) = x over Z/p^M");
  psolve->add_option("value", value, "(x0, x1, ...)")->required();

  std::vector<std::string> values;
  std::string tx, ty;
  auto* tilt = app.add_subcommand("tilt", "tilt of Z/p^M or Z[zeta]/p^M");
  tilt->require_subcommand(1);
  std::vector<CLI::App*> tilt_cmds;
  for (const char* a : {"add", "mul", "norm", "untilt"}) {
    auto* s = tilt->add_subcommand(a, std::string("tilt ") + a);
    s->add_option("x", tx, "element '[a0; ...; aD]' or its top entry")->required();
    if (std::string(a) == "add" || std::string(a) == "mul") s->add_option("y", ty, "second element")->required();
    tilt_cmds.push_back(s);
  }

  int jlen = 1;
  std::string samples_file;
  auto* kernel = app.add_subcommand("kernel", "kernel of Frobenius");
  kernel->require_subcommand(1);
  auto* kverify = kernel->add_subcommand("verify", "check |w_1(x)| against |x|_W");
  kverify->add_option("--j", jlen, "length exponent j >= 1");
  kverify->add_option("--samples", samples_file, "file with one value of w_1 per line");
  // bracketed lists would be split by the parser; write cyclotomic values as "1 + z^2"
  kverify->add_option("values", values, "values of w_1");

  std::string field = "Qi", f;
  auto* artin = app.add_subcommand("artin", "Frobenius-invariant ghost constants");
  artin->require_subcommand(1);
  auto* classify = artin->add_subcommand("classify", "bounded ghost-constant verdict and its prediction");
  classify->add_option("--field", field, "Q, Qi or Q(zeta_n)");
  classify->add_option("--f", f, "field element, e.g. \"i\" or \"1/2 + z\"")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    load_ring_config(o, app);
    if (o.p != 0) require_prime(o.p);
    if (*compute) return cmd_compute(o, expr, out);
    if (*verify) return cmd_verify(o, suite, samples, group, timing, out, err);
    if (*dump) return cmd_universal_dump(o, kind, index, out);
    for (auto* s : arrow_cmds)
      if (*s) return cmd_arrow(o, s->get_name(), value, out);
    if (*ptest) return cmd_perfect_test(o, tower, out);
    if (*psolve) return cmd_perfect_solve(o, value, out);
    for (auto* s : tilt_cmds)
      if (*s) return cmd_tilt(o, s->get_name(), ty.empty() ? std::vector{tx} : std::vector{tx, ty}, out);
    if (*kverify) return cmd_kernel(o, jlen, samples_file, values, out);
    if (*classify) return cmd_artin(o, field, f, out);
    throw Usage("missing subcommand");
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::MalformedConfig ||
                       e.kind() == ErrorKind::UnknownSuite || e.kind() == ErrorKind::BOutOfRange;
    err << "error: " << e.what() << "\n";
    return usage ? kUsage : kFailures;
  }
}

}  // namespace witt::cli
