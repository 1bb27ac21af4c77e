#include "witt/universal.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

namespace {

using Mono = std::vector<unsigned>;
using QPoly = std::map<Mono, mpq_class>;

void add_into(QPoly& a, const QPoly& b, const mpq_class& s = 1) {
  for (const auto& [m, c] : b) {
    auto& slot = a[m];
    slot += c * s;
    if (slot == 0) a.erase(m);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto& slot = r[m];
      slot += ca * cb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

QPoly pow(const QPoly& a, unsigned long e, size_t nvars) {
  QPoly r{{Mono(nvars, 0), mpq_class(1)}};
  QPoly b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

QPoly var(size_t idx, size_t nvars) {
  Mono m(nvars, 0);
  m[idx] = 1;
  return {{m, mpq_class(1)}};
}

unsigned long ipow_ul(long p, int e) {
  unsigned long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

// ghost component w_{p^m} of the family starting at `offset`
QPoly ghost_poly(long p, int m, size_t offset, size_t nvars) {
  QPoly w;
  for (int i = 0; i <= m; ++i)
    add_into(w, pow(var(offset + i, nvars), ipow_ul(p, m - i), nvars), mpq_class(ipow(p, i)));
  return w;
}

// Given target ghost components g_0..g_n, return Witt components via rational unghosting.
std::vector<QPoly> unghost_polys(long p, const std::vector<QPoly>& g, size_t nvars) {
  std::vector<QPoly> xs;
  for (size_t m = 0; m < g.size(); ++m) {
    QPoly rest = g[m];
    for (size_t i = 0; i < m; ++i)
      add_into(rest, pow(xs[i], ipow_ul(p, static_cast<int>(m - i)), nvars), -mpq_class(ipow(p, static_cast<int>(i))));
    mpq_class inv(mpz_class(1), ipow(p, static_cast<int>(m)));
    QPoly x;
    for (const auto& [mono, c] : rest) x[mono] = c * inv;
    xs.push_back(std::move(x));
  }
  return xs;
}

UnivPoly to_integral(const QPoly& q, long p, int nx, int ny, const std::string& what) {
  UnivPoly u;
  u.p = p;
  u.nx = nx;
  u.ny = ny;
  for (const auto& [m, c] : q) {
    if (c.get_den() != 1)
      fail(ErrorKind::IntegralityViolation, what + " has coefficient " + c.get_str());
    u.terms[m] = c.get_num();
  }
  return u;
}

enum class Kind { Sum, Prod, Frob, FrobComponent };

struct Cache {
  std::mutex mu;
  std::map<std::tuple<int, long, int>, std::unique_ptr<UnivPoly>> polys;
};

Cache& cache() {
  static Cache c;
  return c;
}

void compute_family(Kind kind, long p, int i, std::map<std::tuple<int, long, int>, std::unique_ptr<UnivPoly>>& out) {
  const int n = i;
  if (kind == Kind::Sum || kind == Kind::Prod) {
    const size_t nv = 2 * (n + 1);
    std::vector<QPoly> g;
    for (int m = 0; m <= n; ++m) {
      QPoly a = ghost_poly(p, m, 0, nv);
      QPoly b = ghost_poly(p, m, n + 1, nv);
      if (kind == Kind::Sum) {
        add_into(a, b);
        g.push_back(std::move(a));
      } else {
        g.push_back(mul(a, b));
      }
    }
    auto xs = unghost_polys(p, g, nv);
    // reindex component m to use only variables 0..m of each family
    for (int m = 0; m <= n; ++m) {
      QPoly q;
      for (const auto& [mono, c] : xs[m]) {
        Mono r(2 * (m + 1), 0);
        for (int j = 0; j <= n; ++j) {
          if (j > m && (mono[j] || mono[n + 1 + j]))
            fail(ErrorKind::IntegralityViolation, "structure polynomial uses a later variable");
          if (j <= m) {
            r[j] = mono[j];
            r[m + 1 + j] = mono[n + 1 + j];
          }
        }
        q[r] = c;
      }
      const char* nm = kind == Kind::Sum ? "sum_poly" : "prod_poly";
      out[{static_cast<int>(kind), p, m}] = std::make_unique<UnivPoly>(to_integral(q, p, m + 1, m + 1, nm));
    }
    return;
  }
  // Frobenius: F(x)_{p^m} over x_0..x_{m+1}, ghost shift
  const size_t nv = n + 2;
  std::vector<QPoly> g;
  for (int m = 0; m <= n; ++m) g.push_back(ghost_poly(p, m + 1, 0, nv));
  auto fs = unghost_polys(p, g, nv);
  for (int m = 0; m <= n; ++m) {
    QPoly comp;
    for (const auto& [mono, c] : fs[m]) {
      Mono r(m + 2, 0);
      for (int j = 0; j < static_cast<int>(nv); ++j) {
        if (j > m + 1 && mono[j]) fail(ErrorKind::IntegralityViolation, "Frobenius component uses a later variable");
        if (j <= m + 1) r[j] = mono[j];
      }
      comp[r] = c;
    }
    out[{static_cast<int>(Kind::FrobComponent), p, m}] =
        std::make_unique<UnivPoly>(to_integral(comp, p, m + 2, 0, "frob component"));
    // f = (F_m - x_m^p - p x_{m+1}) / p, then drop the unused last variable
    QPoly f = comp;
    add_into(f, pow(var(m, m + 2), static_cast<unsigned long>(p), m + 2), -1);
    add_into(f, var(m + 1, m + 2), -mpq_class(p));
    QPoly fr;
    for (const auto& [mono, c] : f) {
      if (mono[m + 1]) fail(ErrorKind::IntegralityViolation, "frob_poly mentions x_{p^{i+1}}");
      Mono r(mono.begin(), mono.begin() + m + 1);
      fr[r] = c / p;
    }
    out[{static_cast<int>(Kind::Frob), p, m}] = std::make_unique<UnivPoly>(to_integral(fr, p, m + 1, 0, "frob_poly"));
  }
}

const UnivPoly& lookup(Kind kind, long p, int i) {
  require_prime(p);
  if (i < 0 || i > kMaxUniversalIndex)
    fail(ErrorKind::Unsupported, "structure polynomials are available for index <= 3");
  Cache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_tuple(static_cast<int>(kind), p, i);
  auto it = c.polys.find(key);
  if (it != c.polys.end()) return *it->second;
  std::map<std::tuple<int, long, int>, std::unique_ptr<UnivPoly>> fresh;
  Kind family = (kind == Kind::Frob) ? Kind::FrobComponent : kind;
  compute_family(family, p, i, fresh);
  for (auto& [k, v] : fresh)
    if (!c.polys.count(k)) c.polys[k] = std::move(v);
  return *c.polys.at(key);
}

}  // namespace

const UnivPoly& sum_poly(long p, int i) { return lookup(Kind::Sum, p, i); }
const UnivPoly& prod_poly(long p, int i) { return lookup(Kind::Prod, p, i); }
const UnivPoly& frob_poly(long p, int i) { return lookup(Kind::Frob, p, i); }
const UnivPoly& frob_component(long p, int i) { return lookup(Kind::FrobComponent, p, i); }

std::optional<long> weighted_degree(const UnivPoly& f, bool use_x, bool use_y) {
  std::optional<long> deg;
  for (const auto& [m, c] : f.terms) {
    long w = 0, pw = 1;
    for (int j = 0; j < f.nx; ++j, pw *= f.p)
      if (use_x) w += pw * m[j];
    pw = 1;
    for (int j = 0; j < f.ny; ++j, pw *= f.p)
      if (use_y) w += pw * m[f.nx + j];
    if (deg && *deg != w) return std::nullopt;
    deg = w;
  }
  return deg;
}

bool check_weighted_homogeneity(const UnivPoly& f, long degree) {
  for (const auto& [m, c] : f.terms) {
    long w = 0, pw = 1;
    for (int j = 0; j < f.nx; ++j, pw *= f.p) w += pw * m[j];
    pw = 1;
    for (int j = 0; j < f.ny; ++j, pw *= f.p) w += pw * m[f.nx + j];
    if (w != degree) return false;
  }
  return true;
}

std::string format(const UnivPoly& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    long idx = 1;
    for (int j = 0; j < f.nx; ++j, idx *= f.p)
      if (m[j]) factors.push_back("x" + std::to_string(idx) + (m[j] > 1 ? "^" + std::to_string(m[j]) : ""));
    idx = 1;
    for (int j = 0; j < f.ny; ++j, idx *= f.p)
      if (m[f.nx + j]) factors.push_back("y" + std::to_string(idx) + (m[f.nx + j] > 1 ? "^" + std::to_string(m[f.nx + j]) : ""));
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || factors.empty()) factors.insert(factors.begin(), a.get_str());
    for (size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace witt
