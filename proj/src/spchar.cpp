#include "ihc/spchar.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

namespace ihc {

DomWeight::DomWeight(std::vector<int> e) : entries(std::move(e)) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw InvalidInput("dominant weight with negative entry");
    if (i > 0 && entries[i] > entries[i - 1]) throw InvalidInput("dominant weight must be non-increasing");
  }
}

DomWeight DomWeight::padded(std::vector<int> e, int g) {
  if (static_cast<int>(e.size()) > g) {
    // allow explicit trailing zeros beyond g to be dropped
    for (size_t i = g; i < e.size(); ++i)
      if (e[i] != 0) throw InvalidInput("weight has more than g nonzero entries");
    e.resize(g);
  }
  e.resize(g, 0);
  return DomWeight(e);
}

int DomWeight::size() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::vector<int> DomWeight::tau() const {
  std::vector<int> t(entries.size());
  int g = this->g();
  for (int i = 0; i < g; ++i) t[i] = entries[i] + g - i;
  return t;
}

std::string DomWeight::str() const {
  std::string s;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s.empty() ? "0" : s;
}

long long CharPoly::mass() const {
  long long m = 0;
  for (const auto& [w, c] : coeffs) m += c;
  return m;
}

Weight dominant_rep(Weight mu) {
  for (auto& x : mu) x = x < 0 ? -x : x;
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  return mu;
}

bool CharPoly::weyl_invariant() const {
  // Invariant iff every weight has the coefficient of its dominant rep and
  // every orbit is fully present. Check via orbit sizes per dominant rep.
  std::map<Weight, std::pair<long long, long long>> seen;  // rep -> (coeff, count)
  for (const auto& [w, c] : coeffs) {
    Weight r = dominant_rep(w);
    auto it = seen.find(r);
    if (it == seen.end())
      seen.emplace(r, std::make_pair(c, 1));
    else {
      if (it->second.first != c) return false;
      ++it->second.second;
    }
  }
  for (const auto& [r, cc] : seen) {
    // orbit size = (#distinct permutations) * 2^(#nonzero)
    long long n = static_cast<long long>(r.size());
    long long perms = 1;
    for (long long i = 2; i <= n; ++i) perms *= i;
    std::map<int, int> counts;
    int nonzero = 0;
    for (int x : r) {
      ++counts[x];
      if (x != 0) ++nonzero;
    }
    for (const auto& [x, k] : counts)
      for (int i = 2; i <= k; ++i) perms /= i;
    if (cc.second != perms * (1LL << nonzero)) return false;
  }
  return true;
}

CharPoly CharPoly::operator+(const CharPoly& o) const {
  CharPoly r = *this;
  r.g = std::max(g, o.g);
  for (const auto& [w, c] : o.coeffs) {
    long long& v = r.coeffs[w];
    v += c;
    if (v == 0) r.coeffs.erase(w);
  }
  return r;
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
  if (g != o.g) throw InvalidInput("character product across different ranks");
  std::map<Weight, long long> r;
  Weight s(g);
  for (const auto& [a, ca] : coeffs)
    for (const auto& [b, cb] : o.coeffs) {
      for (int i = 0; i < g; ++i) s[i] = a[i] + b[i];
      r[s] += ca * cb;
    }
  CharPoly out;
  out.g = g;
  for (auto& [w, c] : r)
    if (c != 0) out.coeffs.emplace(w, c);
  return out;
}

CharPoly CharPoly::operator*(long long k) const {
  CharPoly r;
  r.g = g;
  if (k == 0) return r;
  for (const auto& [w, c] : coeffs) r.coeffs.emplace(w, c * k);
  return r;
}

bool dominated(const Weight& mu, const Weight& lambda) {
  long long s = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    s += lambda[i] - mu[i];
    if (s < 0) return false;
  }
  return s % 2 == 0;
}

namespace {

// Dominant weights mu <= lambda, in order of increasing depth below lambda.
std::vector<Weight> dominant_below(const Weight& lambda) {
  int g = static_cast<int>(lambda.size());
  std::vector<Weight> out;
  if (g == 0) return {Weight{}};
  Weight cur(g);
  int top = lambda[0];
  // recursive fill of non-increasing tuples bounded by lambda_1
  auto rec = [&](auto&& self, int i, int bound) -> void {
    if (i == g) {
      if (dominated(cur, lambda)) out.push_back(cur);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, top);
  auto depth = [&](const Weight& mu) {
    long long d = 0, s = 0;
    for (int i = 0; i < g; ++i) {
      s += lambda[i] - mu[i];
      d += s;
    }
    return d;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });
  return out;
}

std::map<Weight, long long> freudenthal(const Weight& lambda) {
  int g = static_cast<int>(lambda.size());
  std::map<Weight, long long> m;
  if (g == 0) {
    m[Weight{}] = 1;
    return m;
  }
  // positive roots
  std::vector<Weight> roots;
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      Weight a(g, 0), b(g, 0);
      a[i] = 1, a[j] = -1;
      b[i] = 1, b[j] = 1;
      roots.push_back(a);
      roots.push_back(b);
    }
  for (int i = 0; i < g; ++i) {
    Weight a(g, 0);
    a[i] = 2;
    roots.push_back(a);
  }
  Weight rho(g);
  for (int i = 0; i < g; ++i) rho[i] = g - i;
  auto norm_rho = [&](const Weight& mu) {
    long long s = 0;
    for (int i = 0; i < g; ++i) s += static_cast<long long>(mu[i] + rho[i]) * (mu[i] + rho[i]);
    return s;
  };
  const long long top = norm_rho(lambda);
  const int bound = lambda[0];
  for (const Weight& mu : dominant_below(lambda)) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    long long acc = 0;
    for (const Weight& a : roots) {
      Weight v = mu;
      for (int k = 1;; ++k) {
        bool inside = true;
        for (int i = 0; i < g; ++i) {
          v[i] += a[i];
          if (v[i] > bound || v[i] < -bound) inside = false;
        }
        if (!inside) break;
        auto it = m.find(dominant_rep(v));
        if (it == m.end()) continue;
        long long ip = 0;
        for (int i = 0; i < g; ++i) ip += static_cast<long long>(v[i]) * a[i];
        acc += it->second * ip;
      }
    }
    long long den = top - norm_rho(mu);
    long long num = 2 * acc;
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion failed");
    if (num != 0) m[mu] = num / den;
  }
  return m;
}

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

void orbit(const Weight& rep, const std::function<void(const Weight&)>& f) {
  Weight p = rep;
  std::sort(p.begin(), p.end());
  int g = static_cast<int>(p.size());
  do {
    std::vector<int> nz;
    for (int i = 0; i < g; ++i)
      if (p[i] != 0) nz.push_back(i);
    for (long long mask = 0; mask < (1LL << nz.size()); ++mask) {
      Weight w = p;
      for (size_t b = 0; b < nz.size(); ++b)
        if (mask >> b & 1) w[nz[b]] = -w[nz[b]];
      f(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

const std::map<Weight, long long>& dominant_multiplicities(const DomWeight& lambda) {
  static std::map<Weight, std::unique_ptr<const std::map<Weight, long long>>> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(lambda.entries);
    if (it != memo.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::map<Weight, long long>>(freudenthal(lambda.entries));
  std::lock_guard<std::mutex> lock(memo_mutex());
  auto [it, inserted] = memo.emplace(lambda.entries, std::move(computed));
  return *it->second;  // if another thread won, its identical value is kept
}

CharPoly weyl_character(const DomWeight& lambda) {
  CharPoly c;
  c.g = lambda.g();
  for (const auto& [mu, k] : dominant_multiplicities(lambda))
    orbit(mu, [&](const Weight& w) { c.coeffs[w] = k; });
  return c;
}

long long weyl_dim(const DomWeight& lambda) { return weyl_character(lambda).mass(); }

Decomposition decompose(const CharPoly& c) {
  if (!c.weyl_invariant()) throw NotACharacter("character is not Weyl invariant");
  std::map<Weight, long long> dom;
  for (const auto& [w, k] : c.coeffs)
    if (dominant_rep(w) == w) dom.emplace(w, k);
  Decomposition out;
  while (!dom.empty()) {
    auto it = std::prev(dom.end());
    Weight top = it->first;
    long long k = it->second;
    DomWeight lam(top);
    for (const auto& [mu, m] : dominant_multiplicities(lam)) {
      long long& v = dom[mu];
      v -= k * m;
      if (v == 0) dom.erase(mu);
    }
    if (dom.count(top)) throw NotACharacter("peeling did not remove the leading weight");
    out.emplace_back(lam, k);
  }
  return out;
}

LocalSystemDecomp wedge_local_system(int g, int i) {
  if (g < 0 || i < 0 || i > 2 * g) throw OutOfRange("wedge degree out of range");
  int base = i <= g ? i : 2 * g - i;
  int shift = i <= g ? 0 : g - base;
  LocalSystemDecomp out;
  for (int j = 0; 2 * j <= base; ++j) {
    std::vector<int> e(g, 0);
    for (int t = 0; t < base - 2 * j; ++t) e[t] = 1;
    out.push_back({DomWeight(e), j + shift, 1});
  }
  return out;
}

namespace {

// Dense coefficient table of prod_j f(x_j, t) where f = (1+tx)(1+t/x) for
// s - flipped factors and (1-tx)(1-t/x) for the flipped ones.
struct FiberTable {
  int g, s;
  std::vector<CharPoly> by_q;
};

FiberTable build_fiber_table(int g, int s, int flipped) {
  const int R = s, B = 2 * s + 1, Q = 2 * s;
  // one-variable factor: P[q][v + R]
  std::vector<std::vector<long long>> P(Q + 1, std::vector<long long>(B, 0));
  P[0][R] = 1;
  for (int f = 0; f < s; ++f) {
    long long sg = f < flipped ? -1 : 1;
    std::vector<std::vector<long long>> N(Q + 1, std::vector<long long>(B, 0));
    for (int q = 0; q <= Q; ++q)
      for (int v = 0; v < B; ++v) {
        long long c = P[q][v];
        if (c == 0) continue;
        N[q][v] += c;
        if (q + 1 <= Q) {
          if (v + 1 < B) N[q + 1][v + 1] += sg * c;
          if (v - 1 >= 0) N[q + 1][v - 1] += sg * c;
        }
        if (q + 2 <= Q) N[q + 2][v] += c;
      }
    P = std::move(N);
  }
  // tensor over the g coordinates
  long long cells = 1;
  std::vector<std::vector<long long>> F(1, std::vector<long long>(1, 1));  // F[q][idx]
  for (int j = 0; j < g; ++j) {
    std::vector<std::vector<long long>> N(static_cast<size_t>(Q) * (j + 1) + 1,
                                          std::vector<long long>(cells * B, 0));
    for (size_t q1 = 0; q1 < F.size(); ++q1)
      for (long long idx = 0; idx < cells; ++idx) {
        long long c = F[q1][idx];
        if (c == 0) continue;
        for (int q2 = 0; q2 <= Q; ++q2)
          for (int v = 0; v < B; ++v) {
            long long d = P[q2][v];
            if (d != 0) N[q1 + q2][idx * B + v] += c * d;
          }
      }
    F = std::move(N);
    cells *= B;
  }
  FiberTable t{g, s, {}};
  for (size_t q = 0; q < F.size(); ++q) {
    CharPoly c;
    c.g = g;
    for (long long idx = 0; idx < cells; ++idx) {
      if (F[q][idx] == 0) continue;
      Weight w(g);
      long long r = idx;
      for (int j = g - 1; j >= 0; --j) {
        w[j] = static_cast<int>(r % B) - R;
        r /= B;
      }
      c.coeffs.emplace(w, F[q][idx]);
    }
    t.by_q.push_back(std::move(c));
  }
  return t;
}

const FiberTable& fiber_table(int g, int s, int flipped) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<const FiberTable>> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({g, s, flipped});
    if (it != memo.end()) return *it->second;
  }
  auto t = std::make_unique<const FiberTable>(build_fiber_table(g, s, flipped));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, ins] = memo.emplace(std::make_tuple(g, s, flipped), std::move(t));
  return *it->second;
}

using EcTable = std::map<DomWeight, Poly>;

const EcTable& ec_table(int g, int s, int flipped) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<const EcTable>> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({g, s, flipped});
    if (it != memo.end()) return *it->second;
  }
  const FiberTable& ft = fiber_table(g, s, flipped);
  auto tab = std::make_unique<EcTable>();
  for (size_t q = 0; q < ft.by_q.size(); ++q) {
    long long sign = q % 2 == 0 ? 1 : -1;
    for (const auto& [lam, k] : decompose(ft.by_q[q])) {
      int twice_m = static_cast<int>(q) - lam.size();
      if (twice_m < 0 || twice_m % 2 != 0) throw std::logic_error("impure fiber cohomology");
      Poly& p = (*tab)[lam];
      p = p + Poly::monomial(twice_m / 2, sign * k);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, ins] = memo.emplace(std::make_tuple(g, s, flipped), std::move(tab));
  return *it->second;
}

void check_gs(int g, int s) {
  if (g < 1) throw InvalidInput("g must be positive");
  if (s < 0) throw InvalidInput("s must be non-negative");
  if (g * s > 40) throw UnsupportedRange("fiber power too large for the dense character table");
}

}  // namespace

CharPoly fiber_cohomology_character(int g, int s, int q, int flipped) {
  check_gs(g, s);
  if (flipped < 0 || flipped > s) throw InvalidInput("flipped factor count out of range");
  if (q < 0 || q > 2 * g * s) throw OutOfRange("cohomological degree out of range");
  return fiber_table(g, s, flipped).by_q[q];
}

LocalSystemDecomp rpi_decomposition(int g, int s, int q, int k) {
  if (k < 0) throw InvalidInput("twist must be non-negative");
  CharPoly c = fiber_cohomology_character(g, s, q);
  LocalSystemDecomp out;
  for (const auto& [lam, mult] : decompose(c))
    out.push_back({lam, (q - lam.size()) / 2 + k, mult});
  return out;
}

Poly ec_mult_poly(int g, int s, const DomWeight& lambda) {
  check_gs(g, s);
  if (lambda.g() != g) throw InvalidInput("weight rank differs from g");
  const EcTable& t = ec_table(g, s, 0);
  auto it = t.find(lambda);
  return it == t.end() ? Poly() : it->second;
}

std::pair<Poly, Poly> ec_mult_poly_signed(int g, int s, const DomWeight& lambda, int flipped_factor_count) {
  if (flipped_factor_count != 1) throw InvalidInput("exactly one factor carries the involution");
  check_gs(g, s);
  if (s < 1) throw InvalidInput("the involution needs at least one factor");
  if (lambda.g() != g) throw InvalidInput("weight rank differs from g");
  Poly total = ec_mult_poly(g, s, lambda);
  const EcTable& t = ec_table(g, s, 1);
  auto it = t.find(lambda);
  Poly trace = it == t.end() ? Poly() : it->second;
  Poly plus2 = total + trace, minus2 = total - trace;
  std::vector<long long> p, m;
  for (long long c : plus2.c) {
    if (c % 2 != 0) throw std::logic_error("eigenspace split not integral");
    p.push_back(c / 2);
  }
  for (long long c : minus2.c) {
    if (c % 2 != 0) throw std::logic_error("eigenspace split not integral");
    m.push_back(c / 2);
  }
  return {Poly(p), Poly(m)};
}

}  // namespace ihc
