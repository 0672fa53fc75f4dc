#include "ihc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ihc {

namespace {

Family elliptic_family(int w) { return Letter::elliptic(w).family; }

void finish(Constituent& c, const std::vector<ExpVec>& positive) {
  c.pos_exponents = positive;
  std::sort(c.pos_exponents.begin(), c.pos_exponents.end(),
            [](const ExpVec& a, const ExpVec& b) { return a.infinitesimal() > b.infinitesimal(); });
  c.mult = 1;
  for (const auto& [f, m] : c.families) c.mult *= m;
}

long long elliptic_mult(int w) { return dim_cusp_forms(w + 1); }

}  // namespace

std::vector<ExpVec> Constituent::signed_exponents() const {
  std::vector<ExpVec> r = pos_exponents;
  if (n % 2 == 1) r.push_back(ExpVec{});
  for (auto it = pos_exponents.rbegin(); it != pos_exponents.rend(); ++it) r.push_back(-*it);
  return r;
}

std::string Constituent::str() const {
  auto s = [](int x) { return std::to_string(x); };
  switch (kind) {
    case ConstKind::Trivial: return "1";
    case ConstKind::DeltaW: return "Delta_{" + s(w1) + "}";
    case ConstKind::Sym2DeltaW: return "Sym2Delta_{" + s(w1) + "}";
    case ConstKind::DeltaTensor: return "Delta_{" + s(w1) + "}xDelta_{" + s(w2) + "}";
    case ConstKind::LambdaStarSiegel: return "Lambda*Delta_{" + s(w1) + "," + s(w2) + "}";
    case ConstKind::SiegelStd: return "Delta_{" + s(w1) + "," + s(w2) + "}";
    case ConstKind::ConfigExtension: return name;
  }
  return name;
}

namespace constituents {

Constituent trivial() {
  Constituent c;
  c.kind = ConstKind::Trivial;
  c.n = 1;
  c.parity = Parity::Orthogonal;
  finish(c, {});
  return c;
}

Constituent delta(int w) {
  Constituent c;
  c.kind = ConstKind::DeltaW;
  c.w1 = w;
  c.n = 2;
  c.parity = Parity::Symplectic;
  c.families = {{elliptic_family(w), elliptic_mult(w)}};
  finish(c, {ExpVec::letter(Letter::elliptic(w), HalfInt::of(1))});
  return c;
}

Constituent sym2(int w) {
  Constituent c;
  c.kind = ConstKind::Sym2DeltaW;
  c.w1 = w;
  c.n = 3;
  c.parity = Parity::Orthogonal;
  c.families = {{elliptic_family(w), elliptic_mult(w)}};
  finish(c, {ExpVec::letter(Letter::elliptic(w), HalfInt::of(2))});
  return c;
}

Constituent tensor(int w1, int w2) {
  Constituent c;
  c.kind = ConstKind::DeltaTensor;
  c.w1 = w1;
  c.w2 = w2;
  c.n = 4;
  c.parity = Parity::Orthogonal;
  c.families = {{elliptic_family(w1), elliptic_mult(w1)}, {elliptic_family(w2), elliptic_mult(w2)}};
  ExpVec a = ExpVec::letter(Letter::elliptic(w1), HalfInt::of(1));
  ExpVec b = ExpVec::letter(Letter::elliptic(w2), HalfInt::of(1));
  finish(c, {a + b, a - b});
  return c;
}

Constituent lambda_star(int w1, int w2, long long mult) {
  Constituent c;
  c.kind = ConstKind::LambdaStarSiegel;
  c.w1 = w1;
  c.w2 = w2;
  c.n = 5;
  c.parity = Parity::Orthogonal;
  c.families = {{Letter::siegel(w1, w2, 1).family, mult}};
  ExpVec a = ExpVec::letter(Letter::siegel(w1, w2, 1), HalfInt::of(1));
  ExpVec b = ExpVec::letter(Letter::siegel(w1, w2, 2), HalfInt::of(1));
  finish(c, {a + b, a - b});
  return c;
}

Constituent siegel_std(int w1, int w2, long long mult) {
  Constituent c;
  c.kind = ConstKind::SiegelStd;
  c.w1 = w1;
  c.w2 = w2;
  c.n = 4;
  c.parity = Parity::Symplectic;
  c.families = {{Letter::siegel(w1, w2, 1).family, mult}};
  finish(c, {ExpVec::letter(Letter::siegel(w1, w2, 1), HalfInt::of(1)),
             ExpVec::letter(Letter::siegel(w1, w2, 2), HalfInt::of(1))});
  return c;
}

Constituent config(const std::string& name, int n, Parity parity,
                   const std::vector<HalfInt>& weights, long long mult) {
  if (static_cast<int>(weights.size()) != n / 2)
    throw InvalidInput("config entry " + name + ": expected " + std::to_string(n / 2) + " weights");
  if (parity == Parity::Symplectic && n % 2 == 1)
    throw InvalidInput("config entry " + name + ": symplectic constituents have even dimension");
  Constituent c;
  c.kind = ConstKind::ConfigExtension;
  c.name = name;
  c.n = n;
  c.parity = parity;
  c.families = {{Letter::config(name, 0, {}).family, mult}};
  std::vector<ExpVec> pos;
  for (size_t j = 0; j < weights.size(); ++j) {
    if (weights[j].doubled <= 0) throw InvalidInput("config entry " + name + ": weights must be positive");
    pos.push_back(ExpVec::letter(Letter::config(name, static_cast<int>(j) + 1, weights[j]), HalfInt::of(1)));
  }
  finish(c, pos);
  for (size_t j = 1; j < c.pos_exponents.size(); ++j)
    if (c.pos_exponents[j].infinitesimal() == c.pos_exponents[j - 1].infinitesimal())
      throw InvalidInput("config entry " + name + ": weights must be distinct");
  return c;
}

}  // namespace constituents

namespace {

HalfInt parse_weight(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw ParseError("bad weight " + tok);
      return HalfInt::of(v);
    }
    long long num = std::stoll(tok.substr(0, slash), &used);
    if (used != slash) throw ParseError("bad weight " + tok);
    std::string den_s = tok.substr(slash + 1);
    long long den = std::stoll(den_s, &used);
    if (used != den_s.size()) throw ParseError("bad weight " + tok);
    if (den == 1) return HalfInt::of(num);
    if (den == 2) return HalfInt::half(num);
  } catch (const std::logic_error&) {
  }
  throw ParseError("weight '" + tok + "' must be a rational with denominator at most 2");
}

}  // namespace

std::vector<ConfigEntry> parse_config(std::istream& in) {
  std::vector<ConfigEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": " + why);
    };
    if (tok.size() != 5) fail("expected `name n parity w_1,...,w_r mult`");
    ConfigEntry e;
    e.name = tok[0];
    try {
      e.n = std::stoi(tok[1]);
      e.mult = std::stoll(tok[4]);
    } catch (const std::logic_error&) {
      fail("n and mult must be integers");
    }
    if (tok[2] == "orthogonal")
      e.parity = Parity::Orthogonal;
    else if (tok[2] == "symplectic")
      e.parity = Parity::Symplectic;
    else
      fail("parity must be orthogonal or symplectic");
    std::istringstream ws(tok[3]);
    for (std::string w; std::getline(ws, w, ',');) e.weights.push_back(parse_weight(w));
    if (e.n < 1 || e.mult < 1) fail("n and mult must be positive");
    constituents::config(e.name, e.n, e.parity, e.weights, e.mult);  // validates
    out.push_back(e);
  }
  return out;
}

std::vector<ConfigEntry> load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open catalog file " + path);
  return parse_config(f);
}

long long dim_cusp_forms(int k) {
  if (k < 0) throw InvalidInput("negative weight");
  if (k % 2 != 0) throw OddWeight("odd weight " + std::to_string(k));
  if (k < 12) return 0;
  long long modular = k / 12 + (k % 12 == 2 ? 0 : 1);
  return modular - 1;
}

std::vector<SiegelPair> siegel_catalog(int max_w1) {
  // No pair with w1 = 25 is known to the catalog; odd w1 <= 23 is complete.
  if (max_w1 > kMaxCatalogWeight)
    throw CatalogExhausted("Siegel catalog only known for w1 <= 23");
  static const std::vector<SiegelPair> all = {{19, 7, 1},  {21, 5, 1},  {21, 9, 1}, {21, 13, 1},
                                              {23, 7, 1},  {23, 9, 1},  {23, 13, 1}};
  std::vector<SiegelPair> r;
  for (const auto& p : all)
    if (p.w1 <= max_w1) r.push_back(p);
  return r;
}

std::vector<ExpVec> block_exponents(const Constituent& c, int d) {
  std::vector<ExpVec> r;
  for (const auto& e : c.signed_exponents())
    for (int k = 0; k < d; ++k) r.push_back(e.shifted(HalfInt::half(d - 1 - 2 * k)));
  return r;
}

bool block_valid(const Constituent& c, int d) {
  if (d < 1) return false;
  if ((c.n * d) % 2 == 0 && c.symplectic() != (d % 2 == 0)) return false;
  if (c.n % 2 == 1 && d % 2 == 0) return false;
  std::set<HalfInt> seen;
  for (const auto& e : block_exponents(c, d)) {
    HalfInt v = e.infinitesimal();
    if (!v.integral()) return false;
    if (!seen.insert(v).second) return false;
  }
  return true;
}

HalfInt block_k(const Constituent& c, int d) {
  HalfInt s;
  for (const auto& e : block_exponents(c, d)) {
    HalfInt v = e.infinitesimal();
    if (v.doubled > 0) s += v;
  }
  // n floor(d^2/2) / 4, doubled: n floor(d^2/2) / 2
  long long corr = static_cast<long long>(c.n) * ((d * d) / 2);
  if (corr % 2 != 0) throw std::logic_error("block correction not a half-integer");
  return s - HalfInt::from_doubled(corr / 2);
}

std::vector<AllowedBlock> Catalog::constituents_up_to(int M) const {
  if (M > kMaxCatalogWeight)
    throw CatalogExhausted("constituents beyond motivic weight " +
                           std::to_string(kMaxCatalogWeight) + " are not catalogued");
  if (M < 0) throw InvalidInput("negative weight bound");
  std::vector<AllowedBlock> out;
  AllowedBlock triv{constituents::trivial(), {}, true};
  out.push_back(triv);

  auto add = [&](const Constituent& c) {
    AllowedBlock b{c, {}, false};
    for (int d = 1; d <= 2 * M + 3; ++d) {
      if (!block_valid(c, d)) continue;
      if (block_k(c, d) <= HalfInt::of(M)) b.ds.push_back(d);
    }
    if (!b.ds.empty()) out.push_back(b);
  };

  // A constituent of motivic weight w contributes k >= w - 1 in any block.
  std::vector<int> ws;
  for (int w = 1; w <= M + 1; w += 2)
    if (dim_cusp_forms(w + 1) > 0) ws.push_back(w);
  for (int w : ws) add(constituents::delta(w));
  for (int w : ws)
    if (w <= M) add(constituents::sym2(w));
  for (int w1 : ws)
    for (int w2 : ws)
      if (w2 < w1 && w1 <= M) add(constituents::tensor(w1, w2));
  for (const auto& p : siegel_catalog(std::min(M, 23))) {
    add(constituents::lambda_star(p.w1, p.w2, p.mult));
    add(constituents::siegel_std(p.w1, p.w2, p.mult));
  }
  for (const auto& e : extra_) add(constituents::config(e.name, e.n, e.parity, e.weights, e.mult));
  return out;
}

int epsilon_half(const Constituent& a, const Constituent& b) {
  if (a.symplectic() == b.symplectic())
    throw NotSymplecticPair(a.str() + " x " + b.str() + " is not symplectic");
  // prod over positive sums e of i^(2e+1); track the exponent of i mod 4.
  long long expo = 0;
  for (const auto& x : a.signed_exponents())
    for (const auto& y : b.signed_exponents()) {
      HalfInt e = x.infinitesimal() + y.infinitesimal();
      if (e.doubled <= 0) continue;
      expo += e.doubled + 1;
    }
  expo %= 4;
  if (expo % 2 != 0) throw NotSymplecticPair("root number is not a sign");
  return expo == 0 ? 1 : -1;
}

}  // namespace ihc
