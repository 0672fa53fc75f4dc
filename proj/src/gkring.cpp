#include "ihc/gkring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ihc {

long long HalfInt::to_int() const {
  if (!integral()) throw std::logic_error("half-integer " + str() + " is not integral");
  return doubled / 2;
}

std::string HalfInt::str() const {
  if (integral()) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string Family::str() const {
  switch (kind) {
    case LetterKind::Elliptic: return "Delta_{" + std::to_string(w1) + "}";
    case LetterKind::Siegel:
      return "Delta_{" + std::to_string(w1) + "," + std::to_string(w2) + "}";
    case LetterKind::Config: return name;
  }
  return name;
}

Letter Letter::elliptic(int w) {
  Letter x;
  x.family = {LetterKind::Elliptic, w, 0, {}};
  return x;
}

Letter Letter::siegel(int w1, int w2, int coord) {
  Letter x;
  x.family = {LetterKind::Siegel, w1, w2, {}};
  x.coord = coord;
  return x;
}

Letter Letter::config(const std::string& name, int coord, HalfInt weight) {
  Letter x;
  x.family = {LetterKind::Config, 0, 0, name};
  x.coord = coord;
  x.config_weight = weight;
  return x;
}

HalfInt Letter::inf_weight() const {
  switch (family.kind) {
    case LetterKind::Elliptic: return HalfInt::half(family.w1);
    case LetterKind::Siegel: return HalfInt::half(coord == 1 ? family.w1 : family.w2);
    case LetterKind::Config: return config_weight;
  }
  return {};
}

std::string Letter::str() const {
  switch (family.kind) {
    case LetterKind::Elliptic: return "a" + std::to_string(family.w1);
    case LetterKind::Siegel:
      return "b" + std::to_string(coord) + "(" + std::to_string(family.w1) + "," +
             std::to_string(family.w2) + ")";
    case LetterKind::Config: return family.name + "#" + std::to_string(coord);
  }
  return {};
}

ExpVec ExpVec::letter(const Letter& x, HalfInt e, HalfInt t) {
  ExpVec v;
  if (!e.is_zero()) v.exps[x] = e;
  v.tate = t;
  return v;
}

HalfInt ExpVec::infinitesimal() const {
  long long d = tate.doubled;
  for (const auto& [x, e] : exps) {
    // e * w where both are half-integers: (e.d * w.d) / 4 doubled -> /2
    long long prod = e.doubled * x.inf_weight().doubled;
    if (prod % 2 != 0) throw std::logic_error("infinitesimal weight not a half-integer");
    d += prod / 2;
  }
  return HalfInt::from_doubled(d);
}

HalfInt ExpVec::max_abs_exponent() const {
  HalfInt m;
  for (const auto& [x, e] : exps) m = std::max(m, e.doubled < 0 ? -e : e);
  return m;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
  ExpVec r = *this;
  for (const auto& [x, e] : o.exps) {
    auto [it, inserted] = r.exps.emplace(x, e);
    if (!inserted) {
      it->second += e;
      if (it->second.is_zero()) r.exps.erase(it);
    }
  }
  r.tate += o.tate;
  return r;
}

ExpVec ExpVec::operator-() const {
  ExpVec r;
  for (const auto& [x, e] : exps) r.exps.emplace(x, -e);
  r.tate = -tate;
  return r;
}

ExpVec ExpVec::halved() const {
  auto h = [](HalfInt v) {
    if (v.doubled % 2 != 0) throw std::logic_error("exponent not divisible by two");
    return HalfInt::from_doubled(v.doubled / 2);
  };
  ExpVec r;
  for (const auto& [x, e] : exps) r.exps.emplace(x, h(e));
  r.tate = h(tate);
  return r;
}

ExpVec ExpVec::family_part(const Family& f) const {
  ExpVec r;
  for (const auto& [x, e] : exps)
    if (x.family == f) r.exps.emplace(x, e);
  return r;
}

std::string ExpVec::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [x, e] : exps) {
    if (!first) os << " ";
    first = false;
    os << x.str() << "^" << e.str();
  }
  if (!first) os << " ";
  os << "@" << tate.str() << "}";
  return os.str();
}

Multiset to_multiset(const std::vector<ExpVec>& v) {
  Multiset m;
  for (const auto& e : v) ++m[e];
  return m;
}

long long total_count(const Multiset& m) {
  long long n = 0;
  for (const auto& [e, c] : m) n += c;
  return n;
}

std::vector<std::pair<int, int>> SymbolData::hodge_all() const {
  std::vector<std::pair<int, int>> r;
  for (long long i = 0; i < mult; ++i) r.insert(r.end(), hodge.begin(), hodge.end());
  return r;
}

namespace symbols {

namespace {

std::shared_ptr<SymbolData> make(std::string name, int mw, long long mult) {
  auto s = std::make_shared<SymbolData>();
  s->name = std::move(name);
  s->motivic_weight = mw;
  s->mult = mult;
  return s;
}

void check_mult(long long mult) {
  if (mult <= 0) throw InvalidInput("motive symbol with non-positive multiplicity");
}

}  // namespace

Symbol unit() {
  static const Symbol u = [] {
    auto s = make("L", 0, 1);
    s->character = {ExpVec{}};
    s->hodge = {{0, 0}};
    s->tate = true;
    return s;
  }();
  return u;
}

Symbol elliptic(int w, long long mult) {
  check_mult(mult);
  auto s = make("S<" + std::to_string(w + 1) + ">", w, mult);
  Letter a = Letter::elliptic(w);
  HalfInt t = HalfInt::half(w);
  s->character = {ExpVec::letter(a, HalfInt::of(1), t), ExpVec::letter(a, HalfInt::of(-1), t)};
  s->hodge = {{w, 0}, {0, w}};
  s->families = {a.family};
  return s;
}

Symbol sym2(int w, long long mult) {
  check_mult(mult);
  auto s = make("Sym2S<" + std::to_string(w + 1) + ">", 2 * w, mult);
  Letter a = Letter::elliptic(w);
  HalfInt t = HalfInt::of(w);
  s->character = {ExpVec::letter(a, HalfInt::of(2), t), ExpVec::tate_only(t),
                  ExpVec::letter(a, HalfInt::of(-2), t)};
  s->hodge = {{2 * w, 0}, {w, w}, {0, 2 * w}};
  s->families = {a.family};
  return s;
}

std::pair<int, int> siegel_weights(int a, int b) { return {a + b + 3, a - b + 1}; }

Symbol siegel(int w1, int w2, long long mult) {
  check_mult(mult);
  int a = (w1 + w2 - 4) / 2, b = (w1 - w2 - 2) / 2;
  auto s = make("S<" + std::to_string(a) + "," + std::to_string(b) + ">", w1, mult);
  Letter b1 = Letter::siegel(w1, w2, 1), b2 = Letter::siegel(w1, w2, 2);
  HalfInt t = HalfInt::half(w1);
  for (int e : {1, -1}) s->character.push_back(ExpVec::letter(b1, HalfInt::of(e), t));
  for (int e : {1, -1}) s->character.push_back(ExpVec::letter(b2, HalfInt::of(e), t));
  int u = (w1 + w2) / 2, v = (w1 - w2) / 2;
  s->hodge = {{w1, 0}, {u, v}, {v, u}, {0, w1}};
  s->families = {b1.family};
  return s;
}

Symbol lambda2(int w1, int w2, long long mult) {
  check_mult(mult);
  int a = (w1 + w2 - 4) / 2, b = (w1 - w2 - 2) / 2;
  auto s = make("Lambda2S<" + std::to_string(a) + "," + std::to_string(b) + ">", w1 + w2, mult);
  Letter b1 = Letter::siegel(w1, w2, 1), b2 = Letter::siegel(w1, w2, 2);
  HalfInt t = HalfInt::half(w1 + w2);
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      s->character.push_back(ExpVec::letter(b1, HalfInt::of(e1)) +
                             ExpVec::letter(b2, HalfInt::of(e2), t));
  s->character.push_back(ExpVec::tate_only(t));
  s->character.push_back(ExpVec::tate_only(t));
  int u = (w1 + w2) / 2;
  s->hodge = {{w1 + w2, 0}, {w1, w2}, {u, u}, {u, u}, {w2, w1}, {0, w1 + w2}};
  s->families = {b1.family};
  return s;
}

Symbol composite(const std::vector<Symbol>& parts) {
  std::vector<Symbol> atoms;
  for (const auto& p : parts) {
    if (p->tate) continue;
    if (p->atoms.empty())
      atoms.push_back(p);
    else
      atoms.insert(atoms.end(), p->atoms.begin(), p->atoms.end());
  }
  if (atoms.empty()) return unit();
  if (atoms.size() == 1) return atoms.front();
  std::sort(atoms.begin(), atoms.end(),
            [](const Symbol& x, const Symbol& y) { return x->name < y->name; });
  auto s = std::make_shared<SymbolData>();
  s->character = {ExpVec{}};
  s->hodge = {{0, 0}};
  s->mult = 1;
  for (const auto& at : atoms) {
    if (!s->name.empty()) s->name += "*";
    s->name += at->name;
    std::vector<ExpVec> ch;
    for (const auto& x : s->character)
      for (const auto& y : at->character) ch.push_back(x + y);
    s->character = std::move(ch);
    std::vector<std::pair<int, int>> h;
    for (const auto& [p, q] : s->hodge)
      for (const auto& [p2, q2] : at->hodge) h.emplace_back(p + p2, q + q2);
    s->hodge = std::move(h);
    s->mult *= at->mult;
    s->motivic_weight += at->motivic_weight;
    s->families.insert(s->families.end(), at->families.begin(), at->families.end());
  }
  s->atoms = std::move(atoms);
  return s;
}

}  // namespace symbols

std::string Term::str() const {
  if (sym->tate) return "L^" + std::to_string(twist);
  if (twist == 0) return sym->name;
  return sym->name + "*L^" + std::to_string(twist);
}

bool TermLess::operator()(const Term& a, const Term& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.sym->name != b.sym->name) return a.sym->name < b.sym->name;
  return a.twist < b.twist;
}

GKElem GKElem::tate(int k, long long coeff) { return of(symbols::unit(), k, coeff); }

GKElem GKElem::of(const Symbol& s, int twist, long long coeff) {
  GKElem e;
  e.add(Term{s, twist}, coeff);
  return e;
}

void GKElem::add(const Term& t, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GKElem::is_tate() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.sym->tate; });
}

long long GKElem::coeff(const std::string& name, int twist) const {
  for (const auto& [t, c] : terms_)
    if (t.sym->name == name && t.twist == twist) return c;
  return 0;
}

long long GKElem::dim() const {
  long long d = 0;
  for (const auto& [t, c] : terms_) d += c * t.sym->dim();
  return d;
}

GKElem GKElem::operator+(const GKElem& o) const {
  GKElem r = *this;
  r += o;
  return r;
}

GKElem& GKElem::operator+=(const GKElem& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

GKElem GKElem::operator-() const { return *this * -1; }

GKElem GKElem::operator-(const GKElem& o) const { return *this + (-o); }

GKElem GKElem::operator*(long long k) const {
  GKElem r;
  for (const auto& [t, c] : terms_) r.add(t, c * k);
  return r;
}

GKElem GKElem::twisted(int m) const {
  GKElem r;
  for (const auto& [t, c] : terms_) r.add(Term{t.sym, t.twist + m}, c);
  return r;
}

bool GKElem::operator==(const GKElem& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [t, c] : terms_) {
    if (t.sym->name != it->first.sym->name || t.twist != it->first.twist || c != it->second)
      return false;
    ++it;
  }
  return true;
}

namespace {

std::string coeff_prefix(long long c, const Term& t) {
  if (c == 1) return "";
  return t.sym->tate ? std::to_string(c) : std::to_string(c) + " ";
}

}  // namespace

std::string GKElem::str(TermOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Term, long long>> seq(terms_.begin(), terms_.end());
  if (order == TermOrder::Table) {
    std::stable_partition(seq.begin(), seq.end(), [](const auto& kv) { return !kv.first.sym->tate; });
  }
  std::string out;
  bool first = true;
  for (const auto& [t, c] : seq) {
    long long a = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += coeff_prefix(a, t) + t.str();
    first = false;
  }
  return out;
}

GKElem gk_add(const GKElem& a, const GKElem& b) { return a + b; }

namespace {

bool families_overlap(const Symbol& x, const Symbol& y) {
  for (const auto& f : x->families)
    for (const auto& g : y->families)
      if (f == g) return true;
  return false;
}

GKElem mul_terms(const Term& x, const Term& y) {
  int tw = x.twist + y.twist;
  if (x.sym->tate) return GKElem::of(y.sym, tw);
  if (y.sym->tate) return GKElem::of(x.sym, tw);
  if (families_overlap(x.sym, y.sym)) {
    // S<k> * S<k> = Sym2S<k> + L^(k-1), valid when the cusp space is a line.
    bool elliptic_atoms = x.sym->atoms.empty() && y.sym->atoms.empty() &&
                          x.sym->name == y.sym->name && x.sym->character.size() == 2 &&
                          x.sym->families.size() == 1 &&
                          x.sym->families[0].kind == LetterKind::Elliptic;
    if (elliptic_atoms && x.sym->mult == 1) {
      int w = x.sym->motivic_weight;
      return GKElem::of(symbols::sym2(w, 1), tw) + GKElem::tate(w + tw);
    }
    throw UnsupportedProduct("no rewrite rule for " + x.sym->name + " * " + y.sym->name);
  }
  return GKElem::of(symbols::composite({x.sym, y.sym}), tw);
}

}  // namespace

GKElem gk_mul(const GKElem& a, const GKElem& b) {
  GKElem r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r += mul_terms(x, y) * (cx * cy);
  return r;
}

GKElem mod_tate(const GKElem& a) {
  GKElem r;
  for (const auto& [t, c] : a.terms())
    if (!t.sym->tate) r.add(t, c);
  return r;
}

GKElem truncate_weight(const GKElem& a, int M) {
  GKElem r;
  for (const auto& [t, c] : a.terms())
    if (t.weight() <= M) r.add(t, c);
  return r;
}

GradedGK truncate_weight(const GradedGK& a, int M) {
  GradedGK r;
  for (const auto& [k, e] : a) {
    GKElem t = truncate_weight(e, M);
    if (!t.is_zero()) r[k] = t;
  }
  return r;
}

GKElem total(const GradedGK& a) {
  GKElem r;
  for (const auto& [k, e] : a) r += e;
  return r;
}

void graded_add(GradedGK& into, const GradedGK& other) {
  for (const auto& [k, e] : other) {
    GKElem s = into[k] + e;
    if (s.is_zero())
      into.erase(k);
    else
      into[k] = s;
  }
}

Poly Poly::monomial(int i, long long a) {
  std::vector<long long> c(i + 1, 0);
  c[i] = a;
  return Poly(c);
}

Poly Poly::l_minus_one_pow(int k) {
  Poly r = monomial(0);
  Poly f({-1, 1});
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<long long> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return Poly(r);
}

Poly Poly::operator-(const Poly& o) const { return *this + o * -1; }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<long long> r(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return Poly(r);
}

Poly Poly::operator*(long long k) const {
  std::vector<long long> r = c;
  for (auto& x : r) x *= k;
  return Poly(r);
}

std::string Poly::str() const {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long a = c[i] < 0 ? -c[i] : c[i];
    if (first)
      out += c[i] < 0 ? "-" : "";
    else
      out += c[i] < 0 ? " - " : " + ";
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? "L" : "L^" + std::to_string(i));
    if (i == 0)
      out += std::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += std::to_string(a) + " " + mono;
  }
  return out;
}

GKElem poly_times(const Poly& p, const Symbol& sym) {
  GKElem r;
  for (size_t i = 0; i < p.c.size(); ++i) r.add(Term{sym, static_cast<int>(i)}, p.c[i]);
  return r;
}

Poly coefficient_poly(const GKElem& a, const std::string& name) {
  std::vector<long long> c;
  for (const auto& [t, k] : a.terms()) {
    if (t.sym->name != name) continue;
    if (t.twist < 0) throw InvalidInput("negative twist in coefficient polynomial");
    if (static_cast<int>(c.size()) <= t.twist) c.resize(t.twist + 1, 0);
    c[t.twist] += k;
  }
  return Poly(c);
}

}  // namespace ihc
