#include "ihc/strata.hpp"

#include <numeric>
#include <sstream>

#include "ihc/errors.hpp"
#include "ihc/ihtab.hpp"

namespace ihc {

int c_of_g(int g) {
  if (g < 1) throw InvalidInput("g must be positive");
  static const int table[] = {10, 7, 6, 3, 2, 1};
  return g <= 6 ? table[g - 1] : 0;
}

bool is_tate_interior(int g, int s) {
  if (s < 0) throw InvalidInput("s must be non-negative");
  return s < c_of_g(g);
}

bool is_tate_compactified(int g, int s) {
  if (s < 0) throw InvalidInput("s must be non-negative");
  return s < c_of_g(g);
}

namespace {

Symbol s18() { return symbols::elliptic(17, 1); }

GKElem times(const Poly& p, const GKElem& e) {
  GKElem out;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.at(i) != 0) out += e.twisted(i) * p.at(i);
  return out;
}

}  // namespace

std::vector<EcFact> default_ec_facts() {
  std::vector<EcFact> f;
  const std::string a3 = "e_c(A_3, V_lambda) = -e_IH(A_2^Sat, V_{7,7}) mod Tate for lambda = (6,6,j), j even";
  for (int j : {0, 2, 4, 6}) f.push_back({3, DomWeight({6, 6, j}), GKElem::of(s18()), a3});
  f.push_back({2, DomWeight({7, 7}), -GKElem::of(s18()),
               "S<18> occurs in H^3_c(A_2, V_{7,7}); all other terms are Tate"});
  return f;
}

GKElem ih_euler_mod_tate(int g, const DomWeight& lambda) {
  GKElem out;
  for (const auto& [k, e] : ih(g, lambda, 23)) out += mod_tate(e) * (k % 2 == 0 ? 1 : -1);
  return out;
}

GKElem ec_interior_mod_tate(int g, int s, const std::vector<EcFact>& facts) {
  if (s < 0) throw InvalidInput("s must be non-negative");
  if (g != 3) throw UnsupportedRange("interior Euler characteristics are available for g = 3 only");
  if (s >= 8) throw UnsupportedRange("s >= 8 needs local systems with lambda_1 >= 8 on A_3");
  GKElem out;
  if (s <= 5) return out;  // every V_lambda with lambda_1 <= 5 has Tate cohomology on A_3
  for (int j : {0, 2, 4, 6}) {
    DomWeight l({6, 6, j});
    const EcFact* fact = nullptr;
    for (const auto& f : facts)
      if (f.g == 3 && f.lambda == l) fact = &f;
    if (!fact) throw MissingFact("no Euler characteristic supplied for e_c(A_3, V_" + l.str() + ")");
    out += times(ec_mult_poly(3, s, l), mod_tate(fact->value));
  }
  return mod_tate(out);
}

std::pair<Poly, Poly> torus_euler_signed(int k) {
  if (k < 0) throw InvalidInput("torus rank must be non-negative");
  Poly p = Poly::l_minus_one_pow(k);
  std::vector<long long> even(p.c.size()), odd(p.c.size());
  for (int i = 0; i <= p.degree(); ++i) (i % 2 == 0 ? even : odd)[i] = p.at(i);
  return {Poly(even), Poly(odd)};
}

Poly g_poly(int s) { return ec_mult_poly(2, s + 1, DomWeight({7, 7})); }

std::pair<Poly, Poly> g_poly_signed(int s) { return ec_mult_poly_signed(2, s + 1, DomWeight({7, 7}), 1); }

GKElem stratum_ec_rank1(const Rank1Stratum& st) {
  if (st.g != 3 || (st.s != 6 && st.s != 7))
    throw UnsupportedRange("torus rank 1 strata are handled for g = 3 and s in {6, 7}");
  if (st.dim_aff < 0 || st.dim_aff > st.s) throw InvalidInput("dim_aff must lie in [0, s]");
  int k = st.torus_rank();
  Poly p;
  if (st.stabilizer == Stabilizer::Trivial) {
    p = g_poly(st.s) * Poly::l_minus_one_pow(k);
  } else {
    if (st.dim_aff > 1) throw InvalidInput("an order 2 stratum of a simplicial decomposition has dim_aff 0 or 1");
    auto [gp, gm] = g_poly_signed(st.s);
    auto [even, odd] = torus_euler_signed(k);
    const Poly& same = k % 2 == 0 ? even : odd;
    const Poly& other = k % 2 == 0 ? odd : even;
    p = kTorusPairing.plus_takes_same_parity ? gp * same + gm * other : gp * other + gm * same;
  }
  return poly_times(-p, s18());
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) n = -n, d = -d;
  long long g = std::gcd(n, d);
  num = n / (g ? g : 1);
  den = d / (g ? g : 1);
}

Rational Rational::operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
Rational Rational::operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
Rational Rational::operator*(const Rational& o) const { return {num * o.num, den * o.den}; }

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

std::string EcIdentity::str() const {
  std::ostringstream o;
  bool first = true;
  auto term = [&](long long c, const char* var, size_t i) {
    if (first)
      o << c;
    else
      o << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    o << " " << var << "_" << i;
    first = false;
  };
  for (size_t i = 0; i < coef_a.size(); ++i) term(coef_a[i], "a", i);
  for (size_t i = 0; i < coef_b.size(); ++i)
    if (coef_b[i] != 0) term(coef_b[i], "b", i);
  o << " = " << interior << "; equals " << c_euler.str() << " * (sum (-1)^i (a_i + 2 b_i) = 0) + "
    << c_count.str() << " * (a_0 + a_1 = " << (1LL << s) << ")";
  return o.str();
}

EcIdentity ec_identity_check(int s, long long interior, const std::vector<long long>& a,
                             const std::vector<long long>& b) {
  if (s != 6 && s != 7) throw UnsupportedRange("the identities are stated for s in {6, 7}");
  for (long long x : a)
    if (x < 0) throw InvalidInput("cell counts must be non-negative");
  for (long long x : b)
    if (x < 0) throw InvalidInput("cell counts must be non-negative");
  if (a.size() > 2) throw InvalidInput("order 2 cones have dimension 1 or 2");
  if (b.size() > static_cast<size_t>(s) + 1) throw InvalidInput("too many cone dimensions");

  EcIdentity r;
  r.s = s;
  r.interior = interior;
  // Moving each stratum's S<18> coefficient to the left: sum = interior.
  auto constant = [&](int dim_aff, Stabilizer st) {
    return -coefficient_poly(stratum_ec_rank1({3, s, dim_aff, st}), "S<18>").at(0);
  };
  for (int i = 0; i < 2; ++i) r.coef_a.push_back(constant(i, Stabilizer::Order2));
  for (int i = 0; i <= s; ++i) r.coef_b.push_back(constant(i, Stabilizer::Trivial));

  // E: sum (-1)^i (a_i + 2 b_i) = 0 and N: a_0 + a_1 = 2^s.
  r.c_euler = Rational(r.coef_b[0], 2);
  r.c_count = Rational(r.coef_a[0]) - r.c_euler;
  bool ok = Rational(r.coef_a[1]) == r.c_count - r.c_euler;
  for (int i = 0; i <= s; ++i) ok = ok && Rational(r.coef_b[i]) == r.c_euler * Rational(i % 2 == 0 ? 2 : -2);
  ok = ok && r.c_count * Rational(1LL << s) == Rational(interior);
  r.combination_ok = ok;

  auto at = [](const std::vector<long long>& v, size_t i) { return i < v.size() ? v[i] : 0LL; };
  long long euler = 0;
  for (int i = 0; i <= s; ++i) euler += (i % 2 == 0 ? 1 : -1) * (at(a, i) + 2 * at(b, i));
  r.base_holds = euler == 0 && at(a, 0) + at(a, 1) == (1LL << s);
  for (int i = 0; i < 2; ++i) r.lhs += r.coef_a[i] * at(a, i);
  for (int i = 0; i <= s; ++i) r.lhs += r.coef_b[i] * at(b, i);
  r.identity_holds = r.lhs == interior;
  return r;
}

EcIdentity ec_identity_check(int s, const std::vector<long long>& a, const std::vector<long long>& b) {
  long long interior = coefficient_poly(ec_interior_mod_tate(3, s), "S<18>").at(0);
  return ec_identity_check(s, interior, a, b);
}

std::string Witness::str() const {
  std::string out;
  for (const auto& l : chain) out += l + "\n";
  out += negative ? "strictly negative coefficient: not Tate\n" : "no conclusion\n";
  return out;
}

namespace {

long long slot(int s, int dim_aff, Stabilizer st, int i) {
  return coefficient_poly(stratum_ec_rank1({3, s, dim_aff, st}), "S<18>").at(i);
}

std::string num(long long x) { return std::to_string(x); }

}  // namespace

Witness nontate_witness(int s, const std::vector<long long>& interior) {
  if (s != 6 && s != 7) throw UnsupportedRange("the witness is stated for s in {6, 7}");
  Witness w;
  w.s = s;
  w.fixed_orbits = 1LL << s;
  w.slots = s == 6 ? std::vector<int>{6, 5} : std::vector<int>{9};
  w.interior = interior;
  if (w.interior.size() != w.slots.size()) throw InvalidInput("one interior coefficient per slot");
  for (long long x : w.interior)
    if (x < 0) throw InvalidInput("interior coefficients must be non-negative");
  auto& ch = w.chain;

  if (s == 6) {
    long long i6 = interior[0], i5 = interior[1];
    long long o06 = slot(6, 0, Stabilizer::Order2, 6), o15 = slot(6, 1, Stabilizer::Order2, 5);
    long long t06 = slot(6, 0, Stabilizer::Trivial, 6), t05 = slot(6, 0, Stabilizer::Trivial, 5);
    long long t15 = slot(6, 1, Stabilizer::Trivial, 5);
    bool shape = o06 == -1 && slot(6, 1, Stabilizer::Order2, 6) == 0 && slot(6, 0, Stabilizer::Order2, 5) == 0 &&
                 o15 == -1 && t06 == -1 && t15 <= 0;
    for (int d = 1; d <= 6; ++d) shape = shape && slot(6, d, Stabilizer::Trivial, 6) == 0;
    for (int d = 2; d <= 6; ++d) shape = shape && slot(6, d, Stabilizer::Trivial, 5) <= 0;
    if (!shape) throw std::logic_error("stratum formulas changed shape");
    ch.push_back("c6 = " + num(i6) + " - a_0 - b_0");
    ch.push_back("c5 <= " + num(i5) + " - a_1 + " + num(t05) + " b_0");
    ch.push_back("a_0 + a_1 = " + num(w.fixed_orbits));
    ch.push_back("if a_0 + b_0 >= " + num(i6 + 1) + ": c6 <= -1 < 0");
    long long bound = i5 - (w.fixed_orbits - i6) + t05 * i6;
    ch.push_back("else a_1 >= " + num(w.fixed_orbits - i6) + " and b_0 <= " + num(i6) + ": c5 <= " + num(bound));
    w.negative = bound < 0;
  } else {
    long long i9 = interior[0];
    long long o09 = slot(7, 0, Stabilizer::Order2, 9), t09 = slot(7, 0, Stabilizer::Trivial, 9);
    bool shape = o09 < 0 && t09 < 0 && slot(7, 1, Stabilizer::Order2, 9) == 0;
    for (int d = 1; d <= 7; ++d) shape = shape && slot(7, d, Stabilizer::Trivial, 9) == 0;
    if (!shape) throw std::logic_error("stratum formulas changed shape");
    long long worst = std::max(o09, t09);
    ch.push_back("c9 = " + num(i9) + " " + num(o09) + " a_0 " + num(t09) + " b_0");
    ch.push_back("a_0 + a_1 = " + num(w.fixed_orbits) + "; the ends of a fixed edge form a free vertex orbit, so a_0 + b_0 >= 1");
    ch.push_back("c9 <= " + num(i9) + " " + num(worst) + " = " + num(i9 + worst));
    w.negative = i9 + worst < 0;
  }
  return w;
}

Witness nontate_witness(int s) {
  if (s != 6 && s != 7) throw UnsupportedRange("the witness is stated for s in {6, 7}");
  Poly p = coefficient_poly(ec_interior_mod_tate(3, s), "S<18>");
  std::vector<long long> interior = s == 6 ? std::vector<long long>{p.at(6), p.at(5)} : std::vector<long long>{p.at(9)};
  return nontate_witness(s, interior);
}

}  // namespace ihc
