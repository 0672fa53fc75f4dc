#pragma once

// Exact arithmetic for exponent vectors, motive symbols and elements of the
// Grothendieck ring in which all contributions are expressed.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ihc/errors.hpp"

namespace ihc {

// A half-integer stored as twice its value.
struct HalfInt {
  long long doubled = 0;

  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(long long d) { HalfInt h; h.doubled = d; return h; }
  static constexpr HalfInt of(long long n) { return from_doubled(2 * n); }
  // p/2
  static constexpr HalfInt half(long long p) { return from_doubled(p); }

  constexpr bool integral() const { return doubled % 2 == 0; }
  constexpr bool is_zero() const { return doubled == 0; }
  long long to_int() const;  // throws if not integral
  std::string str() const;   // "3", "-11/2"

  constexpr HalfInt operator-() const { return from_doubled(-doubled); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled + o.doubled); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled - o.doubled); }
  constexpr HalfInt operator*(long long k) const { return from_doubled(doubled * k); }
  HalfInt& operator+=(HalfInt o) { doubled += o.doubled; return *this; }
  HalfInt& operator-=(HalfInt o) { doubled -= o.doubled; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;
};

enum class LetterKind { Elliptic, Siegel, Config };

// An eigenform family: all eigenforms of one shape, represented at once.
struct Family {
  LetterKind kind = LetterKind::Elliptic;
  int w1 = 0;  // Elliptic: motivic weight w; Siegel: w1
  int w2 = 0;  // Siegel: w2
  std::string name;  // Config only

  std::string str() const;
  auto operator<=>(const Family&) const = default;
};

// A Satake letter. Elliptic(w) has a single coordinate with infinitesimal
// weight w/2. Siegel(w1,w2) has coordinates 1 and 2 of weights w1/2 and w2/2.
// Config letters carry their weight explicitly.
struct Letter {
  Family family;
  int coord = 0;
  HalfInt config_weight;

  static Letter elliptic(int w);
  static Letter siegel(int w1, int w2, int coord);
  static Letter config(const std::string& name, int coord, HalfInt weight);

  HalfInt inf_weight() const;
  std::string str() const;
  auto operator<=>(const Letter& o) const {
    if (auto c = family <=> o.family; c != 0) return c;
    return coord <=> o.coord;
  }
  bool operator==(const Letter& o) const { return family == o.family && coord == o.coord; }
};

// A Frobenius-eigenvalue monomial: letters with half-integer exponents times
// a power of p. The letters are unitary, so the Frobenius weight is 2*tate.
struct ExpVec {
  std::map<Letter, HalfInt> exps;  // no zero entries
  HalfInt tate;

  static ExpVec tate_only(HalfInt t) { ExpVec v; v.tate = t; return v; }
  static ExpVec letter(const Letter& x, HalfInt e, HalfInt t = {});

  // Infinitesimal weight: sum of exponent * letter weight, plus tate.
  HalfInt infinitesimal() const;
  // Frobenius weight, 2*tate.
  long long weight() const { return tate.doubled; }
  bool letter_free() const { return exps.empty(); }
  HalfInt max_abs_exponent() const;

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-() const;
  ExpVec operator-(const ExpVec& o) const { return *this + (-o); }
  ExpVec shifted(HalfInt t) const { ExpVec v = *this; v.tate += t; return v; }
  // Exact halving; throws std::logic_error if a component is not divisible.
  ExpVec halved() const;
  // Restriction to the letters of one family.
  ExpVec family_part(const Family& f) const;

  std::string str() const;
  auto operator<=>(const ExpVec&) const = default;
};

using Multiset = std::map<ExpVec, long long>;  // element -> multiplicity
Multiset to_multiset(const std::vector<ExpVec>& v);
long long total_count(const Multiset& m);

// A motive symbol. The character and Hodge data are those of one eigenform;
// `mult` copies are aggregated under one name (for example S<24>, dim 4).
struct SymbolData {
  std::string name;
  std::vector<ExpVec> character;
  std::vector<std::pair<int, int>> hodge;
  long long mult = 1;
  int motivic_weight = 0;
  bool tate = false;
  std::vector<Family> families;
  std::vector<std::shared_ptr<const SymbolData>> atoms;  // factors of a composite

  long long dim() const { return mult * static_cast<long long>(character.size()); }
  // Hodge multiset including the mult copies.
  std::vector<std::pair<int, int>> hodge_all() const;
};
using Symbol = std::shared_ptr<const SymbolData>;

namespace symbols {
Symbol unit();                                 // L^0
Symbol elliptic(int w, long long mult);        // S<w+1>
Symbol sym2(int w, long long mult);            // Sym2S<w+1>
Symbol siegel(int w1, int w2, long long mult); // S<a,b>
Symbol lambda2(int w1, int w2, long long mult);
Symbol composite(const std::vector<Symbol>& atoms);
// (w1, w2) from the (a, b) of S<a,b>.
std::pair<int, int> siegel_weights(int a, int b);
}  // namespace symbols

struct Term {
  Symbol sym;
  int twist = 0;
  int weight() const { return sym->motivic_weight + 2 * twist; }
  std::string str() const;
};

// Canonical term order: (weight, name, twist).
struct TermLess {
  bool operator()(const Term& a, const Term& b) const;
};

enum class TermOrder { Canonical, Table };

class GKElem {
 public:
  GKElem() = default;
  static GKElem tate(int k, long long coeff = 1);
  static GKElem of(const Symbol& s, int twist = 0, long long coeff = 1);

  void add(const Term& t, long long coeff);
  const std::map<Term, long long, TermLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_tate() const;
  long long coeff(const std::string& name, int twist) const;
  // Total dimension counting mult copies.
  long long dim() const;

  GKElem operator+(const GKElem& o) const;
  GKElem operator-(const GKElem& o) const;
  GKElem operator-() const;
  GKElem operator*(long long k) const;
  GKElem& operator+=(const GKElem& o);
  GKElem twisted(int m) const;
  bool operator==(const GKElem& o) const;

  std::string str(TermOrder order = TermOrder::Canonical) const;

 private:
  std::map<Term, long long, TermLess> terms_;
};

GKElem gk_add(const GKElem& a, const GKElem& b);
GKElem gk_mul(const GKElem& a, const GKElem& b);
GKElem mod_tate(const GKElem& a);
GKElem truncate_weight(const GKElem& a, int M);

using GradedGK = std::map<int, GKElem>;  // degree -> element, no zero entries
GradedGK truncate_weight(const GradedGK& a, int M);
GKElem total(const GradedGK& a);
void graded_add(GradedGK& into, const GradedGK& other);

// Integer polynomial in L, coefficient of L^i at index i.
struct Poly {
  std::vector<long long> c;

  Poly() = default;
  explicit Poly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly monomial(int i, long long a = 1);
  static Poly l_minus_one_pow(int k);  // (L-1)^k

  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
  bool is_zero() const { return c.empty(); }
  void trim();

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(long long k) const;
  Poly operator-() const { return *this * -1; }
  bool operator==(const Poly& o) const { return c == o.c; }

  // "c0 + c1 L + c2 L^2"
  std::string str() const;
};

// p(L) * sym as a ring element.
GKElem poly_times(const Poly& p, const Symbol& sym);
// Coefficient polynomial of sym in a (terms sym*L^i).
Poly coefficient_poly(const GKElem& a, const std::string& name);

}  // namespace ihc
