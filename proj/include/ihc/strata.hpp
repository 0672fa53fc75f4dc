#pragma once

// Euler characteristics of X_{g,s} and its torus rank 1 boundary strata
// modulo Tate classes, the cell-count identities, and the Tate-ness decisions.

#include <string>
#include <utility>
#include <vector>

#include "ihc/gkring.hpp"
#include "ihc/spchar.hpp"

namespace ihc {

// 10, 7, 6, 3, 2, 1 for g = 1..6 and 0 for g >= 7.
int c_of_g(int g);
// H^*(X_{g,s}) (resp. of a toroidal compactification) is Tate iff s < c(g).
bool is_tate_interior(int g, int s);
bool is_tate_compactified(int g, int s);

// e_c(A_g, V_lambda) modulo Tate classes, taken from outside this library.
struct EcFact {
  int g = 0;
  DomWeight lambda;
  GKElem value;
  std::string source;
};

// e_c(A_3, V_{6,6,j}) = S<18> for j = 0, 2, 4, 6 and e_c(A_2, V_{7,7}) = -S<18>.
std::vector<EcFact> default_ec_facts();

// -e_IH(A_2^Sat, V_{7,7}) mod Tate from our own tables, to compare with the
// shipped A_2 fact.
GKElem ih_euler_mod_tate(int g, const DomWeight& lambda);

// sum_lambda ec_mult_poly(3, s, lambda) * e_c(A_3, V_lambda) mod Tate.
GKElem ec_interior_mod_tate(int g, int s, const std::vector<EcFact>& facts = default_ec_facts());

// (L-1)^k split into its even and odd L-degree parts.
std::pair<Poly, Poly> torus_euler_signed(int k);

enum class Stabilizer { Trivial, Order2 };

struct Rank1Stratum {
  int g = 3;
  int s = 6;
  int dim_aff = 0;
  Stabilizer stabilizer = Stabilizer::Trivial;
  int torus_rank() const { return s - dim_aff; }
};

// g_s with e_c(X_{2,s+1}) = -g_s S<18> mod Tate, and its split (g_s^+, g_s^-)
// by the involution on one fiber factor.
Poly g_poly(int s);
std::pair<Poly, Poly> g_poly_signed(int s);

// Which piece of the torus pairs with which piece of g_s in an order 2
// stratum: the invariant part of (L-1)^k is the one whose L-degree has the
// parity of k.
struct TorusPairing {
  bool plus_takes_same_parity = true;
};
inline constexpr TorusPairing kTorusPairing{};

GKElem stratum_ec_rank1(const Rank1Stratum& st);

// Exact fractions for the combination coefficients.
struct Rational {
  long long num = 0, den = 1;
  Rational() = default;
  Rational(long long n, long long d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  std::string str() const;
};

// a_i: rank 1 cones of dimension i+1 with stabilizer of order 2 (a_i = 0 for
// i > 1); b_i: those with trivial stabilizer.
struct EcIdentity {
  int s = 0;
  long long interior = 0;           // coefficient of S<18> in e_c(X_{3,s})
  std::vector<long long> coef_a;    // coefficient of a_i
  std::vector<long long> coef_b;    // coefficient of b_i (i = 0..s)
  Rational c_euler, c_count;        // multiples of the two base equations
  bool combination_ok = false;      // identity = c_euler*E + c_count*N
  long long lhs = 0;                // identity evaluated on (a, b)
  bool base_holds = false;          // (a, b) satisfy both base equations
  bool identity_holds = false;
  bool pass() const { return combination_ok && (!base_holds || identity_holds); }
  std::string str() const;
};

// Checks EC1 (s = 6) or EC2 (s = 7) on the counts (a, b). The identity's
// coefficients are read off the stratum formulas; `interior` defaults to the
// constant coefficient of ec_interior_mod_tate.
EcIdentity ec_identity_check(int s, const std::vector<long long>& a, const std::vector<long long>& b);
EcIdentity ec_identity_check(int s, long long interior, const std::vector<long long>& a,
                             const std::vector<long long>& b);

// Case analysis showing a coefficient of L^i S<18> in e_c of the
// compactification is negative for every admissible cell count.
struct Witness {
  int s = 0;
  std::vector<int> slots;                 // L-degrees inspected
  std::vector<long long> interior;        // interior coefficients in those slots
  long long fixed_orbits = 0;             // 2^s
  std::vector<std::string> chain;         // the inequalities, in order
  bool negative = false;
  std::string str() const;
};

Witness nontate_witness(int s);
Witness nontate_witness(int s, const std::vector<long long>& interior);

}  // namespace ihc
