#pragma once

// Sp_{2g} representation theory: Weyl characters, tensor and wedge
// decompositions, and multiplicity polynomials of local systems in R pi_*.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ihc/gkring.hpp"

namespace ihc {

struct DomWeight {
  std::vector<int> entries;  // lambda_1 >= ... >= lambda_g >= 0

  DomWeight() = default;
  explicit DomWeight(std::vector<int> e);
  // Pads with zeros to length g; throws if the list is longer or not dominant.
  static DomWeight padded(std::vector<int> e, int g);

  int g() const { return static_cast<int>(entries.size()); }
  int size() const;  // |lambda|
  std::vector<int> tau() const;  // lambda + rho, strictly decreasing
  std::string str() const;       // "4,4"
  auto operator<=>(const DomWeight&) const = default;
};

using Weight = std::vector<int>;

struct CharPoly {
  int g = 0;
  std::map<Weight, long long> coeffs;  // no zero entries

  long long mass() const;
  bool weyl_invariant() const;
  CharPoly operator+(const CharPoly& o) const;
  CharPoly operator*(const CharPoly& o) const;
  CharPoly operator*(long long k) const;
  bool operator==(const CharPoly& o) const { return g == o.g && coeffs == o.coeffs; }
};

// Standard dominant representative of the Weyl orbit of mu.
Weight dominant_rep(Weight mu);
// mu <= lambda in the dominance order of C_g.
bool dominated(const Weight& mu, const Weight& lambda);

// Multiplicities of the dominant weights of V_lambda (Freudenthal, memoized).
const std::map<Weight, long long>& dominant_multiplicities(const DomWeight& lambda);
CharPoly weyl_character(const DomWeight& lambda);
long long weyl_dim(const DomWeight& lambda);

using Decomposition = std::vector<std::pair<DomWeight, long long>>;
// Peels highest weights, lexicographically largest first. Fails with
// NotACharacter on a character that is not Weyl invariant.
Decomposition decompose(const CharPoly& c);

struct LocalSystemEntry {
  DomWeight lambda;
  int m = 0;  // Tate twist V_lambda(-m)
  long long mult = 0;
  bool operator==(const LocalSystemEntry& o) const = default;
};
using LocalSystemDecomp = std::vector<LocalSystemEntry>;

LocalSystemDecomp wedge_local_system(int g, int i);
// R^q pi^s_* Q(-k) for pi: X_{g,s} -> A_g.
LocalSystemDecomp rpi_decomposition(int g, int s, int q, int k = 0);

// P_lambda(L) with e_c(X_{g,s}) = sum_lambda P_lambda(L) e_c(A_g, V_lambda).
Poly ec_mult_poly(int g, int s, const DomWeight& lambda);
// Split by the eigenvalue of an involution acting by (-1)^i on R^i of one
// factor: (P_plus, P_minus) with P_plus + P_minus = ec_mult_poly.
std::pair<Poly, Poly> ec_mult_poly_signed(int g, int s, const DomWeight& lambda,
                                          int flipped_factor_count = 1);

// Character of the degree-q part of the exterior algebra of s copies of the
// standard representation, with `flipped` copies weighted by (-1)^degree.
CharPoly fiber_cohomology_character(int g, int s, int q, int flipped = 0);

}  // namespace ihc
