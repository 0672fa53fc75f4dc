#pragma once

// Spin and half-spin weight multisets of parameter blocks, the signs u_i,
// and the graded contribution of a parameter to intersection cohomology.

#include <map>

#include "ihc/arthur.hpp"

namespace ihc {

enum class Side { Full, Plus, Minus };

// Recognition failure; `residue` holds the part of the multiset left over.
struct Unrecognized : Error {
  Multiset residue;
  Unrecognized(const std::string& what, Multiset r) : Error(what), residue(std::move(r)) {}
};

// The n*d exponents pi-exponent + tate (d-1)/2 - k of the block.
std::vector<ExpVec> std_exponents(const Block& b);

struct SpinMultiset {
  Multiset elements;
  Side side = Side::Full;
};

// Elements 1/2 sum_j e_j p_j over the positive exponents p_j and signs e_j.
// Plus keeps an even number of minus signs, Minus an odd number.
SpinMultiset spin_multiset(const Block& b, Side side);

int u_sign(const ArthurParam& psi, size_t i, const TauCover& cover);

// Eigenform multiplicity of each family occurring in psi.
std::map<Family, long long> family_mults(const ArthurParam& psi);

// Greedy peeling against the catalog symbols. Coefficients are per aggregate
// symbol; no family multiplicity is applied here.
GKElem recognize(const Multiset& ms, const std::map<Family, long long>& mults = {});

// Contribution of psi to IH^*(A_g^Sat, V_lambda), graded by degree.
GradedGK contribution(const ArthurParam& psi, int g, const DomWeight& lambda);

// Multiset of Frobenius monomials of the contribution, before recognition.
Multiset contribution_multiset(const ArthurParam& psi, int g, const DomWeight& lambda);

}  // namespace ihc
