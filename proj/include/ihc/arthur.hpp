#pragma once

// Formal Arthur-Langlands parameters psi = (+)_i pi_i[d_i] for Sp_{2g} with a
// prescribed infinitesimal character, and the degree and weight bounds.

#include <optional>
#include <string>
#include <vector>

#include "ihc/catalog.hpp"
#include "ihc/spchar.hpp"

namespace ihc {

struct Block {
  Constituent c;
  int d = 1;

  bool odd() const { return (c.n * d) % 2 == 1; }
  std::vector<ExpVec> exponents() const { return block_exponents(c, d); }
  // Positive infinitesimal values, decreasing.
  std::vector<int> positive_values() const;
  std::string str() const;  // "Delta_{11}[2]", "[9]"
  bool operator==(const Block& o) const { return c == o.c && d == o.d; }
};

// blocks[0] is the unique block with n*d odd.
struct ArthurParam {
  std::vector<Block> blocks;

  int g() const;
  std::vector<int> tau() const;  // decreasing
  DomWeight lambda() const;
  bool is_trivial() const { return blocks.size() == 1 && blocks[0].c.kind == ConstKind::Trivial; }
  // Even blocks by decreasing largest value, then the odd block.
  std::string str() const;
  bool operator==(const ArthurParam& o) const { return blocks == o.blocks; }
};

struct TauCover {
  std::vector<std::vector<int>> J;  // J[i]: 1-based tau slots of block i (J[0] unused)
  std::vector<int> f;               // f[i]: number of even slots in J[i]
};

// Catalog weight used when no bound is given.
inline constexpr int kDefaultCatalogWeight = 23;

// All psi over the catalog with infinitesimal character tau(lambda), in
// canonical order, optionally restricted to sum_i k(psi_i) <= M_bound.
std::vector<ArthurParam> enumerate_parameters(const Catalog& cat, int g, const DomWeight& lambda,
                                              std::optional<int> M_bound = std::nullopt);
std::vector<ArthurParam> enumerate_parameters(int g, const DomWeight& lambda,
                                              std::optional<int> M_bound = std::nullopt);

// Every psi, for every g and lambda, with sum_i k(psi_i) <= M.
std::vector<ArthurParam> all_parameters(const Catalog& cat, int M, bool include_trivial = false);

// k(psi_i) = |tau^(i)| - n floor(d^2/2)/4 for the given tau values of the block.
HalfInt k_of(const Block& b, const std::vector<int>& tau_values);
HalfInt k_of(const Block& b);
HalfInt k_total(const ArthurParam& psi);

int min_degree(const ArthurParam& psi, int g);

struct KBound {
  std::string block;
  HalfInt k;
  HalfInt weight_bound;  // sum w_j (d odd) or 2 sum w_j - r (d even)
  HalfInt rank_bound;    // r(r+1)/2 or 2r^2
  bool pass = false;
};
std::vector<KBound> check_k_bounds(const ArthurParam& psi);

TauCover tau_cover(const ArthurParam& psi, int g, const DomWeight& lambda);

}  // namespace ihc
