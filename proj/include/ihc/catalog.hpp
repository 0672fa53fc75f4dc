#pragma once

// Level-one self-dual cuspidal constituents up to a motivic-weight bound.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ihc/gkring.hpp"

namespace ihc {

enum class ConstKind {
  Trivial,
  DeltaW,
  Sym2DeltaW,
  DeltaTensor,
  LambdaStarSiegel,
  SiegelStd,  // the 4-dimensional symplectic Delta_{w1,w2} itself
  ConfigExtension,
};

enum class Parity { Orthogonal, Symplectic };

struct Constituent {
  ConstKind kind = ConstKind::Trivial;
  int w1 = 0, w2 = 0;
  std::string name;  // config entries
  int n = 1;
  Parity parity = Parity::Orthogonal;
  std::vector<ExpVec> pos_exponents;  // strictly decreasing infinitesimal weight
  long long mult = 1;
  std::vector<std::pair<Family, long long>> families;

  // All n standard exponents, positive ones first (decreasing), then 0 if n
  // is odd, then the negatives.
  std::vector<ExpVec> signed_exponents() const;
  bool symplectic() const { return parity == Parity::Symplectic; }
  std::string str() const;
  bool operator==(const Constituent& o) const {
    return kind == o.kind && w1 == o.w1 && w2 == o.w2 && name == o.name && n == o.n;
  }
};

namespace constituents {
Constituent trivial();
Constituent delta(int w);
Constituent sym2(int w);
Constituent tensor(int w1, int w2);
Constituent lambda_star(int w1, int w2, long long mult = 1);
Constituent siegel_std(int w1, int w2, long long mult = 1);
Constituent config(const std::string& name, int n, Parity parity,
                   const std::vector<HalfInt>& weights, long long mult);
}  // namespace constituents

// Record of the catalog extension file: `name n parity w_1,...,w_r mult`.
struct ConfigEntry {
  std::string name;
  int n = 0;
  Parity parity = Parity::Orthogonal;
  std::vector<HalfInt> weights;
  long long mult = 1;
};

std::vector<ConfigEntry> parse_config(std::istream& in);
std::vector<ConfigEntry> load_config(const std::string& path);

// dim S_k(SL_2(Z)).
long long dim_cusp_forms(int k);

struct SiegelPair {
  int w1, w2;
  long long mult;
};
std::vector<SiegelPair> siegel_catalog(int max_w1);

// Highest motivic weight handled without refusing.
inline constexpr int kMaxCatalogWeight = 24;

struct AllowedBlock {
  Constituent c;
  std::vector<int> ds;  // allowed d values; empty with any_d for [2d+1]
  bool any_d = false;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<ConfigEntry> extra) : extra_(std::move(extra)) {}

  const std::vector<ConfigEntry>& extensions() const { return extra_; }
  std::vector<AllowedBlock> constituents_up_to(int M) const;

 private:
  std::vector<ConfigEntry> extra_;
};

// Standard exponents of the block pi[d]: pi-exponent with tate (d-1)/2 - k.
std::vector<ExpVec> block_exponents(const Constituent& c, int d);
// True if the exponents of pi[d] are integral and pairwise distinct.
bool block_valid(const Constituent& c, int d);
// k(pi[d]) = sum of positive exponents - n floor(d^2/2)/4.
HalfInt block_k(const Constituent& c, int d);

int epsilon_half(const Constituent& a, const Constituent& b);

}  // namespace ihc
