#pragma once

// Intersection cohomology of A_g^Sat with coefficients in V_lambda, the
// regenerated tables, golden-file comparison, and Hodge and holomorphy queries.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ihc/spin.hpp"

namespace ihc {

// T<d> = prod_{i=1}^d (1 + L^i), graded by degree 2i.
GradedGK tate_block(int d);

// IH^*(A_g^Sat, V_lambda) in weight <= max_weight.
GradedGK ih(const Catalog& cat, int g, const DomWeight& lambda, int max_weight);
GradedGK ih(int g, const DomWeight& lambda, int max_weight);

struct TableRow {
  int table = 0;     // 1: types A and B, 2: type C, 3: types D, E, F, 4: other
  std::string type;  // "A" .. "F", or "other"
  ArthurParam psi;
  int g = 0;
  DomWeight lambda;
  GKElem contribution;  // aggregate over eigenforms, weight <= M
  bool unrecognized = false;
  std::string note;              // recognition failure message
  long long family_mult = 1;     // eigenforms aggregated in a type C row
  std::string lambda_str() const;
  std::string contribution_str() const;  // table order; "0" when empty
};

// Rows for every nontrivial psi with sum k(psi_i) <= M, in the paper's layout.
std::vector<TableRow> table_rows(const Catalog& cat, int M = 23);
std::vector<TableRow> table_rows(int M = 23);

struct GoldenRow {
  int table = 0;
  int g = 0;
  std::string lambda, psi, contribution, flags;
  bool per_eigenform() const { return flags.find("per_eigenform") != std::string::npos; }
};

std::vector<GoldenRow> parse_golden(std::istream& in);
std::vector<GoldenRow> load_golden(const std::string& path);
void write_golden_csv(std::ostream& out, const std::vector<TableRow>& rows);

struct GoldenReport {
  std::vector<std::string> lines;  // one per difference
  int missing = 0, extra = 0, mismatched = 0, misordered = 0;
  bool ok() const { return lines.empty(); }
};

// Structured comparison. Contributions are truncated to the golden weight
// bound first; rows flagged per_eigenform are compared after dividing the
// aggregate contribution by the family multiplicity.
inline constexpr int kGoldenWeight = 23;
GoldenReport golden_diff(const std::vector<TableRow>& rows, const std::vector<GoldenRow>& golden,
                         int golden_weight = kGoldenWeight);
GoldenReport golden_diff(const std::vector<TableRow>& rows, const std::string& golden_path,
                         int golden_weight = kGoldenWeight);

// Precomputed IH in weight <= 23 for every (g, lambda) with a nontrivial
// parameter; lambda = 0 rows add the trivial parameter.
class IHIndex {
 public:
  explicit IHIndex(const Catalog& cat, int M = 23);
  int max_weight() const { return M_; }
  // Nontrivial part only; the trivial parameter is added by graded().
  const std::map<std::pair<int, std::vector<int>>, GradedGK>& nontrivial() const { return cells_; }
  GradedGK graded(int g, const DomWeight& lambda) const;

 private:
  int M_;
  std::map<std::pair<int, std::vector<int>>, GradedGK> cells_;
};

// Symbol names that can occur in H^k of a toroidal compactification of
// X_{g,s}: the constituents of IH^p(A_{g-r}^Sat, V_lambda(-m)) with
// p + |lambda| + 2m = k, m >= C(r+1,2) + r s and lambda_1 <= s + r.
std::set<std::string> bar_constituents(const IHIndex& idx, int g, int s, int k);
std::set<std::string> bar_constituents(int g, int s, int k);

using HodgeMultiset = std::map<std::pair<int, int>, long long>;
HodgeMultiset hodge_bidegrees(const GKElem& e);

enum class HoloAnswer { Zero, Nonzero, OutOfRange };
std::string to_string(HoloAnswer a);
// The stated trichotomy for H^{k,0} of a compactified X_{g,s}.
HoloAnswer holomorphic_query(int g, int s, int k);
// The same decision derived from IH: nonzero iff some IH^p(A_g^Sat, V_lambda)
// with p + |lambda| = k and lambda_1 <= s has a (k, 0) Hodge class.
HoloAnswer holomorphic_from_ih(const IHIndex& idx, int g, int s, int k);

// Parses the canonical term grammar ("10L^11 + Sym2S<12>", "2 S<22>*L^1").
GKElem parse_gk(const std::string& text);
Symbol parse_symbol(const std::string& name);

}  // namespace ihc
