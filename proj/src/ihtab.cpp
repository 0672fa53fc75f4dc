#include "ihc/ihtab.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <tuple>

#include "ihc/strata.hpp"

namespace ihc {

GradedGK tate_block(int d) {
  if (d < 0) throw InvalidInput("negative Tate block size");
  Poly p = Poly::monomial(0);
  for (int i = 1; i <= d; ++i) p = p * (Poly::monomial(0) + Poly::monomial(i));
  GradedGK out;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.at(i) != 0) out[2 * i] = GKElem::tate(i, p.at(i));
  return out;
}

GradedGK ih(const Catalog& cat, int g, const DomWeight& lambda, int max_weight) {
  if (max_weight < 0) throw InvalidInput("negative weight bound");
  GradedGK out;
  for (const auto& psi : enumerate_parameters(cat, g, lambda, max_weight)) {
    GradedGK c = psi.is_trivial() ? tate_block(g) : contribution(psi, g, lambda);
    graded_add(out, truncate_weight(c, max_weight));
  }
  return out;
}

GradedGK ih(int g, const DomWeight& lambda, int max_weight) { return ih(Catalog(), g, lambda, max_weight); }

std::string TableRow::lambda_str() const { return lambda.str(); }

std::string TableRow::contribution_str() const {
  if (unrecognized) return "UNRECOGNIZED";
  return contribution.str(TermOrder::Table);
}

namespace {

bool only_trivial_besides(const ArthurParam& p, size_t n_nontrivial) {
  return p.blocks.size() == n_nontrivial + 1 && p.blocks[0].c.kind == ConstKind::Trivial;
}

// (table, type, sort key)
std::tuple<int, std::string, std::vector<int>> classify(const ArthurParam& p) {
  const Block& b0 = p.blocks[0];
  int g = p.g();
  if (p.blocks.size() == 1) {
    if (b0.c.kind == ConstKind::Sym2DeltaW && b0.d == 1) return {1, "A", {0, b0.c.w1}};
    if (b0.c.kind == ConstKind::LambdaStarSiegel && b0.d == 1) {
      auto l = p.lambda().entries;
      l.insert(l.begin(), 1);
      return {1, "B", l};
    }
  }
  if (p.blocks.size() == 2) {
    const Block& b1 = p.blocks[1];
    if (only_trivial_besides(p, 1)) {
      if (b1.c.kind == ConstKind::DeltaW && b1.d == 2) return {2, "C", {b1.c.w1, g}};
      if (b1.c.kind == ConstKind::DeltaW && b1.d == 4 && b1.c.w1 == 11) return {3, "E", {1, g}};
      if (b1.c.kind == ConstKind::DeltaTensor && b1.d == 1) return {3, "F", {2, b1.c.w1, b1.c.w2, g}};
    }
    if (b0.c.kind == ConstKind::Sym2DeltaW && b0.d == 1 && b1.c.kind == ConstKind::DeltaW && b1.d == 2 &&
        b0.c.w1 == 11 && b1.c.w1 == 11)
      return {3, "D", {0, g}};
  }
  return {4, "other", {}};
}

}  // namespace

std::vector<TableRow> table_rows(const Catalog& cat, int M) {
  std::vector<std::pair<std::tuple<int, std::string, std::vector<int>>, TableRow>> keyed;
  size_t order = 0;
  for (const auto& psi : all_parameters(cat, M)) {
    TableRow r;
    r.psi = psi;
    r.g = psi.g();
    r.lambda = psi.lambda();
    auto key = classify(psi);
    r.table = std::get<0>(key);
    r.type = std::get<1>(key);
    if (r.type == "other") std::get<2>(key) = {static_cast<int>(order)};
    ++order;
    if (r.type == "C")
      for (const auto& [f, m] : psi.blocks[1].c.families) r.family_mult *= m;
    try {
      r.contribution = total(truncate_weight(contribution(psi, r.g, r.lambda), M));
    } catch (const Unrecognized& e) {
      r.unrecognized = true;
      r.note = e.what();
    }
    keyed.emplace_back(key, std::move(r));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TableRow> out;
  for (auto& [k, r] : keyed) out.push_back(std::move(r));
  return out;
}

std::vector<TableRow> table_rows(int M) { return table_rows(Catalog(), M); }

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
  std::vector<std::string> f;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      f.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw ParseError("golden line " + std::to_string(lineno) + ": unterminated quote");
  f.push_back(cur);
  return f;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::vector<GoldenRow> parse_golden(std::istream& in) {
  std::vector<GoldenRow> out;
  std::string line;
  int lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line, lineno);
    if (header) {
      header = false;
      if (f.size() == 6 && f[0] == "table") continue;
      throw ParseError("golden file must start with the header table,g,lambda,psi,contribution,flags");
    }
    if (f.size() != 6) throw ParseError("golden line " + std::to_string(lineno) + ": expected 6 fields");
    GoldenRow r;
    try {
      r.table = std::stoi(f[0]);
      r.g = std::stoi(f[1]);
    } catch (const std::logic_error&) {
      throw ParseError("golden line " + std::to_string(lineno) + ": table and g must be integers");
    }
    r.lambda = f[2];
    r.psi = f[3];
    r.contribution = f[4];
    r.flags = f[5];
    out.push_back(r);
  }
  if (header) throw ParseError("golden file is empty");
  return out;
}

std::vector<GoldenRow> load_golden(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open golden file " + path);
  return parse_golden(f);
}

void write_golden_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "table,g,lambda,psi,contribution,flags\n";
  for (const auto& r : rows) {
    std::string flags = r.family_mult > 1 ? "per_eigenform" : "";
    GKElem c = r.contribution;
    std::string cs = r.contribution_str();
    if (r.family_mult > 1 && !r.unrecognized) {
      GKElem d;
      for (const auto& [t, k] : c.terms()) d.add(t, k / r.family_mult);
      cs = d.str(TermOrder::Table);
    }
    out << r.table << "," << r.g << "," << csv_field(r.lambda_str()) << "," << csv_field(r.psi.str()) << ","
        << csv_field(cs) << "," << flags << "\n";
  }
}

GoldenReport golden_diff(const std::vector<TableRow>& rows, const std::vector<GoldenRow>& golden,
                         int golden_weight) {
  GoldenReport rep;
  auto key = [](int g, const std::string& l, const std::string& p) {
    return "(" + std::to_string(g) + ", (" + l + "), " + p + ")";
  };
  std::map<std::string, size_t> ours;
  for (size_t i = 0; i < rows.size(); ++i) ours[key(rows[i].g, rows[i].lambda_str(), rows[i].psi.str())] = i;
  std::map<std::string, size_t> theirs;
  for (size_t i = 0; i < golden.size(); ++i) theirs[key(golden[i].g, golden[i].lambda, golden[i].psi)] = i;

  for (size_t i = 0; i < golden.size(); ++i) {
    const auto& gr = golden[i];
    std::string k = key(gr.g, gr.lambda, gr.psi);
    auto it = ours.find(k);
    if (it == ours.end()) {
      rep.lines.push_back("missing " + k);
      ++rep.missing;
      continue;
    }
    const TableRow& r = rows[it->second];
    GKElem contrib = truncate_weight(r.contribution, golden_weight);
    std::string got = r.unrecognized ? r.contribution_str() : contrib.str(TermOrder::Table);
    if (gr.per_eigenform() && !r.unrecognized) {
      GKElem d;
      bool divisible = true;
      for (const auto& [t, c] : contrib.terms()) {
        if (c % r.family_mult != 0) divisible = false;
        d.add(t, c / r.family_mult);
      }
      got = divisible ? d.str(TermOrder::Table) : got + " (not divisible by " + std::to_string(r.family_mult) + ")";
    }
    if (got != gr.contribution) {
      rep.lines.push_back("mismatch " + k + ": expected `" + gr.contribution + "`, got `" + got + "`");
      ++rep.mismatched;
    }
    if (r.table != gr.table) {
      rep.lines.push_back("table " + k + ": expected " + std::to_string(gr.table) + ", got " +
                          std::to_string(r.table));
      ++rep.mismatched;
    }
  }
  for (const auto& r : rows) {
    std::string k = key(r.g, r.lambda_str(), r.psi.str());
    if (!theirs.count(k)) {
      rep.lines.push_back("extra " + k);
      ++rep.extra;
    }
  }
  if (rep.missing == 0 && rep.extra == 0) {
    for (size_t i = 0; i < rows.size(); ++i) {
      std::string k = key(rows[i].g, rows[i].lambda_str(), rows[i].psi.str());
      std::string e = key(golden[i].g, golden[i].lambda, golden[i].psi);
      if (k != e) {
        rep.lines.push_back("order at row " + std::to_string(i + 1) + ": expected " + e + ", got " + k);
        ++rep.misordered;
      }
    }
  }
  return rep;
}

GoldenReport golden_diff(const std::vector<TableRow>& rows, const std::string& golden_path, int golden_weight) {
  return golden_diff(rows, load_golden(golden_path), golden_weight);
}

IHIndex::IHIndex(const Catalog& cat, int M) : M_(M) {
  for (const auto& psi : all_parameters(cat, M)) {
    int g = psi.g();
    DomWeight l = psi.lambda();
    graded_add(cells_[{g, l.entries}], truncate_weight(contribution(psi, g, l), M));
  }
}

GradedGK IHIndex::graded(int g, const DomWeight& lambda) const {
  if (lambda.g() != g) throw InvalidInput("weight rank differs from g");
  GradedGK out;
  auto it = cells_.find({g, lambda.entries});
  if (it != cells_.end()) out = it->second;
  if (lambda.size() == 0) graded_add(out, truncate_weight(tate_block(g), M_));
  return out;
}

std::set<std::string> bar_constituents(const IHIndex& idx, int g, int s, int k) {
  if (g < 0 || s < 0) throw InvalidInput("g and s must be non-negative");
  if (k < 0 || k > idx.max_weight()) throw OutOfRange("degree outside the computed range");
  std::set<std::string> out;
  auto collect = [&](const GradedGK& gr, int p) {
    auto it = gr.find(p);
    if (it == gr.end()) return;
    for (const auto& [t, c] : it->second.terms()) out.insert(t.sym->name);
  };
  for (int r = 0; r <= g; ++r) {
    int gp = g - r;
    long long m_min = static_cast<long long>(r) * (r + 1) / 2 + static_cast<long long>(r) * s;
    auto admissible = [&](const std::vector<int>& l, const GradedGK& gr) {
      int size = 0;
      for (int x : l) size += x;
      if (!l.empty() && l[0] > s + r) return;
      for (long long m = m_min; size + 2 * m <= k; ++m) collect(gr, static_cast<int>(k - size - 2 * m));
    };
    if (gp == 0) {
      GradedGK unit;
      unit[0] = GKElem::tate(0);
      admissible({}, unit);
      continue;
    }
    // lambda = 0 carries the trivial parameter
    DomWeight zero(std::vector<int>(gp, 0));
    admissible(zero.entries, idx.graded(gp, zero));
    for (const auto& [key, gr] : idx.nontrivial()) {
      if (key.first != gp) continue;
      bool is_zero = std::all_of(key.second.begin(), key.second.end(), [](int x) { return x == 0; });
      if (is_zero) continue;  // already counted above
      admissible(key.second, gr);
    }
  }
  return out;
}

std::set<std::string> bar_constituents(int g, int s, int k) {
  static const IHIndex idx(Catalog(), 23);
  return bar_constituents(idx, g, s, k);
}

HodgeMultiset hodge_bidegrees(const GKElem& e) {
  HodgeMultiset out;
  for (const auto& [t, c] : e.terms())
    for (const auto& [p, q] : t.sym->hodge_all()) {
      long long& v = out[{p + t.twist, q + t.twist}];
      v += c;
      if (v == 0) out.erase({p + t.twist, q + t.twist});
    }
  return out;
}

std::string to_string(HoloAnswer a) {
  switch (a) {
    case HoloAnswer::Zero: return "zero";
    case HoloAnswer::Nonzero: return "nonzero";
    case HoloAnswer::OutOfRange: return "out_of_range";
  }
  return "";
}

HoloAnswer holomorphic_query(int g, int s, int k) {
  if (s < 0 || k < 0) throw InvalidInput("s and k must be non-negative");
  if (g <= 2 || k > 23) return HoloAnswer::OutOfRange;
  if (k == 0) return HoloAnswer::Nonzero;  // constants
  if (k != 22) return HoloAnswer::Zero;
  if (g == 3) return s >= 8 ? HoloAnswer::Nonzero : HoloAnswer::Zero;
  if (g <= 7) return s >= c_of_g(g) ? HoloAnswer::Nonzero : HoloAnswer::Zero;
  return HoloAnswer::Zero;
}

HoloAnswer holomorphic_from_ih(const IHIndex& idx, int g, int s, int k) {
  if (s < 0 || k < 0) throw InvalidInput("s and k must be non-negative");
  if (g <= 2 || k > idx.max_weight()) return HoloAnswer::OutOfRange;
  auto has_k0 = [&](const GradedGK& gr, int p) {
    auto it = gr.find(p);
    if (it == gr.end()) return false;
    auto h = hodge_bidegrees(it->second);
    auto hit = h.find({k, 0});
    return hit != h.end() && hit->second > 0;
  };
  DomWeight zero(std::vector<int>(g, 0));
  if (has_k0(idx.graded(g, zero), k)) return HoloAnswer::Nonzero;
  for (const auto& [key, gr] : idx.nontrivial()) {
    if (key.first != g || key.second[0] > s) continue;
    int size = 0;
    for (int x : key.second) size += x;
    if (size == 0 || size > k) continue;
    if (has_k0(gr, k - size)) return HoloAnswer::Nonzero;
  }
  return HoloAnswer::Zero;
}

Symbol parse_symbol(const std::string& name) {
  static const std::regex ell(R"(S<(\d+)>)"), sq(R"(Sym2S<(\d+)>)"), sieg(R"(S<(\d+),(\d+)>)"),
      lam(R"(Lambda2S<(\d+),(\d+)>)");
  if (name.find('*') != std::string::npos) {
    std::vector<Symbol> parts;
    std::istringstream ss(name);
    for (std::string p; std::getline(ss, p, '*');) parts.push_back(parse_symbol(p));
    return symbols::composite(parts);
  }
  std::smatch m;
  if (name == "L") return symbols::unit();
  auto siegel_mult = [](int w1, int w2) -> long long {
    for (const auto& p : siegel_catalog(23))
      if (p.w1 == w1 && p.w2 == w2) return p.mult;
    throw InvalidInput("no Siegel family with weights (" + std::to_string(w1) + "," + std::to_string(w2) + ")");
  };
  if (std::regex_match(name, m, ell)) {
    int k = std::stoi(m[1]);
    long long d = dim_cusp_forms(k);
    if (d == 0) throw InvalidInput("no cusp forms of weight " + std::to_string(k));
    return symbols::elliptic(k - 1, d);
  }
  if (std::regex_match(name, m, sq)) {
    int k = std::stoi(m[1]);
    long long d = dim_cusp_forms(k);
    if (d == 0) throw InvalidInput("no cusp forms of weight " + std::to_string(k));
    return symbols::sym2(k - 1, d);
  }
  if (std::regex_match(name, m, sieg) || std::regex_match(name, m, lam)) {
    auto [w1, w2] = symbols::siegel_weights(std::stoi(m[1]), std::stoi(m[2]));
    long long mult = siegel_mult(w1, w2);
    return name.rfind("Lambda2S", 0) == 0 ? symbols::lambda2(w1, w2, mult) : symbols::siegel(w1, w2, mult);
  }
  throw ParseError("unknown motive symbol `" + name + "`");
}

GKElem parse_gk(const std::string& text) {
  static const std::regex term(R"(^\s*(\d+)?\s*(.*?)\s*$)");
  if (std::regex_match(text, std::regex(R"(\s*0\s*)"))) return GKElem();
  GKElem out;
  // split on " + " and " - " keeping the sign
  std::vector<std::pair<int, std::string>> pieces;
  std::string cur;
  int sign = 1;
  std::string t = text;
  size_t start = 0;
  while (start < t.size() && t[start] == ' ') ++start;
  if (start < t.size() && t[start] == '-') {
    sign = -1;
    ++start;
  }
  for (size_t i = start; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && i > 0 && t[i - 1] == ' ' && i + 1 < t.size() && t[i + 1] == ' ') {
      pieces.emplace_back(sign, cur);
      cur.clear();
      sign = t[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    cur += t[i];
  }
  pieces.emplace_back(sign, cur);
  for (auto& [sg, body] : pieces) {
    std::smatch m;
    if (!std::regex_match(body, m, term) || m[2].str().empty()) throw ParseError("bad term `" + body + "`");
    long long coeff = m[1].matched ? std::stoll(m[1]) : 1;
    std::string rest = m[2];
    int twist = 0;
    std::string name = rest;
    static const std::regex twist_re(R"(^(.*)\*L\^(\d+)$)"), tate_re(R"(^L\^(\d+)$)");
    std::smatch tm;
    if (std::regex_match(rest, tm, tate_re)) {
      name = "L";
      twist = std::stoi(tm[1]);
    } else if (std::regex_match(rest, tm, twist_re)) {
      name = tm[1];
      twist = std::stoi(tm[2]);
    }
    out.add(Term{parse_symbol(name), twist}, sg * coeff);
  }
  return out;
}

}  // namespace ihc
