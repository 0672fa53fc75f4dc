#include "ihc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ihc/ihtab.hpp"
#include "ihc/strata.hpp"

#ifndef IHC_DATA_DIR
#define IHC_DATA_DIR ""
#endif

namespace ihc::cli {

using json = nlohmann::ordered_json;

std::string default_catalog_path() {
  std::string dir = IHC_DATA_DIR;
  if (dir.empty()) return "";
  std::string p = dir + "/catalog_m24.txt";
  return std::ifstream(p) ? p : "";
}

namespace {

enum class Format { Text, Csv, Jsonl };

struct Common {
  std::string format = "text";
  std::string catalog;
  bool no_catalog = false;

  Format fmt() const {
    if (format == "text") return Format::Text;
    if (format == "csv") return Format::Csv;
    if (format == "jsonl") return Format::Jsonl;
    throw InvalidInput("--format must be text, csv or jsonl");
  }
  Catalog load() const {
    if (no_catalog) return Catalog();
    std::string p = catalog.empty() ? default_catalog_path() : catalog;
    return p.empty() ? Catalog() : Catalog(load_config(p));
  }
};

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> v;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError(what + ": '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw ParseError(what + ": '" + tok + "' is not an integer");
    v.push_back(x);
  }
  if (v.empty()) throw ParseError(what + " is empty");
  return v;
}

DomWeight parse_lambda(const std::string& s, int g) {
  if (g < 1) throw InvalidInput("--g must be positive");
  auto v = parse_int_list(s, "--lambda");
  for (int x : v)
    if (x < 0) throw InvalidInput("--lambda entries must be non-negative");
  return DomWeight::padded(v, g);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Records with a fixed column list, rendered in one of the three formats.
struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;  // per column, for jsonl

  void render(std::ostream& o, Format f, bool header_in_text = false) const {
    if (f == Format::Csv) {
      for (size_t i = 0; i < cols.size(); ++i) o << (i ? "," : "") << cols[i];
      o << "\n";
      for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << csv_cell(r[i]);
        o << "\n";
      }
    } else if (f == Format::Jsonl) {
      for (const auto& r : rows) {
        json j;
        for (size_t i = 0; i < r.size(); ++i) {
          if (i < numeric.size() && numeric[i])
            j[cols[i]] = std::stoll(r[i]);
          else
            j[cols[i]] = r[i];
        }
        o << j.dump() << "\n";
      }
    } else {
      std::vector<size_t> w(cols.size(), 0);
      if (header_in_text)
        for (size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
      for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (size_t i = 0; i < r.size(); ++i) {
          s += r[i];
          if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        o << s << "\n";
      };
      if (header_in_text) line(cols);
      for (const auto& r : rows) line(r);
    }
  }
};

std::string lambda_cell(const DomWeight& l) { return l.str(); }

int cmd_ih(std::ostream& o, const Common& c, int g, const std::string& lam, std::optional<int> degree, int M) {
  DomWeight l = parse_lambda(lam, g);
  GradedGK r = ih(c.load(), g, l, M);
  if (degree) {
    auto it = r.find(*degree);
    std::string s = it == r.end() ? "0" : it->second.str();
    if (c.fmt() == Format::Text) {
      o << s << "\n";
      return kExitOk;
    }
    Table t{{"g", "lambda", "degree", "contribution"}, {{std::to_string(g), lambda_cell(l), std::to_string(*degree), s}},
            {true, false, true, false}};
    t.render(o, c.fmt());
    return kExitOk;
  }
  Table t{{"g", "lambda", "degree", "contribution"}, {}, {true, false, true, false}};
  for (const auto& [k, e] : r) t.rows.push_back({std::to_string(g), lambda_cell(l), std::to_string(k), e.str()});
  if (c.fmt() == Format::Text) {
    for (const auto& [k, e] : r) o << "IH^" << k << ": " << e.str() << "\n";
    if (r.empty()) o << "0\n";
  } else {
    t.render(o, c.fmt());
  }
  return kExitOk;
}

int cmd_params(std::ostream& o, const Common& c, int g, const std::string& lam, std::optional<int> M) {
  DomWeight l = parse_lambda(lam, g);
  auto ps = enumerate_parameters(c.load(), g, l, M);
  Table t{{"psi", "k", "k_total", "min_degree"}, {}, {false, false, false, true}};
  for (const auto& p : ps) {
    std::string ks;
    for (size_t i = 1; i < p.blocks.size(); ++i) ks += k_of(p.blocks[i]).str() + ";";
    ks += k_of(p.blocks[0]).str();
    t.rows.push_back({p.str(), ks, k_total(p).str(), std::to_string(min_degree(p, g))});
  }
  if (c.fmt() == Format::Text) {
    Table tt = t;
    for (auto& r : tt.rows) {
      r[1] = "k=" + r[1];
      r[2] = "sum=" + r[2];
      r[3] = "min_degree=" + r[3];
    }
    tt.render(o, Format::Text);
  } else {
    t.render(o, c.fmt());
  }
  return kExitOk;
}

int cmd_tables(std::ostream& o, std::ostream& e, const Common& c, int M, const std::string& golden) {
  auto rows = table_rows(c.load(), M);
  bool unrecognized = false;
  for (const auto& r : rows) unrecognized = unrecognized || r.unrecognized;
  if (!golden.empty()) {
    auto rep = golden_diff(rows, golden);
    for (const auto& l : rep.lines) o << l << "\n";
    o << rows.size() << " rows; " << rep.missing << " missing, " << rep.extra << " extra, " << rep.mismatched
      << " mismatched, " << rep.misordered << " out of order\n";
    return rep.ok() ? kExitOk : kExitGoldenMismatch;
  }
  Format f = c.fmt();
  Table t{{"g", "lambda", "psi", "contribution"}, {}, {true, false, false, false}};
  for (const auto& r : rows) t.rows.push_back({std::to_string(r.g), r.lambda_str(), r.psi.str(), r.contribution_str()});
  if (f == Format::Text) {
    int cur = 0;
    Table block{t.cols, {}, t.numeric};
    auto flush = [&]() {
      if (block.rows.empty()) return;
      o << "Table " << cur << "\n";
      block.render(o, Format::Text);
      block.rows.clear();
    };
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].table != cur) {
        flush();
        if (cur) o << "\n";
        cur = rows[i].table;
      }
      block.rows.push_back(t.rows[i]);
    }
    flush();
  } else {
    t.render(o, f);
  }
  for (const auto& r : rows)
    if (r.unrecognized) e << "unrecognized: g=" << r.g << " lambda=" << r.lambda_str() << " " << r.psi.str() << ": " << r.note << "\n";
  return unrecognized ? kExitUnrecognized : kExitOk;
}

int cmd_decomp(std::ostream& o, const Common& c, int g, int s, int q) {
  Table t{{"lambda", "twist", "mult"}, {}, {false, true, true}};
  for (const auto& en : rpi_decomposition(g, s, q))
    t.rows.push_back({lambda_cell(en.lambda), std::to_string(en.m), std::to_string(en.mult)});
  if (c.fmt() == Format::Text) {
    for (const auto& r : t.rows) o << r[2] << " V_(" << r[0] << ")(-" << r[1] << ")\n";
    if (t.rows.empty()) o << "0\n";
  } else {
    t.render(o, c.fmt());
  }
  return kExitOk;
}

int cmd_ecpoly(std::ostream& o, int g, int s, const std::string& lam, bool sign) {
  DomWeight l = parse_lambda(lam, g);
  if (sign) {
    auto [p, m] = ec_mult_poly_signed(g, s, l);
    o << "plus: " << p.str() << "\nminus: " << m.str() << "\n";
  } else {
    o << ec_mult_poly(g, s, l).str() << "\n";
  }
  return kExitOk;
}

std::string poly_s18(const GKElem& e) {
  if (e.is_zero()) return "0";
  GKElem rest = e - poly_times(coefficient_poly(e, "S<18>"), symbols::elliptic(17, 1));
  if (!rest.is_zero()) return e.str();
  return "(" + coefficient_poly(e, "S<18>").str() + ") S<18>";
}

int cmd_ec(std::ostream& o, int g, int s) {
  o << poly_s18(ec_interior_mod_tate(g, s)) << "\n";
  return kExitOk;
}

int cmd_strata(std::ostream& o, int s) {
  o << "trivial stabilizer, torus rank k: -(" << g_poly(s).str() << ") (L - 1)^k S<18>\n";
  for (int d = 0; d <= s; ++d)
    o << "trivial stabilizer, dim_aff " << d << ": " << poly_s18(stratum_ec_rank1({3, s, d, Stabilizer::Trivial}))
      << "\n";
  for (int d = 0; d <= 1; ++d)
    o << "order 2 stabilizer, dim_aff " << d << ": " << poly_s18(stratum_ec_rank1({3, s, d, Stabilizer::Order2}))
      << "\n";
  EcIdentity id = ec_identity_check(s, {1LL << s, 0}, {});
  o << "identity: " << id.str() << (id.combination_ok ? " [ok]" : " [fails]") << "\n";
  o << nontate_witness(s).str();
  return kExitOk;
}

int cmd_hodge(std::ostream& o, const Common& c, const std::string& term, std::optional<int> g, const std::string& lam,
              std::optional<int> degree, int M) {
  GKElem e;
  if (!term.empty()) {
    e = parse_gk(term);
  } else {
    if (!g) throw InvalidInput("hodge needs --term or --g with --lambda");
    DomWeight l = parse_lambda(lam, *g);
    GradedGK r = ih(c.load(), *g, l, M);
    if (degree) {
      auto it = r.find(*degree);
      if (it != r.end()) e = it->second;
    } else {
      e = total(r);
    }
  }
  Table t{{"p", "q", "mult"}, {}, {true, true, true}};
  for (const auto& [pq, m] : hodge_bidegrees(e))
    t.rows.push_back({std::to_string(pq.first), std::to_string(pq.second), std::to_string(m)});
  if (c.fmt() == Format::Text) {
    for (const auto& r : t.rows) o << "(" << r[0] << "," << r[1] << ") " << r[2] << "\n";
    if (t.rows.empty()) o << "0\n";
  } else {
    t.render(o, c.fmt());
  }
  return kExitOk;
}

int cmd_holo(std::ostream& o, int g, int s, int k, bool from_ih) {
  HoloAnswer a = from_ih ? holomorphic_from_ih(IHIndex(Catalog(), 23), g, s, k) : holomorphic_query(g, s, k);
  o << to_string(a) << "\n";
  return kExitOk;
}

int cmd_catalog(std::ostream& o, const Common& c, int M) {
  Table t{{"constituent", "n", "parity", "mult", "d"}, {}, {false, true, false, true, false}};
  for (const auto& b : c.load().constituents_up_to(M)) {
    std::string ds;
    if (b.any_d) {
      ds = "any odd";
    } else {
      for (size_t i = 0; i < b.ds.size(); ++i) ds += (i ? ";" : "") + std::to_string(b.ds[i]);
    }
    std::string name = b.c.kind == ConstKind::Trivial ? "1" : b.c.str();
    long long mult = 1;
    for (const auto& [f, m] : b.c.families) mult *= m;
    t.rows.push_back({name, std::to_string(b.c.n), b.c.symplectic() ? "symplectic" : "orthogonal",
                      std::to_string(mult), ds});
  }
  t.render(o, c.fmt(), c.fmt() == Format::Text);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection cohomology of Siegel modular varieties with local-system coefficients", "ihcalc"};
  app.require_subcommand(1);
  Common common;
  int g = 0, s = 0, M = 23;
  std::optional<int> gopt, degree, mopt;
  std::string lambda = "0", golden, term;
  bool compactified = false, sign = false, from_ih = false;

  auto common_opts = [&](CLI::App* sc) {
    sc->add_option("--format", common.format, "text, csv or jsonl")->check(CLI::IsMember({"text", "csv", "jsonl"}));
    sc->add_option("--catalog", common.catalog, "catalog extension file");
    sc->add_flag("--no-catalog", common.no_catalog, "ignore the default catalog extension");
  };

  auto* ih_c = app.add_subcommand("ih", "IH^*(A_g^Sat, V_lambda) in weight <= max-weight");
  ih_c->add_option("--g", g, "genus")->required();
  ih_c->add_option("--lambda", lambda, "dominant weight as a comma list");
  ih_c->add_option("--degree", degree, "single degree");
  ih_c->add_option("--max-weight", M, "weight bound");
  common_opts(ih_c);

  auto* params_c = app.add_subcommand("params", "parameters with infinitesimal character lambda + rho");
  params_c->add_option("--g", g, "genus")->required();
  params_c->add_option("--lambda", lambda, "dominant weight as a comma list");
  params_c->add_option("--max-weight", mopt, "keep parameters with sum of k <= bound");
  common_opts(params_c);

  auto* tables_c = app.add_subcommand("tables", "contributions of all nontrivial parameters");
  tables_c->add_option("--max-weight", M, "weight bound");
  tables_c->add_option("--golden", golden, "compare against a golden CSV");
  common_opts(tables_c);

  auto* decomp_c = app.add_subcommand("decomp", "local systems in R^q pi_* of X_{g,s} -> A_g");
  decomp_c->add_option("--g", g, "genus")->required();
  decomp_c->add_option("--s", s, "fiber power")->required();
  decomp_c->add_option("--degree", degree, "q")->required();
  common_opts(decomp_c);

  auto* ecpoly_c = app.add_subcommand("ecpoly", "multiplicity polynomial of e_c(A_g, V_lambda) in e_c(X_{g,s})");
  ecpoly_c->add_option("--g", g, "genus")->required();
  ecpoly_c->add_option("--s", s, "fiber power")->required();
  ecpoly_c->add_option("--lambda", lambda, "dominant weight as a comma list");
  ecpoly_c->add_flag("--signed", sign, "split by the involution on one fiber factor");
  common_opts(ecpoly_c);

  auto* ec_c = app.add_subcommand("ec", "e_c(X_{g,s}) modulo Tate classes");
  ec_c->add_option("--g", g, "genus")->required();
  ec_c->add_option("--s", s, "fiber power")->required();
  common_opts(ec_c);

  auto* strata_c = app.add_subcommand("strata", "torus rank 1 strata of the compactified X_{3,s}");
  strata_c->add_option("--s", s, "fiber power")->required();
  common_opts(strata_c);

  auto* tate_c = app.add_subcommand("tate", "whether H^*(X_{g,s}) is of Tate type");
  tate_c->add_option("--g", g, "genus")->required();
  tate_c->add_option("--s", s, "fiber power")->required();
  tate_c->add_flag("--compactified", compactified, "toroidal compactification");
  common_opts(tate_c);

  auto* hodge_c = app.add_subcommand("hodge", "Hodge bidegrees of a term list or of IH");
  hodge_c->add_option("--term", term, "element in the term grammar");
  hodge_c->add_option("--g", gopt, "genus");
  hodge_c->add_option("--lambda", lambda, "dominant weight as a comma list");
  hodge_c->add_option("--degree", degree, "single degree");
  hodge_c->add_option("--max-weight", M, "weight bound");
  common_opts(hodge_c);

  auto* holo_c = app.add_subcommand("holo", "H^{k,0} of a compactified X_{g,s}");
  holo_c->add_option("--g", g, "genus")->required();
  holo_c->add_option("--s", s, "fiber power")->required();
  holo_c->add_option("--degree,--k", degree, "k")->required();
  holo_c->add_flag("--from-ih", from_ih, "derive the answer from the IH tables");
  common_opts(holo_c);

  auto* catalog_c = app.add_subcommand("catalog", "constituents and allowed blocks");
  catalog_c->add_option("--max-weight", M, "weight bound");
  common_opts(catalog_c);

  std::ostringstream o;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInvalidInput;
    }
    common.fmt();
    int code = kExitOk;
    if (*ih_c)
      code = cmd_ih(o, common, g, lambda, degree, M);
    else if (*params_c)
      code = cmd_params(o, common, g, lambda, mopt);
    else if (*tables_c)
      code = cmd_tables(o, err, common, M, golden);
    else if (*decomp_c)
      code = cmd_decomp(o, common, g, s, *degree);
    else if (*ecpoly_c)
      code = cmd_ecpoly(o, g, s, lambda, sign);
    else if (*ec_c)
      code = cmd_ec(o, g, s);
    else if (*strata_c)
      code = cmd_strata(o, s);
    else if (*tate_c)
      o << ((compactified ? is_tate_compactified(g, s) : is_tate_interior(g, s)) ? "tate" : "not tate") << "\n";
    else if (*hodge_c)
      code = cmd_hodge(o, common, term, gopt, lambda, degree, M);
    else if (*holo_c)
      code = cmd_holo(o, g, s, *degree, from_ih);
    else if (*catalog_c)
      code = cmd_catalog(o, common, M);
    out << o.str();
    return code;
  } catch (const Unrecognized& e) {
    out << o.str();
    err << "error: " << e.what() << "; residue of " << total_count(e.residue) << " elements\n";
    return kExitUnrecognized;
  } catch (const CatalogExhausted& e) {
    out << o.str();
    err << "error: " << e.what() << "\n";
    return kExitCatalogExhausted;
  } catch (const Error& e) {
    out << o.str();
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace ihc::cli
