#include "ihc/arthur.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ihc {

std::vector<int> Block::positive_values() const {
  std::vector<int> r;
  for (const auto& e : exponents()) {
    HalfInt v = e.infinitesimal();
    if (v.doubled > 0) r.push_back(static_cast<int>(v.to_int()));
  }
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

std::string Block::str() const {
  std::string tail = "[" + std::to_string(d) + "]";
  if (c.kind == ConstKind::Trivial) return tail;
  return c.str() + tail;
}

int ArthurParam::g() const { return static_cast<int>(tau().size()); }

std::vector<int> ArthurParam::tau() const {
  std::vector<int> t;
  for (const auto& b : blocks) {
    auto v = b.positive_values();
    t.insert(t.end(), v.begin(), v.end());
  }
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

DomWeight ArthurParam::lambda() const {
  auto t = tau();
  int g = static_cast<int>(t.size());
  std::vector<int> l(g);
  for (int i = 0; i < g; ++i) l[i] = t[i] - (g - i);
  return DomWeight(l);
}

std::string ArthurParam::str() const {
  std::string s;
  for (size_t i = 1; i < blocks.size(); ++i) s += blocks[i].str() + " (+) ";
  return s + blocks[0].str();
}

namespace {

int top_value(const Block& b) {
  auto v = b.positive_values();
  return v.empty() ? 0 : v.front();
}

// Puts the odd block first and the even ones by decreasing largest value.
ArthurParam normalize(std::vector<Block> blocks) {
  auto odd = std::find_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.odd(); });
  if (odd == blocks.end()) throw std::logic_error("parameter without odd block");
  std::iter_swap(blocks.begin(), odd);
  std::sort(blocks.begin() + 1, blocks.end(),
            [](const Block& a, const Block& b) { return top_value(a) > top_value(b); });
  return ArthurParam{blocks};
}

struct Candidate {
  Block b;
  std::vector<int> values;
  HalfInt k;
};

std::vector<Candidate> nontrivial_candidates(const Catalog& cat, int catalog_weight) {
  std::vector<Candidate> out;
  for (const auto& ab : cat.constituents_up_to(catalog_weight)) {
    if (ab.any_d) continue;
    for (int d : ab.ds) {
      Block b{ab.c, d};
      out.push_back({b, b.positive_values(), block_k(ab.c, d)});
    }
  }
  return out;
}

void sort_canonical(std::vector<ArthurParam>& v) {
  std::sort(v.begin(), v.end(), [](const ArthurParam& a, const ArthurParam& b) {
    auto ta = a.tau(), tb = b.tau();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    if (ta != tb) return ta < tb;
    return a.str() < b.str();
  });
}

}  // namespace

std::vector<ArthurParam> enumerate_parameters(const Catalog& cat, int g, const DomWeight& lambda,
                                              std::optional<int> M_bound) {
  if (g < 1) throw InvalidInput("g must be positive");
  if (lambda.g() != g) throw InvalidInput("weight rank differs from g");
  int catalog_weight = M_bound ? std::max(*M_bound, 0) : kDefaultCatalogWeight;
  auto cands = nontrivial_candidates(cat, catalog_weight);
  auto tau = lambda.tau();
  std::set<int> uncovered(tau.begin(), tau.end());

  std::vector<ArthurParam> out;
  std::vector<Block> chosen;
  bool have_odd = false;
  auto rec = [&](auto&& self) -> void {
    if (uncovered.empty()) {
      std::vector<Block> b = chosen;
      if (!have_odd) b.push_back({constituents::trivial(), 1});
      out.push_back(normalize(b));
      return;
    }
    int v = *uncovered.rbegin();
    auto try_block = [&](const Block& b, const std::vector<int>& vals) {
      if (b.odd() && have_odd) return;
      for (int x : vals)
        if (!uncovered.count(x)) return;
      for (int x : vals) uncovered.erase(x);
      chosen.push_back(b);
      bool was = have_odd;
      have_odd = have_odd || b.odd();
      self(self);
      have_odd = was;
      chosen.pop_back();
      uncovered.insert(vals.begin(), vals.end());
    };
    // [2v+1] covers exactly 1..v
    {
      Block t{constituents::trivial(), 2 * v + 1};
      try_block(t, t.positive_values());
    }
    for (const auto& c : cands)
      if (!c.values.empty() && c.values.front() == v) try_block(c.b, c.values);
  };
  rec(rec);
  if (M_bound) {
    std::erase_if(out, [&](const ArthurParam& p) { return k_total(p) > HalfInt::of(*M_bound); });
  }
  sort_canonical(out);
  return out;
}

std::vector<ArthurParam> enumerate_parameters(int g, const DomWeight& lambda, std::optional<int> M_bound) {
  return enumerate_parameters(Catalog(), g, lambda, M_bound);
}

std::vector<ArthurParam> all_parameters(const Catalog& cat, int M, bool include_trivial) {
  if (M < 0) throw InvalidInput("negative weight bound");
  auto cands = nontrivial_candidates(cat, M);
  std::erase_if(cands, [](const Candidate& c) { return c.values.empty(); });
  std::vector<ArthurParam> out;
  std::vector<Block> chosen;
  std::set<int> used;
  bool have_odd = false;
  auto emit = [&]() {
    if (have_odd) {
      out.push_back(normalize(chosen));
      return;
    }
    // close with [2d+1], whose values 1..d must be free; used is nonempty here
    for (int d = 0; d == 0 || !used.count(d); ++d) {
      std::vector<Block> b = chosen;
      b.push_back({constituents::trivial(), 2 * d + 1});
      out.push_back(normalize(b));
    }
  };
  auto rec = [&](auto&& self, size_t from, HalfInt budget) -> void {
    if (!chosen.empty()) emit();
    for (size_t i = from; i < cands.size(); ++i) {
      const auto& c = cands[i];
      if (c.k > budget || (c.b.odd() && have_odd)) continue;
      bool clash = false;
      for (int x : c.values) clash = clash || used.count(x);
      if (clash) continue;
      used.insert(c.values.begin(), c.values.end());
      chosen.push_back(c.b);
      bool was = have_odd;
      have_odd = have_odd || c.b.odd();
      self(self, i + 1, budget - c.k);
      have_odd = was;
      chosen.pop_back();
      for (int x : c.values) used.erase(x);
    }
  };
  rec(rec, 0, HalfInt::of(M));
  if (include_trivial)
    for (int d = 1; d <= M + 1; ++d) out.push_back(ArthurParam{{Block{constituents::trivial(), 2 * d + 1}}});
  sort_canonical(out);
  return out;
}

HalfInt k_of(const Block& b, const std::vector<int>& tau_values) {
  long long s = 0;
  for (int x : tau_values) s += x;
  long long corr = static_cast<long long>(b.c.n) * ((b.d * b.d) / 2);  // 4 * correction
  if (corr % 2 != 0) throw std::logic_error("block correction is not a half-integer");
  return HalfInt::of(s) - HalfInt::from_doubled(corr / 2);
}

HalfInt k_of(const Block& b) { return k_of(b, b.positive_values()); }

HalfInt k_total(const ArthurParam& psi) {
  HalfInt s;
  for (const auto& b : psi.blocks) s += k_of(b);
  return s;
}

int min_degree(const ArthurParam& psi, int g) {
  long long twice = static_cast<long long>(g) * (g + 1);  // 2 * g(g+1)/2
  for (const auto& b : psi.blocks) {
    long long corr = static_cast<long long>(b.c.n) * ((b.d * b.d) / 2);
    twice -= corr / 2;
  }
  HalfInt v = HalfInt::from_doubled(twice);
  if (!v.integral()) throw std::logic_error("minimal degree is not an integer");
  return static_cast<int>(v.to_int());
}

std::vector<KBound> check_k_bounds(const ArthurParam& psi) {
  std::vector<KBound> out;
  for (const auto& b : psi.blocks) {
    KBound r;
    r.block = b.str();
    r.k = k_of(b);
    long long rr = b.c.n / 2;
    HalfInt sw;
    for (const auto& e : b.c.pos_exponents) sw += e.infinitesimal();
    if (b.d % 2 == 1) {
      r.weight_bound = sw;
      r.rank_bound = HalfInt::of(rr * (rr + 1) / 2);
    } else {
      r.weight_bound = sw * 2 - HalfInt::of(rr);
      r.rank_bound = HalfInt::of(2 * rr * rr);
    }
    r.pass = r.k >= r.weight_bound && r.weight_bound >= r.rank_bound && r.k >= HalfInt{};
    out.push_back(r);
  }
  return out;
}

TauCover tau_cover(const ArthurParam& psi, int g, const DomWeight& lambda) {
  if (lambda.g() != g) throw InvalidInput("weight rank differs from g");
  auto tau = lambda.tau();
  if (psi.tau() != tau) throw InvalidInput("parameter does not have infinitesimal character tau(lambda)");
  TauCover c;
  c.J.resize(psi.blocks.size());
  c.f.assign(psi.blocks.size(), 0);
  for (size_t i = 1; i < psi.blocks.size(); ++i) {
    for (int v : psi.blocks[i].positive_values()) {
      auto it = std::find(tau.begin(), tau.end(), v);
      int slot = static_cast<int>(it - tau.begin()) + 1;
      c.J[i].push_back(slot);
      if (slot % 2 == 0) ++c.f[i];
    }
    std::sort(c.J[i].begin(), c.J[i].end());
  }
  return c;
}

}  // namespace ihc
