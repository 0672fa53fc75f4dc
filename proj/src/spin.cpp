#include "ihc/spin.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ihc {

std::vector<ExpVec> std_exponents(const Block& b) { return b.exponents(); }

SpinMultiset spin_multiset(const Block& b, Side side) {
  if ((side == Side::Full) != b.odd())
    throw SideMismatch(b.str() + ": full spin is for odd n*d, half-spin for even n*d");
  std::vector<ExpVec> pos;
  for (const auto& e : std_exponents(b))
    if (e.infinitesimal().doubled > 0) pos.push_back(e);
  const size_t m = pos.size();
  if (m != static_cast<size_t>(b.c.n * b.d / 2)) throw std::logic_error("block is not regular");
  SpinMultiset s;
  s.side = side;
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    int minus = std::popcount(mask);
    if (side == Side::Plus && minus % 2 != 0) continue;
    if (side == Side::Minus && minus % 2 == 0) continue;
    ExpVec v;
    for (size_t j = 0; j < m; ++j) v = (mask >> j & 1) ? v - pos[j] : v + pos[j];
    ++s.elements[v.halved()];
  }
  return s;
}

int u_sign(const ArthurParam& psi, size_t i, const TauCover& cover) {
  if (i == 0 || i >= psi.blocks.size()) throw OutOfRange("u_i is defined for the even blocks only");
  int u = cover.f.at(i) % 2 == 0 ? 1 : -1;
  const Block& bi = psi.blocks[i];
  for (size_t j = 0; j < psi.blocks.size(); ++j) {
    const Block& bj = psi.blocks[j];
    if ((bi.d + bj.d) % 2 == 0) continue;
    int e = epsilon_half(bi.c, bj.c);
    if (e < 0 && std::min(bi.d, bj.d) % 2 == 1) u = -u;
  }
  return u;
}

std::map<Family, long long> family_mults(const ArthurParam& psi) {
  std::map<Family, long long> m;
  for (const auto& b : psi.blocks)
    for (const auto& [f, k] : b.c.families) m[f] = k;
  return m;
}

namespace {

[[noreturn]] void fail(const std::string& why, const Multiset& rest) {
  throw Unrecognized(why + " (" + std::to_string(total_count(rest)) + " elements unconsumed)", rest);
}

long long mult_of(const Family& f, const std::map<Family, long long>& mults) {
  auto it = mults.find(f);
  if (it != mults.end()) return it->second;
  if (f.kind == LetterKind::Elliptic) return dim_cusp_forms(f.w1 + 1);
  return 1;
}

// The catalog symbol one of whose character elements has the letter part of e.
Symbol symbol_for(const ExpVec& e, const std::map<Family, long long>& mults, const Multiset& rest) {
  std::map<Family, std::map<int, HalfInt>> parts;
  for (const auto& [x, v] : e.exps) {
    if (!v.integral()) fail("non-integral letter exponent in " + e.str(), rest);
    parts[x.family][x.coord] = v;
  }
  std::vector<Symbol> atoms;
  for (const auto& [f, coords] : parts) {
    long long m = mult_of(f, mults);
    if (m <= 0) fail("family " + f.str() + " has no eigenforms", rest);
    if (f.kind == LetterKind::Elliptic) {
      long long a = std::abs(coords.begin()->second.to_int());
      if (a == 1)
        atoms.push_back(symbols::elliptic(f.w1, m));
      else if (a == 2)
        atoms.push_back(symbols::sym2(f.w1, m));
      else
        fail("no catalog motive for " + e.str(), rest);
    } else if (f.kind == LetterKind::Siegel) {
      bool unit_exps = true;
      for (const auto& [c, v] : coords) unit_exps = unit_exps && std::abs(v.to_int()) == 1;
      if (!unit_exps) fail("no catalog motive for " + e.str(), rest);
      atoms.push_back(coords.size() == 1 ? symbols::siegel(f.w1, f.w2, m)
                                         : symbols::lambda2(f.w1, f.w2, m));
    } else {
      fail("no catalog motive for the letters of " + f.str() + " in " + e.str(), rest);
    }
  }
  return symbols::composite(atoms);
}

bool peel_before(const ExpVec& a, const ExpVec& b) {
  auto ka = a.max_abs_exponent(), kb = b.max_abs_exponent();
  if (ka != kb) return ka > kb;
  if (a.tate != b.tate) return a.tate > b.tate;
  return a < b;
}

}  // namespace

GKElem recognize(const Multiset& ms, const std::map<Family, long long>& mults) {
  Multiset rest;
  for (const auto& [e, k] : ms) {
    if (k < 0) throw InvalidInput("recognition needs a non-negative multiset");
    if (k > 0) rest.emplace(e, k);
  }
  GKElem out;
  while (!rest.empty()) {
    auto best = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (peel_before(it->first, best->first)) best = it;
    const ExpVec e = best->first;
    if (e.letter_free() && !e.tate.integral()) fail("non-integral weight in " + e.str(), rest);
    Symbol sym = e.letter_free() ? symbols::unit() : symbol_for(e, mults, rest);
    const ExpVec* anchor = nullptr;
    for (const auto& c : sym->character)
      if (c.exps == e.exps) {
        anchor = &c;
        break;
      }
    if (!anchor) throw std::logic_error("symbol character misses its own letter pattern");
    HalfInt twist = e.tate - anchor->tate;
    if (!twist.integral()) fail("non-integral twist for " + sym->name, rest);
    Multiset need;
    for (const auto& c : sym->character) ++need[c.shifted(twist)];
    for (const auto& [x, k] : need) {
      auto it = rest.find(x);
      if (it == rest.end() || it->second < k)
        fail("character of " + sym->name + " not contained in the multiset", rest);
    }
    for (const auto& [x, k] : need) {
      auto it = rest.find(x);
      if ((it->second -= k) == 0) rest.erase(it);
    }
    out.add(Term{sym, static_cast<int>(twist.to_int())}, 1);
  }
  return out;
}

Multiset contribution_multiset(const ArthurParam& psi, int g, const DomWeight& lambda) {
  TauCover cover = tau_cover(psi, g, lambda);
  Multiset acc = spin_multiset(psi.blocks[0], Side::Full).elements;
  for (size_t i = 1; i < psi.blocks.size(); ++i) {
    Side side = u_sign(psi, i, cover) > 0 ? Side::Plus : Side::Minus;
    Multiset next;
    for (const auto& [a, ka] : acc)
      for (const auto& [b, kb] : spin_multiset(psi.blocks[i], side).elements) next[a + b] += ka * kb;
    acc = std::move(next);
  }
  // global twist g(g+1)/4 + |lambda|/2
  HalfInt shift = HalfInt::from_doubled(static_cast<long long>(g) * (g + 1) / 2 + lambda.size());
  Multiset out;
  for (const auto& [e, k] : acc) out[e.shifted(shift)] += k;
  return out;
}

GradedGK contribution(const ArthurParam& psi, int g, const DomWeight& lambda) {
  auto mults = family_mults(psi);
  Multiset ms = contribution_multiset(psi, g, lambda);
  GKElem raw = recognize(ms, mults);

  long long expected = total_count(ms);
  for (const auto& [f, m] : mults) expected *= m;

  GradedGK out;
  for (const auto& [t, c] : raw.terms()) {
    long long coeff = c;
    std::set<Family> present(t.sym->families.begin(), t.sym->families.end());
    for (const auto& [f, m] : mults)
      if (!present.count(f)) coeff *= m;
    int degree = t.weight() - lambda.size();
    if (degree < 0 || t.twist < 0) throw std::logic_error("contribution is not effective");
    GKElem piece;
    piece.add(t, coeff);
    out[degree] += piece;
  }
  long long dim = 0;
  for (const auto& [d, e] : out) dim += e.dim();
  if (dim != expected) throw std::logic_error("dimension not conserved in contribution of " + psi.str());
  return out;
}

}  // namespace ihc
