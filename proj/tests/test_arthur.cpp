#include <catch_amalgamated.hpp>

#include <set>

#include "ihc/arthur.hpp"

using namespace ihc;

namespace {

std::set<std::string> names(const std::vector<ArthurParam>& v) {
  std::set<std::string> s;
  for (const auto& p : v) s.insert(p.str());
  return s;
}

ArthurParam param(std::vector<Block> b) { return ArthurParam{std::move(b)}; }

}  // namespace

TEST_CASE("parameters for small weights") {
  CHECK(names(enumerate_parameters(1, DomWeight({10}))) == std::set<std::string>{"Sym2Delta_{11}[1]"});
  CHECK(names(enumerate_parameters(7, DomWeight::padded({}, 7))) ==
        std::set<std::string>{"[15]", "Delta_{11}[4] (+) [7]"});
  CHECK(names(enumerate_parameters(6, DomWeight::padded({}, 6))) ==
        std::set<std::string>{"[13]", "Delta_{11}[2] (+) [9]"});
  CHECK(names(enumerate_parameters(2, DomWeight({4, 4}))) == std::set<std::string>{"Delta_{11}[2] (+) [1]"});
  CHECK(names(enumerate_parameters(1, DomWeight({0}))) == std::set<std::string>{"[3]"});
}

TEST_CASE("every parameter has the requested infinitesimal character") {
  for (int g = 1; g <= 4; ++g)
    for (int a = 0; a <= 12; ++a) {
      std::vector<int> l(g, 0);
      l[0] = a;
      DomWeight lam(l);
      for (const auto& p : enumerate_parameters(g, lam)) {
        INFO(p.str());
        CHECK(p.tau() == lam.tau());
        CHECK(p.lambda() == lam);
        CHECK(p.blocks[0].odd());
        for (size_t i = 1; i < p.blocks.size(); ++i) CHECK_FALSE(p.blocks[i].odd());
      }
    }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(enumerate_parameters(0, DomWeight()), InvalidInput);
  CHECK_THROWS_AS(enumerate_parameters(2, DomWeight({1})), InvalidInput);
  CHECK_THROWS_AS(all_parameters(Catalog(), -1), InvalidInput);
}

TEST_CASE("block budgets and minimal degrees") {
  ArthurParam p = param({{constituents::trivial(), 7}, {constituents::delta(11), 4}});
  CHECK(k_of(p.blocks[1]) == HalfInt::of(18));
  CHECK(k_of(p.blocks[0]) == HalfInt());
  CHECK(k_total(p) == HalfInt::of(18));
  CHECK(min_degree(p, 7) == 18);
  ArthurParam q = param({{constituents::trivial(), 1}, {constituents::delta(11), 2}});
  CHECK(min_degree(q, 2) == 2);
  CHECK(k_total(q) == HalfInt::of(10));
  ArthurParam t = param({{constituents::trivial(), 13}});
  CHECK(min_degree(t, 6) == 0);
  ArthurParam s = param({{constituents::sym2(11), 1}});
  CHECK(min_degree(s, 1) == 1);
  CHECK(k_total(s) == HalfInt::of(11));
  // an explicit tau split
  CHECK(k_of(p.blocks[1], {7, 6, 5, 4}) == HalfInt::of(18));
}

TEST_CASE("budgets respect the weight bounds") {
  auto all = all_parameters(Catalog(), 23);
  CHECK_FALSE(all.empty());
  for (const auto& p : all) {
    INFO(p.str());
    CHECK(k_total(p) <= HalfInt::of(23));
    for (const auto& kb : check_k_bounds(p)) {
      INFO(kb.block);
      CHECK(kb.pass);
    }
  }
}

TEST_CASE("weight bound restricts the enumeration") {
  auto full = enumerate_parameters(7, DomWeight::padded({}, 7));
  auto cut = enumerate_parameters(7, DomWeight::padded({}, 7), 17);
  CHECK(full.size() == 2);
  CHECK(names(cut) == std::set<std::string>{"[15]"});
}

TEST_CASE("tau slots of a parameter") {
  ArthurParam p = param({{constituents::trivial(), 7}, {constituents::delta(11), 4}});
  TauCover c = tau_cover(p, 7, DomWeight::padded({}, 7));
  CHECK(c.J[1] == std::vector<int>{1, 2, 3, 4});
  CHECK(c.f[1] == 2);
  ArthurParam q = param({{constituents::trivial(), 9}, {constituents::delta(11), 2}});
  TauCover d = tau_cover(q, 6, DomWeight::padded({}, 6));
  CHECK(d.J[1] == std::vector<int>{1, 2});
  CHECK(d.f[1] == 1);
  CHECK_THROWS_AS(tau_cover(q, 6, DomWeight::padded({1}, 6)), InvalidInput);
}

TEST_CASE("printing") {
  ArthurParam p = param({{constituents::trivial(), 7}, {constituents::delta(11), 4}});
  CHECK(p.str() == "Delta_{11}[4] (+) [7]");
  CHECK(Block{constituents::trivial(), 1}.str() == "[1]");
  CHECK(p.g() == 7);
  CHECK(p.lambda() == DomWeight::padded({}, 7));
}
