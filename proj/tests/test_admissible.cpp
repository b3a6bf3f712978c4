#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "adlv/admissible.hpp"

using namespace adlv;

namespace {

// Membership by scanning every element of bounded length against the subword
// description of the lower intervals of the translations.
std::vector<ExtAffineElement> adm_by_scan(const RootDatum& d, const Coweight& lambda) {
  AffineFrame f(d);
  ElementSet tops;
  for (const auto& v : weyl_orbit(d, lambda)) tops.insert(ExtAffineElement::translation(d, v));
  int top = length(d, ExtAffineElement::translation(d, lambda));
  std::vector<ExtAffineElement> out;
  for (const auto& x : elements_up_to(d, top)) {
    bool in = false;
    for (const auto& t : tops) {
      ExtAffineElement tau;
      auto word = f.reduced_word(t, &tau);
      for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()) && !in; ++mask) {
        ExtAffineElement y = tau;
        for (std::size_t j = word.size(); j-- > 0;)
          if ((mask >> j) & 1) y = f.simple_reflections()[word[j]] * y;
        in = y == x;
      }
      if (in) break;
    }
    if (in) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtAffineElement> sorted(std::vector<ExtAffineElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Coweight> dominant_box(const RootDatum& d, int hi) {
  std::vector<Coweight> out;
  std::vector<int> x(d.rank(), 0);
  while (true) {
    Coweight v;
    for (int i = 0; i < d.rank(); ++i) v[i] = x[i];
    if (d.in_lattice(v)) out.push_back(v);
    int i = 0;
    while (i < d.rank() && x[i] == hi) x[i++] = 0;
    if (i == d.rank()) break;
    ++x[i];
  }
  return out;
}

}  // namespace

TEST_CASE("small admissible sets") {
  RootDatum a1 = RootDatum::make('A', 1);
  auto zero = compute_adm(a1, Coweight{});
  REQUIRE(zero.elements.size() == 1);
  CHECK(zero.elements[0] == ExtAffineElement::identity(a1));
  CHECK(zero.straight.size() == 1);

  auto om = compute_adm(a1, a1.fundamental_coweight(0));
  CHECK(om.elements.size() == 3);
  CHECK(sorted(om.elements) == adm_by_scan(a1, a1.fundamental_coweight(0)));

  auto al = compute_adm(a1, a1.simple_coroot(0));
  CHECK(sorted(al.elements) == adm_by_scan(a1, a1.simple_coroot(0)));
  CHECK(al.elements.size() == 5);
  CHECK(std::count(al.elements.begin(), al.elements.end(),
                   ExtAffineElement::translation(a1, a1.simple_coroot(0))) == 1);
}

TEST_CASE("enumeration matches bounded scan and membership oracle") {
  for (auto [t, n] : {std::pair{'A', 2}, std::pair{'C', 2}, std::pair{'G', 2}}) {
    RootDatum d = RootDatum::make(t, n);
    for (const Coweight& lambda : dominant_box(d, 1)) {
      if (length(d, ExtAffineElement::translation(d, lambda)) > 6) continue;
      auto adm = compute_adm(d, lambda);
      CHECK(sorted(adm.elements) == adm_by_scan(d, lambda));
      AdmOracle oracle(d, lambda);
      ElementSet in(adm.elements.begin(), adm.elements.end());
      for (const auto& x : elements_up_to(d, oracle.top_length() + 1))
        CHECK(oracle.contains(x) == (in.count(x) > 0));
      // Shared Kottwitz class; translations present; maximal elements are translations.
      for (const auto& x : adm.elements) CHECK(kottwitz(d, x) == d.pi1_class(lambda));
      for (const auto& top : oracle.maximal()) CHECK(in.count(top));
      AffineFrame f(d);
      for (const auto& x : adm.elements) {
        bool maximal = true;
        for (const auto& y : adm.elements)
          if (!(y == x) && f.bruhat_leq(x, y)) maximal = false;
        if (maximal) CHECK(x.finite_part().is_identity());
      }
      CHECK(std::find(adm.straight.begin(), adm.straight.end(),
                      ExtAffineElement::translation(d, lambda)) != adm.straight.end());
    }
  }
}

TEST_CASE("straight groups") {
  RootDatum a2 = RootDatum::make('A', 2);
  Coweight lambda = a2.simple_coroot(0) + a2.simple_coroot(1);
  auto adm = compute_adm(a2, lambda);
  auto groups = straight_elements(a2, adm);
  std::size_t total = 0;
  for (const auto& g : groups) {
    total += g.elements.size();
    for (const auto& x : g.elements) {
      CHECK(kottwitz(a2, x) == g.eta);
      CHECK(dominant(a2, newton_point(a2, x)) == g.nu);
    }
  }
  CHECK(total == adm.straight.size());
  CHECK(groups.size() >= 2);
}

TEST_CASE("monotonicity") {
  for (auto [t, n] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'G', 2}, std::pair{'A', 3},
                      std::pair{'C', 3}}) {
    RootDatum d = RootDatum::make(t, n);
    auto box = dominant_box(d, 2);
    for (const auto& lambda : box) {
      AdmOracle big(d, lambda);
      for (const auto& small : box) {
        if (!preceq(d, small, lambda)) continue;
        for (const auto& v : weyl_orbit(d, small))
          CHECK(big.contains(ExtAffineElement::translation(d, v)));
      }
    }
  }
}

TEST_CASE("capacity guard") {
  RootDatum g2 = RootDatum::make('G', 2);
  Coweight big;
  big[0] = 3;
  big[1] = 3;
  CHECK_THROWS_AS(compute_adm(g2, big), CapacityError);
  CHECK_THROWS_AS(compute_adm(g2, -big), DomainError);
  CHECK(adm_contains(g2, big, ExtAffineElement::identity(g2)));
}
